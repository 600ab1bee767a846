#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlv/crystal.hpp"
#include "adlv/isoclass.hpp"
#include "adlv/levi.hpp"
#include "adlv/superbasic.hpp"

namespace adlv {

// <rho, mu - nu> - defect/2
Q virtual_dimension(const Group& g, const Elem& mu, const IsoClass& b);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Pi0 {
  std::optional<Elem> witness;  // x in pi_1(G)_I with (sigma - 1) x = kappa(mu) - kappa(b)
  IVec subgroup;                // invariant factors of pi_1(G)_I^sigma, 0 for Z
  bool hn_irreducible = false;
  bool described = false;       // the coset description is asserted only when HN-irreducible
};

struct InvariantReport {
  std::string group;
  Elem mu;
  IsoClass b;
  QVec nu;
  Elem kappa;
  int defect = 0;
  Elem lambda_b;
  bool nonempty = false;
  Q virtual_dimension = 0;
  std::optional<Int> dimension;
  std::optional<Int> irr_orbit_count;
  Pi0 pi0;
  bool equidimensional = false;
  std::string equidimensional_provenance;
  std::vector<Check> checks;
  bool diagnostic() const;
};

InvariantReport invariant_report(const Group& g, const Elem& mu, const IsoClass& b);

struct StratumRecord {
  BClass cls;
  Q stratum_dim = 0;  // <rho, mu + nu> - defect/2
  Q codim = 0;
  int length_to_max = 0;
  std::vector<int> closure;  // indices of classes below, itself included
  bool chai_ok = false;
};

struct NewtonStratReport {
  std::vector<StratumRecord> strata;
  Q ambient_dim = 0;  // <2 rho, mu>
  int basic = 0, maximal = 0;
  bool consistent() const;
};

NewtonStratReport newton_stratification(const Group& g, const Elem& mu);

// Dominant mu modulo central translations with <2 rho, mu> <= max_two_rho, one representative per
// vector of simple-root pairings.
std::vector<Elem> dominant_grid(const Group& g, Int max_two_rho);

}  // namespace adlv
