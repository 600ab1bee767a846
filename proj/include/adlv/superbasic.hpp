#pragma once

#include <optional>
#include <vector>

#include "adlv/isoclass.hpp"

namespace adlv {

// d-fold twisted setup for Res GL_n: slots s = t*d + j (block t, fold j), each a copy of GL_n.
// sigma_d moves slot s+1 to slot s; at slots with j = d-1 the element b acts on block t.
// Tuples are stored slot by slot as vectors in Z^n.
using Slots = std::vector<IVec>;

class TwistedSetup {
 public:
  // b must be basic with gcd(kappa, n) = 1 and of the form prod_t tau^{m_t}.
  TwistedSetup(const Group& g, int d, IsoClass b);
  // b = tau^m on block 0, tau(x) = (1 + x_n, x_1, ..., x_{n-1})
  static TwistedSetup standard(const Group& g, int d, Int m);

  const Group& group() const { return *g_; }
  int n() const { return n_; }
  int f() const { return f_; }
  int d() const { return d_; }
  int slots() const { return d_ * f_; }
  const IsoClass& b() const { return b_; }
  Int kappa() const { return m_; }
  // tau exponents per block when b is a product of powers of tau
  const std::optional<IVec>& tau_exponents() const { return tau_m_; }

  Slots affine_map(const Slots& lam) const;  // b_d sigma_d (lambda)
  QMat linear_part() const;                  // on the concatenated slots
  Slots split_tuple(const std::vector<Elem>& mus) const;  // d-tuple in X_*(T)_I -> slots
  IVec slot_sum(const Slots& x) const;
  Elem to_gamma(const IVec& v) const;  // Z^n -> X_*(T)_Gamma

 private:
  const Group* g_;
  int n_, f_, d_;
  IsoClass b_;
  Int m_ = 0;
  std::optional<IVec> tau_m_;
};

// Setup for the length-zero representative of [b] when [b] is superbasic for Res GL_n.
std::optional<TwistedSetup> superbasic_setup(const Group& g, const IsoClass& b, int d);

Slots affine_image(const TwistedSetup& s, const Slots& lam);

struct StratumLabel {
  Slots lambda, lambda_prime, lambda_tilde, mu_tilde;
  bool nonempty = false;
  std::vector<std::pair<int, std::pair<int, int>>> r_set;  // (slot, (i, j)) root e_i - e_j
  int dim() const { return static_cast<int>(r_set.size()); }
  bool top = false;
  Q closed_form = 0;  // closed-form value, diagnostic only
};

bool is_minuscule(const Group& g, const Elem& mu);
StratumLabel stratum_status(const TwistedSetup& s, const std::vector<Elem>& mus, const Slots& lam);

enum class Enumeration { Solve, Window };
// One label per Omega^sigma-orbit, normalised by sum(lambda at slot 0) = 0.
// Window mode scans slot-0 values with |coordinate| <= window and certifies completeness
// against the predicted label set, throwing if the window is too small.
std::vector<StratumLabel> enumerate_strata(const TwistedSetup& s, const std::vector<Elem>& mus,
                                           Enumeration how = Enumeration::Solve, int window = -1);

struct SuperbasicInvariants {
  int dimension = 0;
  Int component_orbit_count = 0;
  std::vector<StratumLabel> top_labels;
  Q predicted_dimension = 0;  // <rho_{G^d}, mu - nu> - defect/2
  Int predicted_count = 0;    // tensor weight multiplicity at lambda(b)
  Elem lambda_b;
};
// Throws std::logic_error if either cross-check fails.
SuperbasicInvariants superbasic_invariants(const TwistedSetup& s, const std::vector<Elem>& mus);

std::vector<Elem> decompose_minuscule(const Group& g, const Elem& mu);

// EL-charts: per slot the n residue-class minima, indexed by residue 0..n-1.
using Chart = std::vector<IVec>;
Chart chart_of(const TwistedSetup& s, const Slots& lam);
Chart f_map(const TwistedSetup& s, const Chart& a);
Chart chart_shift(const Chart& a, Int k);
Slots chart_type(const TwistedSetup& s, const Chart& a);
Slots chart_cotype(const TwistedSetup& s, const Chart& a);
// action of the sigma-stable length-zero generator (tau, ..., tau)
Slots omega_action(const TwistedSetup& s, const Slots& lam);

}  // namespace adlv
