#pragma once

#include <map>
#include <vector>

#include "adlv/rootdata.hpp"

namespace adlv {

// Representations of the dual group: weights live in X_*(T)_I, the roots of the dual group
// are the relative coroots and its coroots are the relative roots.  A Levi j restricts to
// the dual Levi.
using Character = std::map<Elem, Int>;

// Freudenthal recursion; mu must be j-dominant.
Character weight_multiplicities(const Group& g, const Elem& mu, const Levi& j);
Character weight_multiplicities(const Group& g, const Elem& mu);
Int weight_multiplicity(const Group& g, const Elem& mu, const Elem& lambda);

// Independent count: Lakshmibai-Seshadri paths generated by root operators from t -> t mu.
Character littelmann_character(const Group& g, const Elem& mu);
Int littelmann_count(const Group& g, const Elem& mu, const Elem& lambda);

Q weyl_dimension(const Group& g, const Elem& mu);

Character tensor_character(const Group& g, const std::vector<Elem>& mus);
Int tensor_weight_multiplicity(const Group& g, const std::vector<Elem>& mus, const Elem& lambda);

// Decomposition of V_{mu1} (x) V_{mu2}: Brauer-Klimyk, and by peeling highest weights.
std::map<Elem, Int> tensor_decomposition(const Group& g, const Elem& mu1, const Elem& mu2);
std::map<Elem, Int> tensor_decomposition_peel(const Group& g, const Elem& mu1, const Elem& mu2);

// Restriction of V_mu to the dual Levi of j: alternating sum, and by peeling.
std::map<Elem, Int> levi_branching(const Group& g, const Elem& mu, const Levi& j);
std::map<Elem, Int> levi_branching_peel(const Group& g, const Elem& mu, const Levi& j);
Int levi_branching_multiplicity(const Group& g, const Elem& mu, const Elem& mu_m, const Levi& j);

// Decompose a j-invariant character into irreducible characters of the dual Levi of j.
std::map<Elem, Int> peel(const Group& g, Character ch, const Levi& j);

// Weights of V_mu restricted to the sigma-coinvariants, evaluated at lambda in X_*(T)_Gamma.
Int weight_multiplicity_gamma(const Group& g, const Elem& mu, const Elem& lambda_gamma);
Int tensor_weight_multiplicity_gamma(const Group& g, const std::vector<Elem>& mus, const Elem& lambda_gamma);

struct MVStats {
  Int count = 0;
  Q dim = 0;          // <rho, mu + lambda>
  Q dim_doubled = 0;  // <2 rho, mu + lambda>
};
MVStats mv_stats(const Group& g, const Elem& mu, const Elem& lambda);

}  // namespace adlv
