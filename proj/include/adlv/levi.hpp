#pragma once

#include <vector>

#include "adlv/isoclass.hpp"

namespace adlv {

Q pair_rho_n(const Group& g, const QVec& x, const Levi& j);  // <rho - rho_M, x>

struct MuMSet {
  std::vector<Elem> sigma;      // Sigma(mu)
  std::vector<Elem> m_dom;      // Sigma(mu)_{M-dom}
  std::vector<Elem> m_max;      // maximal elements of m_dom under <=_M
  std::vector<Elem> s_m;        // S_M(mu): m_max together with nonzero branching
  std::vector<Elem> undecided;  // in m_dom but not decided by either criterion
};
MuMSet sigma_mu_sets(const Group& g, const Elem& mu, const Levi& j);

struct FibreDimension {
  Q bound = 0;  // <rho, mu + mu_M> - 2 <rho_M, mu_M>
  bool equality = false;
  Int count = 0;  // branching multiplicity
};
// Throws std::invalid_argument if mu_M is not in S_M(mu).
FibreDimension d_mu_muM(const Group& g, const Elem& mu, const Elem& mu_m, const Levi& j);

Levi centralizer_levi(const Group& g, const QVec& nu);

// Representative of [b] inside the centraliser M of its Newton point, basic in M.
struct LeviReduction {
  Levi m;
  QVec nu;
  IsoClass rep;  // w in W_M, undominated average equal to nu
  Elem kappa_m;  // in pi_1(M)_Gamma
  int defect = 0;
};
LeviReduction levi_reduction(const Group& g, const IsoClass& b);

struct Assembly {
  LeviReduction red;
  std::vector<Elem> i_set;  // I_{mu,b}
  Elem witness;
  Q value = 0;
  Q closed_form = 0;  // <rho, mu - nu> - defect/2
  Q upper_bound = 0;  // max of the bound over all of I_{mu,b}
  Int count_assembled = 0;
  Int count_direct = 0;
  Elem lambda_m;  // lambda(b) computed in M
  bool dimension_ok() const { return value == closed_form && upper_bound == closed_form; }
  bool count_ok() const { return count_assembled == count_direct; }
};
// Throws std::invalid_argument when X_mu(b) is empty.
Assembly assembled_dimension(const Group& g, const Elem& mu, const IsoClass& b);

struct Arrow {
  int from = 0, to = 0;
  int root = 0;  // relative root alpha outside M
  int r = 0;
};
// How "mu_M <= mu" is read for I_{<=mu,b} and the arrow conditions: as a weight of V_mu
// ((mu_M)_dom <= mu), or literally in the coroot order.
enum class Reading { Weights, Literal };

struct MinimalI {
  Reading reading = Reading::Literal;
  LeviReduction red;
  std::vector<Elem> i_leq;          // I_{<=mu,b}
  std::vector<Elem> minima_poset;   // minimal elements under <=_M
  std::vector<Elem> minima_kappa;   // M-minuscule elements with the Kottwitz conditions
  std::vector<Arrow> arrows;        // on minima_poset
  bool agree = false;
  bool connected = false;
};
MinimalI minimal_I_leq(const Group& g, const Elem& mu, const IsoClass& b, Reading reading = Reading::Literal);

// kappa(mu) = kappa(b) and <omega_O, mu_diamond - nu> > 0 for every sigma-orbit O of simple roots.
bool hn_irreducible(const Group& g, const Elem& mu, const IsoClass& b);

}  // namespace adlv
