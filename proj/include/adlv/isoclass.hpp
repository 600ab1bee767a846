#pragma once

#include <string>
#include <vector>

#include "adlv/rootdata.hpp"

namespace adlv {

// Representative b = varpi^lambda * w of a sigma-conjugacy class.
struct IsoClass {
  Elem lambda;
  Word w;
};

// twisted Frobenius x -> w(sigma(x)) on X_*(T)_I (x) Q
QMat twisted_frobenius(const Group& g, const Word& w);

QVec newton_point(const Group& g, const IsoClass& b);
// Newton point average before conjugating into the dominant chamber
QVec newton_average(const Group& g, const IsoClass& b);
// dim Fix(sigma) - dim Fix(w sigma) for this representative; equals the defect of the class
// when the representative is straight.
int defect(const Group& g, const IsoClass& b);
// Defect of the class: minimum over representatives with translation part in Sigma(lambda_dom).
int class_defect(const Group& g, const IsoClass& b);
std::pair<IsoClass, int> standard_representative(const Group& g, const IsoClass& b);
Elem kappa(const Group& g, const IsoClass& b);  // in pi_1(G)_Gamma

enum class Rounding {
  Up,       // <omega, lambda - nu> in [0, 1)
  Literal,  // <omega, lambda - nu> in (-1, 0]
};
// Integral approximation of the Newton point, as a class in X_*(T)_Gamma.
Elem lambda_b(const Group& g, const IsoClass& b, Rounding r = Rounding::Up);
Elem lambda_b(const Group& g, const QVec& nu, const Elem& kappa_gamma, Rounding r = Rounding::Up);
// Same inside the Levi j, with kappa in pi_1(M)_Gamma.
Elem lambda_b(const Group& g, const QVec& nu, const Elem& kappa_gamma, const Levi& j, Rounding r = Rounding::Up);

QVec mu_diamond(const Group& g, const Elem& mu);
bool mazur(const Group& g, const Elem& mu, const QVec& nu, const Elem& kappa_gamma);
bool mazur(const Group& g, const Elem& mu, const IsoClass& b);

struct BClass {
  IsoClass rep;
  QVec nu;
  Elem kappa;
  int defect = 0;
  bool basic = false;
  std::string label() const;
};

// B(G, mu) by enumerating candidates varpi^lambda w with lambda_dom <= mu; sorted by <rho, nu>.
std::vector<BClass> bgmu(const Group& g, const Elem& mu);
BClass classify(const Group& g, const IsoClass& b);
bool poset_leq(const Group& g, const BClass& a, const BClass& b);
// Longest chain a = b_0 < b_1 < ... < b_l = b inside the given set; -1 if a is not below b.
int chain_length(const Group& g, const std::vector<BClass>& set, int a, int b);
// index of the basic class and of the mu-ordinary (maximal) class
int basic_index(const std::vector<BClass>& set);
int maximal_index(const std::vector<BClass>& set);

}  // namespace adlv
