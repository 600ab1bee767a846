#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adlv/abelian.hpp"
#include "adlv/linalg.hpp"

namespace adlv {

// Word in simple reflections: {i1, ..., ik} stands for s_{i1} ... s_{ik}.
using Word = std::vector<int>;
// Subset of simple relative roots (indices into Group::simple()), sorted.
using Levi = std::vector<int>;

struct RootDatum {
  std::string name;
  int rank = 0;
  std::vector<IVec> simple_roots;    // covectors on X_*(T) = Z^rank
  std::vector<IVec> simple_coroots;  // vectors in X_*(T)
  std::vector<IMat> inertia_gens;    // acting on X_*(T)
  IMat frobenius;

  // Restriction of scalars of GL_n: block structure (n, f, e); unset for other families.
  struct ResGL {
    int n = 0, f = 1, e = 1;
  };
  std::optional<ResGL> resgl;

  // filled by complete()
  std::vector<IVec> roots, coroots;
  std::vector<bool> positive;
  std::vector<IMat> inertia;  // full inertia group, identity first

  void complete();
};

// Preset names: gl(n), sl(n), pgl(n), sp(2n), so(m), g2, split(X,r), res_gl(n,f,e),
// unitary(n,unramified|ramified) (alias quasi_split_unitary).
RootDatum preset(const std::string& spec);
std::vector<std::string> preset_catalog(int max_rank);

// Adjoint quotient: cocharacters of the adjoint torus in the fundamental coweight basis,
// transfer x -> (<alpha_i, x>)_i.
struct AdjointQuotient {
  RootDatum datum;
  IMat transfer;
};
AdjointQuotient adjoint_quotient(const RootDatum& d);

struct RelRoot {
  QVec root;     // covector on the free part of X_*(T)_I
  Elem coroot;   // class in X_*(T)_I
  bool positive = false;
};

struct DominanceData {
  bool dominant = false;
  Elem rep;
  Word word;  // x = w(rep), w of minimal length
};

class Group {
 public:
  explicit Group(RootDatum d);

  const RootDatum& datum() const { return datum_; }
  const AbelianQuotient& lattice() const { return lattice_; }
  int dim() const { return lattice_.free_rank(); }
  const std::string& name() const { return datum_.name; }

  const std::vector<RelRoot>& roots() const { return roots_; }
  const std::vector<int>& simple() const { return simple_; }
  int num_simple() const { return static_cast<int>(simple_.size()); }
  Levi full() const;
  // Index into roots() of the relative root through which an absolute root restricts.
  int relative_of(int absolute_root) const { return abs_to_rel_[absolute_root]; }

  Elem make(const IVec& free, const IVec& tors = {}) const;
  Elem project_absolute(const IVec& x) const { return lattice_.project(x); }
  QVec rational(const Elem& x) const { return to_q(x.free); }

  Q pair(int root, const QVec& x) const;
  Int pair(int root, const Elem& x) const;
  Elem reflect(int root, const Elem& x) const;
  QVec reflect(int root, const QVec& x) const;
  Elem apply(const Word& w, const Elem& x) const;  // w given in simple-root positions
  QVec apply(const Word& w, const QVec& x) const;
  Word inverse(const Word& w) const { return Word(w.rbegin(), w.rend()); }

  Elem sigma(const Elem& x) const;
  QVec sigma(const QVec& x) const;
  const QMat& sigma_matrix() const { return sigma_q_; }
  QMat word_matrix(const Word& w) const;
  int order(const QMat& m) const;
  // sigma-average of a rational vector
  QVec sigma_average(const QVec& x) const;
  // permutation of simple roots induced by sigma
  const std::vector<int>& sigma_on_simple() const { return sigma_simple_; }
  std::vector<std::vector<int>> sigma_orbits(const Levi& j) const;

  QVec average_lift(const QVec& x) const;  // into X_*(T) (x) Q
  Q pair_rho(const QVec& x) const;
  Q pair_rho(const Elem& x) const { return pair_rho(rational(x)); }
  Q pair_rho_levi(const QVec& x, const Levi& j) const;

  std::vector<int> levi_roots(const Levi& j) const;
  std::vector<int> levi_positive(const Levi& j) const;
  bool in_levi(int root, const Levi& j) const;
  bool is_dominant(const QVec& x, const Levi& j) const;
  bool is_dominant(const Elem& x, const Levi& j) const { return is_dominant(rational(x), j); }
  DominanceData dominance(const Elem& x, const Levi& j) const;
  DominanceData dominance(const Elem& x) const { return dominance(x, full()); }
  QVec dominant(const QVec& x, const Levi& j) const;
  QVec dominant(const QVec& x) const { return dominant(x, full()); }

  // Coefficients of x in the simple coroots of j, if x lies in their rational span.
  std::optional<QVec> coroot_coefficients(const QVec& x, const Levi& j) const;
  bool leq_integral(const Elem& a, const Elem& b, const Levi& j) const;
  bool leq_integral(const Elem& a, const Elem& b) const { return leq_integral(a, b, full()); }
  bool leq_rational(const QVec& a, const QVec& b, const Levi& j) const;
  bool leq_rational(const QVec& a, const QVec& b) const { return leq_rational(a, b, full()); }

  struct WeylElement {
    Word word;
    QMat matrix;
    int length() const { return static_cast<int>(word.size()); }
  };
  const std::vector<WeylElement>& weyl(const Levi& j) const;
  const std::vector<WeylElement>& weyl() const { return weyl(full()); }
  // Longest element of the Weyl group of j.
  Word longest(const Levi& j) const;

  // Saturated weight set {x : x_dom <= mu}, mu dominant.
  std::vector<Elem> weights_below(const Elem& mu) const;
  std::vector<Elem> dominant_below(const Elem& mu, const Levi& j) const;

  // Fundamental groups and Kottwitz maps; j selects a Levi.
  const AbelianQuotient& pi1_inertia(const Levi& j) const;
  const AbelianQuotient& pi1_gamma(const Levi& j) const;
  const AbelianQuotient& x_gamma() const;  // X_*(T)_Gamma
  Elem kappa_inertia(const Elem& x, const Levi& j) const;
  Elem kappa_gamma(const Elem& x, const Levi& j) const;
  Elem kappa_inertia(const Elem& x) const { return kappa_inertia(x, full()); }
  Elem kappa_gamma(const Elem& x) const { return kappa_gamma(x, full()); }
  Elem to_gamma(const Elem& x) const;
  // sigma-average in X_*(T)_I (x) Q of a class in X_*(T)_Gamma
  QVec gamma_average(const Elem& g) const;
  // matrix of sigma - 1 on the generators of pi_1(G)_I (free first, then torsion)
  GroupKernel pi1_sigma_invariants() const;
  // Some x in pi_1(G)_I with (sigma - 1) x = t.
  std::optional<Elem> solve_sigma_minus_one(const Elem& t) const;

  // central sublattice rank (dimension of the center of the dual root system)
  int central_rank() const;

 private:
  RootDatum datum_;
  AbelianQuotient lattice_;
  std::vector<QVec> avg_lift_;  // average lift of each free basis vector
  std::vector<RelRoot> roots_;
  std::vector<int> simple_;
  std::vector<int> abs_to_rel_;
  QVec rho_free_;
  QMat sigma_q_;
  std::vector<int> sigma_simple_;
  IMat sigma_abs_;

  mutable std::map<Levi, std::vector<WeylElement>> weyl_cache_;
  mutable std::map<Levi, std::unique_ptr<AbelianQuotient>> pi1_i_cache_, pi1_g_cache_;
  mutable std::unique_ptr<AbelianQuotient> x_gamma_;

  std::vector<IVec> inertia_relations() const;
  std::vector<IVec> sigma_relations() const;
  std::vector<IVec> coroot_relations(const Levi& j) const;
};

std::string word_to_string(const Word& w);

// Image of a class of X_*(T)_I under the adjoint transfer.
Elem transfer_coweight(const Group& g, const Group& ad, const IMat& t, const Elem& x);

}  // namespace adlv
