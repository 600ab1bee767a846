#include "adlv/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace adlv {

std::string to_string(const Elem& e) {
  std::string s = to_string(e.free);
  if (!e.tors.empty()) s += "+t" + to_string(e.tors);
  return s;
}

namespace {
Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

AbelianQuotient::AbelianQuotient(int ambient, const std::vector<IVec>& relations) : ambient_(ambient) {
  if (ambient == 0) return;
  IMat a(ambient, IVec(std::max<size_t>(relations.size(), 1), 0));
  for (size_t j = 0; j < relations.size(); ++j)
    for (int i = 0; i < ambient; ++i) a[i][j] = relations[j][i];
  Smith s = smith_normal_form(a);
  IMat uinv = unimodular_inverse(s.U);
  size_t cols = a[0].size();
  IMat free_rows;
  std::vector<IVec> free_lifts;
  for (int i = 0; i < ambient; ++i) {
    Int d = (static_cast<size_t>(i) < cols) ? s.D[i][i] : 0;
    IVec col(ambient);
    for (int k = 0; k < ambient; ++k) col[k] = uinv[k][i];
    if (d == 1) continue;
    if (d == 0) {
      free_rows.push_back(s.U[i]);
      free_lifts.push_back(col);
    } else {
      IVec row = s.U[i];
      for (auto& x : row) x = mod(x, d);
      proj_tors_.push_back(row);
      moduli_.push_back(d);
      lift_tors_.push_back(col);
    }
  }
  // canonical free coordinates: Hermite form of the projection rows
  if (!free_rows.empty()) {
    Hermite h = hermite_rows(free_rows);
    proj_free_ = h.H;
    IMat rinv = unimodular_inverse(h.R);
    // new lift basis: L_new = L_old * R^{-1}
    size_t f = free_rows.size();
    lift_free_.assign(f, IVec(ambient, 0));
    for (size_t j = 0; j < f; ++j)
      for (size_t k = 0; k < f; ++k)
        if (rinv[k][j] != 0)
          for (int c = 0; c < ambient; ++c) lift_free_[j][c] += free_lifts[k][c] * rinv[k][j];
  }
}

IVec AbelianQuotient::invariants() const {
  IVec r = moduli_;
  for (int i = 0; i < free_rank(); ++i) r.push_back(0);
  return r;
}

Elem AbelianQuotient::project(const IVec& x) const {
  if (static_cast<int>(x.size()) != ambient_) throw std::invalid_argument("dimension mismatch in projection");
  Elem e;
  e.free = mul(proj_free_, x);
  e.tors = mul(proj_tors_, x);
  return normalize(e);
}

IVec AbelianQuotient::lift(const Elem& e) const {
  IVec x(ambient_, 0);
  for (size_t i = 0; i < e.free.size(); ++i) x = adlv::add(x, adlv::scale(lift_free_[i], e.free[i]));
  for (size_t i = 0; i < e.tors.size(); ++i) x = adlv::add(x, adlv::scale(lift_tors_[i], e.tors[i]));
  return x;
}

Elem AbelianQuotient::zero() const { return Elem{IVec(free_rank(), 0), IVec(moduli_.size(), 0)}; }

Elem AbelianQuotient::normalize(Elem e) const {
  if (e.free.size() != proj_free_.size() || e.tors.size() != moduli_.size())
    throw std::invalid_argument("element shape does not match quotient");
  for (size_t i = 0; i < e.tors.size(); ++i) e.tors[i] = mod(e.tors[i], moduli_[i]);
  return e;
}

Elem AbelianQuotient::add(const Elem& a, const Elem& b) const {
  return normalize(Elem{adlv::add(a.free, b.free), adlv::add(a.tors, b.tors)});
}
Elem AbelianQuotient::sub(const Elem& a, const Elem& b) const {
  return normalize(Elem{adlv::sub(a.free, b.free), adlv::sub(a.tors, b.tors)});
}
Elem AbelianQuotient::scale(const Elem& a, Int k) const {
  return normalize(Elem{adlv::scale(a.free, k), adlv::scale(a.tors, k)});
}

IVec subquotient_invariants(int n, const std::vector<IVec>& gens, const std::vector<IVec>& rels) {
  // basis of span(gens)
  IMat g = gens.empty() ? IMat{} : IMat(gens.begin(), gens.end());
  if (g.empty()) return {};
  Hermite h = hermite_rows(g);
  IMat basis(h.H.begin(), h.H.begin() + h.rank);
  size_t k = basis.size();
  if (k == 0) return {};
  // coordinates of rels in the basis
  IMat bt = transpose(basis);  // n x k
  IMat coords;                 // k x |rels|
  coords.assign(k, IVec(std::max<size_t>(rels.size(), 1), 0));
  for (size_t j = 0; j < rels.size(); ++j) {
    auto x = solve_integer(bt, rels[j]);
    if (!x) throw std::domain_error("relation outside generated subgroup");
    for (size_t i = 0; i < k; ++i) coords[i][j] = (*x)[i];
  }
  (void)n;
  Smith s = smith_normal_form(coords);
  IVec inv;
  size_t cols = coords[0].size();
  for (size_t i = 0; i < k; ++i) {
    Int d = i < cols ? s.D[i][i] : 0;
    if (d != 1) inv.push_back(d);
  }
  std::sort(inv.begin(), inv.end(), [](Int a, Int b) {
    if (a == 0 || b == 0) return b == 0 && a != 0;
    return a < b;
  });
  return inv;
}

GroupKernel kernel_of_endomorphism(const IMat& m, const IVec& d) {
  size_t n = d.size();
  GroupKernel out;
  if (n == 0) return out;
  // [M | -D] (x, y) = 0
  IMat big(n, IVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) big[i][j] = m[i][j];
    big[i][n + i] = -d[i];
  }
  IMat ker = integer_kernel(big);
  std::vector<IVec> gens;
  for (const auto& v : ker) {
    IVec x(v.begin(), v.begin() + n);
    if (!is_zero(x)) gens.push_back(x);
  }
  std::vector<IVec> rels;
  for (size_t i = 0; i < n; ++i)
    if (d[i] != 0) {
      IVec e(n, 0);
      e[i] = d[i];
      rels.push_back(e);
      gens.push_back(e);
    }
  out.invariants = subquotient_invariants(static_cast<int>(n), gens, rels);
  for (auto& x : gens) {
    for (size_t i = 0; i < n; ++i)
      if (d[i] != 0) x[i] = mod(x[i], d[i]);
    if (!is_zero(x)) out.generators.push_back(x);
  }
  std::sort(out.generators.begin(), out.generators.end());
  out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
  return out;
}

}  // namespace adlv
