#include "adlv/isoclass.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace adlv {

QMat twisted_frobenius(const Group& g, const Word& w) {
  QMat a = g.word_matrix(w);
  const QMat& s = g.sigma_matrix();
  size_t f = s.size();
  QMat t(f, QVec(f, Q(0)));
  for (size_t i = 0; i < f; ++i)
    for (size_t k = 0; k < f; ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < f; ++j) t[i][j] += a[i][k] * s[k][j];
  return t;
}

QVec newton_average(const Group& g, const IsoClass& b) {
  QMat t = twisted_frobenius(g, b.w);
  int n = g.order(t);
  QVec acc(g.dim(), Q(0)), y = g.rational(b.lambda);
  for (int i = 0; i < n; ++i) {
    acc = add(acc, y);
    y = mul(t, y);
  }
  return scale(acc, Q(1, n));
}

QVec newton_point(const Group& g, const IsoClass& b) { return g.dominant(newton_average(g, b)); }

int defect(const Group& g, const IsoClass& b) {
  return fixed_dimension(g.sigma_matrix()) - fixed_dimension(twisted_frobenius(g, b.w));
}

Elem kappa(const Group& g, const IsoClass& b) { return g.kappa_gamma(b.lambda); }

Elem lambda_b(const Group& g, const QVec& nu, const Elem& kappa_gamma, Rounding r) {
  return lambda_b(g, nu, kappa_gamma, g.full(), r);
}

Elem lambda_b(const Group& g, const QVec& nu, const Elem& kappa_gamma, const Levi& j, Rounding r) {
  const AbelianQuotient& xg = g.x_gamma();
  const AbelianQuotient& pg = g.pi1_gamma(j);
  // base point with the right Kottwitz invariant
  Elem x0 = xg.project(pg.lift(kappa_gamma));
  QVec diff = sub(nu, g.gamma_average(x0));
  auto c = g.coroot_coefficients(diff, j);
  if (!c) throw std::domain_error("Newton point and Kottwitz invariant are incompatible");
  Elem x = x0;
  for (const auto& orbit : g.sigma_orbits(j)) {
    Q t = 0;
    for (int p : orbit) t += (*c)[std::find(j.begin(), j.end(), p) - j.begin()];
    Int k = (r == Rounding::Up) ? ceil_q(t) : floor_q(t);
    Elem cor = xg.project(g.lattice().lift(g.roots()[g.simple()[orbit[0]]].coroot));
    x = xg.add(x, xg.scale(cor, k));
  }
  return x;
}

Elem lambda_b(const Group& g, const IsoClass& b, Rounding r) {
  return lambda_b(g, newton_point(g, b), kappa(g, b), r);
}

QVec mu_diamond(const Group& g, const Elem& mu) {
  return g.dominant(g.sigma_average(g.rational(g.dominance(mu).rep)));
}

bool mazur(const Group& g, const Elem& mu, const QVec& nu, const Elem& kappa_gamma) {
  return g.kappa_gamma(mu) == kappa_gamma && g.leq_rational(nu, mu_diamond(g, mu));
}

bool mazur(const Group& g, const Elem& mu, const IsoClass& b) {
  return mazur(g, mu, newton_point(g, b), kappa(g, b));
}

std::string BClass::label() const {
  return "nu=" + to_string(nu) + " kappa=" + to_string(kappa);
}

int class_defect(const Group& g, const IsoClass& b) { return standard_representative(g, b).second; }

std::pair<IsoClass, int> standard_representative(const Group& g, const IsoClass& b) {
  QVec nu = newton_point(g, b);
  Elem k = kappa(g, b);
  IsoClass best = b;
  int d = defect(g, b);
  for (const auto& lam : g.weights_below(g.dominance(b.lambda).rep)) {
    if (g.kappa_gamma(lam) != k) continue;
    for (const auto& w : g.weyl()) {
      IsoClass c{lam, w.word};
      int dc = defect(g, c);
      if (dc >= d) continue;
      if (newton_point(g, c) != nu) continue;
      best = c;
      d = dc;
    }
  }
  return {best, d};
}

BClass classify(const Group& g, const IsoClass& b) {
  BClass c;
  auto [rep, d] = standard_representative(g, b);
  c.rep = rep;
  c.nu = newton_point(g, b);
  c.kappa = kappa(g, b);
  c.defect = d;
  c.basic = true;
  for (int p : g.simple())
    if (g.pair(p, c.nu) != 0) c.basic = false;
  return c;
}

std::vector<BClass> bgmu(const Group& g, const Elem& mu_in) {
  Elem mu = g.dominance(mu_in).rep;
  QVec mud = mu_diamond(g, mu);
  Elem kmu = g.kappa_gamma(mu);
  std::map<std::pair<QVec, Elem>, BClass> found;
  const auto& weyl = g.weyl();
  for (const auto& lam : g.weights_below(mu)) {
    if (g.kappa_gamma(lam) != kmu) continue;
    for (const auto& w : weyl) {
      IsoClass b{lam, w.word};
      QVec nu = newton_point(g, b);
      auto key = std::make_pair(nu, kmu);
      auto it = found.find(key);
      if (it != found.end()) {
        int d = defect(g, b);
        if (d < it->second.defect) {
          it->second.rep = b;
          it->second.defect = d;
        }
        continue;
      }
      if (!g.leq_rational(nu, mud)) continue;
      BClass c;
      c.rep = b;
      c.nu = nu;
      c.kappa = kmu;
      c.defect = defect(g, b);
      c.basic = true;
      for (int p : g.simple())
        if (g.pair(p, nu) != 0) c.basic = false;
      found.emplace(key, c);
    }
  }
  std::vector<BClass> out;
  for (auto& [k, v] : found) out.push_back(v);
  std::sort(out.begin(), out.end(), [&](const BClass& a, const BClass& b) {
    Q ra = g.pair_rho(a.nu), rb = g.pair_rho(b.nu);
    return ra != rb ? ra < rb : a.nu < b.nu;
  });
  return out;
}

bool poset_leq(const Group& g, const BClass& a, const BClass& b) {
  return a.kappa == b.kappa && g.leq_rational(a.nu, b.nu);
}

int chain_length(const Group& g, const std::vector<BClass>& set, int a, int b) {
  size_t n = set.size();
  std::vector<int> memo(n, -2);
  // longest chain from x up to b
  std::function<int(int)> up = [&](int x) -> int {
    if (x == b) return 0;
    if (memo[x] != -2) return memo[x];
    int best = -1;
    for (size_t y = 0; y < n; ++y) {
      if (static_cast<int>(y) == x || set[y].nu == set[x].nu) continue;
      if (!poset_leq(g, set[x], set[y]) || !poset_leq(g, set[y], set[b])) continue;
      int l = up(static_cast<int>(y));
      if (l >= 0) best = std::max(best, l + 1);
    }
    return memo[x] = best;
  };
  if (!poset_leq(g, set[a], set[b])) return -1;
  return up(a);
}

int basic_index(const std::vector<BClass>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    if (set[i].basic) return static_cast<int>(i);
  return -1;
}

int maximal_index(const std::vector<BClass>& set) { return set.empty() ? -1 : static_cast<int>(set.size()) - 1; }

}  // namespace adlv
