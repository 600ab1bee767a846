#include "adlv/levi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "adlv/crystal.hpp"

namespace adlv {

Q pair_rho_n(const Group& g, const QVec& x, const Levi& j) { return g.pair_rho(x) - g.pair_rho_levi(x, j); }

namespace {

bool in_sigma(const Group& g, const Elem& x, const Elem& mu) { return g.leq_integral(g.dominance(x).rep, mu); }

bool contains(const std::vector<Elem>& v, const Elem& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

MuMSet sigma_mu_sets(const Group& g, const Elem& mu_in, const Levi& j) {
  Elem mu = g.dominance(mu_in).rep;
  MuMSet s;
  s.sigma = g.weights_below(mu);
  std::sort(s.sigma.begin(), s.sigma.end());
  for (const auto& x : s.sigma)
    if (g.is_dominant(x, j)) s.m_dom.push_back(x);
  for (const auto& x : s.m_dom) {
    bool maximal = true;
    for (const auto& y : s.m_dom)
      if (y != x && g.leq_integral(x, y, j)) {
        maximal = false;
        break;
      }
    if (maximal) s.m_max.push_back(x);
  }
  auto branch = levi_branching(g, mu, j);
  for (const auto& x : s.m_dom) {
    bool occurs = branch.count(x) > 0;
    if (occurs || contains(s.m_max, x)) s.s_m.push_back(x);
    else s.undecided.push_back(x);
  }
  return s;
}

FibreDimension d_mu_muM(const Group& g, const Elem& mu_in, const Elem& mu_m, const Levi& j) {
  Elem mu = g.dominance(mu_in).rep;
  auto sets = sigma_mu_sets(g, mu, j);
  if (!contains(sets.s_m, mu_m)) throw std::invalid_argument("mu_M is not in S_M(mu)");
  FibreDimension d;
  d.bound = g.pair_rho(add(g.rational(mu), g.rational(mu_m))) - Q(2) * g.pair_rho_levi(g.rational(mu_m), j);
  d.count = levi_branching_multiplicity(g, mu, mu_m, j);
  d.equality = d.count > 0;
  return d;
}

Levi centralizer_levi(const Group& g, const QVec& nu) {
  Levi j;
  for (int p = 0; p < g.num_simple(); ++p)
    if (g.pair(g.simple()[p], nu) == 0) j.push_back(p);
  return j;
}

LeviReduction levi_reduction(const Group& g, const IsoClass& b) {
  LeviReduction r;
  r.nu = newton_point(g, b);
  r.m = centralizer_levi(g, r.nu);
  Elem k = kappa(g, b);
  bool found = false;
  for (const auto& lam : g.weights_below(g.dominance(b.lambda).rep)) {
    if (g.kappa_gamma(lam) != k) continue;
    for (const auto& w : g.weyl(r.m)) {
      IsoClass cand{lam, w.word};
      if (newton_average(g, cand) != r.nu) continue;
      int d = defect(g, cand);
      if (!found || d < r.defect) {
        r.rep = cand;
        r.defect = d;
        found = true;
      }
    }
  }
  if (!found) throw std::domain_error("no representative of [b] inside the centraliser Levi");
  r.kappa_m = g.kappa_gamma(r.rep.lambda, r.m);
  return r;
}

Assembly assembled_dimension(const Group& g, const Elem& mu_in, const IsoClass& b) {
  Elem mu = g.dominance(mu_in).rep;
  if (!mazur(g, mu, b)) throw std::invalid_argument("X_mu(b) is empty");
  Assembly a;
  a.red = levi_reduction(g, b);
  const Levi& j = a.red.m;
  const QVec& nu = a.red.nu;
  int def_g = class_defect(g, b);
  a.closed_form = g.pair_rho(sub(g.rational(mu), nu)) - Q(def_g, 2);
  auto sets = sigma_mu_sets(g, mu, j);
  auto branch = levi_branching(g, mu, j);
  for (const auto& x : sets.s_m)
    if (g.kappa_gamma(x, j) == a.red.kappa_m) a.i_set.push_back(x);
  if (a.i_set.empty()) throw std::logic_error("I_{mu,b} is empty although X_mu(b) is not");
  Q two_rho_n_nu = Q(2) * pair_rho_n(g, nu, j);
  bool have = false, have_bound = false;
  for (const auto& x : a.i_set) {
    Q d_m = g.pair_rho_levi(sub(g.rational(x), nu), j) - Q(a.red.defect, 2);
    Q bound = g.pair_rho(add(g.rational(mu), g.rational(x))) - Q(2) * g.pair_rho_levi(g.rational(x), j);
    Q v = d_m + bound - two_rho_n_nu;
    if (!have_bound || v > a.upper_bound) a.upper_bound = v;
    have_bound = true;
    if (branch.count(x) && (!have || v > a.value)) {
      a.value = v;
      a.witness = x;
      have = true;
    }
  }
  if (!have) throw std::logic_error("no element of I_{mu,b} occurs in the branching");

  a.lambda_m = lambda_b(g, nu, a.red.kappa_m, j);
  for (const auto& x : a.i_set) {
    auto it = branch.find(x);
    if (it == branch.end()) continue;
    Int inner = 0;
    for (const auto& [w, m] : weight_multiplicities(g, x, j))
      if (g.to_gamma(w) == a.lambda_m) inner += m;
    a.count_assembled += it->second * inner;
  }
  a.count_direct = weight_multiplicity_gamma(g, mu, lambda_b(g, b));
  return a;
}

namespace {

// the M-minuscule M-dominant element in the pi_1(M)_I class of x
Elem m_minuscule(const Group& g, Elem x, const Levi& j) {
  const auto& lat = g.lattice();
  x = g.dominance(x, j).rep;
  while (true) {
    bool moved = false;
    for (int a : g.levi_positive(j))
      if (g.pair(a, x) >= 2) {
        x = g.dominance(lat.sub(x, g.roots()[a].coroot), j).rep;
        moved = true;
        break;
      }
    if (!moved) return x;
  }
}

}  // namespace

MinimalI minimal_I_leq(const Group& g, const Elem& mu_in, const IsoClass& b, Reading reading) {
  Elem mu = g.dominance(mu_in).rep;
  if (!mazur(g, mu, b)) throw std::invalid_argument("X_mu(b) is empty");
  MinimalI out;
  out.reading = reading;
  out.red = levi_reduction(g, b);
  const Levi& j = out.red.m;
  const auto& lat = g.lattice();
  auto below = [&](const Elem& x) {
    return reading == Reading::Weights ? in_sigma(g, x, mu) : g.leq_integral(x, mu);
  };

  // Compositions of the orbit totals of mu - nu over the simple roots outside M.
  std::vector<int> outside;
  for (int p = 0; p < g.num_simple(); ++p)
    if (!std::count(j.begin(), j.end(), p)) outside.push_back(p);
  auto coef = g.coroot_coefficients(sub(g.sigma_average(g.rational(mu)), out.red.nu), g.full());
  std::vector<Elem> tops;  // mu minus the outside part
  bool feasible = coef.has_value();
  std::vector<std::vector<int>> orbits;
  std::vector<Int> totals;
  if (feasible)
    for (const auto& orb : g.sigma_orbits(g.full())) {
      if (std::count(j.begin(), j.end(), orb[0])) continue;
      Q t = 0;
      for (int p : orb) t += (*coef)[p];
      if (t.denominator() != 1 || t < 0) feasible = false;
      orbits.push_back(orb);
      totals.push_back(t.numerator());
    }
  if (feasible) {
    std::vector<Int> c(g.num_simple(), 0);
    std::function<void(size_t, size_t, Int)> rec = [&](size_t o, size_t k, Int left) {
      if (o == orbits.size()) {
        Elem x = mu;
        for (int p : outside) x = lat.sub(x, lat.scale(g.roots()[g.simple()[p]].coroot, c[p]));
        tops.push_back(x);
        return;
      }
      const auto& orb = orbits[o];
      if (k + 1 == orb.size()) {
        c[orb[k]] = left;
        rec(o + 1, 0, o + 1 < totals.size() ? totals[o + 1] : 0);
        return;
      }
      for (Int v = 0; v <= left; ++v) {
        c[orb[k]] = v;
        rec(o, k + 1, left - v);
      }
    };
    rec(0, 0, totals.empty() ? 0 : totals[0]);
  }

  // I_{<=mu,b}
  if (reading == Reading::Weights) {
    for (const auto& x : sigma_mu_sets(g, mu, j).m_dom)
      if (g.kappa_gamma(x, j) == out.red.kappa_m) out.i_leq.push_back(x);
  } else {
    // M-dominant x <=_M y for the tops y
    std::set<Elem> acc;
    for (const auto& y : tops) {
      Elem top = g.dominance(y, j).rep;
      std::set<Elem> seen{top};
      std::vector<Elem> queue{top};
      for (size_t i = 0; i < queue.size(); ++i)
        for (int p : j) {
          Elem z = lat.sub(queue[i], g.roots()[g.simple()[p]].coroot);
          if (seen.count(z) || !g.leq_integral(g.dominance(z, j).rep, top, j)) continue;
          seen.insert(z);
          queue.push_back(z);
        }
      for (const auto& x : queue)
        if (g.is_dominant(x, j) && g.leq_integral(x, y, j) && g.kappa_gamma(x, j) == out.red.kappa_m) acc.insert(x);
    }
    out.i_leq.assign(acc.begin(), acc.end());
  }

  // (a) poset minima
  for (const auto& x : out.i_leq) {
    bool minimal = true;
    for (const auto& y : out.i_leq)
      if (y != x && g.leq_integral(y, x, j)) {
        minimal = false;
        break;
      }
    if (minimal) out.minima_poset.push_back(x);
  }
  std::sort(out.minima_poset.begin(), out.minima_poset.end());

  // (b) M-minuscule representatives of the classes kappa in pi_1(M)_I with kappa = kappa_M(b) in
  // pi_1(M)_Gamma and mu - kappa a nonnegative combination of coroots outside M
  std::set<Elem> found;
  for (const auto& y : tops) {
    Elem x = m_minuscule(g, y, j);
    if (g.kappa_gamma(x, j) == out.red.kappa_m) found.insert(x);
  }
  out.minima_kappa.assign(found.begin(), found.end());
  out.agree = out.minima_poset == out.minima_kappa;

  // arrows
  int ord = g.order(g.sigma_matrix());
  const auto& mins = out.minima_poset;
  std::vector<int> parent(mins.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t a = 0; a < g.roots().size(); ++a) {
    if (g.in_levi(static_cast<int>(a), j)) continue;
    const Elem& cor = g.roots()[a].coroot;
    Elem img = cor;
    for (int r = 1; r <= ord; ++r) {
      img = g.sigma(img);
      Elem diff = lat.sub(cor, img);
      if (lat.is_zero(diff)) continue;
      for (size_t x = 0; x < mins.size(); ++x) {
        auto it = std::find(mins.begin(), mins.end(), lat.add(mins[x], diff));
        if (it == mins.end()) continue;
        if (!below(lat.add(mins[x], cor)) || !below(lat.sub(mins[x], img))) continue;
        int y = static_cast<int>(it - mins.begin());
        out.arrows.push_back({static_cast<int>(x), y, static_cast<int>(a), r});
        parent[find(static_cast<int>(x))] = find(y);
      }
    }
  }
  std::set<int> comps;
  for (size_t x = 0; x < mins.size(); ++x) comps.insert(find(static_cast<int>(x)));
  out.connected = comps.size() <= 1;
  return out;
}

bool hn_irreducible(const Group& g, const Elem& mu, const IsoClass& b) {
  if (g.kappa_gamma(g.dominance(mu).rep) != kappa(g, b)) return false;
  auto c = g.coroot_coefficients(sub(mu_diamond(g, mu), newton_point(g, b)), g.full());
  if (!c) return false;
  for (const auto& orb : g.sigma_orbits(g.full())) {
    Q t = 0;
    for (int p : orb) t += (*c)[p];
    if (t <= 0) return false;
  }
  return true;
}

}  // namespace adlv
