#include "adlv/crystal.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>

namespace adlv {

namespace {

// roots of the dual Levi: coroots of the relative roots in j
struct DualData {
  std::vector<int> positive;  // relative root indices
  QVec rho;                   // half sum of positive dual roots
};

DualData dual_data(const Group& g, const Levi& j) {
  DualData d;
  d.positive = g.levi_positive(j);
  d.rho.assign(g.dim(), Q(0));
  for (int a : d.positive) d.rho = add(d.rho, scale(g.rational(g.roots()[a].coroot), Q(1, 2)));
  return d;
}

// W-invariant form on the span of the dual roots
Q form(const Group& g, const std::vector<int>& roots, const QVec& x, const QVec& y) {
  Q s = 0;
  for (int a : roots) s += g.pair(a, x) * g.pair(a, y);
  return s;
}

std::vector<Elem> weights_below_levi(const Group& g, const Elem& mu, const Levi& j) {
  std::set<Elem> seen{mu};
  std::vector<Elem> out{mu};
  const auto& lat = g.lattice();
  for (size_t i = 0; i < out.size(); ++i)
    for (int p : j) {
      Elem y = lat.sub(out[i], g.roots()[g.simple()[p]].coroot);
      if (seen.count(y)) continue;
      if (!g.leq_integral(g.dominance(y, j).rep, mu, j)) continue;
      seen.insert(y);
      out.push_back(y);
    }
  return out;
}

Q depth(const Group& g, const Elem& mu, const Elem& x, const Levi& j) {
  auto c = g.coroot_coefficients(g.rational(g.lattice().sub(mu, x)), j);
  Q s = 0;
  for (const auto& q : *c) s += q;
  return s;
}

}  // namespace

Character weight_multiplicities(const Group& g, const Elem& mu, const Levi& j) {
  if (!g.is_dominant(mu, j)) throw std::invalid_argument("highest weight is not dominant");
  DualData dd = dual_data(g, j);
  std::vector<int> all_roots = g.levi_roots(j);
  auto ws = weights_below_levi(g, mu, j);
  std::sort(ws.begin(), ws.end(), [&](const Elem& a, const Elem& b) { return depth(g, mu, a, j) < depth(g, mu, b, j); });
  Character m;
  QVec mr = add(g.rational(mu), dd.rho);
  Q top = form(g, all_roots, mr, mr);
  const auto& lat = g.lattice();
  for (const auto& lam : ws) {
    if (lam == mu) {
      m[lam] = 1;
      continue;
    }
    QVec lr = add(g.rational(lam), dd.rho);
    Q denom = top - form(g, all_roots, lr, lr);
    if (denom == 0) throw std::domain_error("Freudenthal denominator vanished");
    Q num = 0;
    for (int a : dd.positive) {
      const Elem& al = g.roots()[a].coroot;
      Elem x = lat.add(lam, al);
      while (true) {
        auto it = m.find(x);
        if (it == m.end()) break;
        num += Q(it->second) * form(g, all_roots, g.rational(x), g.rational(al));
        x = lat.add(x, al);
      }
    }
    Q val = Q(2) * num / denom;
    if (val.denominator() != 1 || val < 0) throw std::domain_error("Freudenthal produced a non-integral multiplicity");
    if (val != 0) m[lam] = val.numerator();
  }
  return m;
}

Character weight_multiplicities(const Group& g, const Elem& mu) { return weight_multiplicities(g, mu, g.full()); }

Int weight_multiplicity(const Group& g, const Elem& mu, const Elem& lambda) {
  auto ch = weight_multiplicities(g, g.dominance(mu).rep);
  auto it = ch.find(lambda);
  return it == ch.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// Lakshmibai-Seshadri paths as sequences of segment vectors.

namespace {

using Path = std::vector<QVec>;

Path normalize(const Path& p) {
  Path out;
  for (const auto& v : p) {
    if (is_zero(v)) continue;
    if (!out.empty()) {
      // merge positively proportional neighbours
      const QVec& u = out.back();
      Q ratio = 0;
      bool prop = true, found = false;
      for (size_t i = 0; i < v.size() && prop; ++i) {
        if (u[i] == 0 && v[i] == 0) continue;
        if (u[i] == 0 || v[i] == 0) {
          prop = false;
          break;
        }
        Q r = v[i] / u[i];
        if (!found) {
          ratio = r;
          found = true;
        } else if (r != ratio) {
          prop = false;
        }
      }
      if (prop && found && ratio > 0) {
        out.back() = add(u, v);
        continue;
      }
    }
    out.push_back(v);
  }
  return out;
}

// f_alpha for the dual simple root alpha = coroot of relative root a
std::optional<Path> root_operator_f(const Group& g, int a, const Path& p) {
  const QVec& cov = g.roots()[a].root;
  QVec alpha = g.rational(g.roots()[a].coroot);
  std::vector<Q> h{Q(0)};
  for (const auto& v : p) h.push_back(h.back() + dot(cov, v));
  Q m = *std::min_element(h.begin(), h.end());
  if (h.back() - m < 1) return std::nullopt;
  size_t pv = 0;
  for (size_t i = 0; i < h.size(); ++i)
    if (h[i] == m) pv = i;
  // first time after vertex pv where h reaches m + 1
  Path out(p.begin(), p.begin() + pv);
  Q target = m + 1;
  size_t i = pv;
  Path mid;
  while (true) {
    Q h0 = h[i], h1 = h[i + 1];
    if (h1 >= target) {
      Q frac = (target - h0) / (h1 - h0);
      QVec first = scale(p[i], frac), rest = sub(p[i], first);
      mid.push_back(first);
      for (auto& v : mid) out.push_back(sub(v, scale(alpha, dot(cov, v))));
      out.push_back(rest);
      for (size_t k = i + 1; k < p.size(); ++k) out.push_back(p[k]);
      break;
    }
    mid.push_back(p[i]);
    ++i;
  }
  return normalize(out);
}

}  // namespace

Character littelmann_character(const Group& g, const Elem& mu_in) {
  Elem mu = g.dominance(mu_in).rep;
  Path start = normalize({g.rational(mu)});
  std::set<Path> seen{start};
  std::deque<Path> queue{start};
  Character ch;
  const auto& lat = g.lattice();
  while (!queue.empty()) {
    Path p = queue.front();
    queue.pop_front();
    QVec end(g.dim(), Q(0));
    for (const auto& v : p) end = add(end, v);
    // recover the class (with torsion) from mu minus simple coroots
    auto c = g.coroot_coefficients(sub(g.rational(mu), end), g.full());
    if (!c) throw std::domain_error("path endpoint outside root lattice coset");
    Elem w = mu;
    for (size_t k = 0; k < c->size(); ++k) {
      if ((*c)[k].denominator() != 1) throw std::domain_error("non-integral path endpoint");
      w = lat.sub(w, lat.scale(g.roots()[g.simple()[k]].coroot, (*c)[k].numerator()));
    }
    ch[w] += 1;
    for (int s : g.simple()) {
      auto q = root_operator_f(g, s, p);
      if (q && seen.insert(*q).second) {
        if (seen.size() > 200000) throw std::domain_error("path model too large");
        queue.push_back(*q);
      }
    }
  }
  return ch;
}

Int littelmann_count(const Group& g, const Elem& mu, const Elem& lambda) {
  auto ch = littelmann_character(g, mu);
  auto it = ch.find(lambda);
  return it == ch.end() ? 0 : it->second;
}

Q weyl_dimension(const Group& g, const Elem& mu) {
  DualData dd = dual_data(g, g.full());
  QVec x = add(g.rational(mu), dd.rho);
  Q r = 1;
  for (int a : dd.positive) r *= g.pair(a, x) / g.pair(a, dd.rho);
  return r;
}

Character tensor_character(const Group& g, const std::vector<Elem>& mus) {
  Character acc{{g.lattice().zero(), 1}};
  for (const auto& mu : mus) {
    auto ch = weight_multiplicities(g, g.dominance(mu).rep);
    Character next;
    for (const auto& [x, mx] : acc)
      for (const auto& [y, my] : ch) next[g.lattice().add(x, y)] += mx * my;
    acc = std::move(next);
  }
  return acc;
}

Int tensor_weight_multiplicity(const Group& g, const std::vector<Elem>& mus, const Elem& lambda) {
  auto ch = tensor_character(g, mus);
  auto it = ch.find(lambda);
  return it == ch.end() ? 0 : it->second;
}

namespace {

// dot action into the dominant chamber of j; returns sign 0 on walls
std::pair<int, Elem> dot_dominant(const Group& g, Elem x, const Levi& j) {
  int sign = 1;
  const auto& lat = g.lattice();
  while (true) {
    bool moved = false;
    for (int p : j) {
      int a = g.simple()[p];
      Int v = g.pair(a, x) + 1;
      if (v == 0) return {0, x};
      if (v < 0) {
        x = lat.sub(x, lat.scale(g.roots()[a].coroot, v));
        sign = -sign;
        moved = true;
        break;
      }
    }
    if (!moved) return {sign, x};
  }
}

void prune(std::map<Elem, Int>& m) {
  for (auto it = m.begin(); it != m.end();) it = (it->second == 0) ? m.erase(it) : std::next(it);
}

}  // namespace

std::map<Elem, Int> tensor_decomposition(const Group& g, const Elem& mu1, const Elem& mu2) {
  std::map<Elem, Int> out;
  auto ch = weight_multiplicities(g, g.dominance(mu2).rep);
  Elem m1 = g.dominance(mu1).rep;
  for (const auto& [w, m] : ch) {
    auto [s, x] = dot_dominant(g, g.lattice().add(m1, w), g.full());
    if (s != 0) out[x] += s * m;
  }
  prune(out);
  return out;
}

std::map<Elem, Int> peel(const Group& g, Character ch, const Levi& j) {
  std::vector<int> pos = g.levi_positive(j);
  auto height = [&](const Elem& x) {
    Q s = 0;
    for (int a : pos) s += g.pair(a, g.rational(x));
    return s;
  };
  std::map<Elem, Int> out;
  prune(ch);
  while (!ch.empty()) {
    auto best = ch.begin();
    for (auto it = ch.begin(); it != ch.end(); ++it)
      if (height(it->first) > height(best->first)) best = it;
    Elem top = best->first;
    Int c = best->second;
    if (!g.is_dominant(top, j)) throw std::domain_error("character is not Weyl invariant");
    out[top] += c;
    for (const auto& [w, m] : weight_multiplicities(g, top, j)) ch[w] -= c * m;
    prune(ch);
  }
  prune(out);
  return out;
}

std::map<Elem, Int> tensor_decomposition_peel(const Group& g, const Elem& mu1, const Elem& mu2) {
  return peel(g, tensor_character(g, {mu1, mu2}), g.full());
}

std::map<Elem, Int> levi_branching(const Group& g, const Elem& mu_in, const Levi& j) {
  Elem mu = g.dominance(mu_in).rep;
  auto ch = weight_multiplicities(g, mu);
  // c_nu = sum_{w in W_j} eps(w) m_mu(nu + rho_j - w rho_j)
  const auto& lat = g.lattice();
  std::vector<std::pair<Elem, int>> shifts;  // rho_j - w rho_j as a class, with sign
  for (const auto& w : g.weyl(j)) {
    // rho_j - w rho_j is a sum of positive coroots of j; build it by the dot action on 0
    Elem z = lat.zero();
    Elem dz = z;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
      int a = g.simple()[*it];
      dz = lat.sub(dz, lat.scale(g.roots()[a].coroot, g.pair(a, dz) + 1));
    }
    // dz = w . 0 = w(rho) - rho, so rho - w rho = -dz
    shifts.emplace_back(lat.sub(z, dz), (w.length() % 2) ? -1 : 1);
  }
  std::map<Elem, Int> out;
  for (const auto& [nu, m0] : ch) {
    if (!g.is_dominant(nu, j)) continue;
    Int c = 0;
    for (const auto& [s, eps] : shifts) {
      auto it = ch.find(lat.add(nu, s));
      if (it != ch.end()) c += eps * it->second;
    }
    if (c != 0) out[nu] = c;
  }
  return out;
}

std::map<Elem, Int> levi_branching_peel(const Group& g, const Elem& mu, const Levi& j) {
  return peel(g, weight_multiplicities(g, g.dominance(mu).rep), j);
}

Int levi_branching_multiplicity(const Group& g, const Elem& mu, const Elem& mu_m, const Levi& j) {
  auto b = levi_branching(g, mu, j);
  auto it = b.find(mu_m);
  return it == b.end() ? 0 : it->second;
}

Int weight_multiplicity_gamma(const Group& g, const Elem& mu, const Elem& lambda_gamma) {
  Int s = 0;
  for (const auto& [w, m] : weight_multiplicities(g, g.dominance(mu).rep))
    if (g.to_gamma(w) == lambda_gamma) s += m;
  return s;
}

Int tensor_weight_multiplicity_gamma(const Group& g, const std::vector<Elem>& mus, const Elem& lambda_gamma) {
  Int s = 0;
  for (const auto& [w, m] : tensor_character(g, mus))
    if (g.to_gamma(w) == lambda_gamma) s += m;
  return s;
}

MVStats mv_stats(const Group& g, const Elem& mu, const Elem& lambda) {
  MVStats s;
  s.count = weight_multiplicity(g, mu, lambda);
  s.dim = g.pair_rho(add(g.rational(mu), g.rational(lambda)));
  s.dim_doubled = s.dim * 2;
  return s;
}

}  // namespace adlv
