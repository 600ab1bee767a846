#include "adlv/superbasic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "adlv/crystal.hpp"

namespace adlv {

namespace {

IVec tau_power_translation(int n, Int m) {
  IVec lam(n, 0);
  for (Int k = 0; k < m; ++k) {
    IVec next(n);
    next[0] = 1 + lam[n - 1];
    for (int i = 1; i < n; ++i) next[i] = lam[i - 1];
    lam = next;
  }
  return lam;
}

// x -> (x_n, x_1, ..., x_{n-1}) applied m times
IVec rotate_right(const IVec& x, Int m) {
  int n = static_cast<int>(x.size());
  IVec out(n);
  Int k = ((m % n) + n) % n;
  for (int i = 0; i < n; ++i) out[(i + k) % n] = x[i];
  return out;
}

IVec block(const IVec& v, int t, int n) { return IVec(v.begin() + t * n, v.begin() + (t + 1) * n); }

bool same_orbit(IVec a, IVec b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<IVec> permutations(IVec v) {
  std::sort(v.begin(), v.end());
  std::vector<IVec> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// positions of x in ascending order of (x_i, i)
std::vector<int> ascending(const IVec& x) {
  std::vector<int> ord(x.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return x[a] < x[b]; });
  return ord;
}

}  // namespace

TwistedSetup::TwistedSetup(const Group& g, int d, IsoClass b) : g_(&g), d_(d), b_(std::move(b)) {
  const auto& rg = g.datum().resgl;
  if (!rg) throw std::invalid_argument("superbasic engine needs a Res GL_n datum");
  if (d < 1) throw std::invalid_argument("fold count must be positive");
  n_ = rg->n;
  f_ = rg->f;
  if (g.dim() != n_ * f_ || !g.lattice().moduli().empty())
    throw std::logic_error("unexpected lattice for Res GL_n");
  m_ = 0;
  for (Int x : b_.lambda.free) m_ += x;
  QVec nu = newton_point(g, b_);
  for (int t = 0; t < f_; ++t)
    for (int i = 0; i < n_; ++i)
      if (nu[t * n_ + i] != nu[0]) throw std::invalid_argument("b is not basic");
  if (std::gcd(m_, static_cast<Int>(n_)) != 1) throw std::invalid_argument("b is not superbasic");

  // detect b = prod_t tau^{m_t}
  IVec generic(n_ * f_);
  for (int i = 0; i < n_ * f_; ++i) generic[i] = 7 * i + 3;
  Elem img = g.apply(b_.w, g.make(generic));
  IVec ms(f_);
  bool ok = true;
  for (int t = 0; t < f_ && ok; ++t) {
    IVec lb = block(b_.lambda.free, t, n_);
    ms[t] = std::accumulate(lb.begin(), lb.end(), Int(0));
    if (ms[t] < 0) {
      ok = false;
      break;
    }
    ok = lb == tau_power_translation(n_, ms[t]) && block(img.free, t, n_) == rotate_right(block(generic, t, n_), ms[t]);
  }
  if (!ok) throw std::invalid_argument("b must be a product of powers of tau; see TwistedSetup::standard");
  tau_m_ = ms;
}

std::optional<TwistedSetup> superbasic_setup(const Group& g, const IsoClass& b, int d) {
  const auto& rg = g.datum().resgl;
  if (!rg || !g.lattice().moduli().empty() || g.dim() != rg->n * rg->f) return std::nullopt;
  if (!classify(g, b).basic) return std::nullopt;
  Int m = 0;
  for (Int x : b.lambda.free) m += x;
  if (std::gcd(m, static_cast<Int>(rg->n)) != 1) return std::nullopt;
  return TwistedSetup::standard(g, d, m);
}

TwistedSetup TwistedSetup::standard(const Group& g, int d, Int m) {
  const auto& rg = g.datum().resgl;
  if (!rg) throw std::invalid_argument("superbasic engine needs a Res GL_n datum");
  int n = rg->n, f = rg->f;
  Int mm = ((m % n) + n) % n;
  Int central = (m - mm) / n;
  IVec lam(n * f, 0);
  IVec l0 = tau_power_translation(n, mm);
  for (int i = 0; i < n; ++i) lam[i] = l0[i] + central;
  IVec generic(n * f);
  for (int i = 0; i < n * f; ++i) generic[i] = 7 * i + 3;
  IVec target = generic;
  IVec r = rotate_right(block(generic, 0, n), mm);
  std::copy(r.begin(), r.end(), target.begin());
  Elem tgt = g.make(target), gen = g.make(generic);
  for (const auto& w : g.weyl())
    if (g.apply(w.word, gen) == tgt) return TwistedSetup(g, d, IsoClass{g.make(lam), w.word});
  throw std::logic_error("rotation not found in the Weyl group");
}

Slots TwistedSetup::affine_map(const Slots& lam) const {
  int D = slots();
  if (static_cast<int>(lam.size()) != D) throw std::invalid_argument("wrong number of slots");
  Slots out(D);
  IVec y(n_ * f_);
  for (int t = 0; t < f_; ++t)
    for (int i = 0; i < n_; ++i) y[t * n_ + i] = lam[t * d_][i];
  Elem z = g_->lattice().add(b_.lambda, g_->apply(b_.w, g_->sigma(g_->make(y))));
  for (int s = 0; s < D; ++s) {
    int t = s / d_, j = s % d_;
    out[s] = (j < d_ - 1) ? lam[s + 1] : block(z.free, t, n_);
  }
  return out;
}

QMat TwistedSetup::linear_part() const {
  int D = slots(), N = D * n_;
  Slots zero(D, IVec(n_, 0));
  Slots f0 = affine_map(zero);
  QMat a(N, QVec(N, Q(0)));
  for (int c = 0; c < N; ++c) {
    Slots e = zero;
    e[c / n_][c % n_] = 1;
    Slots fe = affine_map(e);
    for (int r = 0; r < N; ++r) a[r][c] = Q(fe[r / n_][r % n_] - f0[r / n_][r % n_]);
  }
  return a;
}

Slots TwistedSetup::split_tuple(const std::vector<Elem>& mus) const {
  if (static_cast<int>(mus.size()) != d_) throw std::invalid_argument("tuple length differs from fold count");
  Slots out(slots());
  for (int t = 0; t < f_; ++t)
    for (int j = 0; j < d_; ++j) out[t * d_ + j] = block(mus[j].free, t, n_);
  return out;
}

IVec TwistedSetup::slot_sum(const Slots& x) const {
  IVec s(n_, 0);
  for (const auto& v : x) s = add(s, v);
  return s;
}

Elem TwistedSetup::to_gamma(const IVec& v) const {
  IVec full(n_ * f_, 0);
  std::copy(v.begin(), v.end(), full.begin());
  return g_->to_gamma(g_->make(full));
}

Slots affine_image(const TwistedSetup& s, const Slots& lam) {
  Slots f = s.affine_map(lam);
  for (size_t i = 0; i < f.size(); ++i) f[i] = sub(f[i], lam[i]);
  return f;
}

bool is_minuscule(const Group& g, const Elem& mu) {
  for (size_t a = 0; a < g.roots().size(); ++a)
    if (std::abs(g.pair(static_cast<int>(a), mu)) > 1) return false;
  return true;
}

StratumLabel stratum_status(const TwistedSetup& s, const std::vector<Elem>& mus, const Slots& lam) {
  for (const auto& mu : mus)
    if (!is_minuscule(s.group(), mu)) throw std::invalid_argument("non-minuscule coweight in tuple");
  Slots mu = s.split_tuple(mus);
  int n = s.n();
  StratumLabel out;
  out.lambda = lam;
  out.lambda_prime = affine_image(s, lam);
  out.nonempty = true;
  for (int k = 0; k < s.slots(); ++k)
    if (!same_orbit(out.lambda_prime[k], mu[k])) out.nonempty = false;
  out.lambda_tilde.resize(s.slots());
  Q rho_part = 0;
  for (int k = 0; k < s.slots(); ++k) {
    const IVec& l = lam[k];
    const IVec& lp = out.lambda_prime[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        // positivity for the lower triangular Borel
        bool positive = i > j;
        Int pair = l[i] - l[j];
        Int lam_alpha = positive ? -pair : 1 - pair;
        if (lam_alpha < 0 && lp[i] - lp[j] == -1) out.r_set.push_back({k, {i, j}});
      }
    auto ord = ascending(l);
    IVec tl(n);
    for (int p = 0; p < n; ++p) tl[p] = lp[ord[p]];
    out.lambda_tilde[k] = tl;
    // <rho, lambda_tilde - w0 mu> with rho_i = (n-1)/2 - i
    IVec anti = mu[k];
    std::sort(anti.begin(), anti.end());
    for (int i = 0; i < n; ++i) rho_part += Q(n - 1 - 2 * i, 2) * Q(tl[i] - anti[i]);
  }
  out.closed_form = rho_part;
  return out;
}

namespace {

std::vector<StratumLabel> solve_labels(const TwistedSetup& s, const std::vector<Elem>& mus) {
  int D = s.slots(), n = s.n(), N = D * n;
  Slots mu = s.split_tuple(mus);
  QMat a = s.linear_part();
  for (int i = 0; i < N; ++i) a[i][i] -= Q(1);
  QVec norm(N, Q(0));
  for (int i = 0; i < n; ++i) norm[i] = 1;
  a.push_back(norm);
  if (rank(a) != N) throw std::logic_error("affine map has an unexpected fixed space");
  Slots f0 = s.affine_map(Slots(D, IVec(n, 0)));
  std::vector<std::vector<IVec>> orbits;
  for (const auto& m : mu) orbits.push_back(permutations(m));
  std::vector<StratumLabel> out;
  std::vector<size_t> idx(D, 0);
  while (true) {
    QVec rhs(N + 1, Q(0));
    for (int k = 0; k < D; ++k)
      for (int i = 0; i < n; ++i) rhs[k * n + i] = Q(orbits[k][idx[k]][i] - f0[k][i]);
    auto x = solve_rational(a, rhs);
    if (x) {
      bool integral = true;
      Slots lam(D, IVec(n));
      for (int r = 0; r < N; ++r) {
        if ((*x)[r].denominator() != 1) integral = false;
        lam[r / n][r % n] = (*x)[r].numerator();
      }
      if (integral) {
        auto lab = stratum_status(s, mus, lam);
        for (int k = 0; k < D; ++k)
          if (lab.lambda_prime[k] != orbits[k][idx[k]]) throw std::logic_error("label solve is inconsistent");
        lab.mu_tilde = lab.lambda_prime;
        out.push_back(std::move(lab));
      }
    }
    int k = 0;
    while (k < D && ++idx[k] == orbits[k].size()) idx[k++] = 0;
    if (k == D) break;
  }
  return out;
}

}  // namespace

std::vector<StratumLabel> enumerate_strata(const TwistedSetup& s, const std::vector<Elem>& mus, Enumeration how,
                                           int window) {
  for (const auto& mu : mus)
    if (!is_minuscule(s.group(), mu)) throw std::invalid_argument("non-minuscule coweight in tuple");
  auto solved = solve_labels(s, mus);
  std::sort(solved.begin(), solved.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  if (how == Enumeration::Solve) return solved;

  int D = s.slots(), n = s.n(), N = D * n;
  if (window < 0) {
    Int mx = 0;
    for (const auto& mu : mus)
      for (Int x : mu.free) mx = std::max<Int>(mx, std::abs(x));
    window = static_cast<int>(mx) + n;
  }
  double cells = 1;
  for (int i = 0; i < N - 1; ++i) cells *= 2.0 * window + 1;
  double cap = 5e6;
  if (const char* env = std::getenv("ADLV_MAX_WINDOW")) cap = std::atof(env);
  if (cells > cap) throw std::length_error("enumeration window exceeds ADLV_MAX_WINDOW");
  std::vector<StratumLabel> found;
  IVec x(N, -window);
  while (true) {
    Int s0 = 0;
    for (int i = 0; i < n; ++i) s0 += x[i];
    if (s0 == 0) {
      Slots lam(D, IVec(n));
      for (int r = 0; r < N; ++r) lam[r / n][r % n] = x[r];
      auto lab = stratum_status(s, mus, lam);
      if (lab.nonempty) {
        lab.mu_tilde = lab.lambda_prime;
        found.push_back(std::move(lab));
      }
    }
    int k = 0;
    while (k < N && ++x[k] > window) x[k++] = -window;
    if (k == N) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  if (found.size() != solved.size()) throw std::range_error("enumeration window exhausted before closure");
  for (size_t i = 0; i < found.size(); ++i)
    if (found[i].lambda != solved[i].lambda) throw std::logic_error("window enumeration disagrees with the exact solve");
  return found;
}

SuperbasicInvariants superbasic_invariants(const TwistedSetup& s, const std::vector<Elem>& mus) {
  const Group& g = s.group();
  SuperbasicInvariants out;
  out.lambda_b = lambda_b(g, s.b());
  auto labels = enumerate_strata(s, mus);
  if (labels.empty()) throw std::logic_error("no strata: kappa(mu) differs from kappa(b)");
  for (auto& l : labels) {
    out.dimension = std::max(out.dimension, l.dim());
    l.top = s.to_gamma(s.slot_sum(l.lambda_tilde)) == out.lambda_b;
  }
  for (const auto& l : labels)
    if (l.top) out.top_labels.push_back(l);
  out.component_orbit_count = static_cast<Int>(out.top_labels.size());
  Q rho = 0;
  for (const auto& mu : mus) rho += g.pair_rho(g.dominance(mu).rep);
  out.predicted_dimension = rho - g.pair_rho(newton_point(g, s.b())) * Q(s.d()) - Q(class_defect(g, s.b()), 2);
  out.predicted_count = tensor_weight_multiplicity_gamma(g, mus, out.lambda_b);
  if (Q(out.dimension) != out.predicted_dimension)
    throw std::logic_error("superbasic dimension " + std::to_string(out.dimension) + " differs from predicted " +
                           to_string(out.predicted_dimension));
  if (out.component_orbit_count != out.predicted_count)
    throw std::logic_error("superbasic component count " + std::to_string(out.component_orbit_count) +
                           " differs from tensor multiplicity " + std::to_string(out.predicted_count));
  for (const auto& l : out.top_labels)
    if (l.dim() != out.dimension) throw std::logic_error("top label is not top-dimensional");
  return out;
}

std::vector<Elem> decompose_minuscule(const Group& g, const Elem& mu_in) {
  const auto& rg = g.datum().resgl;
  if (!rg) throw std::invalid_argument("decompose_minuscule needs a Res GL_n datum");
  int n = rg->n, f = rg->f;
  Elem mu = g.dominance(mu_in).rep;
  if (is_minuscule(g, mu)) return {mu};
  std::vector<IVec> blocks_cols(f);
  std::vector<std::vector<IVec>> cols(f);
  size_t len = 1;
  for (int t = 0; t < f; ++t) {
    IVec b = block(mu.free, t, n);
    Int lo = *std::min_element(b.begin(), b.end()), hi = *std::max_element(b.begin(), b.end());
    for (Int k = lo + 1; k <= hi; ++k) {
      IVec c(n);
      for (int i = 0; i < n; ++i) c[i] = b[i] >= k ? 1 : 0;
      cols[t].push_back(c);
    }
    if (cols[t].empty()) cols[t].push_back(IVec(n, 0));
    for (Int& x : cols[t][0]) x += lo;
    len = std::max(len, cols[t].size());
  }
  std::vector<Elem> out;
  for (size_t k = 0; k < len; ++k) {
    IVec v(n * f, 0);
    for (int t = 0; t < f; ++t)
      if (k < cols[t].size()) std::copy(cols[t][k].begin(), cols[t][k].end(), v.begin() + t * n);
    out.push_back(g.make(v));
  }
  return out;
}

Chart chart_of(const TwistedSetup& s, const Slots& lam) {
  Chart a(lam.size(), IVec(s.n()));
  for (size_t k = 0; k < lam.size(); ++k)
    for (int i = 0; i < s.n(); ++i) a[k][i] = s.n() * lam[k][i] + i;
  return a;
}

namespace {
IVec shift_minima(const IVec& a, Int k) {
  int n = static_cast<int>(a.size());
  IVec out(n);
  for (int i = 0; i < n; ++i) out[((i + k) % n + n) % n] = a[i] + k;
  return out;
}
}  // namespace

Chart f_map(const TwistedSetup& s, const Chart& a) {
  if (!s.tau_exponents()) throw std::invalid_argument("charts need b to be a product of powers of tau");
  int D = s.slots(), d = s.d();
  Chart out(D);
  for (int k = 0; k < D; ++k) {
    const IVec& next = a[(k + 1) % D];
    out[k] = (k % d == d - 1) ? shift_minima(next, (*s.tau_exponents())[k / d]) : next;
  }
  return out;
}

Chart chart_shift(const Chart& a, Int k) {
  Chart out;
  for (const auto& c : a) out.push_back(shift_minima(c, k));
  return out;
}

Slots chart_type(const TwistedSetup& s, const Chart& a) {
  Chart fa = f_map(s, a);
  Slots out(a.size(), IVec(s.n()));
  for (size_t k = 0; k < a.size(); ++k)
    for (int i = 0; i < s.n(); ++i) {
      Int diff = fa[k][i] - a[k][i];
      if (diff % s.n() != 0) throw std::logic_error("chart type is not integral");
      out[k][i] = diff / s.n();
    }
  return out;
}

Slots chart_cotype(const TwistedSetup& s, const Chart& a) {
  Slots ty = chart_type(s, a);
  Slots out(a.size());
  for (size_t k = 0; k < a.size(); ++k) {
    auto ord = ascending(a[k]);
    std::reverse(ord.begin(), ord.end());
    for (int i : ord) out[k].push_back(ty[k][i]);
  }
  return out;
}

Slots omega_action(const TwistedSetup& s, const Slots& lam) {
  Slots out;
  for (const auto& x : lam) out.push_back(add(tau_power_translation(s.n(), 1), rotate_right(x, 1)));
  return out;
}

}  // namespace adlv
