#include "adlv/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace adlv {

namespace {

IMat perm_matrix(const std::vector<int>& p) {
  // (P x)_i = x_{p[i]}
  int n = static_cast<int>(p.size());
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][p[i]] = 1;
  return m;
}

IVec unit(int n, int i, Int v = 1) {
  IVec e(n, 0);
  e[i] = v;
  return e;
}

IVec diff(int n, int i, int j) {
  IVec e(n, 0);
  e[i] = 1;
  e[j] = -1;
  return e;
}

// Cartan matrix A_ij = <alpha_i, alpha_j^vee> for the standard simple types.
IMat cartan(char type, int r) {
  IMat a(r, IVec(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      if (r >= 2) a[r - 2][r - 1] = -2;  // alpha_r short
      break;
    case 'C':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      if (r >= 2) a[r - 1][r - 2] = -2;  // alpha_r long
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      if (r >= 3) link(r - 3, r - 1);
      break;
    case 'G':
      a = {{2, -1}, {-3, 2}};
      break;
    default:
      throw std::invalid_argument(std::string("unknown Cartan type ") + type);
  }
  return a;
}

RootDatum gl(int n) {
  RootDatum d;
  d.name = "gl(" + std::to_string(n) + ")";
  d.rank = n;
  for (int i = 0; i + 1 < n; ++i) {
    d.simple_roots.push_back(diff(n, i, i + 1));
    d.simple_coroots.push_back(diff(n, i, i + 1));
  }
  d.frobenius = identity(n);
  d.resgl = RootDatum::ResGL{n, 1, 1};
  return d;
}

RootDatum from_cartan(const std::string& name, char type, int r, bool simply_connected) {
  IMat a = cartan(type, r);
  RootDatum d;
  d.name = name;
  d.rank = r;
  for (int i = 0; i < r; ++i) {
    if (simply_connected) {
      // X_* spanned by simple coroots
      d.simple_coroots.push_back(unit(r, i));
      d.simple_roots.push_back(a[i]);
    } else {
      // X_* spanned by fundamental coweights
      d.simple_roots.push_back(unit(r, i));
      IVec c(r);
      for (int k = 0; k < r; ++k) c[k] = a[k][i];
      d.simple_coroots.push_back(c);
    }
  }
  d.frobenius = identity(r);
  return d;
}

RootDatum classical(char type, int n) {
  // standard coordinates on Z^n
  RootDatum d;
  d.rank = n;
  for (int i = 0; i + 1 < n; ++i) {
    d.simple_roots.push_back(diff(n, i, i + 1));
    d.simple_coroots.push_back(diff(n, i, i + 1));
  }
  if (type == 'B') {
    d.name = "so(" + std::to_string(2 * n + 1) + ")";
    d.simple_roots.push_back(unit(n, n - 1));
    d.simple_coroots.push_back(unit(n, n - 1, 2));
  } else if (type == 'C') {
    d.name = "sp(" + std::to_string(2 * n) + ")";
    d.simple_roots.push_back(unit(n, n - 1, 2));
    d.simple_coroots.push_back(unit(n, n - 1));
  } else {
    d.name = "so(" + std::to_string(2 * n) + ")";
    IVec v(n, 0);
    v[n - 2] = 1;
    v[n - 1] = 1;
    d.simple_roots.push_back(v);
    d.simple_coroots.push_back(v);
  }
  d.frobenius = identity(n);
  return d;
}

RootDatum res_gl(int n, int f, int e) {
  int r = n * f * e;
  RootDatum d;
  d.name = "res_gl(" + std::to_string(n) + "," + std::to_string(f) + "," + std::to_string(e) + ")";
  d.rank = r;
  auto off = [&](int t, int c, int i) { return (t * e + c) * n + i; };
  for (int t = 0; t < f; ++t)
    for (int c = 0; c < e; ++c)
      for (int i = 0; i + 1 < n; ++i) {
        d.simple_roots.push_back(diff(r, off(t, c, i), off(t, c, i + 1)));
        d.simple_coroots.push_back(diff(r, off(t, c, i), off(t, c, i + 1)));
      }
  std::vector<int> sig(r), in(r);
  for (int t = 0; t < f; ++t)
    for (int c = 0; c < e; ++c)
      for (int i = 0; i < n; ++i) {
        sig[off(t, c, i)] = off((t + 1) % f, c, i);
        in[off(t, c, i)] = off(t, (c + 1) % e, i);
      }
  d.frobenius = perm_matrix(sig);
  if (e > 1) d.inertia_gens.push_back(perm_matrix(in));
  d.resgl = RootDatum::ResGL{n, f, e};
  return d;
}

RootDatum unitary(int n, bool ramified) {
  RootDatum d = gl(n);
  d.resgl.reset();
  d.name = "unitary(" + std::to_string(n) + "," + (ramified ? "ramified" : "unramified") + ")";
  IMat theta(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) theta[i][n - 1 - i] = -1;
  if (ramified)
    d.inertia_gens.push_back(theta);
  else
    d.frobenius = theta;
  return d;
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int to_int_arg(const std::string& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer argument '" + s + "'");
  return v;
}

}  // namespace

void RootDatum::complete() {
  int r = rank;
  if (simple_roots.size() != simple_coroots.size()) throw std::invalid_argument("simple roots/coroots mismatch");
  for (const auto& v : simple_roots)
    if (static_cast<int>(v.size()) != r) throw std::invalid_argument("simple root has wrong length");
  for (const auto& v : simple_coroots)
    if (static_cast<int>(v.size()) != r) throw std::invalid_argument("simple coroot has wrong length");
  for (size_t i = 0; i < simple_roots.size(); ++i)
    if (dot(simple_roots[i], simple_coroots[i]) != 2) throw std::invalid_argument("<alpha, alpha^vee> != 2");
  if (frobenius.empty()) frobenius = identity(r);
  // closure of roots under simple reflections
  std::set<std::pair<IVec, IVec>> seen;
  std::deque<std::pair<IVec, IVec>> queue;
  for (size_t i = 0; i < simple_roots.size(); ++i) {
    for (int sgn : {1, -1}) {
      auto p = std::make_pair(scale(simple_roots[i], sgn), scale(simple_coroots[i], sgn));
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  while (!queue.empty()) {
    auto [b, bc] = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < simple_roots.size(); ++i) {
      Int k = dot(b, simple_coroots[i]);
      Int kc = dot(simple_roots[i], bc);
      auto p = std::make_pair(sub(b, scale(simple_roots[i], k)), sub(bc, scale(simple_coroots[i], kc)));
      if (seen.insert(p).second) {
        if (seen.size() > 4000) throw std::invalid_argument("root system does not close");
        queue.push_back(p);
      }
    }
  }
  roots.clear();
  coroots.clear();
  positive.clear();
  QMat simple_t(r, QVec(simple_roots.size()));
  for (int k = 0; k < r; ++k)
    for (size_t i = 0; i < simple_roots.size(); ++i) simple_t[k][i] = simple_roots[i][k];
  for (const auto& [b, bc] : seen) {
    auto c = solve_rational(simple_t, to_q(b));
    if (!c) throw std::invalid_argument("root outside span of simple roots");
    bool pos = std::all_of(c->begin(), c->end(), [](const Q& q) { return q >= 0; });
    bool neg = std::all_of(c->begin(), c->end(), [](const Q& q) { return q <= 0; });
    if (!pos && !neg) throw std::invalid_argument("simple roots do not form a base");
    roots.push_back(b);
    coroots.push_back(bc);
    positive.push_back(pos);
  }
  // inertia group closure
  inertia.clear();
  inertia.push_back(identity(r));
  std::set<IMat> grp{identity(r)};
  for (size_t i = 0; i < inertia.size(); ++i)
    for (const auto& g : inertia_gens) {
      IMat h = mul(g, inertia[i]);
      if (grp.insert(h).second) {
        if (grp.size() > 512) throw std::invalid_argument("inertia group too large");
        inertia.push_back(h);
      }
    }
  // automorphisms must preserve roots, coroots and positivity
  std::map<IVec, size_t> coroot_index;
  for (size_t i = 0; i < coroots.size(); ++i) coroot_index[coroots[i]] = i;
  auto check = [&](const IMat& g, const char* what) {
    IMat ginv = unimodular_inverse(g);
    for (size_t i = 0; i < roots.size(); ++i) {
      IVec c = mul(g, coroots[i]);
      auto it = coroot_index.find(c);
      if (it == coroot_index.end()) throw std::invalid_argument(std::string(what) + " does not preserve coroots");
      // root transforms as beta o g^{-1}
      IVec b(r, 0);
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) b[k] += roots[i][l] * ginv[l][k];
      if (b != roots[it->second]) throw std::invalid_argument(std::string(what) + " does not preserve roots");
      if (positive[i] != positive[it->second])
        throw std::invalid_argument(std::string(what) + " does not preserve the positive system");
    }
  };
  for (const auto& g : inertia) check(g, "inertia");
  check(frobenius, "frobenius");
  IMat finv = unimodular_inverse(frobenius);
  std::set<IMat> grp_set(inertia.begin(), inertia.end());
  for (const auto& g : inertia)
    if (!grp_set.count(mul(mul(frobenius, g), finv)))
      throw std::invalid_argument("frobenius does not normalize inertia");
}

RootDatum preset(const std::string& spec_in) {
  std::string spec;
  for (char c : spec_in)
    if (!std::isspace(static_cast<unsigned char>(c))) spec += static_cast<char>(std::tolower(c));
  std::smatch m;
  static const std::regex call(R"(([a-z_0-9]+)\((.*)\))");
  std::string head = spec, args;
  if (std::regex_match(spec, m, call)) {
    head = m[1];
    args = m[2];
  }
  auto a = split_args(args);
  RootDatum d;
  auto need = [&](size_t k) {
    if (a.size() != k) throw std::invalid_argument("preset '" + spec_in + "' expects " + std::to_string(k) + " arguments");
  };
  if (head == "gl") {
    need(1);
    d = gl(to_int_arg(a[0]));
  } else if (head == "sl") {
    need(1);
    int n = to_int_arg(a[0]);
    d = from_cartan("sl(" + a[0] + ")", 'A', n - 1, true);
  } else if (head == "pgl") {
    need(1);
    int n = to_int_arg(a[0]);
    d = from_cartan("pgl(" + a[0] + ")", 'A', n - 1, false);
  } else if (head == "sp") {
    need(1);
    int m2 = to_int_arg(a[0]);
    if (m2 % 2) throw std::invalid_argument("sp needs an even argument");
    d = classical('C', m2 / 2);
  } else if (head == "so") {
    need(1);
    int k = to_int_arg(a[0]);
    d = classical(k % 2 ? 'B' : 'D', k / 2);
  } else if (head == "g2") {
    d = from_cartan("g2", 'G', 2, true);
  } else if (head == "split") {
    need(2);
    char t = static_cast<char>(std::toupper(a[0][0]));
    int r = to_int_arg(a[1]);
    if (t == 'A') d = gl(r + 1);
    else if (t == 'G') d = from_cartan("g2", 'G', 2, true);
    else d = classical(t, r);
  } else if (head == "res_gl") {
    if (a.size() < 1 || a.size() > 3) throw std::invalid_argument("res_gl(n,f,e)");
    auto kv = [&](size_t i, int dflt) {
      if (i >= a.size()) return dflt;
      std::string s = a[i];
      auto eq = s.find('=');
      if (eq != std::string::npos) s = s.substr(eq + 1);
      return to_int_arg(s);
    };
    d = res_gl(to_int_arg(a[0]), kv(1, 1), kv(2, 1));
  } else if (head == "unitary" || head == "quasi_split_unitary" || head == "u") {
    if (a.empty() || a.size() > 2) throw std::invalid_argument("unitary(n,ramified|unramified)");
    bool ram = a.size() == 2 && (a[1] == "ramified" || a[1] == "true" || a[1] == "1");
    if (a.size() == 2 && !ram && a[1] != "unramified" && a[1] != "false" && a[1] != "0")
      throw std::invalid_argument("unitary: second argument must be ramified or unramified");
    d = unitary(to_int_arg(a[0]), ram);
  } else {
    throw std::invalid_argument("unknown preset '" + spec_in + "'");
  }
  d.complete();
  return d;
}

std::vector<std::string> preset_catalog(int max_rank) {
  std::vector<std::string> all = {
      "gl(1)", "gl(2)", "gl(3)", "gl(4)", "sl(2)", "sl(3)", "sl(4)", "pgl(2)", "pgl(3)",
      "sp(4)", "so(5)", "g2", "sp(6)", "so(7)", "so(8)",
      "res_gl(1,2,1)", "res_gl(1,3,1)", "res_gl(2,2,1)", "res_gl(2,1,2)", "res_gl(1,1,2)",
      "unitary(2,unramified)", "unitary(3,unramified)", "unitary(4,unramified)",
      "unitary(2,ramified)", "unitary(3,ramified)", "unitary(4,ramified)"};
  std::vector<std::string> out;
  for (const auto& s : all)
    if (preset(s).rank <= max_rank) out.push_back(s);
  return out;
}

AdjointQuotient adjoint_quotient(const RootDatum& d) {
  int s = static_cast<int>(d.simple_roots.size());
  if (s == 0) throw std::invalid_argument("adjoint quotient of a torus is trivial");
  AdjointQuotient aq;
  aq.transfer = d.simple_roots;
  RootDatum& ad = aq.datum;
  ad.name = "ad(" + d.name + ")";
  ad.rank = s;
  for (int j = 0; j < s; ++j) {
    ad.simple_roots.push_back(unit(s, j));
    ad.simple_coroots.push_back(mul(aq.transfer, d.simple_coroots[j]));
  }
  // automorphisms permute the simple roots: alpha_i o g = alpha_{pi(i)}
  auto induced = [&](const IMat& g) {
    IMat out(s, IVec(s, 0));
    for (int i = 0; i < s; ++i) {
      IVec row(d.rank, 0);
      for (int k = 0; k < d.rank; ++k)
        for (int l = 0; l < d.rank; ++l) row[l] += d.simple_roots[i][k] * g[k][l];
      auto it = std::find(d.simple_roots.begin(), d.simple_roots.end(), row);
      if (it == d.simple_roots.end()) throw std::invalid_argument("automorphism does not preserve the base");
      out[i][it - d.simple_roots.begin()] = 1;
    }
    return out;
  };
  for (const auto& g : d.inertia_gens) ad.inertia_gens.push_back(induced(g));
  ad.frobenius = induced(d.frobenius.empty() ? identity(d.rank) : d.frobenius);
  ad.complete();
  return aq;
}

Elem transfer_coweight(const Group& g, const Group& ad, const IMat& t, const Elem& x) {
  return ad.project_absolute(mul(t, g.lattice().lift(x)));
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int i : w) s += "s" + std::to_string(i + 1);
  return s;
}

// ---------------------------------------------------------------------------

std::vector<IVec> Group::inertia_relations() const {
  std::vector<IVec> rel;
  int r = datum_.rank;
  for (const auto& g : datum_.inertia)
    for (int i = 0; i < r; ++i) {
      IVec v = unit(r, i);
      IVec w = sub(v, mul(g, v));
      if (!is_zero(w)) rel.push_back(w);
    }
  return rel;
}

std::vector<IVec> Group::sigma_relations() const {
  std::vector<IVec> rel;
  int r = datum_.rank;
  for (int i = 0; i < r; ++i) {
    IVec v = unit(r, i);
    IVec w = sub(v, mul(datum_.frobenius, v));
    if (!is_zero(w)) rel.push_back(w);
  }
  return rel;
}

std::vector<IVec> Group::coroot_relations(const Levi& j) const {
  std::vector<IVec> rel;
  for (size_t b = 0; b < datum_.roots.size(); ++b)
    if (in_levi(abs_to_rel_[b], j)) rel.push_back(datum_.coroots[b]);
  return rel;
}

Group::Group(RootDatum d) : datum_(std::move(d)) {
  if (datum_.roots.empty() && !datum_.simple_roots.empty()) datum_.complete();
  if (datum_.inertia.empty()) datum_.complete();
  int r = datum_.rank;
  lattice_ = AbelianQuotient(r, inertia_relations());
  int f = lattice_.free_rank();
  Q order = static_cast<Int>(datum_.inertia.size());
  for (int k = 0; k < f; ++k) {
    QVec s(r, Q(0));
    for (const auto& g : datum_.inertia) s = add(s, to_q(mul(g, lattice_.free_lifts()[k])));
    avg_lift_.push_back(scale(s, Q(1) / order));
  }
  // relative roots, grouped by the ray of the projected coroot
  struct Cand {
    Elem coroot;
    int abs;
  };
  std::map<IVec, Cand> ray;  // primitive direction -> shortest candidate
  std::vector<IVec> abs_dir(datum_.roots.size());
  for (size_t b = 0; b < datum_.roots.size(); ++b) {
    Elem c = lattice_.project(datum_.coroots[b]);
    if (is_zero(c.free)) throw std::invalid_argument("coroot with trivial image in the coinvariants");
    Int g = 0;
    for (Int x : c.free) g = std::gcd(g, std::abs(x));
    IVec dir = c.free;
    for (auto& x : dir) x /= g;
    abs_dir[b] = dir;
    auto it = ray.find(dir);
    if (it == ray.end()) {
      ray[dir] = Cand{c, static_cast<int>(b)};
    } else {
      Int cur = 0, now = 0;
      for (size_t i = 0; i < dir.size(); ++i)
        if (dir[i]) {
          cur = it->second.coroot.free[i] / dir[i];
          now = c.free[i] / dir[i];
          break;
        }
      if (now < cur) it->second = Cand{c, static_cast<int>(b)};
    }
  }
  std::map<IVec, int> dir_index;
  for (const auto& [dir, cand] : ray) {
    const IVec& beta = datum_.roots[cand.abs];
    QVec rest(f);
    for (int k = 0; k < f; ++k) rest[k] = dot(beta, avg_lift_[k]);
    Q val = dot(rest, rational(cand.coroot));
    if (val == 0) throw std::invalid_argument("degenerate restricted root");
    RelRoot rr;
    rr.root = scale(rest, Q(2) / val);
    if (!is_integral(rr.root)) throw std::invalid_argument("relative root is not integral on the coinvariants");
    rr.coroot = cand.coroot;
    rr.positive = datum_.positive[cand.abs];
    dir_index[dir] = static_cast<int>(roots_.size());
    roots_.push_back(rr);
  }
  abs_to_rel_.resize(datum_.roots.size());
  for (size_t b = 0; b < datum_.roots.size(); ++b) abs_to_rel_[b] = dir_index.at(abs_dir[b]);
  // simple roots: positive roots that are not sums of two positive roots
  std::set<QVec> pos;
  for (const auto& rr : roots_)
    if (rr.positive) pos.insert(rr.root);
  for (size_t i = 0; i < roots_.size(); ++i) {
    if (!roots_[i].positive) continue;
    bool decomposable = false;
    for (const auto& p : pos)
      if (pos.count(sub(roots_[i].root, p))) {
        decomposable = true;
        break;
      }
    if (!decomposable) simple_.push_back(static_cast<int>(i));
  }
  // order simple roots like the absolute simple roots restricting to them
  auto first_abs = [&](int rel) {
    for (size_t k = 0; k < datum_.simple_roots.size(); ++k)
      for (size_t b = 0; b < datum_.roots.size(); ++b)
        if (datum_.roots[b] == datum_.simple_roots[k] && abs_to_rel_[b] == rel) return static_cast<int>(k);
    return static_cast<int>(datum_.simple_roots.size());
  };
  std::stable_sort(simple_.begin(), simple_.end(), [&](int a, int b) { return first_abs(a) < first_abs(b); });
  // rho
  QVec rho_abs(r, Q(0));
  for (size_t b = 0; b < datum_.roots.size(); ++b)
    if (datum_.positive[b]) rho_abs = add(rho_abs, scale(to_q(datum_.roots[b]), Q(1, 2)));
  rho_free_.resize(f);
  for (int k = 0; k < f; ++k) rho_free_[k] = dot(rho_abs, avg_lift_[k]);
  // sigma on the free part
  sigma_abs_ = datum_.frobenius;
  sigma_q_.assign(f, QVec(f, Q(0)));
  for (int k = 0; k < f; ++k) {
    Elem img = lattice_.project(mul(sigma_abs_, lattice_.free_lifts()[k]));
    for (int i = 0; i < f; ++i) sigma_q_[i][k] = img.free[i];
  }
  for (int s : simple_) {
    Elem img = sigma(roots_[s].coroot);
    int found = -1;
    for (size_t p = 0; p < simple_.size(); ++p)
      if (roots_[simple_[p]].coroot == img) found = static_cast<int>(p);
    if (found < 0) throw std::invalid_argument("frobenius does not permute the simple coroots");
    sigma_simple_.push_back(found);
  }
}

Levi Group::full() const {
  Levi j(simple_.size());
  std::iota(j.begin(), j.end(), 0);
  return j;
}

Elem Group::make(const IVec& free, const IVec& tors) const {
  if (static_cast<int>(free.size()) != dim())
    throw std::invalid_argument("coweight has " + std::to_string(free.size()) + " coordinates, expected " +
                                std::to_string(dim()));
  IVec t = tors;
  if (t.empty()) t.assign(lattice_.moduli().size(), 0);
  return lattice_.normalize(Elem{free, t});
}

Q Group::pair(int root, const QVec& x) const { return dot(roots_[root].root, x); }

Int Group::pair(int root, const Elem& x) const {
  Q v = dot(roots_[root].root, rational(x));
  return v.numerator();
}

Elem Group::reflect(int root, const Elem& x) const {
  return lattice_.sub(x, lattice_.scale(roots_[root].coroot, pair(root, x)));
}

QVec Group::reflect(int root, const QVec& x) const {
  return sub(x, scale(rational(roots_[root].coroot), pair(root, x)));
}

Elem Group::apply(const Word& w, const Elem& x) const {
  Elem y = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = reflect(simple_[*it], y);
  return y;
}

QVec Group::apply(const Word& w, const QVec& x) const {
  QVec y = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = reflect(simple_[*it], y);
  return y;
}

Elem Group::sigma(const Elem& x) const { return lattice_.project(mul(sigma_abs_, lattice_.lift(x))); }

QVec Group::sigma(const QVec& x) const { return mul(sigma_q_, x); }

QMat Group::word_matrix(const Word& w) const {
  int f = dim();
  QMat m(f, QVec(f, Q(0)));
  for (int k = 0; k < f; ++k) {
    QVec e(f, Q(0));
    e[k] = 1;
    QVec img = apply(w, e);
    for (int i = 0; i < f; ++i) m[i][k] = img[i];
  }
  return m;
}

int Group::order(const QMat& m) const {
  int f = static_cast<int>(m.size());
  QMat id(f, QVec(f, Q(0)));
  for (int i = 0; i < f; ++i) id[i][i] = 1;
  QMat p = m;
  for (int k = 1; k <= 10000; ++k) {
    if (p == id) return k;
    QMat next(f, QVec(f, Q(0)));
    for (int i = 0; i < f; ++i)
      for (int l = 0; l < f; ++l)
        if (p[i][l] != 0)
          for (int j = 0; j < f; ++j) next[i][j] += p[i][l] * m[l][j];
    p = next;
  }
  throw std::domain_error("operator of infinite order");
}

QVec Group::sigma_average(const QVec& x) const {
  int n = order(sigma_q_);
  QVec s(x.size(), Q(0)), y = x;
  for (int i = 0; i < n; ++i) {
    s = add(s, y);
    y = sigma(y);
  }
  return scale(s, Q(1, n));
}

std::vector<std::vector<int>> Group::sigma_orbits(const Levi& j) const {
  std::vector<std::vector<int>> out;
  std::set<int> done;
  for (int p : j) {
    if (done.count(p)) continue;
    std::vector<int> orb;
    int q = p;
    while (!done.count(q)) {
      done.insert(q);
      orb.push_back(q);
      q = sigma_simple_[q];
    }
    out.push_back(orb);
  }
  return out;
}

QVec Group::average_lift(const QVec& x) const {
  QVec s(datum_.rank, Q(0));
  for (size_t k = 0; k < x.size(); ++k) s = add(s, scale(avg_lift_[k], x[k]));
  return s;
}

Q Group::pair_rho(const QVec& x) const { return dot(rho_free_, x); }

Q Group::pair_rho_levi(const QVec& x, const Levi& j) const {
  QVec lifted = average_lift(x);
  Q s = 0;
  for (size_t b = 0; b < datum_.roots.size(); ++b)
    if (datum_.positive[b] && in_levi(abs_to_rel_[b], j)) s += dot(datum_.roots[b], lifted);
  return s / 2;
}

bool Group::in_levi(int root, const Levi& j) const {
  if (j.size() == simple_.size()) return true;
  auto coeff = coroot_coefficients(rational(roots_[root].coroot), j);
  return coeff.has_value();
}

std::vector<int> Group::levi_roots(const Levi& j) const {
  std::vector<int> out;
  for (size_t i = 0; i < roots_.size(); ++i)
    if (in_levi(static_cast<int>(i), j)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Group::levi_positive(const Levi& j) const {
  std::vector<int> out;
  for (int i : levi_roots(j))
    if (roots_[i].positive) out.push_back(i);
  return out;
}

bool Group::is_dominant(const QVec& x, const Levi& j) const {
  for (int p : j)
    if (pair(simple_[p], x) < 0) return false;
  return true;
}

DominanceData Group::dominance(const Elem& x, const Levi& j) const {
  DominanceData out;
  out.rep = x;
  out.dominant = true;
  while (true) {
    bool moved = false;
    for (int p : j)
      if (pair(simple_[p], out.rep) < 0) {
        out.rep = reflect(simple_[p], out.rep);
        out.word.push_back(p);
        out.dominant = false;
        moved = true;
        break;
      }
    if (!moved) break;
  }
  return out;
}

QVec Group::dominant(const QVec& x, const Levi& j) const {
  QVec y = x;
  while (true) {
    bool moved = false;
    for (int p : j)
      if (pair(simple_[p], y) < 0) {
        y = reflect(simple_[p], y);
        moved = true;
        break;
      }
    if (!moved) return y;
  }
}

std::optional<QVec> Group::coroot_coefficients(const QVec& x, const Levi& j) const {
  int f = dim();
  if (j.empty()) {
    if (is_zero(x)) return QVec{};
    return std::nullopt;
  }
  QMat c(f, QVec(j.size()));
  for (int i = 0; i < f; ++i)
    for (size_t k = 0; k < j.size(); ++k) c[i][k] = roots_[simple_[j[k]]].coroot.free[i];
  return solve_rational(c, x);
}

bool Group::leq_integral(const Elem& a, const Elem& b, const Levi& j) const {
  Elem d = lattice_.sub(b, a);
  auto c = coroot_coefficients(rational(d), j);
  if (!c) return false;
  Elem acc = lattice_.zero();
  for (size_t k = 0; k < j.size(); ++k) {
    if ((*c)[k] < 0 || (*c)[k].denominator() != 1) return false;
    acc = lattice_.add(acc, lattice_.scale(roots_[simple_[j[k]]].coroot, (*c)[k].numerator()));
  }
  return acc == d;
}

bool Group::leq_rational(const QVec& a, const QVec& b, const Levi& j) const {
  auto c = coroot_coefficients(sub(b, a), j);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Q& q) { return q >= 0; });
}

const std::vector<Group::WeylElement>& Group::weyl(const Levi& j) const {
  auto it = weyl_cache_.find(j);
  if (it != weyl_cache_.end()) return it->second;
  std::vector<WeylElement> els;
  std::set<QMat> seen;
  QMat id = word_matrix({});
  els.push_back({{}, id});
  seen.insert(id);
  for (size_t i = 0; i < els.size(); ++i)
    for (int p : j) {
      Word w = els[i].word;
      w.insert(w.begin(), p);
      QMat m = word_matrix(w);
      if (seen.insert(m).second) {
        if (els.size() > 50000) throw std::domain_error("Weyl group too large");
        els.push_back({w, m});
      }
    }
  return weyl_cache_[j] = els;
}

Word Group::longest(const Levi& j) const {
  const auto& w = weyl(j);
  return w.back().word;
}

std::vector<Elem> Group::weights_below(const Elem& mu) const {
  std::set<Elem> seen{mu};
  std::vector<Elem> out{mu};
  for (size_t i = 0; i < out.size(); ++i)
    for (int s : simple_) {
      Elem y = lattice_.sub(out[i], roots_[s].coroot);
      if (seen.count(y)) continue;
      if (!leq_integral(dominance(y).rep, mu)) continue;
      seen.insert(y);
      out.push_back(y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> Group::dominant_below(const Elem& mu, const Levi& j) const {
  std::vector<Elem> out;
  for (const auto& x : weights_below(mu))
    if (is_dominant(x, j)) out.push_back(x);
  return out;
}

const AbelianQuotient& Group::pi1_inertia(const Levi& j) const {
  auto& slot = pi1_i_cache_[j];
  if (!slot) {
    auto rel = inertia_relations();
    for (auto& v : coroot_relations(j)) rel.push_back(v);
    slot = std::make_unique<AbelianQuotient>(datum_.rank, rel);
  }
  return *slot;
}

const AbelianQuotient& Group::pi1_gamma(const Levi& j) const {
  auto& slot = pi1_g_cache_[j];
  if (!slot) {
    auto rel = inertia_relations();
    for (auto& v : sigma_relations()) rel.push_back(v);
    for (auto& v : coroot_relations(j)) rel.push_back(v);
    slot = std::make_unique<AbelianQuotient>(datum_.rank, rel);
  }
  return *slot;
}

const AbelianQuotient& Group::x_gamma() const {
  if (!x_gamma_) {
    auto rel = inertia_relations();
    for (auto& v : sigma_relations()) rel.push_back(v);
    x_gamma_ = std::make_unique<AbelianQuotient>(datum_.rank, rel);
  }
  return *x_gamma_;
}

Elem Group::kappa_inertia(const Elem& x, const Levi& j) const { return pi1_inertia(j).project(lattice_.lift(x)); }

Elem Group::kappa_gamma(const Elem& x, const Levi& j) const { return pi1_gamma(j).project(lattice_.lift(x)); }

Elem Group::to_gamma(const Elem& x) const { return x_gamma().project(lattice_.lift(x)); }

QVec Group::gamma_average(const Elem& g) const {
  Elem x = lattice_.project(x_gamma().lift(g));
  return sigma_average(rational(x));
}

GroupKernel Group::pi1_sigma_invariants() const {
  const AbelianQuotient& p = pi1_inertia(full());
  int f = p.free_rank();
  size_t k = p.moduli().size();
  size_t n = f + k;
  std::vector<Elem> gens;
  for (int i = 0; i < f; ++i) {
    Elem e = p.zero();
    e.free[i] = 1;
    gens.push_back(e);
  }
  for (size_t i = 0; i < k; ++i) {
    Elem e = p.zero();
    e.tors[i] = 1;
    gens.push_back(e);
  }
  IMat m(n, IVec(n, 0));
  for (size_t c = 0; c < n; ++c) {
    Elem img = p.sub(p.project(mul(sigma_abs_, p.lift(gens[c]))), gens[c]);
    for (int i = 0; i < f; ++i) m[i][c] = img.free[i];
    for (size_t i = 0; i < k; ++i) m[f + i][c] = img.tors[i];
  }
  IVec d(n, 0);
  for (size_t i = 0; i < k; ++i) d[f + i] = p.moduli()[i];
  return kernel_of_endomorphism(m, d);
}

std::optional<Elem> Group::solve_sigma_minus_one(const Elem& t) const {
  const AbelianQuotient& p = pi1_inertia(full());
  int f = p.free_rank();
  size_t k = p.moduli().size();
  size_t n = f + k;
  // unknowns: x in Z^n and multipliers y for torsion relations
  IMat a(n, IVec(n + k, 0));
  std::vector<Elem> gens;
  for (size_t c = 0; c < n; ++c) {
    Elem e = p.zero();
    if (c < static_cast<size_t>(f)) e.free[c] = 1;
    else e.tors[c - f] = 1;
    Elem img = p.sub(p.project(mul(sigma_abs_, p.lift(e))), e);
    for (int i = 0; i < f; ++i) a[i][c] = img.free[i];
    for (size_t i = 0; i < k; ++i) a[f + i][c] = img.tors[i];
  }
  for (size_t i = 0; i < k; ++i) a[f + i][n + i] = p.moduli()[i];
  IVec rhs(n);
  for (int i = 0; i < f; ++i) rhs[i] = t.free[i];
  for (size_t i = 0; i < k; ++i) rhs[f + i] = t.tors[i];
  auto sol = solve_integer(a, rhs);
  if (!sol) return std::nullopt;
  Elem x = p.zero();
  for (int i = 0; i < f; ++i) x.free[i] = (*sol)[i];
  for (size_t i = 0; i < k; ++i) x.tors[i] = (*sol)[f + i];
  return p.normalize(x);
}

int Group::central_rank() const {
  QMat m;
  for (int s : simple_) m.push_back(roots_[s].root);
  return dim() - rank(m);
}

}  // namespace adlv
