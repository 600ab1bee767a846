// Acceptance criteria: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "adlv/io.hpp"
#include "oracles.hpp"

using namespace adlv;

namespace {

struct Outcome {
  bool ok = true;
  int reasons = 0;
  std::ostringstream why;
  void fail(const std::string& s) {
    if (reasons < 3) why << (reasons ? "; " : "") << s;
    else if (reasons == 3) why << "; ...";
    ++reasons;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) o.fail("runtime " + std::to_string(s) + " s over the " + std::to_string(limit_s) + " s limit");
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << s << " s)";
  if (!o.ok) std::cout << ": " << o.why.str();
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

oracle::Mat columns(int rank, const std::vector<IVec>& cols) {
  oracle::Mat m(rank, std::vector<Int>(std::max<size_t>(cols.size(), 1), 0));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rank; ++i) m[i][j] = cols[j][i];
  return m;
}

std::vector<IVec> one_minus(const IMat& a) {
  std::vector<IVec> out;
  int r = static_cast<int>(a.size());
  for (int j = 0; j < r; ++j) {
    IVec c(r);
    for (int i = 0; i < r; ++i) c[i] = (i == j ? 1 : 0) - a[i][j];
    out.push_back(c);
  }
  return out;
}

// pi_1(G)_I from the raw datum: Z^r modulo coroots and (1 - iota) Z^r.
IVec pi1_inertia_oracle(const RootDatum& d) {
  std::vector<IVec> rel;
  for (const auto& m : d.inertia_gens)
    for (auto& c : one_minus(m)) rel.push_back(c);
  for (const auto& c : d.simple_coroots) rel.push_back(c);
  return oracle::invariant_factors(columns(d.rank, rel));
}

void check(Outcome& o, bool cond, const std::string& what) {
  if (!cond) o.fail(what);
}

std::string str(const Elem& e) { return to_string(e); }

}  // namespace

int main() {
  criterion(1, "GL_2, mu=(1,0), superbasic b: dim 0, count 1, |B(G,mu)| = 2 with length 1", 1.0, [](Outcome& o) {
    Group g(preset("gl(2)"));
    Elem mu = g.make({1, 0});
    IsoClass b = parse_b(g, "1,0;s");
    auto r = invariant_report(g, mu, b);
    check(o, r.nonempty, "empty");
    check(o, r.dimension && *r.dimension == 0, "dim != 0");
    check(o, r.irr_orbit_count && *r.irr_orbit_count == 1, "count != 1");
    auto sb = superbasic_invariants(TwistedSetup(g, 1, b), {mu});
    check(o, sb.dimension == 0 && sb.component_orbit_count == 1, "superbasic engine disagrees");
    auto set = bgmu(g, mu);
    check(o, set.size() == 2, "|B(G,mu)| != 2");
    check(o, chain_length(g, set, basic_index(set), maximal_index(set)) == 1, "length != 1");
  });

  criterion(2, "GL_3, mu=(1,1,0): 3 classes, virtual dims {0,0,1} = assembled, codims {2,1,0} = chains", 5.0,
            [](Outcome& o) {
              Group g(preset("gl(3)"));
              Elem mu = g.make({1, 1, 0});
              auto set = bgmu(g, mu);
              check(o, set.size() == 3, "wrong class count");
              std::vector<Q> dims;
              for (const auto& c : set) {
                Q v = virtual_dimension(g, mu, c.rep);
                dims.push_back(v);
                auto a = assembled_dimension(g, mu, c.rep);
                if (a.value != v || a.upper_bound != v) o.fail("assembly " + to_string(a.value) + " vs " + to_string(v));
                auto r = invariant_report(g, mu, c.rep);
                if (!r.dimension || Q(*r.dimension) != v) o.fail("report dimension mismatch");
              }
              std::sort(dims.begin(), dims.end());
              check(o, dims == std::vector<Q>{0, 0, 1}, "virtual dimensions " + to_string(dims) + ", expected (0,0,1)");
              auto strat = newton_stratification(g, mu);
              std::vector<Q> codims;
              for (size_t i = 0; i < strat.strata.size(); ++i) {
                codims.push_back(strat.strata[i].codim);
                Int brute = chain_length(g, set, static_cast<int>(i), maximal_index(set));
                if (strat.strata[i].codim != Q(brute)) o.fail("codim vs chain length");
              }
              check(o, codims == std::vector<Q>{2, 1, 0}, "codims " + to_string(codims));
            });

  criterion(3, "weight multiplicity = LS-path count, total = Weyl dimension, <rho,mu> <= 6", 60.0, [](Outcome& o) {
    int instances = 0;
    for (const char* name : {"gl(2)", "gl(3)", "sp(4)", "unitary(3,unramified)"}) {
      Group g(preset(name));
      for (const auto& mu : dominant_grid(g, 12)) {
        if (g.pair_rho(mu) > 6) continue;
        ++instances;
        auto f = weight_multiplicities(g, mu);
        auto l = littelmann_character(g, mu);
        if (f != l) o.fail(std::string(name) + " mu=" + str(mu) + " Freudenthal != Littelmann");
        Int total = 0;
        for (const auto& [w, m] : f) total += m;
        if (Q(total) != weyl_dimension(g, mu)) o.fail(std::string(name) + " mu=" + str(mu) + " Weyl dimension");
      }
    }
    check(o, instances > 0, "no instances");
  });

  criterion(4, "superbasic duality: per-target class counts = tensor multiplicities, max |R| = dimension", 120.0,
            [](Outcome& o) {
              struct Shape {
                int n, f, e;
              };
              int setups = 0;
              for (Shape sh : std::vector<Shape>{{2, 1, 1}, {3, 1, 1}, {4, 1, 1}, {5, 1, 1}, {6, 1, 1},
                                                 {2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {2, 1, 2}, {3, 1, 2}}) {
                std::string name = "res_gl(" + std::to_string(sh.n) + "," + std::to_string(sh.f) + "," +
                                   std::to_string(sh.e) + ")";
                Group g(preset(name));
                for (int d = 1; sh.n * d * sh.f <= 6; ++d) {
                  // minuscule tuples: per fold and block a vector (1^k, 0^{n-k})
                  int per_fold = 1;
                  for (int t = 0; t < sh.f; ++t) per_fold *= sh.n + 1;
                  int total = 1;
                  for (int j = 0; j < d; ++j) total *= per_fold;
                  for (int code = 0; code < total; ++code) {
                    std::vector<Elem> mus;
                    Int m = 0;
                    int c = code;
                    for (int j = 0; j < d; ++j) {
                      IVec v;
                      for (int t = 0; t < sh.f; ++t) {
                        int k = c % (sh.n + 1);
                        c /= sh.n + 1;
                        m += k;
                        for (int i = 0; i < sh.n; ++i) v.push_back(i < k ? 1 : 0);
                      }
                      mus.push_back(g.make(v));
                    }
                    if (std::gcd(m, static_cast<Int>(sh.n)) != 1) continue;
                    ++setups;
                    auto s = TwistedSetup::standard(g, d, m);
                    auto labels = enumerate_strata(s, mus);
                    std::map<Elem, Int> per_target;
                    int max_r = 0;
                    for (const auto& l : labels) {
                      ++per_target[s.to_gamma(s.slot_sum(l.lambda_tilde))];
                      max_r = std::max(max_r, l.dim());
                    }
                    std::string inst = name + " d=" + std::to_string(d) + " code=" + std::to_string(code);
                    for (const auto& [t, n] : per_target)
                      if (n != tensor_weight_multiplicity_gamma(g, mus, t)) o.fail(inst + " target " + str(t));
                    auto inv = superbasic_invariants(s, mus);
                    if (Q(max_r) != inv.predicted_dimension) o.fail(inst + " max |R|");
                  }
                }
              }
              check(o, setups > 0, "no setups");
            });

  std::vector<std::pair<std::string, Elem>> grid;
  for (const auto& name : preset_catalog(4)) {
    Group g(preset(name));
    for (const auto& mu : dominant_grid(g, 12)) grid.push_back({name, mu});
  }

  criterion(5, "assembled dimension = <rho, mu - nu> - defect/2 on all presets of rank <= 4, <2rho,mu> <= 12", 120.0,
            [&](Outcome& o) {
              std::map<std::string, std::unique_ptr<Group>> groups;
              for (const auto& [name, mu] : grid) {
                auto& g = groups[name];
                if (!g) g = std::make_unique<Group>(preset(name));
                for (const auto& cls : bgmu(*g, mu)) {
                  auto a = assembled_dimension(*g, mu, cls.rep);
                  Q closed = g->pair_rho(g->rational(mu)) - g->pair_rho(cls.nu) - Q(cls.defect, 2);
                  if (a.value != closed || a.upper_bound != closed)
                    o.fail(name + " mu=" + str(mu) + " b=" + cls.label());
                }
              }
            });

  criterion(6, "Chai: <2rho,mu> - stratum dimension = chain length to the maximal class, same grid", 120.0,
            [&](Outcome& o) {
              std::map<std::string, std::unique_ptr<Group>> groups;
              for (const auto& [name, mu] : grid) {
                auto& g = groups[name];
                if (!g) g = std::make_unique<Group>(preset(name));
                auto set = bgmu(*g, mu);
                int top = maximal_index(set);
                Q ambient = 2 * g->pair_rho(mu);
                for (size_t i = 0; i < set.size(); ++i) {
                  Q stratum = g->pair_rho(g->rational(mu)) + g->pair_rho(set[i].nu) - Q(set[i].defect, 2);
                  if (ambient - stratum != Q(chain_length(*g, set, static_cast<int>(i), top)))
                    o.fail(name + " mu=" + str(mu) + " b=" + set[i].label());
                }
              }
            });

  criterion(7, "EL-charts: f(A(lambda)) = A(b sigma(lambda)) on GL_2, GL_3, ramified Res GL_2", 60.0, [](Outcome& o) {
    struct Case {
      const char* group;
      int d;
      Int m;
      std::vector<IVec> mus;
    };
    std::vector<Case> cases{{"gl(2)", 1, 1, {{1, 0}}},          {"gl(2)", 3, 3, {{1, 0}, {1, 0}, {1, 0}}},
                            {"gl(2)", 2, 1, {{1, 0}, {0, 0}}},  {"gl(3)", 1, 1, {{1, 0, 0}}},
                            {"gl(3)", 1, 2, {{1, 1, 0}}},       {"gl(3)", 2, 2, {{1, 0, 0}, {1, 0, 0}}},
                            {"res_gl(2,1,2)", 1, 1, {{1, 0}}},  {"res_gl(2,1,2)", 3, 3, {{1, 0}, {1, 0}, {1, 0}}},
                            {"res_gl(2,1,2)", 2, 1, {{1, 0}, {0, 0}}}};
    int labels = 0;
    for (const auto& c : cases) {
      Group g(preset(c.group));
      std::vector<Elem> mus;
      for (const auto& v : c.mus) mus.push_back(g.make(v));
      auto s = TwistedSetup::standard(g, c.d, c.m);
      for (const auto& l : enumerate_strata(s, mus)) {
        ++labels;
        if (f_map(s, chart_of(s, l.lambda)) != chart_of(s, s.affine_map(l.lambda)))
          o.fail(std::string(c.group) + " d=" + std::to_string(c.d));
      }
    }
    check(o, labels > 0, "no labels");
  });

  criterion(8, "closed-form dimension term: residual 1 on GL_2, mu=(1,0), lambda=(0,0); authoritative dim 0, count 1",
            1.0, [](Outcome& o) {
              Group g(preset("gl(2)"));
              Elem mu = g.make({1, 0});
              auto s = TwistedSetup::standard(g, 1, 1);
              auto l = stratum_status(s, {mu}, {{0, 0}});
              check(o, l.nonempty && l.dim() == 0, "direct |R| != 0");
              check(o, l.closed_form - Q(l.dim()) == 1, "residual " + to_string(l.closed_form - Q(l.dim())));
              Json j = to_json(l);
              check(o, j.contains("closed_form_diagnostic") && j["closed_form_diagnostic"] == Json::array({1, 1}),
                    "diagnostic not emitted");
              auto inv = superbasic_invariants(s, {mu});
              check(o, inv.dimension == 0 && inv.component_orbit_count == 1, "authoritative values");
            });

  criterion(9, "pi_1: GL_n^sigma = Z, SL_n = 0, PGL_2 = Z/2, ramified unitary torsion = Smith oracle", 10.0,
            [](Outcome& o) {
              for (int n = 1; n <= 4; ++n) {
                Group gl(preset("gl(" + std::to_string(n) + ")"));
                check(o, gl.pi1_sigma_invariants().invariants == IVec{0}, "GL_n");
                if (n >= 2) {
                  Group sl(preset("sl(" + std::to_string(n) + ")"));
                  check(o, sl.pi1_inertia(sl.full()).invariants().empty(), "SL_n");
                  check(o, sl.pi1_sigma_invariants().invariants.empty(), "SL_n sigma");
                }
              }
              Group pgl(preset("pgl(2)"));
              check(o, pgl.pi1_sigma_invariants().invariants == IVec{2}, "PGL_2");
              for (const char* name : {"unitary(2,ramified)", "unitary(3,ramified)", "unitary(4,ramified)"}) {
                auto d = preset(name);
                Group g(d);
                std::vector<IVec> rel;
                for (const auto& m : d.inertia_gens)
                  for (auto& c : one_minus(m)) rel.push_back(c);
                auto lattice = oracle::invariant_factors(columns(d.rank, rel));
                if (g.lattice().invariants() != lattice) o.fail(std::string(name) + " coinvariants");
                if (g.pi1_inertia(g.full()).invariants() != pi1_inertia_oracle(d)) o.fail(std::string(name) + " pi_1");
              }
            });

  return failures == 0 ? 0 : 1;
}
