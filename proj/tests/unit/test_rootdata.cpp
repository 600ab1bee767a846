#include "adlv/rootdata.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace adlv;

namespace {

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

std::vector<IVec> inertia_relations(const RootDatum& d) {
  std::vector<IVec> rel;
  for (const auto& m : d.inertia_gens)
    for (auto& c : one_minus(m)) rel.push_back(c);
  return rel;
}

}  // namespace

TEST_CASE("preset shapes") {
  Group gl3(preset("split(A,2)"));
  CHECK(gl3.datum().rank == 3);
  CHECK(gl3.roots().size() == 6);
  CHECK(gl3.weyl().size() == 6);
  CHECK(Group(preset("sp(4)")).weyl().size() == 8);
  CHECK(Group(preset("g2")).weyl().size() == 12);
  CHECK(Group(preset("so(8)")).weyl().size() == 192);

  auto r = preset("res_gl(2,1,2)");
  CHECK(r.rank == 4);
  Group g(r);
  CHECK(g.datum().inertia.size() == 2);
  CHECK(g.lattice().invariants() == IVec{0, 0});

  auto u = preset("unitary(3,unramified)");
  CHECK(u.frobenius == IMat{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
  CHECK(u.inertia_gens.empty());
}

TEST_CASE("coinvariant lattice matches the Smith oracle") {
  for (const auto& name : preset_catalog(4)) {
    auto d = preset(name);
    Group g(d);
    auto rel = inertia_relations(d);
    auto expect = rel.empty() ? IVec(d.rank, 0) : IVec(oracle::invariant_factors(columns(d.rank, rel)));
    CAPTURE(name);
    CHECK(g.lattice().invariants() == expect);
  }
  Group ram(preset("res_gl(2,1,2)"));
  // (a,b,c,d) -> (a+c, b+d) up to the chosen basis of Z^2
  CHECK(ram.project_absolute({1, 0, 0, 0}) == ram.project_absolute({0, 0, 1, 0}));
  CHECK(ram.project_absolute({0, 1, 0, 0}) == ram.project_absolute({0, 0, 0, 1}));
  CHECK(ram.project_absolute({1, 0, 0, 0}) != ram.project_absolute({0, 1, 0, 0}));
  Group split(preset("gl(3)"));
  CHECK(split.project_absolute({4, -1, 2}).free == IVec{4, -1, 2});
}

TEST_CASE("fundamental groups against the Smith oracle") {
  for (const auto& name : preset_catalog(4)) {
    auto d = preset(name);
    Group g(d);
    auto rel = inertia_relations(d);
    for (const auto& c : d.simple_coroots) rel.push_back(c);
    CAPTURE(name);
    CHECK(g.pi1_inertia(g.full()).invariants() == oracle::invariant_factors(columns(d.rank, rel)));
    for (auto& c : one_minus(d.frobenius)) rel.push_back(c);
    CHECK(g.pi1_gamma(g.full()).invariants() == oracle::invariant_factors(columns(d.rank, rel)));
  }
  CHECK(Group(preset("gl(3)")).pi1_sigma_invariants().invariants == IVec{0});
  CHECK(Group(preset("sl(2)")).pi1_inertia(Levi{0}).invariants().empty());
  CHECK(Group(preset("sl(3)")).pi1_sigma_invariants().invariants.empty());
  CHECK(Group(preset("pgl(2)")).pi1_sigma_invariants().invariants == IVec{2});
  CHECK(Group(preset("unitary(3,ramified)")).pi1_inertia(Levi{0}).invariants() == IVec{2});
}

TEST_CASE("kottwitz map is additive and kills coroots") {
  for (const auto& name : preset_catalog(3)) {
    Group g(preset(name));
    CAPTURE(name);
    for (int p : g.simple()) CHECK(g.kappa_inertia(g.roots()[p].coroot) == g.pi1_inertia(g.full()).zero());
    int r = g.datum().rank;
    IVec x(r), y(r);
    for (int i = 0; i < r; ++i) {
      x[i] = i + 1;
      y[i] = 2 - 3 * i;
    }
    Elem ex = g.project_absolute(x), ey = g.project_absolute(y);
    const auto& pi = g.pi1_inertia(g.full());
    CHECK(g.kappa_inertia(g.lattice().add(ex, ey)) == pi.add(g.kappa_inertia(ex), g.kappa_inertia(ey)));
  }
}

TEST_CASE("rho pairing and averaging") {
  Group gl3(preset("gl(3)"));
  CHECK(gl3.pair_rho(gl3.make({1, 0, 0})) == 1);
  Group gl2(preset("gl(2)"));
  CHECK(gl2.pair_rho(gl2.make({1, 1})) == 0);
  CHECK(gl2.pair_rho(QVec{Rational(1, 2), Rational(-1, 2)}) == Rational(1, 2));
  Group ram(preset("res_gl(2,1,2)"));
  QVec avg = ram.average_lift(ram.rational(ram.project_absolute({1, 0, 0, 0})));
  CHECK(avg == QVec{Rational(1, 2), 0, Rational(1, 2), 0});
}

TEST_CASE("dominance and the coroot order") {
  Group gl3(preset("gl(3)"));
  auto d = gl3.dominance(gl3.make({0, 1, 0}));
  CHECK_FALSE(d.dominant);
  CHECK(d.rep == gl3.make({1, 0, 0}));
  CHECK(d.word == Word{0});
  CHECK(gl3.apply(d.word, d.rep) == gl3.make({0, 1, 0}));
  Group gl2(preset("gl(2)"));
  auto e = gl2.dominance(gl2.make({0, 1}));
  CHECK(e.rep == gl2.make({1, 0}));
  CHECK(word_to_string(e.word) == "s1");
  CHECK(gl2.dominance(gl2.make({3, 1})).dominant);
  CHECK(gl2.leq_integral(gl2.make({1, 1}), gl2.make({2, 0})));
  CHECK(gl2.leq_rational(QVec{Rational(1, 2), Rational(1, 2)}, QVec{1, 0}));
  CHECK_FALSE(gl2.leq_integral(gl2.make({2, 0}), gl2.make({1, 1})));

  for (const auto& name : preset_catalog(3)) {
    Group g(preset(name));
    CAPTURE(name);
    int r = g.dim();
    IVec v(r);
    for (int i = 0; i < r; ++i) v[i] = (i * 5 + 2) % 7 - 3;
    Elem x = g.make(v, IVec(g.lattice().moduli().size(), 0));
    auto dd = g.dominance(x);
    CHECK(g.is_dominant(dd.rep, g.full()));
    CHECK(g.apply(dd.word, dd.rep) == x);
    CHECK(g.leq_integral(x, x));
  }
}

TEST_CASE("relative roots of split groups are the absolute ones") {
  for (const char* name : {"gl(3)", "sp(4)", "g2", "so(7)"}) {
    auto d = preset(name);
    Group g(d);
    CAPTURE(name);
    CHECK(g.roots().size() == d.roots.size());
    CHECK(g.num_simple() == static_cast<int>(d.simple_roots.size()));
  }
}

TEST_CASE("adjoint quotient") {
  auto aq = adjoint_quotient(preset("gl(2)"));
  Group g(preset("gl(2)")), ad(aq.datum);
  CHECK(ad.dim() == 1);
  CHECK(transfer_coweight(g, ad, aq.transfer, g.make({1, 0})) == ad.make({1}));
  auto aq2 = adjoint_quotient(aq.datum);
  Group ad2(aq2.datum);
  CHECK(ad2.lattice().invariants() == ad.lattice().invariants());
  CHECK(aq2.transfer == identity(1));
  CHECK_THROWS(adjoint_quotient(preset("gl(1)")));
}
