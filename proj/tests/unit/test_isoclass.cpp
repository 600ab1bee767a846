#include <set>

#include "adlv/isoclass.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace adlv;

namespace {

const Rational half(1, 2), third(1, 3);

Word cycle3() { return Word{0, 1}; }  // s1 s2 acts as a 3-cycle

}  // namespace

TEST_CASE("newton points") {
  Group gl2(preset("gl(2)")), gl3(preset("gl(3)"));
  CHECK(newton_point(gl2, {gl2.make({1, 0}), {0}}) == QVec{half, half});
  CHECK(newton_point(gl2, {gl2.make({3, 1}), {}}) == QVec{3, 1});
  CHECK(newton_point(gl3, {gl3.make({1, 0, 0}), cycle3()}) == QVec{third, third, third});
  CHECK(newton_point(gl3, {gl3.make({0, 0, 1}), {}}) == QVec{1, 0, 0});
}

TEST_CASE("defect") {
  Group gl2(preset("gl(2)")), gl3(preset("gl(3)"));
  CHECK(defect(gl2, {gl2.make({1, 0}), {0}}) == 1);
  CHECK(defect(gl2, {gl2.make({1, 0}), {}}) == 0);
  CHECK(defect(gl3, {gl3.make({1, 0, 0}), cycle3()}) == 2);
  CHECK(class_defect(gl3, {gl3.make({1, 0, 0}), cycle3()}) == 2);
}

TEST_CASE("lambda(b) rounding") {
  Group gl2(preset("gl(2)")), gl3(preset("gl(3)"));
  CHECK(lambda_b(gl2, {gl2.make({1, 0}), {0}}) == gl2.make({1, 0}));
  CHECK(lambda_b(gl2, {gl2.make({2, 1}), {}}) == gl2.make({2, 1}));
  auto b3 = bgmu(gl3, gl3.make({1, 1, 0}));
  CHECK(lambda_b(gl3, b3[basic_index(b3)].rep) == gl3.make({1, 1, 0}));
  // round-up gives <rho, lambda(b) - nu> = defect/2 on basic classes of split groups; the literal
  // reading does not
  bool literal_everywhere = true;
  for (const char* name : {"gl(2)", "gl(3)", "gl(4)", "sp(4)", "g2", "pgl(3)", "so(5)"}) {
    Group g(preset(name));
    CAPTURE(name);
    for (int k = 0; k < g.dim(); ++k) {
      IVec e(g.dim(), 0);
      e[k] = 1;
      Elem mu = g.dominance(g.make(e, IVec(g.lattice().moduli().size(), 0))).rep;
      auto set = bgmu(g, mu);
      const auto& basic = set[basic_index(set)];
      Elem up = lambda_b(g, basic.rep, Rounding::Up);
      CHECK(g.pair_rho(up) - g.pair_rho(basic.nu) == Rational(basic.defect, 2));
      Elem lit = lambda_b(g, basic.rep, Rounding::Literal);
      if (g.pair_rho(lit) - g.pair_rho(basic.nu) != Rational(basic.defect, 2)) literal_everywhere = false;
    }
  }
  Group g2(preset("gl(2)"));
  auto set = bgmu(g2, g2.make({1, 0}));
  Elem lit = lambda_b(g2, set[basic_index(set)].rep, Rounding::Literal);
  CHECK(g2.pair_rho(lit) - g2.pair_rho(QVec{half, half}) != half);
  CHECK_FALSE(literal_everywhere);
}

TEST_CASE("mazur inequality") {
  Group gl2(preset("gl(2)"));
  CHECK(mazur(gl2, gl2.make({1, 0}), {gl2.make({1, 0}), {0}}));
  CHECK_FALSE(mazur(gl2, gl2.make({1, 0}), {gl2.make({2, -1}), {}}));
  CHECK(mazur(gl2, gl2.make({1, 0}), {gl2.make({1, 0}), {}}));
  CHECK_FALSE(mazur(gl2, gl2.make({1, 0}), {gl2.make({1, 1}), {}}));
}

TEST_CASE("B(G, mu) examples") {
  Group gl2(preset("gl(2)")), gl3(preset("gl(3)"));
  auto a = bgmu(gl2, gl2.make({1, 0}));
  REQUIRE(a.size() == 2);
  CHECK(a[0].nu == QVec{half, half});
  CHECK(a[1].nu == QVec{1, 0});
  CHECK(chain_length(gl2, a, 0, 1) == 1);
  CHECK(chain_length(gl2, a, 1, 1) == 0);
  auto b = bgmu(gl2, gl2.make({2, 0}));
  REQUIRE(b.size() == 2);
  CHECK(b[0].nu == QVec{1, 1});
  CHECK(b[1].nu == QVec{2, 0});
  auto c = bgmu(gl3, gl3.make({1, 1, 0}));
  REQUIRE(c.size() == 3);
  CHECK(c[0].nu == QVec{Rational(2, 3), Rational(2, 3), Rational(2, 3)});
  CHECK(c[1].nu == QVec{1, half, half});
  CHECK(c[2].nu == QVec{1, 1, 0});
  CHECK(chain_length(gl3, c, 0, 2) == 2);
  CHECK(c[basic_index(c)].basic);
  CHECK(maximal_index(c) == 2);
}

TEST_CASE("B(GL_n, mu) matches the Newton polygon oracle") {
  std::vector<IVec> mus{{1, 0},       {2, 0},       {3, 0},          {1, 1, 0},       {2, 1, 0},       {2, 0, 0},
                        {3, 1, 0},    {1, 0, 0, 0}, {1, 1, 0, 0},    {2, 1, 1, 0},    {2, 2, 0, 0},    {3, 1, 0, 0},
                        {2, 1, 0, -1}, {1, 1, 1, 0}, {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {2, 1, 0, 0, 0}};
  for (const auto& mu : mus) {
    int n = static_cast<int>(mu.size());
    Group g(preset("gl(" + std::to_string(n) + ")"));
    auto set = bgmu(g, g.make(mu));
    auto polys = oracle::gl_newton_polygons(mu);
    CAPTURE(to_string(mu));
    REQUIRE(set.size() == polys.size());
    std::set<std::pair<std::vector<Rational>, int>> a, b;
    for (const auto& c : set) a.insert({c.nu, c.defect});
    for (const auto& p : polys) b.insert({p.slopes, p.defect});
    CHECK(a == b);
    int top = maximal_index(set);
    for (size_t i = 0; i < set.size(); ++i)
      CHECK(chain_length(g, set, static_cast<int>(i), top) ==
            oracle::lattice_points_between(set[i].nu, set[top].nu));
  }
}

TEST_CASE("standard representatives and invariance") {
  for (const auto& name : preset_catalog(3)) {
    Group g(preset(name));
    CAPTURE(name);
    for (int k = 0; k < g.num_simple(); ++k) {
      Elem mu = g.dominance(g.roots()[g.simple()[k]].coroot).rep;
      auto set = bgmu(g, mu);
      const auto& top = set[maximal_index(set)];
      CHECK(top.nu == g.dominant(g.sigma_average(g.rational(mu))));
      CHECK(top.defect == 0);
      for (const auto& c : set) {
        // kappa(b) = kappa(mu) on B(G, mu)
        CHECK(c.kappa == g.kappa_gamma(mu));
        BClass again = classify(g, c.rep);
        CHECK(again.nu == c.nu);
        CHECK(again.kappa == c.kappa);
        CHECK(poset_leq(g, c, top));
        CHECK(chain_length(g, set, static_cast<int>(&c - set.data()), maximal_index(set)) >= 0);
      }
    }
  }
}
