#include "adlv/io.hpp"
#include "doctest.h"

using namespace adlv;

TEST_CASE("parsing coweights, words and classes") {
  Group gl2(preset("gl(2)")), gl3(preset("gl(3)")), u3(preset("unitary(3,ramified)"));
  CHECK(parse_ints("1,0,-2") == IVec{1, 0, -2});
  CHECK(parse_ints("(3)") == IVec{3});
  CHECK_THROWS_AS(parse_ints("1,x"), InputError);
  CHECK(parse_coweight(gl3, "1,1,0") == gl3.make({1, 1, 0}));
  CHECK_THROWS_AS(parse_coweight(gl3, "1,0"), InputError);
  CHECK(parse_coweight(u3, "1,0,0") == u3.project_absolute({1, 0, 0}));
  CHECK(parse_word(gl3, "s1s2") == Word{0, 1});
  CHECK(parse_word(gl3, "1").empty());
  CHECK(parse_word(gl2, "s") == Word{0});
  CHECK_THROWS_AS(parse_word(gl3, "s"), InputError);
  CHECK_THROWS_AS(parse_word(gl3, "s4"), InputError);
  auto b = parse_b(gl2, "1,0;s");
  CHECK(b.lambda == gl2.make({1, 0}));
  CHECK(b.w == Word{0});
  auto c = parse_b(gl3, "1,0,0;s1;levi=1");
  CHECK(c.w == Word{0});
  CHECK_THROWS_AS(parse_b(gl3, "1,0,0;s2;levi=1"), InputError);
  auto basic = parse_b(gl3, "basic=1,1,0");
  CHECK(classify(gl3, basic).basic);
  CHECK(newton_point(gl3, basic) == QVec{Rational(2, 3), Rational(2, 3), Rational(2, 3)});
  auto k = parse_b(gl3, "kappa=2");
  CHECK(classify(gl3, k).nu == classify(gl3, basic).nu);
  Group pgl2(preset("pgl(2)"));
  auto kp = parse_b(pgl2, "kappa=+t1");
  CHECK(kappa(pgl2, kp) == pgl2.pi1_gamma(pgl2.full()).normalize(Elem{{}, {1}}));
}

TEST_CASE("group specs") {
  Json a = Json::parse(R"({"preset": "gl", "params": {"n": 3}})");
  CHECK(group_from_json(a).name == preset("gl(3)").name);
  RootDatum d = preset("unitary(3,ramified)");
  RootDatum e = group_from_json(group_to_json(d));
  Group g(d), h(e);
  CHECK(g.lattice().invariants() == h.lattice().invariants());
  CHECK(g.roots().size() == h.roots().size());
  CHECK(g.pi1_gamma(g.full()).invariants() == h.pi1_gamma(h.full()).invariants());
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"rank": 2})")), InputError);
  auto iso = isoclass_from_json(g, Json::parse(R"({"lambda_b": [1, 0, 0], "w_b": [1]})"));
  CHECK(iso.w == Word{0});
}

TEST_CASE("reports round-trip through JSON") {
  for (const char* name : {"gl(3)", "unitary(3,ramified)", "sp(4)", "res_gl(2,1,2)", "pgl(2)"}) {
    Group g(preset(name));
    CAPTURE(name);
    for (const auto& mu : dominant_grid(g, 4)) {
      auto strat = newton_stratification(g, mu);
      Json js = Json::parse(to_json(strat).dump());
      CHECK(js["schema"] == kSchemaVersion);
      auto back = stratification_from_json(js);
      CHECK(to_json(back) == to_json(strat));
      for (const auto& rec : strat.strata) {
        auto r = invariant_report(g, mu, rec.cls.rep);
        Json jr = Json::parse(to_json(r).dump());
        auto rb = invariant_report_from_json(jr);
        CHECK(to_json(rb) == to_json(r));
        CHECK(rb.mu == r.mu);
        CHECK(rb.nu == r.nu);
        CHECK(rb.dimension == r.dimension);
        CHECK(bclass_from_json(to_json(rec.cls)).rep.w == rec.cls.rep.w);
      }
    }
  }
  Group gl2(preset("gl(2)"));
  auto s = TwistedSetup::standard(gl2, 1, 1);
  for (const auto& l : enumerate_strata(s, {gl2.make({1, 0})})) {
    auto back = stratum_label_from_json(Json::parse(to_json(l).dump()));
    CHECK(back.lambda == l.lambda);
    CHECK(back.r_set == l.r_set);
    CHECK(back.closed_form == l.closed_form);
  }
  Json q = Rational(-3, 4);
  CHECK(q == Json::array({-3, 4}));
  CHECK(q.get<Rational>() == Rational(-3, 4));
}
