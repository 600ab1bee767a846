#include "adlv/adlv.hpp"
#include "doctest.h"

using namespace adlv;

TEST_CASE("virtual dimension") {
  Group gl2(preset("gl(2)")), gl3(preset("gl(3)"));
  auto a = bgmu(gl2, gl2.make({1, 0}));
  CHECK(virtual_dimension(gl2, gl2.make({1, 0}), a[0].rep) == 0);
  CHECK(virtual_dimension(gl2, gl2.make({1, 0}), a[1].rep) == 0);
  auto b = bgmu(gl3, gl3.make({1, 1, 0}));
  CHECK(virtual_dimension(gl3, gl3.make({1, 1, 0}), b[0].rep) == 0);
  CHECK(virtual_dimension(gl3, gl3.make({1, 1, 0}), b[1].rep) == 0);
  CHECK(virtual_dimension(gl3, gl3.make({1, 1, 0}), b[2].rep) == 0);
  auto c = bgmu(gl2, gl2.make({2, 0}));
  CHECK(virtual_dimension(gl2, gl2.make({2, 0}), c[0].rep) == 1);
}

TEST_CASE("invariant reports") {
  Group gl2(preset("gl(2)"));
  auto r = invariant_report(gl2, gl2.make({1, 0}), IsoClass{gl2.make({1, 0}), {0}});
  CHECK(r.nonempty);
  CHECK_FALSE(r.diagnostic());
  REQUIRE(r.dimension);
  CHECK(*r.dimension == 0);
  REQUIRE(r.irr_orbit_count);
  CHECK(*r.irr_orbit_count == 1);
  CHECK(r.pi0.witness);
  CHECK(r.pi0.subgroup == IVec{0});
  CHECK(r.pi0.hn_irreducible);
  CHECK(r.pi0.described);

  auto s = invariant_report(gl2, gl2.make({2, 0}), IsoClass{gl2.make({1, 1}), {}});
  REQUIRE(s.dimension);
  CHECK(*s.dimension == 1);
  CHECK(*s.irr_orbit_count == 1);

  auto e = invariant_report(gl2, gl2.make({1, 0}), IsoClass{gl2.make({1, 1}), {}});
  CHECK_FALSE(e.nonempty);
  CHECK_FALSE(e.dimension);
  CHECK_FALSE(e.irr_orbit_count);
}

TEST_CASE("report properties on the grid") {
  for (const auto& name : preset_catalog(3)) {
    Group g(preset(name));
    CAPTURE(name);
    for (const auto& mu : dominant_grid(g, 6)) {
      auto set = bgmu(g, mu);
      for (size_t i = 0; i < set.size(); ++i) {
        auto r = invariant_report(g, mu, set[i].rep);
        CHECK_FALSE(r.diagnostic());
        CHECK(r.virtual_dimension.denominator() == 1);
        CHECK(r.pi0.witness);
        // smaller classes have larger affine Deligne-Lusztig varieties
        for (size_t k = 0; k < set.size(); ++k)
          if (poset_leq(g, set[k], set[i]))
            CHECK(virtual_dimension(g, mu, set[k].rep) >= virtual_dimension(g, mu, set[i].rep));
      }
      auto top = invariant_report(g, mu, set[maximal_index(set)].rep);
      REQUIRE(top.irr_orbit_count);
      CHECK(*top.irr_orbit_count == 1);
    }
  }
}

TEST_CASE("Newton stratification") {
  Group gl2(preset("gl(2)")), gl3(preset("gl(3)"));
  auto a = newton_stratification(gl2, gl2.make({1, 0}));
  CHECK(a.ambient_dim == 1);
  CHECK(a.strata[a.basic].stratum_dim == 0);
  CHECK(a.strata[a.basic].codim == 1);
  CHECK(a.consistent());
  auto b = newton_stratification(gl3, gl3.make({1, 1, 0}));
  REQUIRE(b.strata.size() == 3);
  CHECK(b.strata[0].codim == 2);
  CHECK(b.strata[1].codim == 1);
  CHECK(b.strata[2].codim == 0);
  CHECK(b.strata[b.maximal].closure.size() == 3);
  CHECK(b.strata[b.maximal].stratum_dim == b.ambient_dim);
  CHECK(b.consistent());
}

TEST_CASE("dominant grid") {
  Group gl2(preset("gl(2)"));
  auto grid = dominant_grid(gl2, 3);
  CHECK(grid.size() == 4);
  for (const auto& mu : grid) CHECK(2 * gl2.pair_rho(mu) <= 3);
}
