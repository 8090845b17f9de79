#include "lnat/domain.hpp"

#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace lnat;
using namespace lnat::testing;

namespace {

LNatDomain box13() { return LNatDomain::cube(2, 1, 3); }

LNatDomain box13_coupled() {
  DiffBounds diff(2);
  diff.set(0, 1, 1);  // z1 - z2 <= 1
  return LNatDomain({1, 1}, {3, 3}, diff);
}

}  // namespace

TEST_CASE("membership follows the linear-inequality expression") {
  CHECK(box13().contains(LatticePoint{2, 3}));
  CHECK_FALSE(box13().contains(LatticePoint{0, 1}));
  CHECK_FALSE(box13_coupled().contains(LatticePoint{3, 1}));  // 3-1=2 > 1
  CHECK(box13_coupled().contains(LatticePoint{2, 1}));
  CHECK_THROWS_AS(box13().contains(LatticePoint{1}), DimensionMismatchError);
}

TEST_CASE("rational hull membership is exact") {
  const auto dom = box13_coupled();
  CHECK(dom.contains(RatVec{rat(3, 2), rat(1)}));
  CHECK(dom.contains(RatVec{rat(2), rat(1)}));          // boundary of the arc
  CHECK_FALSE(dom.contains(RatVec{rat(201, 100), rat(1)}));  // 2.01 - 1 > 1
  CHECK_FALSE(dom.contains(RatVec{rat(1, 2), rat(1)}));
}

TEST_CASE("tightest_difference matches explicit and implied constraints") {
  CHECK(box13().tightest_difference(0, 1) == 2);
  CHECK(box13_coupled().tightest_difference(0, 1) == 1);
  CHECK(box13_coupled().tightest_difference(1, 0) == 2);

  // Chained arcs imply a tighter bound than any single gamma entry.
  DiffBounds diff(3);
  diff.set(0, 1, 1);
  diff.set(1, 2, 1);
  const LNatDomain dom({0, 0, 0}, {3, 3, 3}, diff);
  const auto pts = brute_points(dom);
  CHECK(dom.tightest_difference(0, 2) == brute_max_diff(pts, 0, 2));
  CHECK(dom.tightest_difference(0, 2) == 2);

  CHECK_THROWS_AS(box13().tightest_difference(0, 0), std::invalid_argument);
}

TEST_CASE("coordinate_max handles refinements") {
  const auto dom = LNatDomain::cube(2, 0, 2);
  CHECK(dom.coordinate_max({}, 0) == 2);
  BoxRefinement r(2);
  r[0] = {0, 1};
  CHECK(dom.coordinate_max(r, 0) == 1);

  DiffBounds diff(2);
  diff.set(1, 0, 0);  // z2 <= z1
  const LNatDomain coupled({0, 0}, {2, 2}, diff);
  const auto expect = brute_coordinate_max(brute_points(coupled), r, 1);
  REQUIRE(expect.has_value());
  CHECK(coupled.coordinate_max(r, 1) == *expect);
  CHECK(coupled.coordinate_max(r, 1) == 1);

  BoxRefinement empty(2);
  empty[0] = {5, 6};
  CHECK_THROWS_AS(dom.coordinate_max(empty, 1), InfeasibleRegionError);
}

TEST_CASE("coordinate_min mirrors coordinate_max") {
  DiffBounds diff(2);
  diff.set(1, 0, 0);
  const LNatDomain dom({0, 0}, {2, 2}, diff);
  CHECK(dom.coordinate_min({}, 1) == 0);
  BoxRefinement r(2);
  r[1] = {1, 2};
  CHECK(dom.coordinate_min(r, 0) == 1);  // z2 >= 1 forces z1 >= 1
}

TEST_CASE("full-dimensionality certification") {
  CHECK(LNatDomain::is_full_dimensional({1, 1}, {3, 3}, DiffBounds(2)));
  CHECK_FALSE(LNatDomain::is_full_dimensional({0, 0}, {0, 2}, DiffBounds(2)));

  DiffBounds diag(2);
  diag.set(0, 1, 0);
  diag.set(1, 0, 0);
  CHECK_FALSE(LNatDomain::is_full_dimensional({0, 0}, {2, 2}, diag));
  CHECK_THROWS_AS(LNatDomain({0, 0}, {2, 2}, diag), NotFullDimensionalError);
  CHECK_THROWS_AS(LNatDomain({0, 0}, {0, 2}, DiffBounds(2)), NotFullDimensionalError);

  // Tight cycle through the origin node: upper of one coordinate forces the
  // other through an arc.
  DiffBounds pin(2);
  pin.set(0, 1, -2);  // z1 <= z2 - 2 with boxes [0,2]: forces z1=0, z2=2
  CHECK_FALSE(LNatDomain::is_full_dimensional({0, 0}, {2, 2}, pin));

  CHECK(box13().is_full_dimensional());
}

TEST_CASE("construction rejects empty domains") {
  CHECK_THROWS_AS(LNatDomain({2, 0}, {1, 3}, DiffBounds(2)), EmptyDomainError);
  DiffBounds cyc(2);
  cyc.set(0, 1, -1);
  cyc.set(1, 0, -1);  // z1 < z2 and z2 < z1
  CHECK_THROWS_AS(LNatDomain({0, 0}, {3, 3}, cyc), EmptyDomainError);
  CHECK_FALSE(LNatDomain::is_feasible({0, 0}, {3, 3}, cyc));
  CHECK(LNatDomain::is_feasible({1, 1}, {3, 3}, DiffBounds(2)));
}

TEST_CASE("enumerate lists K in lexicographic order") {
  CHECK(LNatDomain::cube(2, 0, 1).enumerate() ==
        std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  DiffBounds diff(2);
  diff.set(0, 1, 0);
  CHECK(LNatDomain({0, 0}, {1, 1}, diff).enumerate() ==
        std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 1}});

  CHECK(LNatDomain::cube(1, 0, 2).enumerate() == std::vector<LatticePoint>{{0}, {1}, {2}});

  CHECK_THROWS_AS(LNatDomain::cube(3, 0, 100).enumerate(100), TooLargeError);
  CHECK(LNatDomain::cube(2, 0, 2).count() == 9);
}

TEST_CASE("verify_lnatural_set checks rounded midpoints") {
  CHECK(verify_lnatural_set({{0, 0}, {1, 1}}));
  CHECK_FALSE(verify_lnatural_set({{0, 0}, {1, 1}, {2, 0}}));
  CHECK(verify_lnatural_set({}));
  CHECK(verify_lnatural_set({{5, -2}}));
}

TEST_CASE("every constructed domain enumerates to an L-natural set") {
  RngStream rng(20240601);
  for (int round = 0; round < 60; ++round) {
    const auto dom = random_domain(rng);
    const auto pts = dom.enumerate(100000);
    CHECK(verify_lnatural_set(pts));
    const auto brute = brute_points(dom);
    CHECK(pts == brute);
    if (dom.dim() >= 2) {
      for (int i = 0; i < dom.dim(); ++i)
        for (int j = 0; j < dom.dim(); ++j)
          if (i != j) CHECK(dom.tightest_difference(i, j) == brute_max_diff(pts, i, j));
    }
  }
}

TEST_CASE("serialization round-trips and matches the documented format") {
  DiffBounds diff(2);
  diff.set(0, 1, 1);
  const LNatDomain dom({0, 0}, {2, 3}, diff);
  const std::string text = dom.to_text();
  CHECK(text == "dim 2\nlower 0 0\nupper 2 3\ndiff 1 2 1\n");
  const auto back = LNatDomain::from_text(text);
  CHECK(back.enumerate() == dom.enumerate());
  CHECK(back.diff_bound(0, 1) == std::optional<Int>{1});
  CHECK_FALSE(back.diff_bound(1, 0).has_value());

  CHECK_THROWS_AS(LNatDomain::from_text("dim 2\nlower 0\nupper 2 3\n"), DomainError);
  CHECK_THROWS_AS(LNatDomain::from_text("lower 0 0\nupper 2 3\n"), DomainError);
  CHECK_THROWS_AS(LNatDomain::from_text("dim 2\nlower 0 0\nupper 2 3\nbogus 1\n"), DomainError);
  const auto commented = LNatDomain::from_text("# header\ndim 1\nlower 0\nupper 2\n");
  CHECK(commented.dim() == 1);
}

TEST_CASE("nearest_feasible repairs tiny violations exactly") {
  DiffBounds diff(2);
  diff.set(0, 1, 1);
  const LNatDomain dom({0, 0}, {3, 3}, diff);

  SUBCASE("interior points pass through untouched") {
    const auto y = dom.nearest_feasible({1.5, 1.0});
    CHECK(y[0] == rat_from_double(1.5));
    CHECK(y[1] == rat_from_double(1.0));
  }
  SUBCASE("box violations clamp") {
    const auto y = dom.nearest_feasible({-0.25, 3.5});
    CHECK(y[0] == rat(0));
    CHECK(y[1] == rat(3));
  }
  SUBCASE("difference violations are repaired within slack") {
    const auto y = dom.nearest_feasible({2.0 + 1e-10, 1.0}, 1e-8);
    CHECK(dom.contains(y));
    CHECK(rat_to_double(y[0]) == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(rat_to_double(y[1]) == doctest::Approx(1.0).epsilon(1e-7));
  }
  SUBCASE("points far from the hull are rejected") {
    CHECK_THROWS_AS(dom.nearest_feasible({3.0, 0.0}, 1e-8), OutOfDomainError);
  }
}

TEST_CASE("max_range is the widest side") {
  CHECK(LNatDomain({0, 1}, {2, 5}, DiffBounds(2)).max_range() == 4);
  CHECK(LNatDomain::cube(3, 1, 2).max_range() == 1);
}
