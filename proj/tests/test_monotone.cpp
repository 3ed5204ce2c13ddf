#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace sscover;
using testsupport::brute_project;
using testsupport::raw_square;

namespace {

std::vector<Vec> pts(std::initializer_list<Vec> list) { return {list}; }

}  // namespace

TEST_CASE("monotonicity check") {
  const ScalarProduct std1 = ScalarProduct::standard(1);
  const std::vector<Vec> good = pts({Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}, Vec{{2.0, 3.0}}});
  // Oracle: raw squares of the three pairs.
  REQUIRE(raw_square(std1.matrix(), good[0], good[1]) == 2.0);
  REQUIRE(raw_square(std1.matrix(), good[0], good[2]) == 12.0);
  REQUIRE(raw_square(std1.matrix(), good[1], good[2]) == 4.0);
  REQUIRE_FALSE(check_monotone(std1, good).has_value());

  const auto bad = check_monotone(std1, pts({Vec{{0.0, 0.0}}, Vec{{1.0, -1.0}}}));
  REQUIRE(bad.has_value());
  REQUIRE(*bad == std::make_pair(0, 1));

  REQUIRE_FALSE(check_monotone(std1, pts({Vec{{7.0, -3.0}}})).has_value());
  REQUIRE_THROWS_AS(MonotoneSet(std1, pts({Vec{{0.0, 0.0}}, Vec{{1.0, -1.0}}})), InputError);
  REQUIRE_THROWS_AS(MonotoneSet(std1, pts({Vec{{1.0, 1.0}}, Vec{{1.0, 1.0}}})), InputError);
}

TEST_CASE("Fitzpatrick function pieces") {
  const MonotoneSet g(ScalarProduct::standard(1), pts({Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}}));
  const PolyConvexFn psi = fitzpatrick(g);
  REQUIRE(psi.size() == 2);
  REQUIRE(psi.slope(0).isApprox(Vec{{0.0, 0.0}}));
  REQUIRE(psi.intercept(0) == 0.0);
  REQUIRE(psi.slope(1).isApprox(Vec{{1.0, 1.0}}));  // S (1,1) = (1,1)
  REQUIRE(psi.intercept(1) == 1.0);                 // S(y,y)/2 = 1

  const MonotoneSet single(ScalarProduct::identity(3), pts({Vec{{0.0, 0.0, 0.0}}}));
  const PolyConvexFn zero = fitzpatrick(single);
  Rng rng(2);
  for (int t = 0; t < 10; ++t) REQUIRE(zero(rng.normal_vec(3)) == 0.0);

  const MonotoneSet gc(ScalarProduct::canonical(2, 1), pts({Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}}));
  const PolyConvexFn psic = fitzpatrick(gc);
  REQUIRE(psic.slope(1).isApprox(Vec{{1.0, -1.0}}));  // Lambda (1,1) = (1,-1)
  REQUIRE(psic.intercept(1) == 0.0);
}

TEST_CASE("scalar square to the set") {
  const MonotoneSet g(ScalarProduct::identity(2), pts({Vec{{-1.0, 0.0}}, Vec{{1.0, 0.0}}}));
  REQUIRE(scalar_square_to_set(g, Vec{{0.0, 0.0}}) == 1.0);
  for (const Vec& y : g.points()) REQUIRE(scalar_square_to_set(g, y) == 0.0);

  const MonotoneSet chain(ScalarProduct::canonical(2, 1),
                          pts({Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}, Vec{{2.0, 2.0}}}));
  for (double t : {-3.0, -0.5, 0.0, 1.7, 9.0}) {
    REQUIRE(scalar_square_to_set(chain, Vec{{t, t}}) == 0.0);
  }
}

TEST_CASE("projection") {
  const ScalarProduct std1 = ScalarProduct::standard(1);
  const MonotoneSet g(std1, pts({Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}}));
  const Vec x{{0.5, 0.5}};
  const auto oracle = brute_project(std1.matrix(), g.points(), x);
  REQUIRE(oracle.minimizers == std::vector<int>{0, 1});
  const ProjectionResult tie = project(g, x);
  REQUIRE(tie.minimizers == oracle.minimizers);

  const MonotoneSet ge(ScalarProduct::identity(2), pts({Vec{{-1.0, 0.0}}, Vec{{1.0, 0.0}}}));
  const ProjectionResult right = project(ge, Vec{{2.0, 0.0}});
  REQUIRE(right.minimizers == std::vector<int>{1});
  REQUIRE(right.value == 1.0);

  const MonotoneSet chain(ScalarProduct::canonical(2, 1),
                          pts({Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}, Vec{{2.0, 2.0}}}));
  const auto chain_oracle = brute_project(chain.space().matrix(), chain.points(), Vec{{1.0, 1.0}});
  REQUIRE(chain_oracle.minimizers == std::vector<int>{0, 1, 2});
  const ProjectionResult all = project(chain, Vec{{1.0, 1.0}});
  REQUIRE(all.minimizers == chain_oracle.minimizers);
  REQUIRE(all.value == 0.0);
}

TEST_CASE("graphs of sampled Lipschitz maps") {
  std::vector<std::pair<Vec, Vec>> diag;
  for (double t : {0.0, 1.0, 2.0}) diag.emplace_back(Vec{{t}}, Vec{{t}});
  const MonotoneSet g = graph_from_lipschitz(1, diag);
  REQUIRE(g.size() == 3);
  REQUIRE(g.space().index() == 1);
  REQUIRE(g.point(2).isApprox(Vec{{2.0, 2.0}}));
  REQUIRE_FALSE(check_monotone(g.space(), g.points(), 0.0).has_value());

  std::vector<std::pair<Vec, Vec>> flat;
  for (double t : {0.0, 0.5, 2.0}) flat.emplace_back(Vec{{t}}, Vec{{1.0}});
  REQUIRE_NOTHROW(graph_from_lipschitz(1, flat));

  std::vector<std::pair<Vec, Vec>> steep;
  for (double t : {0.0, 1.0}) steep.emplace_back(Vec{{t}}, Vec{{2.0 * t}});
  REQUIRE_THROWS_AS(graph_from_lipschitz(1, steep), InputError);
}

TEST_CASE("random monotone sets are deterministic and exactly monotone") {
  const ScalarProduct std1 = ScalarProduct::standard(1);
  const MonotoneSet single = random_monotone(std1, 1, 99);
  REQUIRE(single.size() == 1);

  const MonotoneSet a = random_monotone(std1, 12, 7);
  const MonotoneSet b = random_monotone(std1, 12, 7);
  for (int i = 0; i < a.size(); ++i) {
    REQUIRE(a.point(i) == b.point(i));  // bitwise equality
  }

  const MonotoneSet big = random_monotone(std1, 50, 7);
  REQUIRE_FALSE(check_monotone(std1, big.points(), 0.0).has_value());

  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const int d = rng.uniform_int(2, 4);
    const int m = rng.uniform_int(1, d);
    const ScalarProduct sp = random_scalar_product(d, m, rng.next_u64());
    const MonotoneSet g = random_monotone(sp, rng.uniform_int(2, 15), rng.next_u64());
    REQUIRE_FALSE(check_monotone(sp, g.points(), 0.0).has_value());
  }
}

TEST_CASE("members project onto themselves with value zero") {
  Rng rng(37);
  for (int t = 0; t < 15; ++t) {
    const int d = rng.uniform_int(2, 4);
    const int m = rng.uniform_int(1, d);
    const ScalarProduct sp = random_scalar_product(d, m, rng.next_u64());
    const MonotoneSet g = random_monotone(sp, rng.uniform_int(1, 12), rng.next_u64());
    for (int i = 0; i < g.size(); ++i) {
      const ProjectionResult pr = project(g, g.point(i));
      REQUIRE(std::find(pr.minimizers.begin(), pr.minimizers.end(), i) != pr.minimizers.end());
      REQUIRE(pr.value == 0.0);
    }
  }
}

TEST_CASE("Fitzpatrick values on the set equal half the scalar square") {
  Rng rng(41);
  for (int t = 0; t < 15; ++t) {
    const int d = rng.uniform_int(2, 4);
    const ScalarProduct sp = random_scalar_product(d, rng.uniform_int(1, d), rng.next_u64());
    const MonotoneSet g = random_monotone(sp, rng.uniform_int(1, 12), rng.next_u64());
    const PolyConvexFn psi = fitzpatrick(g);
    for (int i = 0; i < g.size(); ++i) {
      REQUIRE(std::abs(psi(g.point(i)) - 0.5 * sp.square(g.point(i))) <= 1e-10);
    }
  }
}

TEST_CASE("Fitzpatrick function decomposes against the scalar square to the set") {
  Rng rng(43);
  const ScalarProduct sp = random_scalar_product(3, 2, 404);
  const MonotoneSet g = random_monotone(sp, 10, 405);
  const PolyConvexFn psi = fitzpatrick(g);
  for (int t = 0; t < 1000; ++t) {
    const Vec x = 3.0 * rng.normal_vec(3);
    const double lhs = psi(x);
    const double rhs = 0.5 * sp.square(x) - 0.5 * scalar_square_to_set(g, x);
    REQUIRE(std::abs(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("projection minimizers are the active Fitzpatrick slopes") {
  Rng rng(47);
  for (int t = 0; t < 10; ++t) {
    const int d = rng.uniform_int(2, 3);
    const ScalarProduct sp = random_scalar_product(d, rng.uniform_int(1, d), rng.next_u64());
    const MonotoneSet g = random_monotone(sp, 8, rng.next_u64());
    const PolyConvexFn psi = fitzpatrick(g);
    for (int s = 0; s < 30; ++s) {
      const Vec x = 2.0 * rng.normal_vec(d);
      const ProjectionResult pr = project(g, x, 1e-9);
      const ActiveSet act = arg_set(psi, all_pieces(psi), x, 1e-8);
      REQUIRE(pr.minimizers == act.indices);
    }
  }
}
