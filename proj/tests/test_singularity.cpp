#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace sscover;
using testsupport::brute_project;

namespace {

MonotoneSet euclid_pair() {
  return MonotoneSet(ScalarProduct::identity(2), {Vec{{-1.0, 0.0}}, Vec{{1.0, 0.0}}});
}

MonotoneSet canonical_pair() {
  return MonotoneSet(ScalarProduct::canonical(2, 1), {Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}});
}

MonotoneSet canonical_chain() {
  return MonotoneSet(ScalarProduct::canonical(2, 1),
                     {Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}, Vec{{2.0, 2.0}}});
}

}  // namespace

TEST_CASE("classification of equidistant points") {
  const MonotoneSet g = euclid_pair();
  const Vec x{{0.0, 5.0}};
  // Oracle: both squared distances are 26, the witness square is |(2,0)|^2 = 4.
  const auto oracle = brute_project(g.space().matrix(), g.points(), x);
  REQUIRE(oracle.minimizers == std::vector<int>{0, 1});

  const auto sp = classify_point(g, x);
  REQUIRE(sp.has_value());
  REQUIRE(sp->order == 1);
  REQUIRE(sp->j_indices == std::vector<int>{1});
  REQUIRE(sp->witnesses.size() == 1);
  REQUIRE(sp->witnesses[0].cls == PairClass::kPositive);
  REQUIRE(sp->witnesses[0].square == 4.0);

  REQUIRE_FALSE(classify_point(g, Vec{{2.0, 0.0}}).has_value());
}

TEST_CASE("classification of an isotropic tie") {
  const MonotoneSet g = canonical_pair();
  const auto sp = classify_point(g, Vec{{0.0, 0.0}});
  REQUIRE(sp.has_value());
  REQUIRE(sp->order == 0);
  REQUIRE(sp->j_indices == std::vector<int>{1, 2});
  REQUIRE(sp->witnesses[0].cls == PairClass::kIsotropic);
}

TEST_CASE("singular subset of a piece group") {
  const PolyConvexFn f =
      PolyConvexFn::from_pieces({{Vec{{0.0, 0.0}}, 0.0}, {Vec{{1.0, 1.0}}, 1.0}});
  const std::vector<Vec> xs{Vec{{0.5, 0.5}}, Vec{{0.0, 0.0}}, Vec{{2.0, 2.0}}};

  const auto hits = singular_subset(f, {0, 1}, 1, xs, 1e-9);
  REQUIRE(hits.size() == 1);
  REQUIRE(hits[0].isApprox(Vec{{0.5, 0.5}}));

  REQUIRE(singular_subset(f, {0, 1}, 1, {Vec{{0.0, 0.0}}}, 1e-9).empty());
  REQUIRE(singular_subset(f, {1}, 1, xs, 1e-9).empty());  // no pair in a singleton
}

TEST_CASE("tie-set sampling finds the equidistant hyperplane") {
  const MonotoneSet g = euclid_pair();
  const auto points = candidate_singular_points(g, 40, 2.0, 5);
  REQUIRE_FALSE(points.empty());
  for (const SingularPoint& p : points) {
    REQUIRE(std::abs(p.location[0]) <= 1e-9);
    REQUIRE(p.order == 1);
  }

  const MonotoneSet single(ScalarProduct::identity(2), {Vec{{0.0, 0.0}}});
  REQUIRE(candidate_singular_points(single, 10, 1.0, 5).empty());

  REQUIRE_THROWS_AS(candidate_singular_points(g, 0, 1.0, 5), InputError);
}

TEST_CASE("tie-set sampling on the isotropic chain") {
  const MonotoneSet g = canonical_chain();
  const auto points = candidate_singular_points(g, 30, 3.0, 11);
  REQUIRE_FALSE(points.empty());
  for (const SingularPoint& p : points) {
    REQUIRE(std::abs(p.location[0] - p.location[1]) <= 1e-9);
    REQUIRE(p.order == 0);
    // Re-verify the witnesses against the brute-force projection oracle.
    const auto oracle = brute_project(g.space().matrix(), g.points(), p.location);
    for (const PairWitness& w : p.witnesses) {
      REQUIRE(std::find(oracle.minimizers.begin(), oracle.minimizers.end(), w.a) !=
              oracle.minimizers.end());
      REQUIRE(std::find(oracle.minimizers.begin(), oracle.minimizers.end(), w.b) !=
              oracle.minimizers.end());
    }
  }
}

TEST_CASE("sampled singular points satisfy the order decomposition") {
  Rng rng(53);
  for (int t = 0; t < 8; ++t) {
    const int d = rng.uniform_int(2, 3);
    const ScalarProduct sp = random_scalar_product(d, rng.uniform_int(1, d), rng.next_u64());
    const MonotoneSet g = random_monotone(sp, rng.uniform_int(3, 10), rng.next_u64());
    for (const SingularPoint& p : candidate_singular_points(g, 12, 3.0, rng.next_u64())) {
      bool positive = false;
      for (const PairWitness& w : p.witnesses) {
        REQUIRE((w.cls == PairClass::kPositive || w.cls == PairClass::kIsotropic));
        positive = positive || w.cls == PairClass::kPositive;
        REQUIRE_FALSE(w.diff_coords.empty());  // distinct points differ somewhere
      }
      REQUIRE(p.order == (positive ? 1 : 0));
      // Witness pairs re-verified against the brute-force projection oracle.
      const auto oracle = brute_project(sp.matrix(), g.points(), p.location, 1e-8);
      for (const PairWitness& w : p.witnesses) {
        REQUIRE(std::find(oracle.minimizers.begin(), oracle.minimizers.end(), w.a) !=
                oracle.minimizers.end());
      }
    }
  }
}

TEST_CASE("projection singularities match the pullback function actives") {
  Rng rng(59);
  for (int t = 0; t < 6; ++t) {
    const int d = rng.uniform_int(2, 3);
    const ScalarProduct sp = random_scalar_product(d, rng.uniform_int(1, d), rng.next_u64());
    const MonotoneSet g = random_monotone(sp, rng.uniform_int(3, 8), rng.next_u64());
    const PolyConvexFn pullback = fitzpatrick_precomposed(g);
    const auto points = candidate_singular_points(g, 10, 3.0, rng.next_u64());
    for (const SingularPoint& p : points) {
      const Vec sx = sp.apply(p.location);
      for (int j = 1; j <= d; ++j) {
        const bool in_sigma = !singular_subset(pullback, all_pieces(pullback), j, {sx}, 1e-8).empty();
        const bool expected = std::find(p.j_indices.begin(), p.j_indices.end(), j) !=
                              p.j_indices.end();
        REQUIRE(in_sigma == expected);
      }
    }
  }
}
