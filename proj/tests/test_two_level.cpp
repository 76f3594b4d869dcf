#include <doctest.h>

#include <cmath>

#include "cgt/regularized.hpp"
#include "cgt/two_level.hpp"

#include "helpers.hpp"

using namespace cgt;

TEST_SUITE_BEGIN("two-level");

namespace {

// Z^2 with G0 = <(1,0)> and representatives (0,1), (0,-1), (0,2), (0,-2), ...
// of the cosets indexed by the second coordinate.
TwoLevelSpec<Rational> z2_fixture(const IntegerLattice& z2, int rep_count) {
  const auto base = WeightedGeneratingSet<Rational>::from_entries(
      z2, {{Element({1, 0}), Rational(1)}}, true);
  std::vector<Element> reps;
  for (int k = 1; reps.size() < static_cast<std::size_t>(rep_count); ++k) {
    reps.push_back(Element({0, k}));
    if (reps.size() < static_cast<std::size_t>(rep_count)) {
      reps.push_back(Element({0, -k}));
    }
  }
  return make_two_level(z2, base, reps);
}

}  // namespace

TEST_CASE("two_level_length: identity and subgroup elements") {
  IntegerLattice z2(2);
  const auto spec = z2_fixture(z2, 5);
  CHECK(two_level_length(spec, z2.identity(), Rational(4)) == Rational(0));
  // Inside G0 the two-level length is bounded by the base word length.
  for (std::int64_t m = 1; m <= 4; ++m) {
    const auto l = two_level_length(spec, Element({m, 0}), Rational(6));
    REQUIRE(l.has_value());
    CHECK(!(Rational(m) < *l));
  }
}

TEST_CASE("two_level_length matches the brute-force oracle up to cost 6") {
  IntegerLattice z2(2);
  const auto spec = z2_fixture(z2, 5);
  std::vector<std::pair<Element, Rational>> base_pairs{
      {Element({1, 0}), Rational(1)}, {Element({-1, 0}), Rational(1)}};
  std::vector<std::pair<Element, Rational>> rep_pairs;
  for (const auto& [rep, w] : spec.reps) rep_pairs.emplace_back(rep, w);

  for (std::int64_t x = -3; x <= 3; ++x) {
    for (std::int64_t y = -2; y <= 2; ++y) {
      const Element g({x, y});
      const auto fast = two_level_length(spec, g, Rational(6));
      // Oracle: minimum over letter sequences for g and for g^{-1}.
      const auto fwd = cgt::testing::brute_alternating_length(z2, base_pairs, rep_pairs,
                                                              g, Rational(6));
      const auto bwd = cgt::testing::brute_alternating_length(z2, base_pairs, rep_pairs,
                                                              z2.inv(g), Rational(6));
      std::optional<Rational> slow;
      if (fwd && bwd) slow = std::max(*fwd, *bwd);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("two_level_length is genuinely asymmetric before the max") {
  // (3, 1) uses the cheap rep (0,1); its inverse needs (0,-1) at weight 2.
  IntegerLattice z2(2);
  const auto spec = z2_fixture(z2, 5);
  const auto l = two_level_length(spec, Element({3, 1}), Rational(10));
  CHECK(l == Rational(5));  // max{3 + 1, 3 + 2}
}

TEST_CASE("starred_weights: singleton U gives p = 1 and keeps l1") {
  IntegerLattice z2(2);
  auto spec = z2_fixture(z2, 3);
  const std::vector<Element> u{z2.identity()};
  const auto starred = starred_weights(spec, u);
  REQUIRE(starred.covering.reps.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(starred.covering.reps[i].p == 1);
    CHECK(starred.l1_star[i] == doctest::Approx(static_cast<double>(i + 1)));
  }
}

TEST_CASE("starred_weights on Z with U = {-1, 0, 1}: one translate covers") {
  IntegerLattice z2(2);
  auto spec = z2_fixture(z2, 4);
  const std::vector<Element> u{Element({0, 0}), Element({1, 0}), Element({-1, 0})};
  const auto starred = starred_weights(spec, u);
  for (std::size_t i = 0; i < starred.covering.reps.size(); ++i) {
    CHECK(starred.covering.reps[i].p == 1);  // U * x is itself a translate of U
    CHECK(starred.l1_star[i] ==
          doctest::Approx(spec.reps[i].second.to_double()));
  }
  // l1* >= l1 always.
  for (std::size_t i = 0; i < starred.l1_star.size(); ++i) {
    CHECK(starred.l1_star[i] >= spec.reps[i].second.to_double() - 1e-12);
  }
}

TEST_CASE("starred weights dominate: d* >= d pointwise") {
  IntegerLattice z2(2);
  const auto spec = z2_fixture(z2, 5);
  // A fatter U forces p >= 1 and can only increase the weights.
  const std::vector<Element> u{Element({0, 0}), Element({1, 0}), Element({-1, 0}),
                               Element({0, 1}), Element({0, -1})};
  const auto starred = starred_weights(spec, u);
  for (std::size_t i = 0; i < starred.l1_star.size(); ++i) {
    CHECK(starred.l1_star[i] >= spec.reps[i].second.to_double() - 1e-12);
  }
  for (std::int64_t x = -2; x <= 2; ++x) {
    for (std::int64_t y = -2; y <= 2; ++y) {
      const Element g({x, y});
      const auto plain = two_level_length(spec, g, Rational(12));
      const auto heavy = two_level_length(starred.spec, g, 12.0);
      REQUIRE(plain.has_value());
      REQUIRE(heavy.has_value());
      CHECK(*heavy >= plain->to_double() - 1e-9);
    }
  }
}

TEST_CASE("starred_weights validates the unit ball") {
  IntegerLattice z2(2);
  const auto spec = z2_fixture(z2, 2);
  // Missing identity.
  CHECK_THROWS_AS(starred_weights(spec, std::vector<Element>{Element({1, 0})}),
                  DomainError);
  // Not symmetric.
  CHECK_THROWS_AS(starred_weights(spec, std::vector<Element>{Element({0, 0}),
                                                             Element({1, 0})}),
                  DomainError);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("regularized");

namespace {

DeltaLengths z2_delta(const IntegerLattice& z2) {
  return DeltaLengths::make(
      z2, {{Element({0, 0}), Rational(0)},
           {Element({1, 0}), Rational(3, 5)},
           {Element({-1, 0}), Rational(3, 5)},
           {Element({0, 1}), Rational(3, 5)},
           {Element({0, -1}), Rational(3, 5)}});
}

}  // namespace

TEST_CASE("regularized_length equals the delta-length on U and 0 at e") {
  IntegerLattice z2(2);
  const auto u = z2_delta(z2);
  CHECK(regularized_length(u, z2.identity(), Rational(1)).value == Rational(0));
  for (const auto& [elem, w] : u.table()) {
    const auto r = regularized_length(u, elem, Rational(2));
    CHECK(r.value == w);
    CHECK(r.witness.letters.size() == 1);
  }
}

TEST_CASE("regularized_length dominates the delta-length pointwise") {
  IntegerLattice z2(2);
  const auto u = z2_delta(z2);
  // l(g) >= l_delta(g) wherever l_delta is defined.
  for (const auto& [elem, w] : u.table()) {
    CHECK(!(regularized_length(u, elem, Rational(4)).value < w));
  }
}

TEST_CASE("regularized_length witness: minimal cost, minimal k, adjacent-pair bound") {
  IntegerLattice z2(2);
  const auto u = z2_delta(z2);
  for (std::int64_t x = -2; x <= 2; ++x) {
    for (std::int64_t y = -2; y <= 2; ++y) {
      const Element g({x, y});
      if (g == z2.identity()) continue;
      const auto r = regularized_length(u, g, Rational(4));
      // Cost is 0.6 per unit step; minimal k is the L1 norm.
      const std::int64_t l1 = std::llabs(x) + std::llabs(y);
      CHECK(r.value == Rational(3 * l1, 5));
      CHECK(r.witness.letters.size() == static_cast<std::size_t>(l1));
      CHECK(adjacent_pair_bound_holds(u, r.witness));
      // The witness really multiplies out to g.
      Element acc = z2.identity();
      for (const Element& s : r.witness.letters) acc = z2.mul(acc, s);
      CHECK(acc == g);
    }
  }
}

TEST_CASE("regularized_length witness is lexicographic over the table order") {
  IntegerLattice z2(2);
  const auto u = z2_delta(z2);
  // (1, 1) admits step orders (1,0)(0,1) and (0,1)(1,0); the table lists
  // (1,0) first.
  const auto r = regularized_length(u, Element({1, 1}), Rational(2));
  REQUIRE(r.witness.letters.size() == 2);
  CHECK(r.witness.letters[0] == Element({1, 0}));
  CHECK(r.witness.letters[1] == Element({0, 1}));
}

TEST_CASE("regularized_length throws NotGenerated past the cap") {
  IntegerLattice z2(2);
  const auto u = z2_delta(z2);
  CHECK_THROWS_AS(regularized_length(u, Element({9, 9}), Rational(2)),
                  NotGeneratedError);
}

TEST_CASE("delta-length table validation") {
  IntegerLattice z2(2);
  // Out-of-range weight.
  CHECK_THROWS_AS(DeltaLengths::make(z2, {{Element({1, 0}), Rational(2)},
                                          {Element({-1, 0}), Rational(2)}}),
                  DomainError);
  // Asymmetric table.
  CHECK_THROWS_AS(DeltaLengths::make(z2, {{Element({1, 0}), Rational(1, 2)}}),
                  NonSymmetricGeneratingSetError);
  // Identity must carry length zero.
  CHECK_THROWS_AS(DeltaLengths::make(z2, {{Element({0, 0}), Rational(1, 2)},
                                          {Element({1, 0}), Rational(1, 2)},
                                          {Element({-1, 0}), Rational(1, 2)}}),
                  DomainError);
}

TEST_CASE("verify_ball_inclusion: B(e,1) = U and deeper balls stay inside U^(2n-1)") {
  IntegerLattice z2(2);
  const auto u = z2_delta(z2);
  const auto report = verify_ball_inclusion(u, 3);
  CHECK(report.pass);
  REQUIRE(report.rows.size() == 3);
  // B(e, 1) is exactly U (5 elements) and U^1 = U union {e} has 5 too.
  CHECK(report.rows[0].ball == 5);
  CHECK(report.rows[0].product_set == 5);
  // n = 0 is a vacuous pass.
  CHECK(verify_ball_inclusion(u, 0).pass);
  CHECK(verify_ball_inclusion(u, 0).rows.empty());
}

TEST_SUITE_END();
