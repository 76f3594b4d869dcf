#include <doctest.h>

#include <cmath>

#include "cgt/word_metric.hpp"

#include "helpers.hpp"

using namespace cgt;

TEST_SUITE_BEGIN("word-metrics");

namespace {

std::vector<std::pair<Element, Rational>> unit_pairs(const Group& g) {
  std::vector<std::pair<Element, Rational>> out;
  for (const Element& e : g.generators()) {
    out.emplace_back(e, Rational(1));
    out.emplace_back(g.inv(e), Rational(1));
  }
  return out;
}

}  // namespace

TEST_CASE("word_length on F2 matches exhaustive factorization search") {
  FreeGroup f(2);
  const auto gens = unit_generators(f);
  const Element aba = f.word({1, 2, -1});
  CHECK(word_length(gens, aba, Rational(3)) == Rational(3));
  CHECK(cgt::testing::brute_word_length(f, unit_pairs(f), aba, Rational(3)) ==
        Rational(3));
  CHECK(word_length(gens, f.identity(), Rational(1)) == Rational(0));
  // Below the true length the search reports unreachable.
  CHECK(word_length(gens, aba, Rational(2)) == std::nullopt);
}

TEST_CASE("word_length on the graded scheme over Z: every factorization of 5 costs 5") {
  IntegerLattice z(1);
  const auto gens = graded_integer_generators(z);
  CHECK(word_length(gens, Element({5}), Rational(5)) == Rational(5));
  std::vector<std::pair<Element, Rational>> explicit_gens;
  for (std::int64_t k = 1; k <= 5; ++k) {
    explicit_gens.emplace_back(Element({k}), Rational(k));
    explicit_gens.emplace_back(Element({-k}), Rational(k));
  }
  CHECK(cgt::testing::brute_word_length(z, explicit_gens, Element({5}), Rational(5)) ==
        Rational(5));
}

TEST_CASE("word_length agrees with the brute-force oracle on random targets") {
  FreeGroup f(2);
  const auto gens = unit_generators(f);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 25; ++i) {
    const Element w = cgt::testing::random_free_element(rng, f, 5);
    const auto fast = word_length(gens, w, Rational(6));
    const auto slow = cgt::testing::brute_word_length(f, unit_pairs(f), w, Rational(6));
    CHECK(fast == slow);
  }
}

TEST_CASE("generating set validation") {
  IntegerLattice z(1);
  // Asymmetric weights.
  CHECK_THROWS_AS(WeightedGeneratingSet<Rational>::from_entries(
                      z, {{Element({1}), Rational(1)}, {Element({-1}), Rational(2)}},
                      false),
                  NonSymmetricGeneratingSetError);
  // Missing inverse without symmetrization.
  CHECK_THROWS_AS(WeightedGeneratingSet<Rational>::from_entries(
                      z, {{Element({1}), Rational(1)}}, false),
                  NonSymmetricGeneratingSetError);
  // Non-positive weight.
  CHECK_THROWS_AS(WeightedGeneratingSet<Rational>::from_entries(
                      z, {{Element({1}), Rational(0)}}, true),
                  NonPositiveWeightError);
  // Identity in the set.
  CHECK_THROWS_AS(WeightedGeneratingSet<Rational>::from_entries(
                      z, {{Element({0}), Rational(1)}}, true),
                  DomainError);
  // Symmetrization repairs the asymmetric case.
  const auto gens = WeightedGeneratingSet<Rational>::from_entries(
      z, {{Element({1}), Rational(1)}}, true);
  CHECK(gens.within(Rational(1)).size() == 2);
}

TEST_CASE("enumerate_ball: graded Z radius 3 is {-3..3}") {
  IntegerLattice z(1);
  const auto ball = enumerate_ball(graded_integer_generators(z), Rational(3));
  CHECK(ball.size() == 7);
  for (std::int64_t k = -3; k <= 3; ++k) {
    CHECK(ball.find(Element({k})) != nullptr);
  }
  CHECK(ball.find(Element({4})) == nullptr);
  // Radius 0 ball is the identity alone.
  const auto zero = enumerate_ball(graded_integer_generators(z), Rational(0));
  CHECK(zero.size() == 1);
}

TEST_CASE("enumerate_ball: F2 unit weights radius 2 has 17 elements") {
  FreeGroup f(2);
  const auto ball = enumerate_ball(unit_generators(f), Rational(2));
  CHECK(ball.size() == 17);  // 1 + 4 + 12 reduced words
}

TEST_CASE("sphere_counts on the graded Z scheme") {
  IntegerLattice z(1);
  const auto census = sphere_counts(graded_integer_generators(z), 10);
  CHECK(census.sphere(0) == 1);
  for (int n = 1; n <= 10; ++n) {
    CHECK(census.sphere(n) == 2);
    CHECK(census.ball(n) == static_cast<std::size_t>(2 * n + 1));
    // sphere bound 2 * 3^(n-1)
    std::uint64_t bound = 2;
    for (int i = 1; i < n; ++i) bound *= 3;
    CHECK(census.sphere(n) <= bound);
  }
  // Ball sizes are partial sums of sphere sizes by construction; check the
  // nesting D(e, n) within D(e, n+1) explicitly.
  for (int n = 0; n < 10; ++n) {
    CHECK(census.ball(n) <= census.ball(n + 1));
  }
}

TEST_CASE("sphere_counts rejects non-integer weights") {
  IntegerLattice z(1);
  const auto gens = WeightedGeneratingSet<Rational>::from_entries(
      z, {{Element({1}), Rational(3, 5)}}, true);
  CHECK_THROWS_AS(sphere_counts(gens, 2), NonIntegerWeightsError);
}

TEST_CASE("growth_certificate on the graded Z scheme") {
  IntegerLattice z(1);
  const auto census = sphere_counts(graded_integer_generators(z), 10);
  const auto cert = growth_certificate(census);
  CHECK(cert.beta == 3.0);
  CHECK(cert.alpha <= std::log(3.0));
  CHECK(cert.holds_on(census));
  // The binding grid point is n = 3: (ln 7 - ln 3) / 3.
  CHECK(cert.alpha == doctest::Approx((std::log(7.0) - std::log(3.0)) / 3.0).epsilon(1e-9));
}

TEST_CASE("growth_certificate on a single-point census") {
  BallCensus census;
  census.max_radius = 1;
  census.ball_sizes = {1, 1};
  census.sphere_sizes = {1, 0};
  const auto cert = growth_certificate(census);
  CHECK(cert.beta == 1.0);
  CHECK(cert.alpha <= 1e-12);
}

TEST_CASE("growth_certificate rate on F2 is close to ln 3 at N = 8") {
  FreeGroup f(2);
  const auto census = sphere_counts(unit_generators(f), 8);
  // Closed-form reduced-word counts: |D(e, n)| = 2 * 3^n - 1.
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t expect = 2;
    for (int i = 0; i < n; ++i) expect *= 3;
    CHECK(census.ball(n) == expect - 1);
  }
  const auto cert = growth_certificate(census);
  CHECK(std::abs(cert.growth_rate - std::log(3.0)) < 0.05);
  CHECK(cert.holds_on(census));
}

TEST_CASE("verify_3n_bound on graded Z") {
  IntegerLattice z(1);
  const auto report = verify_3n_bound(graded_integer_generators(z), 8);
  CHECK(report.pass);
  CHECK(report.census.ball(3) == 7);  // <= 27
  CHECK(report.rows.at(1).ball <= 3);  // |D(e,1)| <= 3: at most {e, x1, x1^-1}
}

TEST_CASE("verify_3n_bound on the truncated free graded scheme") {
  FreeGroup f(5);
  const auto report = verify_3n_bound(graded_free_generators(f), 5);
  CHECK(report.pass);
}

TEST_CASE("verify_3n_bound rejects a non-graded scheme") {
  FreeGroup f(2);
  // Unit weights put two pairs in the same weight class.
  CHECK_THROWS_AS(verify_3n_bound(unit_generators(f), 3), SchemeMismatchError);
}

TEST_CASE("word length axioms hold exactly on an enumerated graded ball") {
  IntegerLattice z(1);
  const auto gens = graded_integer_generators(z);
  const auto ball = enumerate_ball(gens, Rational(6));
  for (const auto& [g, dg] : ball.items) {
    // Symmetry under inversion, exact.
    const Rational* di = ball.find(z.inv(g));
    REQUIRE(di != nullptr);
    CHECK(dg == *di);
    for (const auto& [h, dh] : ball.items) {
      const auto dgh = word_length(gens, z.mul(g, h), Rational(12));
      REQUIRE(dgh.has_value());
      CHECK(!(dg + dh < *dgh));  // subadditivity, exact rationals
    }
  }
}

TEST_CASE("monotonicity: adding a generator never increases word length") {
  IntegerLattice z2(2);
  const auto base = unit_generators(z2);
  auto extended_entries = unit_pairs(z2);
  extended_entries.emplace_back(Element({1, 1}), Rational(1));
  extended_entries.emplace_back(Element({-1, -1}), Rational(1));
  const auto extended =
      WeightedGeneratingSet<Rational>::from_entries(z2, extended_entries, false);
  const auto ball = enumerate_ball(base, Rational(5));
  for (const auto& [g, dist] : ball.items) {
    const auto shorter = word_length(extended, g, Rational(5));
    REQUIRE(shorter.has_value());
    CHECK(!(dist < *shorter));
  }
}

TEST_CASE("count_compositions: formula, edge cases, brute force to n = 12") {
  CHECK(count_compositions(4, 2) == 6);
  CHECK(count_compositions(12, 12) == 1);
  CHECK(count_compositions(12, 5) == 792);
  CHECK_THROWS_AS(count_compositions(3, 4), DomainError);
  CHECK_THROWS_AS(count_compositions(3, 0), DomainError);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(count_compositions_enumerated(n, k) == count_compositions(n, k));
    }
  }
}

TEST_CASE("budget guard fires on huge enumerations") {
  FreeGroup f(2);
  CHECK_THROWS_AS(enumerate_ball(unit_generators(f), Rational(20), 1000),
                  BudgetExceededError);
}

TEST_SUITE_END();
