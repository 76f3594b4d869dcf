#include <doctest.h>

#include <sstream>

#include "cgt/export.hpp"
#include "cgt/metric_space.hpp"

using namespace cgt;

TEST_SUITE_BEGIN("export");

TEST_CASE("census CSV carries the pinned columns and graded verdicts") {
  IntegerLattice z(1);
  const auto graded = verify_3n_bound(graded_integer_generators(z), 4);
  const auto cert = growth_certificate(graded.census);
  std::ostringstream out;
  write_census_csv(out, graded.census, cert, &graded);
  const std::string csv = out.str();
  CHECK(csv.rfind("n,ball_size,sphere_size,bound_3n,pass\n", 0) == 0);
  CHECK(csv.find("3,7,2,27,true") != std::string::npos);
  CHECK(csv.find("4,9,2,81,true") != std::string::npos);
}

TEST_CASE("envelope CSV has the t, rho_minus, rho_plus schema") {
  std::vector<std::pair<double, double>> pairs{{1.0, 1.5}, {2.0, 3.0}, {3.0, 4.5}};
  const auto env = verify_uniform_embedding(pairs);
  std::ostringstream out;
  write_envelope_csv(out, env);
  const std::string csv = out.str();
  CHECK(csv.rfind("t,rho_minus,rho_plus\n", 0) == 0);
  CHECK(csv.find("2,3,3") != std::string::npos);
}

TEST_CASE("expansiveness CSV mirrors the step function") {
  std::vector<std::pair<double, double>> pairs{{1.0, 2.0}, {2.0, 4.0}};
  const auto env = expansiveness_envelope(pairs);
  std::ostringstream out;
  write_expansiveness_csv(out, env);
  CHECK(out.str() == "t,bound\n1,2\n2,4\n");
}

TEST_CASE("embedding CSV and JSON carry the contract fields") {
  IntegerLattice z(1);
  DiscreteMetricSpace space(z, unit_generators(z), Rational(16));
  const auto cert = growth_certificate(sphere_counts(unit_generators(z), 16));
  std::vector<std::pair<Element, Element>> pairs;
  for (std::int64_t a = -8; a <= 8; a += 2) {
    for (std::int64_t b = a + 3; b <= 8; b += 2) {
      pairs.emplace_back(Element({a}), Element({b}));
    }
  }
  const auto report = embedding_constants(space, 4, cert, pairs, 3.0);
  std::ostringstream csv;
  write_embedding_csv(csv, report);
  CHECK(csv.str().rfind("d,norm_lower,norm,norm_plus_tail\n", 0) == 0);
  std::ostringstream js;
  write_embedding_json(js, report);
  for (const char* key : {"\"c1\"", "\"c2\"", "\"c3\"", "\"alpha\"", "\"beta\"",
                          "\"N_trunc\""}) {
    CHECK(js.str().find(key) != std::string::npos);
  }
}

TEST_CASE("full-precision doubles round-trip through the formatter") {
  for (const double v : {0.2824326201293513, 1.0 / 3.0, 13121.0, 1e-17}) {
    CHECK(std::stod(fmt_double(v)) == v);
  }
}

TEST_SUITE_END();
