#include "cgt/word_metric.hpp"

#include <cmath>
#include <limits>

namespace cgt {

BallCensus sphere_counts(const WeightedGeneratingSet<Rational>& s, int max_radius,
                         std::size_t budget) {
  if (max_radius < 1) throw DomainError("sphere_counts: max_radius must be >= 1");
  for (const auto& entry : s.within(Rational(max_radius))) {
    if (!entry.weight.is_integer()) {
      throw NonIntegerWeightsError("sphere_counts: spheres need integer weights, got " +
                                   entry.weight.str() + " at " +
                                   s.group().show(entry.gen));
    }
  }
  BallCensus census;
  census.max_radius = max_radius;
  census.enumeration = enumerate_ball(s, Rational(max_radius), budget);
  census.ball_sizes.assign(max_radius + 1, 0);
  census.sphere_sizes.assign(max_radius + 1, 0);
  for (const auto& [elem, dist] : census.enumeration.items) {
    census.sphere_sizes.at(static_cast<std::size_t>(dist.num())) += 1;
  }
  std::size_t running = 0;
  for (int n = 0; n <= max_radius; ++n) {
    running += census.sphere_sizes[n];
    census.ball_sizes[n] = running;
  }
  return census;
}

bool GrowthCertificate::holds_on(const BallCensus& census) const {
  for (int n = 1; n <= census.max_radius; ++n) {
    if (static_cast<double>(census.ball(n)) > beta * std::exp(alpha * n)) {
      return false;
    }
  }
  return true;
}

GrowthCertificate growth_certificate(const BallCensus& census) {
  if (census.max_radius < 1 || census.ball_sizes.empty()) {
    throw EmptyInputError("growth_certificate: empty census");
  }
  GrowthCertificate cert;
  cert.grid_max = census.max_radius;
  cert.beta = std::max(1.0, static_cast<double>(census.ball(1)));
  double alpha = 0.0;
  for (int n = 1; n <= census.max_radius; ++n) {
    const double need =
        (std::log(static_cast<double>(census.ball(n))) - std::log(cert.beta)) / n;
    alpha = std::max(alpha, need);
  }
  // Nudge past float rounding so the envelope holds on the grid exactly as
  // evaluated.
  cert.alpha = alpha * (1.0 + 1e-12) + 1e-15;
  if (census.max_radius >= 2) {
    cert.growth_rate = (std::log(static_cast<double>(census.ball(census.max_radius))) -
                        std::log(static_cast<double>(census.ball(1)))) /
                       (census.max_radius - 1);
  } else {
    cert.growth_rate = cert.alpha;
  }
  return cert;
}

namespace {

std::uint64_t pow3(int n) {
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

}  // namespace

GradedBoundReport verify_3n_bound(const WeightedGeneratingSet<Rational>& s,
                                  int max_radius, std::size_t budget) {
  if (max_radius < 1) throw DomainError("verify_3n_bound: max_radius must be >= 1");
  if (max_radius > 39) throw DomainError("verify_3n_bound: 3^n exceeds 64 bits");

  // The scheme of the bound: weight-n generators form one inverse pair.
  const auto entries = s.within(Rational(max_radius));
  std::map<std::int64_t, std::vector<Element>> by_weight;
  for (const auto& entry : entries) {
    if (!entry.weight.is_integer() || entry.weight.num() < 1) {
      throw SchemeMismatchError("graded scheme needs integer weights >= 1");
    }
    by_weight[entry.weight.num()].push_back(entry.gen);
  }
  for (const auto& [w, gens] : by_weight) {
    if (gens.size() > 2) {
      throw SchemeMismatchError("more than one generator pair at weight " +
                                std::to_string(w));
    }
    for (const Element& g : gens) {
      const Element i = s.group().inv(g);
      if (std::find(gens.begin(), gens.end(), i) == gens.end()) {
        throw SchemeMismatchError("weight class " + std::to_string(w) +
                                  " is not an inverse pair");
      }
    }
  }

  GradedBoundReport report;
  report.census = sphere_counts(s, max_radius, budget);
  for (int n = 0; n <= max_radius; ++n) {
    GradedBoundReport::Row row;
    row.n = n;
    row.ball = report.census.ball(n);
    row.sphere = report.census.sphere(n);
    row.ball_bound = pow3(n);
    row.sphere_bound = n == 0 ? 1 : 2 * pow3(n - 1);
    row.pass = row.ball <= row.ball_bound && row.sphere <= row.sphere_bound;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

std::uint64_t count_compositions(int n, int k) {
  if (k < 1 || k > n) throw DomainError("count_compositions requires 1 <= k <= n");
  // binomial(n, k), exact
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("count_compositions overflow");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

std::uint64_t tuples_with_sum_at_most(int n, int k) {
  if (k == 0) return 1;
  std::uint64_t total = 0;
  for (int first = 1; first + (k - 1) <= n; ++first) {
    total += tuples_with_sum_at_most(n - first, k - 1);
  }
  return total;
}

}  // namespace

std::uint64_t count_compositions_enumerated(int n, int k) {
  if (k < 1 || k > n) throw DomainError("count_compositions requires 1 <= k <= n");
  return tuples_with_sum_at_most(n, k);
}

WeightedGeneratingSet<Rational> graded_integer_generators(const Group& z) {
  const auto* lattice = dynamic_cast<const IntegerLattice*>(&z);
  if (!lattice || lattice->rank() != 1) {
    throw DomainError("graded_integer_generators expects Z (integer-lattice rank 1)");
  }
  return WeightedGeneratingSet<Rational>::graded(
      z, [](std::size_t i) -> std::optional<std::pair<Element, Rational>> {
        const std::int64_t n = static_cast<std::int64_t>(i / 2) + 1;
        const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
        return std::pair<Element, Rational>{Element({sign * n}), Rational(n)};
      });
}

WeightedGeneratingSet<Rational> unit_generators(const Group& g) {
  std::vector<std::pair<Element, Rational>> entries;
  for (const Element& e : g.generators()) entries.emplace_back(e, Rational(1));
  return WeightedGeneratingSet<Rational>::from_entries(g, std::move(entries), true);
}

WeightedGeneratingSet<Rational> graded_free_generators(const FreeGroup& f) {
  std::vector<std::pair<Element, Rational>> entries;
  for (int i = 1; i <= f.rank(); ++i) {
    entries.emplace_back(f.letter(i), Rational(i));
  }
  return WeightedGeneratingSet<Rational>::from_entries(f, std::move(entries), true);
}

}  // namespace cgt
