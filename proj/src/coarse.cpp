#include "cgt/coarse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace cgt {

CoarseLattice build_coarse_lattice(std::span<const Element> input, const MetricFn& d,
                                   double separation) {
  if (input.empty()) throw EmptyInputError("build_coarse_lattice: empty input");
  if (!(separation > 0.0)) {
    throw DomainError("build_coarse_lattice: separation must be positive");
  }
  CoarseLattice lattice;
  lattice.separation = separation;
  for (const Element& y : input) {
    bool blocked = false;
    for (const Element& x : lattice.points) {
      if (d(x, y) < separation) {
        blocked = true;
        break;
      }
    }
    if (!blocked) lattice.points.push_back(y);
  }
  for (const Element& y : input) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Element& x : lattice.points) {
      nearest = std::min(nearest, d(x, y));
    }
    lattice.covering_radius = std::max(lattice.covering_radius, nearest);
  }
  return lattice;
}

Element retract_to_lattice(const CoarseLattice& lattice, const MetricFn& d,
                           const Element& y) {
  for (const Element& x : lattice.points) {
    if (d(x, y) < lattice.separation) return x;
  }
  throw OutOfRangeError("no lattice cell within separation " +
                        std::to_string(lattice.separation) + " of " + y.str());
}

GeometryCensus bounded_geometry_census(
    const CoarseLattice& lattice, const MetricFn& d, double m,
    const std::function<std::size_t(double)>& host_open_ball_size) {
  if (lattice.points.empty()) throw EmptyInputError("bounded_geometry_census");
  GeometryCensus census;
  census.m = m;
  for (const Element& q : lattice.points) {
    std::size_t count = 0;
    for (const Element& p : lattice.points) {
      if (d(q, p) <= m) ++count;
    }
    if (count > census.gamma) {
      census.gamma = count;
      census.worst_center = q;
    }
  }
  if (host_open_ball_size) {
    const double numerator = static_cast<double>(host_open_ball_size(m + 0.5));
    const double denominator = static_cast<double>(host_open_ball_size(0.5));
    if (denominator > 0.0) {
      census.ratio_bound = numerator / denominator;
      census.within_ratio =
          static_cast<double>(census.gamma) <= *census.ratio_bound + 1e-9;
    }
  }
  return census;
}

namespace {

std::vector<double> sorted_grid(std::span<const std::pair<double, double>> pairs) {
  std::vector<double> grid;
  grid.reserve(pairs.size());
  for (const auto& [dx, dy] : pairs) grid.push_back(dx);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

ExpansivenessEnvelope expansiveness_envelope(
    std::span<const std::pair<double, double>> dist_pairs) {
  if (dist_pairs.empty()) throw EmptySampleError("expansiveness_envelope");
  ExpansivenessEnvelope env;
  env.grid = sorted_grid(dist_pairs);
  env.bound.assign(env.grid.size(), 0.0);
  for (const auto& [dx, dy] : dist_pairs) {
    const auto it = std::lower_bound(env.grid.begin(), env.grid.end(), dx);
    const std::size_t i = static_cast<std::size_t>(it - env.grid.begin());
    env.bound[i] = std::max(env.bound[i], dy);
  }
  for (std::size_t i = 1; i < env.bound.size(); ++i) {
    env.bound[i] = std::max(env.bound[i], env.bound[i - 1]);
  }
  return env;
}

EmbeddingEnvelope verify_uniform_embedding(
    std::span<const std::pair<double, double>> dist_pairs) {
  if (dist_pairs.empty()) throw EmptySampleError("verify_uniform_embedding");
  EmbeddingEnvelope env;
  env.grid = sorted_grid(dist_pairs);
  const std::size_t n = env.grid.size();
  env.rho_plus.assign(n, 0.0);
  env.rho_minus.assign(n, std::numeric_limits<double>::infinity());
  for (const auto& [dx, dy] : dist_pairs) {
    const auto it = std::lower_bound(env.grid.begin(), env.grid.end(), dx);
    const std::size_t i = static_cast<std::size_t>(it - env.grid.begin());
    env.rho_plus[i] = std::max(env.rho_plus[i], dy);
    env.rho_minus[i] = std::min(env.rho_minus[i], dy);
  }
  for (std::size_t i = 1; i < n; ++i) {
    env.rho_plus[i] = std::max(env.rho_plus[i], env.rho_plus[i - 1]);
  }
  for (std::size_t i = n; i-- > 1;) {
    env.rho_minus[i - 1] = std::min(env.rho_minus[i - 1], env.rho_minus[i]);
  }
  // Unbounded-increase proxy on a finite sample: rho_- must still be
  // strictly climbing over the top half of the grid.
  const std::size_t mid = (n - 1) / 2;
  env.pass = n >= 2 && env.rho_minus[n - 1] > env.rho_minus[mid];
  return env;
}

std::vector<std::pair<double, double>> map_distance_pairs(
    std::span<const std::pair<Element, Element>> pairs, const MetricFn& dx,
    const std::function<Element(const Element&)>& f, const MetricFn& dy) {
  std::vector<std::pair<double, double>> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    out.emplace_back(dx(a, b), dy(f(a), f(b)));
  }
  return out;
}

CoarseEquivalenceProbe coarse_equivalence_probe(std::span<const Element> sample,
                                                const PartialMetricFn& d1,
                                                const PartialMetricFn& d2) {
  if (sample.size() < 2) throw EmptySampleError("coarse_equivalence_probe");
  CoarseEquivalenceProbe probe;
  std::vector<std::pair<double, double>> forward, backward;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      ++probe.pair_count;
      const auto a = d1(sample[i], sample[j]);
      const auto b = d2(sample[i], sample[j]);
      if (!a) ++probe.unreachable_d1;
      if (!b) ++probe.unreachable_d2;
      if (a && b) {
        forward.emplace_back(*a, *b);
        backward.emplace_back(*b, *a);
      }
    }
  }
  if (forward.empty()) throw EmptySampleError("coarse_equivalence_probe: no finite pairs");
  probe.forward = expansiveness_envelope(forward);
  probe.backward = expansiveness_envelope(backward);
  probe.pass = probe.unreachable_d1 == 0 && probe.unreachable_d2 == 0;
  return probe;
}

std::vector<Element> discrete_cloud_points(int clouds) {
  if (clouds < 1) throw DomainError("discrete_cloud_points: clouds must be >= 1");
  std::vector<Element> out;
  for (std::int64_t j = 1; j <= clouds; ++j) {
    for (std::int64_t i = 0; i < j; ++i) out.push_back(Element({j, i}));
  }
  return out;
}

double discrete_cloud_metric(const Element& a, const Element& b) {
  const std::int64_t ja = a[0], jb = b[0];
  if (ja == jb) return a[1] == b[1] ? 0.0 : 1.0;
  // Through the basepoints: to the basepoint, along the line, out again.
  const double ra = a[1] == 0 ? 0.0 : 1.0;
  const double rb = b[1] == 0 ? 0.0 : 1.0;
  return ra + static_cast<double>(std::llabs(ja - jb)) + rb;
}

}  // namespace cgt
