#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgt/element.hpp"
#include "cgt/errors.hpp"

namespace cgt {

using MetricFn = std::function<double(const Element&, const Element&)>;
// A metric that may be unknown beyond some computation cap (capped word
// metrics return nullopt past the cap).
using PartialMetricFn =
    std::function<std::optional<double>(const Element&, const Element&)>;

// A separated net: pairwise distances >= separation, every input point
// within covering_radius of some net point. Point order is the greedy
// insertion order and doubles as the cell ownership order of the
// retraction.
struct CoarseLattice {
  std::vector<Element> points;
  double separation = 1.0;
  double covering_radius = 0.0;
};

// Greedy maximal separated subset in input order. Maximality over the
// input guarantees covering_radius < separation on the input set.
CoarseLattice build_coarse_lattice(std::span<const Element> input, const MetricFn& d,
                                   double separation);

// Cell-ownership retraction: the first lattice point strictly within
// `separation` of y. Throws OutOfRangeError when no cell claims y.
Element retract_to_lattice(const CoarseLattice& lattice, const MetricFn& d,
                           const Element& y);

// Gamma_M = max over lattice points q of |{p : d(q, p) <= M}|. When the
// host open-ball measure is available (counting measure on a group ball),
// also checks Gamma_M against the ratio bound
// ball(M + 1/2) / ball(1/2).
struct GeometryCensus {
  double m = 0.0;
  std::size_t gamma = 0;
  Element worst_center;
  std::optional<double> ratio_bound;
  bool within_ratio = true;
};

GeometryCensus bounded_geometry_census(
    const CoarseLattice& lattice, const MetricFn& d, double m,
    const std::function<std::size_t(double)>& host_open_ball_size = nullptr);

// Monotone step function S(R) = max{d_Y : d_X <= R} over the sampled
// distance grid.
struct ExpansivenessEnvelope {
  std::vector<double> grid;   // sorted distinct d_X values
  std::vector<double> bound;  // S at each grid point, non-decreasing
};

ExpansivenessEnvelope expansiveness_envelope(
    std::span<const std::pair<double, double>> dist_pairs);

// Empirical control functions of a uniform embedding over sampled pairs:
// rho_-(t) = min{d_Y : d_X >= t}, rho_+(t) = max{d_Y : d_X <= t}. The
// verdict is sample-relative: PASS when rho_- still strictly increases
// across the top half of the grid (and rho_+ is finite by construction).
struct EmbeddingEnvelope {
  std::vector<double> grid;
  std::vector<double> rho_minus;
  std::vector<double> rho_plus;
  bool pass = false;
  std::string note = "supported on sampled range only";
};

EmbeddingEnvelope verify_uniform_embedding(
    std::span<const std::pair<double, double>> dist_pairs);

// Convenience: distances of f applied to sampled pairs.
std::vector<std::pair<double, double>> map_distance_pairs(
    std::span<const std::pair<Element, Element>> pairs, const MetricFn& dx,
    const std::function<Element(const Element&)>& f, const MetricFn& dy);

// Both directional expansiveness envelopes between two metrics on the same
// sample; PASS when every sampled distance is finite in both metrics, the
// empirical witness that the identity map is a coarse equivalence on the
// sample.
struct CoarseEquivalenceProbe {
  ExpansivenessEnvelope forward;   // d1 -> d2
  ExpansivenessEnvelope backward;  // d2 -> d1
  std::size_t pair_count = 0;
  std::size_t unreachable_d1 = 0;
  std::size_t unreachable_d2 = 0;
  bool pass = false;
};

CoarseEquivalenceProbe coarse_equivalence_probe(std::span<const Element> sample,
                                                const PartialMetricFn& d1,
                                                const PartialMetricFn& d2);

// Disjoint union of growing discrete clouds glued along basepoints: cloud
// j has j points at mutual distance 1, basepoints are |j - j'| apart.
// Proper, but Gamma_1 grows with the number of clouds.
std::vector<Element> discrete_cloud_points(int clouds);
double discrete_cloud_metric(const Element& a, const Element& b);

}  // namespace cgt
