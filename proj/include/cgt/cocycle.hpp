#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cgt/metric_space.hpp"
#include "cgt/word_metric.hpp"

namespace cgt {

// The tent bump at `center` of width `scale`:
//   1 - d(center, y) / scale for d < scale, else 0.
// Values lie in [0, 1] and the map is (1/scale)-Lipschitz in y.
double bump_value(const DiscreteMetricSpace& m, int scale, const Element& center,
                  const Element& y);

// Checks the half-ball floor: the bump at the identity is >= 1/2 on the
// closed ball of radius scale/2 (exactly 1/2 on its boundary sphere).
struct HalfBallReport {
  int scale = 0;
  std::size_t checked = 0;
  double worst_margin = 1.0;  // min of (value - 1/2) over the ball
  bool pass = true;
};

HalfBallReport half_ball_lower_bound(const DiscreteMetricSpace& m, int scale);

// One layer of the cocycle: the finitely supported function
//   h -> bump_e(g^{-1} h) - bump_e(h),
// materialized exactly on B(e, scale) union g B(e, scale).
struct CocycleLayer {
  int scale = 1;
  Element shift;                                   // the g of b^n(g)
  std::vector<std::pair<Element, double>> values;  // sorted by element, nonzero

  double sup_norm() const;
  double value_at(const Element& h) const;
};

CocycleLayer cocycle_layer(const DiscreteMetricSpace& m, int scale, const Element& g);

// Point evaluation without materializing the layer.
double cocycle_layer_value(const DiscreteMetricSpace& m, int scale, const Element& g,
                           const Element& h);

// (sum |v|^(2 scale))^(1 / (2 scale)) over the layer support, accumulated
// in log space for over/underflow safety; summation order is canonical so
// permutations of the support give bit-identical norms.
double two_n_norm(std::span<const std::pair<Element, double>> values, int scale);
double layer_norm(const CocycleLayer& layer);

// Truncation of the full cocycle b(g) = (b^n(g))_n to layers 1..truncation,
// with the l^2-combined norm over per-layer 2n-norms. The reported x_norm
// is a lower bound of the untruncated norm; x_norm^2 + tail_sq bounds its
// square from above via the growth envelope (alpha, beta).
struct CocycleVector {
  Element g;
  int truncation = 0;
  std::vector<CocycleLayer> layers;      // index n-1 holds layer n
  std::vector<double> layer_norms;
  double x_norm = 0.0;
  double tail_sq = 0.0;

  double x_norm_upper() const;
};

CocycleVector cocycle_vector(const DiscreteMetricSpace& m, const Element& g,
                             int truncation, const GrowthCertificate& cert);

// Pointwise check of the cocycle identity
//   b^n(s t) = translate_s(b^n(t)) + b^n(s)
// over the union of the three supports.
struct CocycleIdentityReport {
  std::size_t points = 0;
  double worst = 0.0;
  bool pass = true;
};

CocycleIdentityReport check_cocycle_identity(const DiscreteMetricSpace& m, int scale,
                                             const Element& s, const Element& t,
                                             double tol);

// A finitely supported point of the truncated direct sum, layer n sorted
// sparse. The affine action is alpha(g) xi = translate_g(xi) + b(g).
struct AffinePoint {
  int truncation = 0;
  std::vector<std::vector<std::pair<Element, double>>> layers;

  static AffinePoint zero(int truncation);
  double layer_norm_at(int scale) const;
};

AffinePoint affine_apply(const DiscreteMetricSpace& m, const Element& g,
                         const AffinePoint& xi);

// Divergence table: per radius on the grid, the certified lower bound
//   ||b(g)||^2 >= (N(g)/4) * min{mu(B(e,1/2)), 1},
// where N(g) is the integer in [d/2 - 1, d/2), against the computed
// truncated norm and the envelope upper bound 2 sqrt(beta) e^(alpha/2) d.
// Rows with d <= 2 are vacuous. `certified` marks rows whose N(g) fits
// inside the truncation.
struct PropernessRow {
  double dist = 0.0;
  Element g;
  long n_of_g = 0;
  double lower_sq = 0.0;
  double norm_sq = 0.0;
  double upper = 0.0;
  bool vacuous = false;
  bool certified = true;
  bool pass = true;
};

struct PropernessReport {
  std::vector<PropernessRow> rows;
  double half_ball_measure = 1.0;  // mu(B(e, 1/2)) under counting measure
  bool lower_bounds_monotone = true;
  bool pass = true;
};

PropernessReport properness_report(const DiscreteMetricSpace& m,
                                   const GrowthCertificate& cert, int truncation,
                                   std::span<const double> radii);

// Empirical sandwich constants over sampled pairs at distance >= c3:
//   c1 sqrt(d(g,h)) <= ||b(g) - b(h)||_X <= c2 d(g,h),
// with the translation identity ||b(g) - b(h)|| = ||b(h^{-1} g)|| verified
// to 1e-9 on every pair.
struct EmbeddingConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 3.0;
};

struct EmbeddingRow {
  double dist = 0.0;
  double norm = 0.0;       // ||b(g) - b(h)||, truncated: a certified lower bound
  double norm_lower = 0.0; // c1 * sqrt(dist), filled after extraction
  double norm_upper = 0.0; // sqrt(norm^2 + tail_sq(dist))
};

struct EmbeddingReport {
  EmbeddingConstants constants;
  std::size_t pairs_used = 0;
  std::size_t pairs_skipped = 0;  // below c3
  std::vector<EmbeddingRow> rows;
  double translation_worst = 0.0;
  bool translation_pass = true;
  double alpha = 0.0;
  double beta = 1.0;
  int truncation = 0;
  bool pass = false;
};

EmbeddingReport embedding_constants(const DiscreteMetricSpace& m, int truncation,
                                    const GrowthCertificate& cert,
                                    std::span<const std::pair<Element, Element>> pairs,
                                    double c3 = 3.0);

// ||b(g) - b(h)||_X on the truncation, via layerwise sparse differences.
double cocycle_difference_norm(const DiscreteMetricSpace& m, int truncation,
                               const Element& g, const Element& h);

// Remaining-layer estimate: sum over n > truncation of the per-layer bound
// (d^2 / n^2) (2 beta) e^alpha, summed in closed form via pi^2/6.
double cocycle_tail_sq(double dist, int truncation, const GrowthCertificate& cert);

}  // namespace cgt
