#include "cgt/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cgt {
namespace {

void require_scale(const DiscreteMetricSpace& m, int scale, const char* ctx) {
  if (scale < 1) throw DomainError(std::string(ctx) + ": scale must be >= 1");
  if (static_cast<double>(scale) > m.horizon()) {
    throw DomainError(std::string(ctx) + ": scale exceeds the metric horizon");
  }
}

void sort_support(std::vector<std::pair<Element, double>>& values) {
  std::sort(values.begin(), values.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

double bump_value(const DiscreteMetricSpace& m, int scale, const Element& center,
                  const Element& y) {
  require_scale(m, scale, "bump_value");
  const Group& g = m.group();
  const Element rel = g.mul(g.inv(center), y);
  const auto d = m.try_length(rel);
  if (!d || *d >= static_cast<double>(scale)) return 0.0;
  return 1.0 - *d / static_cast<double>(scale);
}

HalfBallReport half_ball_lower_bound(const DiscreteMetricSpace& m, int scale) {
  require_scale(m, scale, "half_ball_lower_bound");
  HalfBallReport report;
  report.scale = scale;
  const Element e = m.group().identity();
  const double half = static_cast<double>(scale) / 2.0;
  for (const auto& [elem, dist] : m.enumeration().items) {
    if (dist.to_double() > half) continue;
    ++report.checked;
    const double margin = bump_value(m, scale, e, elem) - 0.5;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < 0.0) report.pass = false;
  }
  return report;
}

CocycleLayer cocycle_layer(const DiscreteMetricSpace& m, int scale, const Element& g) {
  require_scale(m, scale, "cocycle_layer");
  const Group& grp = m.group();
  grp.require_valid(g, "cocycle_layer");

  CocycleLayer layer;
  layer.scale = scale;
  layer.shift = g;

  // b^n(g)(h) = bump_e(g^{-1} h) - bump_e(h). The two terms are supported
  // on g B(e, n) and B(e, n); walk both balls and accumulate.
  ElementMap<double> acc;
  const double n = static_cast<double>(scale);
  for (const auto& [u, dist] : m.enumeration().items) {
    const double d = dist.to_double();
    if (d >= n) break;  // enumeration is sorted by distance
    const double phi = 1.0 - d / n;
    acc[grp.mul(g, u)] += phi;  // bump_e(g^{-1} h) at h = g u
    acc[u] -= phi;              // -bump_e(h) at h = u
  }
  layer.values.reserve(acc.size());
  for (auto& [h, v] : acc) {
    if (v != 0.0) layer.values.emplace_back(h, v);
  }
  sort_support(layer.values);
  return layer;
}

double cocycle_layer_value(const DiscreteMetricSpace& m, int scale, const Element& g,
                           const Element& h) {
  const Group& grp = m.group();
  return bump_value(m, scale, grp.identity(), grp.mul(grp.inv(g), h)) -
         bump_value(m, scale, grp.identity(), h);
}

double CocycleLayer::sup_norm() const {
  double best = 0.0;
  for (const auto& [h, v] : values) best = std::max(best, std::abs(v));
  return best;
}

double CocycleLayer::value_at(const Element& h) const {
  const auto it = std::lower_bound(
      values.begin(), values.end(), h,
      [](const auto& entry, const Element& key) { return entry.first < key; });
  if (it == values.end() || it->first != h) return 0.0;
  return it->second;
}

double two_n_norm(std::span<const std::pair<Element, double>> values, int scale) {
  if (scale < 1) throw DomainError("two_n_norm: scale must be >= 1");
  std::vector<double> mags;
  mags.reserve(values.size());
  for (const auto& [h, v] : values) {
    if (v != 0.0) mags.push_back(std::abs(v));
  }
  if (mags.empty()) return 0.0;
  // Canonical summation order, largest magnitude first.
  std::sort(mags.begin(), mags.end(), std::greater<>());
  const double p = 2.0 * scale;
  const double log_max = std::log(mags.front());
  double sum = 0.0;
  for (const double v : mags) {
    sum += std::exp(p * (std::log(v) - log_max));
  }
  return std::exp(log_max + std::log(sum) / p);
}

double layer_norm(const CocycleLayer& layer) {
  return two_n_norm(layer.values, layer.scale);
}

double cocycle_tail_sq(double dist, int truncation, const GrowthCertificate& cert) {
  if (truncation < 1) throw DomainError("cocycle_tail_sq: truncation must be >= 1");
  double partial = 0.0;
  for (int n = 1; n <= truncation; ++n) partial += 1.0 / (static_cast<double>(n) * n);
  const double remainder = std::numbers::pi * std::numbers::pi / 6.0 - partial;
  return dist * dist * 2.0 * cert.beta * std::exp(cert.alpha) * remainder;
}

CocycleVector cocycle_vector(const DiscreteMetricSpace& m, const Element& g,
                             int truncation, const GrowthCertificate& cert) {
  if (truncation < 1) throw DomainError("cocycle_vector: truncation must be >= 1");
  CocycleVector vec;
  vec.g = g;
  vec.truncation = truncation;
  double sq = 0.0;
  for (int n = 1; n <= truncation; ++n) {
    vec.layers.push_back(cocycle_layer(m, n, g));
    vec.layer_norms.push_back(layer_norm(vec.layers.back()));
    sq += vec.layer_norms.back() * vec.layer_norms.back();
  }
  vec.x_norm = std::sqrt(sq);
  vec.tail_sq = cocycle_tail_sq(m.length(g), truncation, cert);
  return vec;
}

double CocycleVector::x_norm_upper() const {
  return std::sqrt(x_norm * x_norm + tail_sq);
}

CocycleIdentityReport check_cocycle_identity(const DiscreteMetricSpace& m, int scale,
                                             const Element& s, const Element& t,
                                             double tol) {
  require_scale(m, scale, "check_cocycle_identity");
  const Group& g = m.group();
  const Element st = g.mul(s, t);
  const Element s_inv = g.inv(s);
  const Element t_inv = g.inv(t);
  const Element st_inv = g.inv(st);

  const double n = static_cast<double>(scale);
  const auto phi = [&](const Element& x) {
    const auto d = m.try_length(x);
    return (d && *d < n) ? 1.0 - *d / n : 0.0;
  };

  CocycleIdentityReport report;
  // Union of the three supports: B(e,n), s B(e,n), st B(e,n).
  ElementSet points;
  for (const auto& [u, dist] : m.enumeration().items) {
    if (dist.to_double() >= n) break;
    points.insert(u);
    points.insert(g.mul(s, u));
    points.insert(g.mul(st, u));
  }
  for (const Element& h : points) {
    // The two sides reduce (st)^{-1} h along different routes; agreement
    // rests on canonical forms, not on shared intermediates.
    const Element joint = g.mul(st_inv, h);
    const Element mid = g.mul(s_inv, h);
    const Element stepwise = g.mul(t_inv, mid);
    const double lhs = phi(joint) - phi(h);
    const double rhs = (phi(stepwise) - phi(mid)) + (phi(mid) - phi(h));
    const double err = std::abs(lhs - rhs);
    report.worst = std::max(report.worst, err);
    ++report.points;
  }
  report.pass = report.worst <= tol;
  return report;
}

AffinePoint AffinePoint::zero(int truncation) {
  AffinePoint xi;
  xi.truncation = truncation;
  xi.layers.assign(truncation, {});
  return xi;
}

double AffinePoint::layer_norm_at(int scale) const {
  return two_n_norm(layers.at(scale - 1), scale);
}

AffinePoint affine_apply(const DiscreteMetricSpace& m, const Element& g,
                         const AffinePoint& xi) {
  if (xi.truncation < 1 ||
      xi.layers.size() != static_cast<std::size_t>(xi.truncation)) {
    throw TruncationMismatchError("affine_apply: malformed point");
  }
  const Group& grp = m.group();
  grp.require_valid(g, "affine_apply");

  AffinePoint out = AffinePoint::zero(xi.truncation);
  for (int n = 1; n <= xi.truncation; ++n) {
    ElementMap<double> acc;
    // Linear part: (translate_g xi)(h) = xi(g^{-1} h), a support permutation.
    for (const auto& [h, v] : xi.layers[n - 1]) acc[grp.mul(g, h)] += v;
    for (const auto& [h, v] : cocycle_layer(m, n, g).values) acc[h] += v;
    auto& layer = out.layers[n - 1];
    layer.reserve(acc.size());
    for (auto& [h, v] : acc) {
      if (v != 0.0) layer.emplace_back(h, v);
    }
    sort_support(layer);
  }
  return out;
}

PropernessReport properness_report(const DiscreteMetricSpace& m,
                                   const GrowthCertificate& cert, int truncation,
                                   std::span<const double> radii) {
  if (truncation < 1) throw DomainError("properness_report: truncation must be >= 1");
  PropernessReport report;
  report.half_ball_measure = static_cast<double>(m.open_ball_size(0.5));
  const double measure_floor = std::min(report.half_ball_measure, 1.0);

  double prev_r = -1.0, prev_lower = -1.0;
  for (const double r : radii) {
    if (r <= prev_r) throw DomainError("properness_report: grid must increase");
    prev_r = r;

    PropernessRow row;
    row.dist = r;
    // Pick the first enumerated element at this distance.
    bool found = false;
    for (const auto& [elem, dist] : m.enumeration().items) {
      if (std::abs(dist.to_double() - r) <= 1e-9) {
        row.g = elem;
        found = true;
        break;
      }
    }
    if (!found) {
      throw DomainError("properness_report: no element at distance " +
                        std::to_string(r));
    }
    if (r <= 2.0) {
      // The divergence bound assumes d(g, e) > 2.
      row.vacuous = true;
      report.rows.push_back(row);
      continue;
    }
    row.n_of_g = static_cast<long>(std::ceil(r / 2.0 - 1e-12)) - 1;
    row.lower_sq = static_cast<double>(row.n_of_g) / 4.0 * measure_floor;
    row.certified = row.n_of_g <= truncation;

    const CocycleVector vec = cocycle_vector(m, row.g, truncation, cert);
    row.norm_sq = vec.x_norm * vec.x_norm;
    row.upper = 2.0 * std::sqrt(cert.beta) * std::exp(cert.alpha / 2.0) * r;
    row.pass = row.norm_sq >= row.lower_sq * (1.0 - 1e-12) &&
               vec.x_norm <= row.upper * (1.0 + 1e-12);
    if (prev_lower > row.lower_sq) report.lower_bounds_monotone = false;
    prev_lower = row.lower_sq;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  report.pass = report.pass && report.lower_bounds_monotone;
  return report;
}

double cocycle_difference_norm(const DiscreteMetricSpace& m, int truncation,
                               const Element& g, const Element& h) {
  if (truncation < 1) throw DomainError("cocycle_difference_norm: bad truncation");
  double sq = 0.0;
  for (int n = 1; n <= truncation; ++n) {
    ElementMap<double> acc;
    for (const auto& [x, v] : cocycle_layer(m, n, g).values) acc[x] += v;
    for (const auto& [x, v] : cocycle_layer(m, n, h).values) acc[x] -= v;
    std::vector<std::pair<Element, double>> diff;
    diff.reserve(acc.size());
    for (auto& [x, v] : acc) {
      if (v != 0.0) diff.emplace_back(x, v);
    }
    const double norm = two_n_norm(diff, n);
    sq += norm * norm;
  }
  return std::sqrt(sq);
}

EmbeddingReport embedding_constants(const DiscreteMetricSpace& m, int truncation,
                                    const GrowthCertificate& cert,
                                    std::span<const std::pair<Element, Element>> pairs,
                                    double c3) {
  if (!(c3 > 2.0)) throw DomainError("embedding_constants: c3 must exceed 2");
  EmbeddingReport report;
  report.constants.c3 = c3;
  report.alpha = cert.alpha;
  report.beta = cert.beta;
  report.truncation = truncation;

  // Sample elements recur across pairs; cache their layers.
  ElementMap<std::vector<CocycleLayer>> layer_cache;
  const auto layers_of = [&](const Element& g) -> const std::vector<CocycleLayer>& {
    const auto it = layer_cache.find(g);
    if (it != layer_cache.end()) return it->second;
    std::vector<CocycleLayer> layers;
    layers.reserve(truncation);
    for (int n = 1; n <= truncation; ++n) layers.push_back(cocycle_layer(m, n, g));
    return layer_cache.emplace(g, std::move(layers)).first->second;
  };

  double c1 = std::numeric_limits<double>::infinity();
  double c2 = 0.0;
  for (const auto& [g, h] : pairs) {
    const double d = m.dist(g, h);
    if (d < c3) {
      ++report.pairs_skipped;
      continue;
    }
    ++report.pairs_used;
    double norm_sq = 0.0;
    const auto& glayers = layers_of(g);
    const auto& hlayers = layers_of(h);
    for (int n = 1; n <= truncation; ++n) {
      ElementMap<double> acc;
      for (const auto& [x, v] : glayers[n - 1].values) acc[x] += v;
      for (const auto& [x, v] : hlayers[n - 1].values) acc[x] -= v;
      std::vector<std::pair<Element, double>> diff;
      diff.reserve(acc.size());
      for (auto& [x, v] : acc) {
        if (v != 0.0) diff.emplace_back(x, v);
      }
      const double layer = two_n_norm(diff, n);
      norm_sq += layer * layer;
    }
    const double norm = std::sqrt(norm_sq);

    // Translation identity: the difference is a translate of b(h^{-1} g).
    const Element rel = m.group().mul(m.group().inv(h), g);
    double rel_sq = 0.0;
    for (const CocycleLayer& layer : layers_of(rel)) {
      const double value = layer_norm(layer);
      rel_sq += value * value;
    }
    const double drift = std::abs(norm - std::sqrt(rel_sq));
    report.translation_worst = std::max(report.translation_worst, drift);

    c1 = std::min(c1, norm / std::sqrt(d));
    c2 = std::max(c2, norm / d);
    EmbeddingRow row;
    row.dist = d;
    row.norm = norm;
    row.norm_upper = std::sqrt(norm * norm + cocycle_tail_sq(d, truncation, cert));
    report.rows.push_back(row);
  }
  if (report.pairs_used == 0) {
    throw InsufficientRangeError("embedding_constants: no pairs at distance >= c3");
  }
  report.constants.c1 = c1;
  report.constants.c2 = c2;
  for (auto& row : report.rows) row.norm_lower = c1 * std::sqrt(row.dist);
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const EmbeddingRow& a, const EmbeddingRow& b) {
                     return a.dist < b.dist;
                   });
  report.translation_pass = report.translation_worst <= 1e-9;
  report.pass = report.translation_pass && report.constants.c1 > 0.0 &&
                std::isfinite(report.constants.c2);
  return report;
}

}  // namespace cgt
