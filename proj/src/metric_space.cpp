#include "cgt/metric_space.hpp"

namespace cgt {

DiscreteMetricSpace::DiscreteMetricSpace(const Group& g,
                                         const WeightedGeneratingSet<Rational>& gens,
                                         Rational horizon, std::size_t budget)
    : group_(&g), horizon_(horizon) {
  if (!(Rational(0) < horizon)) {
    throw DomainError("DiscreteMetricSpace: horizon must be positive");
  }
  ball_ = enumerate_ball(gens, horizon, budget);
}

double DiscreteMetricSpace::length(const Element& g) const {
  const Rational* d = ball_.find(g);
  if (!d) {
    throw OutOfRangeError("element " + group_->show(g) + " is beyond the horizon " +
                          horizon_.str());
  }
  return d->to_double();
}

std::optional<double> DiscreteMetricSpace::try_length(const Element& g) const {
  const Rational* d = ball_.find(g);
  if (!d) return std::nullopt;
  return d->to_double();
}

double DiscreteMetricSpace::dist(const Element& a, const Element& b) const {
  return length(group_->mul(group_->inv(b), a));
}

void DiscreteMetricSpace::require_answerable(double r) const {
  if (r > horizon_.to_double()) {
    throw DomainError("open-ball query of radius " + std::to_string(r) +
                      " exceeds the horizon " + horizon_.str());
  }
}

bool DiscreteMetricSpace::in_open_ball(const Element& g, double r) const {
  require_answerable(r);
  const Rational* d = ball_.find(g);
  // Anything missing from the enumeration is farther than the horizon.
  return d && d->to_double() < r;
}

std::vector<Element> DiscreteMetricSpace::open_ball(double r) const {
  require_answerable(r);
  std::vector<Element> out;
  for (const auto& [elem, dist] : ball_.items) {
    if (dist.to_double() < r) out.push_back(elem);
  }
  return out;
}

std::size_t DiscreteMetricSpace::open_ball_size(double r) const {
  require_answerable(r);
  std::size_t count = 0;
  for (const auto& [elem, dist] : ball_.items) {
    if (dist.to_double() < r) ++count;
  }
  return count;
}

}  // namespace cgt
