#pragma once

#include <optional>
#include <vector>

#include "cgt/word_metric.hpp"

namespace cgt {

// A word-metric view of a countable discrete group, memoized out to a
// fixed horizon: the closed ball D(e, horizon) is enumerated once and all
// length/distance/ball queries are answered from the cache. Queries about
// radii beyond the horizon are refused rather than approximated.
class DiscreteMetricSpace {
public:
  DiscreteMetricSpace(const Group& g, const WeightedGeneratingSet<Rational>& gens,
                      Rational horizon, std::size_t budget = enumeration_budget());

  const Group& group() const { return *group_; }
  double horizon() const { return horizon_.to_double(); }

  // d(e, g); OutOfRangeError when g lies beyond the horizon.
  double length(const Element& g) const;
  std::optional<double> try_length(const Element& g) const;
  // d(a, b) = length(b^{-1} a), by left invariance.
  double dist(const Element& a, const Element& b) const;

  // Open-ball data {h : d(e, h) < r}; requires r <= horizon.
  bool in_open_ball(const Element& g, double r) const;
  std::vector<Element> open_ball(double r) const;
  std::size_t open_ball_size(double r) const;

  const BallEnumeration<Rational>& enumeration() const { return ball_; }

private:
  void require_answerable(double r) const;

  const Group* group_;
  Rational horizon_;
  BallEnumeration<Rational> ball_;
};

}  // namespace cgt
