#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/group.hpp"
#include "cgt/rational.hpp"

namespace cgt {

template <class C>
struct GeneratorEntry {
  Element gen;
  C weight{};
  std::size_t index = 0;  // stable listing order, used by witnesses
};

// A symmetric weighted generating set. Explicit sets are validated at
// construction; infinite sets are represented lazily by a grading scheme
// index -> (generator, weight) with non-decreasing weights, and only the
// entries with weight <= budget are ever materialized.
template <class C>
class WeightedGeneratingSet {
public:
  using Scheme = std::function<std::optional<std::pair<Element, C>>(std::size_t)>;

  static WeightedGeneratingSet from_entries(const Group& g,
                                            std::vector<std::pair<Element, C>> entries,
                                            bool add_inverses = true) {
    WeightedGeneratingSet s(g);
    if (add_inverses) {
      std::vector<std::pair<Element, C>> closed = entries;
      for (const auto& [elem, w] : entries) {
        const Element i = g.inv(elem);
        if (i != elem) closed.emplace_back(i, w);
      }
      entries = std::move(closed);
    }
    validate_entries(g, entries);
    s.entries_ = std::move(entries);
    return s;
  }

  static WeightedGeneratingSet graded(const Group& g, Scheme scheme) {
    WeightedGeneratingSet s(g);
    s.scheme_ = std::move(scheme);
    return s;
  }

  // Generators with weight <= budget, in listing order.
  std::vector<GeneratorEntry<C>> within(const C& budget) const {
    std::vector<std::pair<Element, C>> slice;
    if (scheme_) {
      for (std::size_t i = 0;; ++i) {
        const auto next = scheme_(i);
        if (!next) break;
        if (!slice.empty() && next->second < slice.back().second) {
          throw DomainError("graded scheme weights must be non-decreasing");
        }
        if (budget < next->second) break;
        slice.push_back(*next);
      }
      validate_entries(*group_, slice);
    } else {
      for (const auto& e : entries_) {
        if (!(budget < e.second)) slice.push_back(e);
      }
    }
    std::vector<GeneratorEntry<C>> out;
    out.reserve(slice.size());
    for (std::size_t i = 0; i < slice.size(); ++i) {
      out.push_back(GeneratorEntry<C>{slice[i].first, slice[i].second, i});
    }
    return out;
  }

  const Group& group() const { return *group_; }

  WeightedGeneratingSet<double> to_double() const
    requires std::is_same_v<C, Rational>
  {
    WeightedGeneratingSet<double> s(*group_);
    if (scheme_) {
      s.scheme_ = [inner = scheme_](std::size_t i)
          -> std::optional<std::pair<Element, double>> {
        const auto next = inner(i);
        if (!next) return std::nullopt;
        return std::pair<Element, double>{next->first, next->second.to_double()};
      };
    } else {
      for (const auto& [elem, w] : entries_) {
        s.entries_.emplace_back(elem, w.to_double());
      }
    }
    return s;
  }

private:
  template <class>
  friend class WeightedGeneratingSet;

  explicit WeightedGeneratingSet(const Group& g) : group_(&g) {}

  static void validate_entries(const Group& g,
                               const std::vector<std::pair<Element, C>>& entries) {
    const Element e = g.identity();
    std::map<Element, C> table;
    for (const auto& [elem, w] : entries) {
      g.require_valid(elem, "generating set");
      if (elem == e) throw DomainError("generating set contains the identity");
      if (!(C{} < w)) {
        throw NonPositiveWeightError("generator " + g.show(elem) +
                                     " has non-positive weight");
      }
      const auto [it, fresh] = table.emplace(elem, w);
      if (!fresh && !(it->second == w)) {
        throw DomainError("generator " + g.show(elem) + " listed with two weights");
      }
    }
    for (const auto& [elem, w] : table) {
      const auto it = table.find(g.inv(elem));
      if (it == table.end() || !(it->second == w)) {
        throw NonSymmetricGeneratingSetError(
            "generating set is not symmetric at " + g.show(elem));
      }
    }
  }

  const Group* group_;
  std::vector<std::pair<Element, C>> entries_;
  Scheme scheme_;
};

// Closed ball D(e, radius) with exact distances, in settle order
// (non-decreasing cost, ties by element order).
template <class C>
struct BallEnumeration {
  std::vector<std::pair<Element, C>> items;
  ElementMap<std::size_t> position;

  const C* find(const Element& e) const {
    const auto it = position.find(e);
    return it == position.end() ? nullptr : &items[it->second].second;
  }
  std::size_t size() const { return items.size(); }
};

namespace detail {

// Uniform-cost search over the labelled Cayley graph from the identity out
// to `radius` (inclusive). Weights are strictly positive, so every settled
// distance equals the infimum over factorizations; the search terminates
// because sublevel sets of a proper word metric are finite, with `budget`
// guarding against misuse.
template <class C>
BallEnumeration<C> ball_search(const Group& g, std::span<const GeneratorEntry<C>> gens,
                               const C& radius, std::size_t budget,
                               const Element* target = nullptr) {
  using State = std::pair<C, Element>;
  const auto later = [](const State& a, const State& b) { return b < a; };
  std::priority_queue<State, std::vector<State>, decltype(later)> frontier(later);
  ElementMap<C> dist;

  BallEnumeration<C> ball;
  const Element e = g.identity();
  dist.emplace(e, C{});
  frontier.push({C{}, e});

  while (!frontier.empty()) {
    auto [cost, elem] = frontier.top();
    frontier.pop();
    const auto settled_it = dist.find(elem);
    if (settled_it->second < cost) continue;  // stale queue entry
    if (ball.size() >= budget) {
      throw BudgetExceededError("ball enumeration exceeded budget of " +
                                std::to_string(budget) + " states");
    }
    ball.position.emplace(elem, ball.items.size());
    ball.items.emplace_back(elem, cost);
    if (target && elem == *target) return ball;
    for (const auto& s : gens) {
      const C next_cost = cost + s.weight;
      if (radius < next_cost) continue;
      Element next = g.mul(elem, s.gen);
      const auto it = dist.find(next);
      if (it == dist.end()) {
        dist.emplace(next, next_cost);
        frontier.push({next_cost, std::move(next)});
      } else if (next_cost < it->second) {
        it->second = next_cost;
        frontier.push({next_cost, std::move(next)});
      }
    }
  }
  return ball;
}

}  // namespace detail

// Least total weight over factorizations of g into generators, computed as
// a least-cost path in the weighted Cayley graph. Returns nullopt when the
// infimum exceeds cost_cap.
template <class C>
std::optional<C> word_length(const WeightedGeneratingSet<C>& s, const Element& g,
                             const C& cost_cap,
                             std::size_t budget = enumeration_budget()) {
  s.group().require_valid(g, "word_length");
  if (!(C{} < cost_cap)) throw DomainError("word_length: cost_cap must be positive");
  if (g == s.group().identity()) return C{};
  const auto gens = s.within(cost_cap);
  const auto ball = detail::ball_search<C>(s.group(), gens, cost_cap, budget, &g);
  const C* found = ball.find(g);
  if (!found) return std::nullopt;
  return *found;
}

// D(e, radius) = {g : word_length(g) <= radius}.
template <class C>
BallEnumeration<C> enumerate_ball(const WeightedGeneratingSet<C>& s, const C& radius,
                                  std::size_t budget = enumeration_budget()) {
  if (radius < C{}) throw DomainError("enumerate_ball: negative radius");
  const auto gens = s.within(radius);
  return detail::ball_search<C>(s.group(), gens, radius, budget);
}

// Ball and sphere cardinalities on the integer radius grid 0..max_radius.
struct BallCensus {
  int max_radius = 0;
  BallEnumeration<Rational> enumeration;
  std::vector<std::size_t> ball_sizes;    // index n in [0, max_radius]
  std::vector<std::size_t> sphere_sizes;  // index n in [0, max_radius]

  std::size_t ball(int n) const { return ball_sizes.at(n); }
  std::size_t sphere(int n) const { return sphere_sizes.at(n); }
};

BallCensus sphere_counts(const WeightedGeneratingSet<Rational>& s, int max_radius,
                         std::size_t budget = enumeration_budget());

// Envelope |D(e, n)| <= beta * exp(alpha * n) fitted over the census grid;
// holds on the grid by construction. growth_rate is the log-slope between
// the first and last grid points, a diagnostic for the asymptotic rate.
struct GrowthCertificate {
  double alpha = 0.0;
  double beta = 1.0;
  int grid_max = 0;
  double growth_rate = 0.0;

  bool holds_on(const BallCensus& census) const;
};

GrowthCertificate growth_certificate(const BallCensus& census);

// Checks |D(e, n)| <= 3^n and |sphere(e, n)| <= 2 * 3^(n-1) for a graded
// scheme whose weight-n generators form a single pair {x_n, x_n^{-1}}.
struct GradedBoundReport {
  struct Row {
    int n = 0;
    std::size_t ball = 0;
    std::size_t sphere = 0;
    std::uint64_t ball_bound = 0;
    std::uint64_t sphere_bound = 0;
    bool pass = true;
  };
  std::vector<Row> rows;
  bool pass = true;
  BallCensus census;
};

GradedBoundReport verify_3n_bound(const WeightedGeneratingSet<Rational>& s,
                                  int max_radius,
                                  std::size_t budget = enumeration_budget());

// Number of k-tuples of positive integers with sum at most n: binomial(n, k).
std::uint64_t count_compositions(int n, int k);
// Companion brute-force census of the same tuple set, for cross-checking.
std::uint64_t count_compositions_enumerated(int n, int k);

// The graded scheme on Z: generators +-n with weight n.
WeightedGeneratingSet<Rational> graded_integer_generators(const Group& z);
// Standard generators of the group, all with weight 1.
WeightedGeneratingSet<Rational> unit_generators(const Group& g);
// Letters x_1..x_rank of a free group with weights 1..rank.
WeightedGeneratingSet<Rational> graded_free_generators(const FreeGroup& f);

}  // namespace cgt
