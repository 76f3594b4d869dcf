#include "cgt/two_level.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cgt {

TwoLevelSpec<Rational> make_two_level(const Group& g,
                                      WeightedGeneratingSet<Rational> base,
                                      std::vector<Element> reps) {
  TwoLevelSpec<Rational> spec{&g, std::move(base), {}};
  std::set<Element> seen;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    g.require_valid(reps[i], "make_two_level");
    if (reps[i] == g.identity()) {
      throw DomainError("identity cannot be a coset representative");
    }
    if (!seen.insert(reps[i]).second) {
      throw DomainError("duplicate coset representative " + g.show(reps[i]));
    }
    spec.reps.emplace_back(reps[i], Rational(static_cast<std::int64_t>(i) + 1));
  }
  return spec;
}

StarredWeights starred_weights(const TwoLevelSpec<Rational>& spec,
                               std::span<const Element> unit_ball) {
  const Group& g = *spec.group;
  if (unit_ball.empty()) throw EmptyInputError("starred_weights: empty unit ball");

  std::set<Element> u(unit_ball.begin(), unit_ball.end());
  if (!u.count(g.identity())) {
    throw DomainError("starred_weights: unit ball must contain the identity");
  }
  for (const Element& x : u) {
    if (!u.count(g.inv(x))) {
      throw DomainError("starred_weights: unit ball must be symmetric");
    }
  }

  StarredWeights out{TwoLevelSpec<double>{&g, spec.base.to_double(), {}}, {}, {}};
  for (std::size_t i = 0; i < spec.reps.size(); ++i) {
    const Element& rep = spec.reps[i].first;

    // Target: U * x_i. Candidate centers: anything whose translate can meet
    // the target, i.e. z * U for z in the target (U is symmetric).
    std::set<Element> target;
    for (const Element& x : u) target.insert(g.mul(x, rep));
    std::set<Element> candidates;
    for (const Element& z : target) {
      for (const Element& x : u) candidates.insert(g.mul(z, x));
    }

    CoveringReport::PerRep cover{i + 1, 0, {}};
    std::set<Element> uncovered = target;
    while (!uncovered.empty()) {
      const Element* best = nullptr;
      std::size_t best_gain = 0;
      for (const Element& y : candidates) {
        std::size_t gain = 0;
        for (const Element& x : u) {
          if (uncovered.count(g.mul(y, x))) ++gain;
        }
        if (gain > best_gain) {  // ties keep the earliest candidate in order
          best_gain = gain;
          best = &y;
        }
      }
      if (!best) {
        throw UncoverableSetError("no translate of U meets the remaining target");
      }
      for (const Element& x : u) uncovered.erase(g.mul(*best, x));
      cover.centers.push_back(*best);
      cover.p += 1;
    }

    // Verify the cover by membership of every target element.
    for (const Element& z : target) {
      bool covered = false;
      for (const Element& y : cover.centers) {
        if (u.count(g.mul(g.inv(y), z))) {
          covered = true;
          break;
        }
      }
      if (!covered) throw UncoverableSetError("greedy cover missed " + g.show(z));
    }

    const double star =
        spec.reps[i].second.to_double() + std::log2(static_cast<double>(cover.p));
    out.spec.reps.emplace_back(rep, star);
    out.l1_star.push_back(star);
    out.covering.max_p = std::max(out.covering.max_p, cover.p);
    out.covering.reps.push_back(std::move(cover));
  }
  return out;
}

}  // namespace cgt
