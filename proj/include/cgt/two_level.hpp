#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cgt/word_metric.hpp"

namespace cgt {

// A two-level weighted generating scheme: a symmetric base set generating
// a subgroup G0, plus coset representatives x_1, x_2, ... with weights
// l1(x_i) >= 1 (default l1(x_i) = i). The representatives are used
// directionally; symmetry of the induced length comes from taking
// max{ltilde(g), ltilde(g^{-1})}.
template <class C>
struct TwoLevelSpec {
  const Group* group = nullptr;
  WeightedGeneratingSet<C> base;
  std::vector<std::pair<Element, C>> reps;
};

// Builds the spec with the default weights l1(x_i) = i (1-based). The
// representatives must lie outside the subgroup generated by the base set;
// that is the caller's contract and is not decidable by search.
TwoLevelSpec<Rational> make_two_level(const Group& g,
                                      WeightedGeneratingSet<Rational> base,
                                      std::vector<Element> reps);

// Least cost over products h_0 s_1 h_1 ... s_k h_k with h_i words in the
// base set and s_i representatives, then symmetrized:
// max{ltilde(g), ltilde(g^{-1})}. Returns nullopt past cost_cap.
template <class C>
std::optional<C> two_level_length(const TwoLevelSpec<C>& spec, const Element& g,
                                  const C& cost_cap,
                                  std::size_t budget = enumeration_budget()) {
  const Group& grp = *spec.group;
  grp.require_valid(g, "two_level_length");
  if (!(C{} < cost_cap)) throw DomainError("two_level_length: cost_cap must be positive");

  // A least-cost path over base generators and representatives together is
  // exactly the infimum over the alternating representations: the base
  // letters between consecutive representatives spell the h_i at their own
  // least cost.
  auto combined = spec.base.within(cost_cap);
  for (const auto& [rep, w] : spec.reps) {
    if (!(C{} < w) || w < C{1}) throw DomainError("representative weight must be >= 1");
    if (rep == grp.identity()) throw DomainError("identity as coset representative");
    if (!(cost_cap < w)) {
      combined.push_back(GeneratorEntry<C>{rep, w, combined.size()});
    }
  }
  const auto ball = detail::ball_search<C>(grp, combined, cost_cap, budget);
  const C* fwd = ball.find(g);
  const C* bwd = ball.find(grp.inv(g));
  if (!fwd || !bwd) return std::nullopt;
  return std::max(*fwd, *bwd);
}

// Greedy covers of the translated unit ball: for each representative x_i,
// p(i) left translates of U that cover U * x_i, with the chosen centers.
struct CoveringReport {
  struct PerRep {
    std::size_t index = 0;  // 1-based representative index
    std::size_t p = 0;
    std::vector<Element> centers;
  };
  std::vector<PerRep> reps;
  std::size_t max_p = 0;
};

struct StarredWeights {
  TwoLevelSpec<double> spec;
  CoveringReport covering;
  std::vector<double> l1_star;  // per representative, index-aligned
};

// Reweights the representatives as l1*(x_i) = i + log2(p(i)), where p(i)
// is the size of a greedy cover of U * x_i by left translates of U. The
// finite set U must be symmetric and contain the identity.
StarredWeights starred_weights(const TwoLevelSpec<Rational>& spec,
                               std::span<const Element> unit_ball);

}  // namespace cgt
