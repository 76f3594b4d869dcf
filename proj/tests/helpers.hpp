#pragma once

// Test-only oracles, deliberately independent of the library's search and
// norm code paths: plain depth-first enumeration and direct summation.

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/rational.hpp"
#include "cgt/word_metric.hpp"

namespace cgt::testing {

// Exhaustive minimum over all factorizations g = s_1 ... s_m with total
// weight <= cap. Exponential; only for tiny fixtures.
inline std::optional<Rational> brute_word_length(
    const Group& g, const std::vector<std::pair<Element, Rational>>& gens,
    const Element& target, const Rational& cap) {
  std::optional<Rational> best;
  const auto consider = [&](const Rational& c) {
    if (!best || c < *best) best = c;
  };
  // Depth-first over generator sequences.
  struct Frame {
    Element at;
    Rational cost;
  };
  std::vector<Frame> stack{{g.identity(), Rational(0)}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.at == target) consider(f.cost);
    for (const auto& [s, w] : gens) {
      const Rational next = f.cost + w;
      if (cap < next) continue;
      if (best && !(next < *best)) continue;
      stack.push_back({g.mul(f.at, s), next});
    }
  }
  return best;
}

// Exhaustive minimum over the alternating representations
// h_0 s_1 h_1 ... s_k h_k (h_i words in `base`, s_i in `reps`) of
// l0(h_0) + sum_i (l1(s_i) + l0(h_i)), with every letter cost counted.
// Enumerates raw letter sequences over base+reps, which ranges over
// exactly the same set of products.
inline std::optional<Rational> brute_alternating_length(
    const Group& g, const std::vector<std::pair<Element, Rational>>& base,
    const std::vector<std::pair<Element, Rational>>& reps, const Element& target,
    const Rational& cap) {
  std::vector<std::pair<Element, Rational>> letters = base;
  letters.insert(letters.end(), reps.begin(), reps.end());
  return brute_word_length(g, letters, target, cap);
}

// Direct 2n-norm by long-double power sums, no log-space tricks.
inline double direct_two_n_norm(const std::vector<double>& values, int scale) {
  long double sum = 0.0L;
  for (const double v : values) {
    sum += std::pow(static_cast<long double>(std::fabs(v)), 2.0L * scale);
  }
  if (sum == 0.0L) return 0.0;
  return static_cast<double>(std::pow(sum, 1.0L / (2.0L * scale)));
}

inline Element random_lattice_element(std::mt19937_64& rng, int rank, int spread) {
  std::vector<std::int64_t> v(rank);
  for (int i = 0; i < rank; ++i) {
    v[i] = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
  }
  return Element(std::move(v));
}

inline Element random_free_element(std::mt19937_64& rng, const FreeGroup& f, int max_len) {
  const std::size_t len = rng() % (max_len + 1);
  std::vector<std::int64_t> letters;
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t idx = static_cast<std::int64_t>(rng() % f.rank()) + 1;
    letters.push_back((rng() & 1) ? idx : -idx);
  }
  return f.word(letters);
}

inline Element random_heisenberg_element(std::mt19937_64& rng, int spread) {
  return random_lattice_element(rng, 3, spread);
}

}  // namespace cgt::testing
