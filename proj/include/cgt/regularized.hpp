#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cgt/word_metric.hpp"

namespace cgt {

// A finite symmetric set U with delta-lengths in (0, 1]. The identity may
// be listed (its length must be 0) and is dropped; the remaining entries
// label the edges of the U-Cayley graph.
class DeltaLengths {
public:
  static DeltaLengths make(const Group& g,
                           std::vector<std::pair<Element, Rational>> entries);

  const Group& group() const { return *group_; }
  const std::vector<std::pair<Element, Rational>>& table() const { return table_; }
  // Delta-length of a set member; DomainError for non-members.
  Rational at(const Element& u) const;
  bool contains(const Element& u) const;  // identity counts as a member
  std::vector<GeneratorEntry<Rational>> entries() const;

private:
  const Group* group_ = nullptr;
  std::vector<std::pair<Element, Rational>> table_;
};

// A factorization g = letters[0] * ... * letters[k-1] over U.
struct Factorization {
  std::vector<Element> letters;
  Rational cost;
};

struct RegularizedLength {
  Rational value;
  // Minimal-cost factorization with the fewest letters, ties broken by
  // lexicographic generator order (table listing order).
  Factorization witness;
};

// inf { sum of delta-lengths over U-factorizations of g }, as a least-cost
// path. Throws NotGeneratedError when g is unreachable within cost_cap.
RegularizedLength regularized_length(const DeltaLengths& u, const Element& g,
                                     const Rational& cost_cap,
                                     std::size_t budget = enumeration_budget());

// l(u_i) + l(u_{i+1}) >= 1 for all adjacent letters (exact rationals).
bool adjacent_pair_bound_holds(const DeltaLengths& u, const Factorization& f);

// Checks B(e, n) subset of U^(2n-1) for n = 1..max_n, with B the open ball
// of the regularized length and U^m the set of products of at most m
// members. Exact set containment. The product set grows like |U|^(2n-1)
// before canonicalization; `budget` caps its materialized size.
struct BallInclusionReport {
  struct Row {
    int n = 0;
    std::size_t ball = 0;
    std::size_t product_set = 0;
    bool pass = true;
  };
  std::vector<Row> rows;
  bool pass = true;
};

BallInclusionReport verify_ball_inclusion(const DeltaLengths& u, int max_n,
                                          std::size_t budget = enumeration_budget());

}  // namespace cgt
