#include "cgt/regularized.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace cgt {

DeltaLengths DeltaLengths::make(const Group& g,
                                std::vector<std::pair<Element, Rational>> entries) {
  DeltaLengths d;
  d.group_ = &g;
  const Element e = g.identity();
  std::map<Element, Rational> table;
  for (auto& [elem, w] : entries) {
    g.require_valid(elem, "DeltaLengths");
    if (elem == e) {
      if (!w.is_zero()) throw DomainError("the identity must have delta-length 0");
      continue;
    }
    if (!(Rational(0) < w) || Rational(1) < w) {
      throw DomainError("delta-length of " + g.show(elem) + " must lie in (0, 1]");
    }
    const auto [it, fresh] = table.emplace(elem, w);
    if (!fresh && !(it->second == w)) {
      throw DomainError("conflicting delta-lengths for " + g.show(elem));
    }
    if (fresh) d.table_.emplace_back(elem, w);
  }
  if (d.table_.empty()) throw EmptyInputError("DeltaLengths: no non-identity members");
  for (const auto& [elem, w] : d.table_) {
    const auto it = table.find(g.inv(elem));
    if (it == table.end() || !(it->second == w)) {
      throw NonSymmetricGeneratingSetError("delta-length table is not symmetric at " +
                                           g.show(elem));
    }
  }
  return d;
}

Rational DeltaLengths::at(const Element& u) const {
  if (u == group_->identity()) return Rational(0);
  for (const auto& [elem, w] : table_) {
    if (elem == u) return w;
  }
  throw DomainError("element " + group_->show(u) + " is not in U");
}

bool DeltaLengths::contains(const Element& u) const {
  if (u == group_->identity()) return true;
  for (const auto& [elem, w] : table_) {
    if (elem == u) return true;
  }
  return false;
}

std::vector<GeneratorEntry<Rational>> DeltaLengths::entries() const {
  std::vector<GeneratorEntry<Rational>> out;
  out.reserve(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) {
    out.push_back(GeneratorEntry<Rational>{table_[i].first, table_[i].second, i});
  }
  return out;
}

namespace {

// Reconstructs the lexicographically-least minimal factorization from the
// tight-edge DAG of a finished search: edges x -> x*u with
// dist(x) + w(u) = dist(x*u). Edge costs are positive, so settle order is
// a topological order for the DAG.
Factorization lex_minimal_witness(const Group& g,
                                  const std::vector<GeneratorEntry<Rational>>& gens,
                                  const BallEnumeration<Rational>& ball,
                                  const Element& target) {
  const std::size_t n = ball.size();
  const std::size_t target_pos = ball.position.at(target);

  // Fewest tight steps from the identity to each settled element.
  constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> steps(n, unreached);
  steps[0] = 0;  // identity settles first at cost 0
  for (std::size_t i = 0; i < n; ++i) {
    if (steps[i] == unreached) continue;
    const auto& [elem, dist] = ball.items[i];
    for (const auto& s : gens) {
      const auto it = ball.position.find(g.mul(elem, s.gen));
      if (it == ball.position.end()) continue;
      if (!(ball.items[it->second].second == dist + s.weight)) continue;
      steps[it->second] = std::min(steps[it->second], steps[i] + 1);
    }
  }
  const std::size_t k = steps[target_pos];

  // reach[r] marks the elements from which the target is r tight steps away.
  std::vector<std::vector<bool>> reach(k + 1, std::vector<bool>(n, false));
  reach[0][target_pos] = true;
  for (std::size_t r = 1; r <= k; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [elem, dist] = ball.items[i];
      for (const auto& s : gens) {
        const auto it = ball.position.find(g.mul(elem, s.gen));
        if (it == ball.position.end()) continue;
        if (!(ball.items[it->second].second == dist + s.weight)) continue;
        if (reach[r - 1][it->second]) {
          reach[r][i] = true;
          break;
        }
      }
    }
  }

  // Walk forward choosing the first listed generator that stays on a
  // minimal tight path.
  Factorization out;
  out.cost = ball.items[target_pos].second;
  std::size_t at = 0;
  for (std::size_t step = 0; step < k; ++step) {
    const auto& [elem, dist] = ball.items[at];
    bool advanced = false;
    for (const auto& s : gens) {
      const auto it = ball.position.find(g.mul(elem, s.gen));
      if (it == ball.position.end()) continue;
      if (!(ball.items[it->second].second == dist + s.weight)) continue;
      if (!reach[k - step - 1][it->second]) continue;
      out.letters.push_back(s.gen);
      at = it->second;
      advanced = true;
      break;
    }
    if (!advanced) throw Error("witness reconstruction lost the tight path");
  }
  return out;
}

}  // namespace

RegularizedLength regularized_length(const DeltaLengths& u, const Element& g,
                                     const Rational& cost_cap, std::size_t budget) {
  const Group& grp = u.group();
  grp.require_valid(g, "regularized_length");
  if (!(Rational(0) < cost_cap)) {
    throw DomainError("regularized_length: cost_cap must be positive");
  }
  if (g == grp.identity()) return RegularizedLength{Rational(0), {}};

  const auto gens = u.entries();
  const auto probe = detail::ball_search<Rational>(grp, gens, cost_cap, budget, &g);
  const Rational* value = probe.find(g);
  if (!value) {
    throw NotGeneratedError("element " + grp.show(g) + " not reached within cost " +
                            cost_cap.str());
  }
  // Re-enumerate out to the exact value so the witness DAG is complete.
  const auto ball = detail::ball_search<Rational>(grp, gens, *value, budget);
  return RegularizedLength{*value, lex_minimal_witness(grp, gens, ball, g)};
}

bool adjacent_pair_bound_holds(const DeltaLengths& u, const Factorization& f) {
  for (std::size_t i = 0; i + 1 < f.letters.size(); ++i) {
    if (u.at(f.letters[i]) + u.at(f.letters[i + 1]) < Rational(1)) return false;
  }
  return true;
}

BallInclusionReport verify_ball_inclusion(const DeltaLengths& u, int max_n,
                                          std::size_t budget) {
  if (max_n < 0) throw DomainError("verify_ball_inclusion: negative max_n");
  BallInclusionReport report;
  if (max_n == 0) return report;  // vacuous

  const Group& g = u.group();
  const auto ball = detail::ball_search<Rational>(g, u.entries(), Rational(max_n),
                                                  budget);

  // products[m] = set of products of at most m members of U.
  std::vector<ElementSet> products(2 * max_n);
  products[0].insert(g.identity());
  for (int m = 1; m <= 2 * max_n - 1; ++m) {
    products[m] = products[m - 1];
    for (const Element& x : products[m - 1]) {
      for (const auto& [letter, w] : u.table()) {
        products[m].insert(g.mul(x, letter));
        if (products[m].size() > budget) {
          throw BudgetExceededError("product set exceeded budget of " +
                                    std::to_string(budget));
        }
      }
    }
  }

  for (int n = 1; n <= max_n; ++n) {
    BallInclusionReport::Row row;
    row.n = n;
    const ElementSet& stage = products[2 * n - 1];
    row.product_set = stage.size();
    // Open ball of the regularized length: dist < n, exact rationals.
    for (const auto& [elem, dist] : ball.items) {
      if (dist < Rational(n)) {
        row.ball += 1;
        if (!stage.count(elem)) row.pass = false;
      }
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace cgt
