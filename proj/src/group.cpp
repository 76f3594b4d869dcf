#include "cgt/group.hpp"

#include <cstdlib>

#include "cgt/errors.hpp"

namespace cgt {

void Group::require_valid(const Element& a, const char* context) const {
  if (!is_valid(a)) {
    throw DomainError(std::string(context) + ": element " + a.str() +
                      " does not belong to " + name());
  }
}

// ---------------------------------------------------------------- lattice

IntegerLattice::IntegerLattice(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("IntegerLattice rank must be >= 1");
}

std::string IntegerLattice::name() const {
  return "Z^" + std::to_string(rank_);
}

Element IntegerLattice::identity() const {
  return Element(std::vector<std::int64_t>(rank_, 0));
}

Element IntegerLattice::mul(const Element& a, const Element& b) const {
  std::vector<std::int64_t> out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = a[i] + b[i];
  return Element(std::move(out));
}

Element IntegerLattice::inv(const Element& a) const {
  std::vector<std::int64_t> out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = -a[i];
  return Element(std::move(out));
}

bool IntegerLattice::is_valid(const Element& a) const {
  return a.size() == static_cast<std::size_t>(rank_);
}

std::vector<Element> IntegerLattice::generators() const {
  std::vector<Element> gens;
  for (int i = 0; i < rank_; ++i) {
    std::vector<std::int64_t> v(rank_, 0);
    v[i] = 1;
    gens.push_back(Element(std::move(v)));
  }
  return gens;
}

// ------------------------------------------------------------- free group

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("FreeGroup rank must be >= 1");
}

Element FreeGroup::word(const std::vector<std::int64_t>& letters) const {
  std::vector<std::int64_t> out;
  out.reserve(letters.size());
  for (const std::int64_t l : letters) {
    if (l == 0 || std::llabs(l) > rank_) {
      throw DomainError("FreeGroup letter out of range");
    }
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Element(std::move(out));
}

Element FreeGroup::letter(int index) const {
  if (index < 1 || index > rank_) throw DomainError("FreeGroup letter index");
  return Element({index});
}

std::string FreeGroup::name() const { return "F_" + std::to_string(rank_); }

Element FreeGroup::identity() const { return Element(std::vector<std::int64_t>{}); }

Element FreeGroup::mul(const Element& a, const Element& b) const {
  // Both inputs are reduced; cancellation can only happen at the seam.
  std::vector<std::int64_t> out(a.data().begin(), a.data().end());
  for (const std::int64_t l : b.data()) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Element(std::move(out));
}

Element FreeGroup::inv(const Element& a) const {
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = -a[a.size() - 1 - i];
  }
  return Element(std::move(out));
}

bool FreeGroup::is_valid(const Element& a) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0 || std::llabs(a[i]) > rank_) return false;
    if (i + 1 < a.size() && a[i + 1] == -a[i]) return false;  // not reduced
  }
  return true;
}

std::vector<Element> FreeGroup::generators() const {
  std::vector<Element> gens;
  for (int i = 1; i <= rank_; ++i) gens.push_back(Element({i}));
  return gens;
}

std::string FreeGroup::show(const Element& a) const {
  if (a.size() == 0) return "e";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += "*";
    const std::int64_t l = a[i];
    const std::int64_t idx = l > 0 ? l : -l;
    if (rank_ <= 26) {
      out += static_cast<char>('a' + idx - 1);
    } else {
      out += "x" + std::to_string(idx);
    }
    if (l < 0) out += "^-1";
  }
  return out;
}

// ------------------------------------------------------------- Heisenberg

std::string HeisenbergGroup::name() const { return "H_3(Z)"; }

Element HeisenbergGroup::identity() const { return Element({0, 0, 0}); }

Element HeisenbergGroup::mul(const Element& a, const Element& b) const {
  // (x, y, z) * (x', y', z') = (x + x', y + y', z + z' + x * y')
  return Element({a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]});
}

Element HeisenbergGroup::inv(const Element& a) const {
  return Element({-a[0], -a[1], -a[2] + a[0] * a[1]});
}

bool HeisenbergGroup::is_valid(const Element& a) const { return a.size() == 3; }

std::vector<Element> HeisenbergGroup::generators() const {
  return {Element({1, 0, 0}), Element({0, 1, 0})};
}

// ------------------------------------------------------------ table group

FiniteTableGroup::FiniteTableGroup(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n < 1) throw DomainError("FiniteTableGroup: empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError("FiniteTableGroup: table is not square");
    }
    for (const int v : row) {
      if (v < 0 || v >= n) throw DomainError("FiniteTableGroup: entry out of range");
    }
  }
  // 0 must act as identity and every row/column must be a permutation.
  for (int i = 0; i < n; ++i) {
    if (table_[0][i] != i || table_[i][0] != i) {
      throw DomainError("FiniteTableGroup: index 0 is not an identity");
    }
  }
  inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table_[i][j]] || seen_col[table_[j][i]]) {
        throw DomainError("FiniteTableGroup: table is not a Latin square");
      }
      seen_row[table_[i][j]] = true;
      seen_col[table_[j][i]] = true;
      if (table_[i][j] == 0) inverse_[i] = j;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (inverse_[i] < 0 || table_[inverse_[i]][i] != 0) {
      throw DomainError("FiniteTableGroup: missing two-sided inverse");
    }
  }
}

FiniteTableGroup FiniteTableGroup::cyclic(int order) {
  if (order < 1) throw DomainError("cyclic order must be >= 1");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) table[i][j] = (i + j) % order;
  }
  return FiniteTableGroup(std::move(table));
}

std::string FiniteTableGroup::name() const {
  return "table-group(" + std::to_string(order()) + ")";
}

Element FiniteTableGroup::identity() const { return Element({0}); }

Element FiniteTableGroup::mul(const Element& a, const Element& b) const {
  return Element({table_[a[0]][b[0]]});
}

Element FiniteTableGroup::inv(const Element& a) const {
  return Element({inverse_[a[0]]});
}

bool FiniteTableGroup::is_valid(const Element& a) const {
  return a.size() == 1 && a[0] >= 0 && a[0] < order();
}

std::vector<Element> FiniteTableGroup::generators() const {
  // All non-identity elements; always a generating set.
  std::vector<Element> gens;
  for (int i = 1; i < order(); ++i) gens.push_back(Element({i}));
  return gens;
}

}  // namespace cgt
