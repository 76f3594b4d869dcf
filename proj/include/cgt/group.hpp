#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cgt/element.hpp"

namespace cgt {

// A countable group with a computable canonical form per element.
// Implementations must return canonical encodings from mul/inv so that
// element equality and hashing agree with group equality.
class Group {
public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;
  virtual bool is_valid(const Element& a) const = 0;
  // A standard symmetric-closure-free generating list (inverses implied).
  virtual std::vector<Element> generators() const = 0;
  virtual std::string show(const Element& a) const { return a.str(); }

  // Throws DomainError when the encoding does not belong to this group.
  void require_valid(const Element& a, const char* context) const;
};

// Z^k with componentwise addition.
class IntegerLattice final : public Group {
public:
  explicit IntegerLattice(int rank);
  int rank() const { return rank_; }

  std::string name() const override;
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_valid(const Element& a) const override;
  std::vector<Element> generators() const override;

private:
  int rank_;
};

// Free group on `rank` letters; elements are reduced words over
// {+-1, ..., +-rank} and multiplication cancels at the seam.
class FreeGroup final : public Group {
public:
  explicit FreeGroup(int rank);
  int rank() const { return rank_; }

  // The word with the given letters, reduced.
  Element word(const std::vector<std::int64_t>& letters) const;
  Element letter(int index) const;  // index in [1, rank]

  std::string name() const override;
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_valid(const Element& a) const override;
  std::vector<Element> generators() const override;
  std::string show(const Element& a) const override;

private:
  int rank_;
};

// Discrete Heisenberg group: triples (x, y, z) composing as the
// unitriangular matrices [[1, x, z], [0, 1, y], [0, 0, 1]].
class HeisenbergGroup final : public Group {
public:
  std::string name() const override;
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_valid(const Element& a) const override;
  std::vector<Element> generators() const override;
};

// Finite group defined by its multiplication table. Elements are indices
// 0..order-1 with 0 the identity; the table must be a Latin square.
class FiniteTableGroup final : public Group {
public:
  explicit FiniteTableGroup(std::vector<std::vector<int>> table);
  static FiniteTableGroup cyclic(int order);
  int order() const { return static_cast<int>(table_.size()); }

  std::string name() const override;
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  bool is_valid(const Element& a) const override;
  std::vector<Element> generators() const override;

private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

}  // namespace cgt
