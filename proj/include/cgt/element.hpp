#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cgt {

// Canonical encoding of a group element. The owning Group decides the
// interpretation (coordinate tuple, reduced word, table index, ...).
// Equality and hashing act on the canonical form, so elements can key
// sparse functions on the group.
class Element {
public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> data) : data_(std::move(data)) {}
  static Element scalar(std::int64_t v) { return Element({v}); }

  std::span<const std::int64_t> data() const { return data_; }
  std::size_t size() const { return data_.size(); }
  std::int64_t operator[](std::size_t i) const { return data_[i]; }

  std::string str() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

private:
  std::vector<std::int64_t> data_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

template <class V>
using ElementMap = std::unordered_map<Element, V, ElementHash>;
using ElementSet = std::unordered_set<Element, ElementHash>;

}  // namespace cgt
