#include "cgt/element.hpp"

namespace cgt {

std::string Element::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(data_[i]);
  }
  out += ")";
  return out;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  // FNV-1a over the canonical words, mixed per limb.
  std::uint64_t h = 1469598103934665603ull;
  for (const std::int64_t v : e.data()) {
    std::uint64_t x = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cgt
