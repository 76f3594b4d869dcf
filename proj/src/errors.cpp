#include "cgt/errors.hpp"

#include <cstdlib>
#include <string>

namespace cgt {

std::size_t enumeration_budget() {
  static const std::size_t budget = [] {
    if (const char* env = std::getenv("COARSE_METRIC_BUDGET")) {
      try {
        const long long v = std::stoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        // fall through to the default on unparsable values
      }
    }
    return static_cast<std::size_t>(4'000'000);
  }();
  return budget;
}

}  // namespace cgt
