#include "cgt/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "cgt/errors.hpp"

namespace cgt {
namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v, const char* ctx) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError(std::string("rational overflow in ") + ctx);
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Reduced {
  std::int64_t num;
  std::int64_t den;
};

Reduced normalized(i128 num, i128 den, const char* ctx) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = num == 0 ? den : gcd128(num, den);
  return Reduced{checked_narrow(num / g, ctx), checked_narrow(den / g, ctx)};
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  const Reduced r = normalized(num, den, "constructor");
  num_ = r.num;
  den_ = r.den;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return DomainError("cannot parse rational from '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();

  const auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw bad();
    return v;
  };

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) throw bad();
    bool negative = !head.empty() && head.front() == '-';
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
      head.remove_prefix(1);
    }
    const std::int64_t whole = head.empty() ? 0 : parse_int(head);
    const std::int64_t digits = parse_int(frac);
    if (whole < 0 || digits < 0) throw bad();
    i128 den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    i128 num = static_cast<i128>(whole) * den + digits;
    if (negative) num = -num;
    { const Reduced r = normalized(num, den, "parse"); return Rational(r.num, r.den); }
  }
  return Rational(parse_int(text));
}

Rational operator+(const Rational& a, const Rational& b) {
  const i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  const i128 den = static_cast<i128>(a.den_) * b.den_;
  { const Reduced r = normalized(num, den, "operator+"); return Rational(r.num, r.den); }
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const i128 num = static_cast<i128>(a.num_) * b.num_;
  const i128 den = static_cast<i128>(a.den_) * b.den_;
  { const Reduced r = normalized(num, den, "operator*"); return Rational(r.num, r.den); }
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace cgt
