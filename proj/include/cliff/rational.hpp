#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cliff {

// Exact rational over 64-bit integers, always in lowest terms with a positive
// denominator. Arithmetic that would overflow throws std::overflow_error.
class Rational {
public:
  constexpr Rational() = default;
  // NOLINTNEXTLINE(google-explicit-constructor): integers promote freely.
  constexpr Rational(std::int64_t value) : num_(value) {}
  Rational(std::int64_t numerator, std::int64_t denominator);

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a);

  friend constexpr bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational &r);

// Accepts an optional leading '-', digits, and an optional "/q" with q > 0.
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

} // namespace cliff
