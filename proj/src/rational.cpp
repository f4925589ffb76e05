#include "cliff/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace cliff {

namespace {

__extension__ typedef __int128 Wide;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) {
    a = -a;
  }
  if (b < 0) {
    b = -b;
  }
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < -INT64_MAX) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

// Reduces num/den and stores it; den != 0.
void assign(Wide num, Wide den, std::int64_t &out_num, std::int64_t &out_den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  out_num = narrow(num);
  out_den = narrow(den);
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("zero denominator");
  }
  assign(numerator, denominator, num_, den_);
}

Rational &Rational::operator+=(const Rational &o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = narrow(Wide(num_) + o.num_);
    return *this;
  }
  assign(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_, num_, den_);
  return *this;
}

Rational &Rational::operator-=(const Rational &o) { return *this += -o; }

Rational &Rational::operator*=(const Rational &o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ = narrow(Wide(num_) * o.num_);
    return *this;
  }
  assign(Wide(num_) * o.num_, Wide(den_) * o.den_, num_, den_);
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.num_ == 0) {
    throw std::domain_error("division by zero");
  }
  assign(Wide(num_) * o.den_, Wide(den_) * o.num_, num_, den_);
  return *this;
}

Rational operator-(const Rational &a) {
  Rational out = a;
  out.num_ = narrow(-Wide(a.num_));
  return out;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::string to_string(const Rational &r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += '/';
    out += std::to_string(r.denominator());
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  const auto *first = digits.data();
  const auto *last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last || digits.front() == '-' ||
      digits.front() == '+') {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
  }
  return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::int64_t num = parse_int(body.substr(0, slash), text);
  std::int64_t den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(body.substr(slash + 1), text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
    }
  }
  return Rational(negative ? -num : num, den);
}

} // namespace cliff
