#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "cliff/rational.hpp"

namespace cliff {

// ---------------------------------------------------------------------------
// Tetrad indices and the flat metric diag(1, -1, -1, -1)
// ---------------------------------------------------------------------------

class TetradIndex {
public:
  constexpr TetradIndex() = default;
  constexpr explicit TetradIndex(int value) : value_(value) {
    if (value < 0 || value > 3) {
      throw std::out_of_range("tetrad index must be in 0..3, got " + std::to_string(value));
    }
  }

  constexpr int value() const { return value_; }
  constexpr auto operator<=>(const TetradIndex &) const = default;

private:
  int value_ = 0;
};

inline constexpr std::array<TetradIndex, 4> kTetradIndices{TetradIndex{0}, TetradIndex{1},
                                                           TetradIndex{2}, TetradIndex{3}};

using IndexQuad = std::array<TetradIndex, 4>;

struct Metric {
  static constexpr int component(TetradIndex a, TetradIndex b) {
    if (a != b) {
      return 0;
    }
    return a.value() == 0 ? 1 : -1;
  }

  static constexpr int determinant() {
    int det = 1;
    for (auto a : kTetradIndices) {
      det *= component(a, a);
    }
    return det;
  }
};

constexpr int metric(TetradIndex a, TetradIndex b) { return Metric::component(a, b); }

// ---------------------------------------------------------------------------
// Blades: the 16 canonical generators I, g^A, g^[AB], g^[ABC], g5
// ---------------------------------------------------------------------------

class Blade {
public:
  static constexpr std::size_t kCount = 16;

  constexpr Blade() = default;

  static Blade scalar() { return Blade(0); }
  static Blade vector(TetradIndex a);
  static Blade bivector(TetradIndex a, TetradIndex b);
  static Blade trivector(TetradIndex a, TetradIndex b, TetradIndex c);
  // The ordered product g^0 g^1 g^2 g^3.
  static Blade pseudoscalar() { return Blade(15); }

  // Throws std::invalid_argument unless the indices are strictly ascending
  // and there are at most four of them.
  static Blade from_ascending(std::span<const TetradIndex> indices);
  static Blade from_ordinal(std::size_t ordinal);

  // All blades in canonical order: grade ascending, then lexicographic.
  static const std::array<Blade, kCount> &all();

  int grade() const;
  // Ascending indices; the pseudoscalar reports (0, 1, 2, 3).
  std::span<const TetradIndex> indices() const;
  // Position in canonical order.
  std::size_t ordinal() const { return ordinal_; }

  constexpr auto operator<=>(const Blade &) const = default;

private:
  constexpr explicit Blade(std::uint8_t ordinal) : ordinal_(ordinal) {}
  std::uint8_t ordinal_ = 0;
};

std::string to_string(Blade b);

// ---------------------------------------------------------------------------
// Antisymmetrized index tuples and the Levi-Civita machinery
// ---------------------------------------------------------------------------

class InvalidArity : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct CanonicalIndices {
  int sign = 0;               // -1, 0 or +1
  std::optional<Blade> blade; // empty iff sign == 0
};

// Sorts an index tuple of length 1..4. A repeated index gives sign 0,
// otherwise sign is the parity of the sorting permutation.
CanonicalIndices canonicalize_indices(std::span<const TetradIndex> indices);

// Totally antisymmetric symbol with value +1 on (0, 1, 2, 3). Not a tensor.
int epsilon_symbol(const IndexQuad &indices);
inline int epsilon_symbol(TetradIndex a, TetradIndex b, TetradIndex c, TetradIndex d) {
  return epsilon_symbol(IndexQuad{a, b, c, d});
}

// true marks an upper slot.
using RaisedSlots = std::array<bool, 4>;

// Spelling helper: slots("uudd") marks the first two slots as raised.
constexpr RaisedSlots slots(const char (&pattern)[5]) {
  RaisedSlots out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (pattern[i] != 'u' && pattern[i] != 'd') {
      throw std::invalid_argument("slot pattern uses only 'u' and 'd'");
    }
    out[i] = pattern[i] == 'u';
  }
  return out;
}

// Pseudo-tensor obtained by identifying its all-lower components with the
// symbol and raising the flagged slots with the metric. Fully raised it is
// the negative of the symbol.
int epsilon_pseudo(const RaisedSlots &raised, const IndexQuad &indices);

// Determinant of the 4x4 Kronecker-delta matrix delta^{upper[col]}_{lower[row]}.
int epsilon_det_product(const IndexQuad &upper, const IndexQuad &lower);

// ---------------------------------------------------------------------------
// Multivectors with exact rational coefficients
// ---------------------------------------------------------------------------

class Multivector {
public:
  using Terms = std::map<Blade, Rational>;

  Multivector() = default;
  explicit Multivector(Blade b, Rational coefficient = Rational(1));

  static Multivector scalar(Rational value) { return Multivector(Blade::scalar(), value); }

  Rational coefficient(Blade b) const;
  // Zero coefficients are never stored.
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Blade b, const Rational &coefficient);

  Multivector &operator+=(const Multivector &other);
  Multivector &operator-=(const Multivector &other);
  Multivector &operator*=(const Rational &factor);

  friend Multivector operator+(Multivector lhs, const Multivector &rhs) { return lhs += rhs; }
  friend Multivector operator-(Multivector lhs, const Multivector &rhs) { return lhs -= rhs; }
  friend Multivector operator-(Multivector x) { return x *= Rational(-1); }
  friend Multivector operator*(const Rational &c, Multivector x) { return x *= c; }
  friend Multivector operator*(Multivector x, const Rational &c) { return x *= c; }
  friend bool operator==(const Multivector &, const Multivector &) = default;

private:
  Terms terms_;
};

// g^[i...] for an arbitrary index tuple of length 1..4, as a signed blade
// (zero when an index repeats).
Multivector bracket(std::span<const TetradIndex> indices);
inline Multivector bracket(std::initializer_list<TetradIndex> indices) {
  return bracket(std::span<const TetradIndex>(indices.begin(), indices.size()));
}

// Terse human-readable form, e.g. "-1 + 1/2*g(0,1)"; used in diagnostics.
std::string to_string(const Multivector &mv);

} // namespace cliff
