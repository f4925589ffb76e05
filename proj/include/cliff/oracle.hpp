#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "cliff/algebra.hpp"

namespace cliff {

// a + b i with rational a, b.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational &operator+=(const GaussianRational &o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational &operator-=(const GaussianRational &o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational x, const GaussianRational &y) { return x += y; }
  friend GaussianRational operator-(GaussianRational x, const GaussianRational &y) { return x -= y; }
  friend GaussianRational operator-(const GaussianRational &x) { return {-x.re, -x.im}; }
  friend GaussianRational operator*(const GaussianRational &x, const GaussianRational &y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussianRational &, const GaussianRational &) = default;
};

// Dense 4x4 matrix over the Gaussian rationals.
class ComplexMatrix {
public:
  static constexpr std::size_t kDim = 4;

  ComplexMatrix() = default;

  static ComplexMatrix identity();

  GaussianRational &operator()(std::size_t row, std::size_t col) { return e_[row * kDim + col]; }
  const GaussianRational &operator()(std::size_t row, std::size_t col) const {
    return e_[row * kDim + col];
  }

  GaussianRational trace() const;
  ComplexMatrix adjoint() const;

  ComplexMatrix &operator+=(const ComplexMatrix &o);
  ComplexMatrix &operator-=(const ComplexMatrix &o);
  ComplexMatrix &operator*=(const Rational &c);

  friend ComplexMatrix operator+(ComplexMatrix x, const ComplexMatrix &y) { return x += y; }
  friend ComplexMatrix operator-(ComplexMatrix x, const ComplexMatrix &y) { return x -= y; }
  friend ComplexMatrix operator-(ComplexMatrix x) { return x *= Rational(-1); }
  friend ComplexMatrix operator*(const Rational &c, ComplexMatrix x) { return x *= c; }
  friend ComplexMatrix operator*(const ComplexMatrix &x, const ComplexMatrix &y);
  friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

private:
  std::array<GaussianRational, kDim * kDim> e_{};
};

// trace(x * y) without forming the product.
GaussianRational trace_of_product(const ComplexMatrix &x, const ComplexMatrix &y);

enum class RepresentationKind { standard, chiral };

std::string_view to_string(RepresentationKind kind);
std::optional<RepresentationKind> parse_representation(std::string_view name);

// Raised when a matrix is not a real combination of the 16 blade matrices.
class DecompositionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A concrete realization of g^0..g^3 together with the blade matrices built
// from it. Construction checks g^a g^b + g^b g^a = 2 eta^{ab} I, that g^0 is
// Hermitian and that g^1..g^3 are anti-Hermitian; it throws
// std::invalid_argument otherwise.
class Representation {
public:
  Representation(RepresentationKind kind, const std::array<ComplexMatrix, 4> &generators);

  // Dirac-Pauli: g^0 = diag(1, 1, -1, -1), g^k = [[0, s_k], [-s_k, 0]].
  static const Representation &standard();
  // Weyl: g^0 = [[0, 1], [1, 0]], g^k as in the standard representation.
  static const Representation &chiral();
  static const Representation &get(RepresentationKind kind);

  RepresentationKind kind() const { return kind_; }

  const ComplexMatrix &dirac_matrix(TetradIndex a) const { return generators_[a.value()]; }

  // (1/n!) sum over permutations of sign * g^{i_p1} ... g^{i_pn}, evaluated
  // literally for any tuple of length 1..4 (repeats allowed).
  ComplexMatrix bracket_matrix(std::span<const TetradIndex> indices) const;
  ComplexMatrix bracket_matrix(std::initializer_list<TetradIndex> indices) const {
    return bracket_matrix(std::span(indices.begin(), indices.size()));
  }

  // Identity, g^A, g^[AB], g^[ABC], or the ordered product g^0 g^1 g^2 g^3.
  const ComplexMatrix &blade_matrix(Blade b) const { return blades_[b.ordinal()]; }
  const ComplexMatrix &pseudoscalar_matrix() const { return blade_matrix(Blade::pseudoscalar()); }

  // trace(B^2), computed from the matrices.
  const Rational &normalizer(Blade b) const { return normalizers_[b.ordinal()]; }

  // Coefficients by trace projection, followed by a residual check.
  Multivector decompose(const ComplexMatrix &m) const;

  Multivector oracle_blade_product(Blade a, Blade b) const {
    return decompose(blade_matrix(a) * blade_matrix(b));
  }

private:
  static ComplexMatrix alternating_sum(std::span<const ComplexMatrix, 4> gens,
                                       std::span<const TetradIndex> indices);
  static std::size_t cache_slot(std::span<const TetradIndex> indices);

  RepresentationKind kind_;
  std::array<ComplexMatrix, 4> generators_;
  // Bracket matrices for every tuple of length 1..3: 4 + 16 + 64 slots.
  std::array<ComplexMatrix, 84> bracket_cache_;
  std::array<ComplexMatrix, Blade::kCount> blades_;
  std::array<Rational, Blade::kCount> normalizers_;
};

} // namespace cliff
