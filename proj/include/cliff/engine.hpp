#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>

#include "cliff/algebra.hpp"

namespace cliff {

// Dispatch key of the product table. Grade 4 always means g5.
struct GradePair {
  int left = 0;
  int right = 0;
  constexpr auto operator<=>(const GradePair &) const = default;
};

// Negates every result of one dispatch branch. Exists so that tests can
// confirm the verifier is able to fail.
struct FaultInjection {
  std::optional<GradePair> negate_branch;
};

// Symbolic product of two generators, one closed-form branch per grade pair.
//
// closed_form() evaluates a branch for arbitrary (possibly repeated or
// unsorted) index tuples; blade_product() reads a 16x16 table of those
// results on canonical blades, built once in the constructor.
class ProductEngine {
public:
  ProductEngine() : ProductEngine(FaultInjection{}) {}
  explicit ProductEngine(FaultInjection fault);

  // Shared fault-free engine.
  static const ProductEngine &instance();

  // Right-hand side for g^[left...] g^[right...]. For grades 1..3 the tuple
  // length must equal the grade; grades 0 and 4 take an empty tuple.
  // Throws InvalidArity otherwise.
  Multivector closed_form(GradePair grades, std::span<const TetradIndex> left,
                          std::span<const TetradIndex> right) const;

  const Multivector &blade_product(Blade a, Blade b) const {
    return table_[a.ordinal()][b.ordinal()];
  }

  Multivector product(const Multivector &x, const Multivector &y) const;

  // g^a g^b + g^b g^a, computed through product().
  Multivector anticommutator(TetradIndex a, TetradIndex b) const;

  const FaultInjection &fault() const { return fault_; }

private:
  FaultInjection fault_;
  std::array<std::array<Multivector, Blade::kCount>, Blade::kCount> table_;
};

inline const Multivector &blade_product(Blade a, Blade b) {
  return ProductEngine::instance().blade_product(a, b);
}

inline Multivector product(const Multivector &x, const Multivector &y) {
  return ProductEngine::instance().product(x, y);
}

inline Multivector anticommutator(TetradIndex a, TetradIndex b) {
  return ProductEngine::instance().anticommutator(a, b);
}

// g^[e} g^a g^b g^{c] = -eps^{eabc} g5, with the fully raised pseudo-tensor.
Multivector four_blade_reduce(TetradIndex e, TetradIndex a, TetradIndex b, TetradIndex c);

} // namespace cliff
