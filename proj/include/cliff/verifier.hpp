#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliff/algebra.hpp"
#include "cliff/engine.hpp"
#include "cliff/oracle.hpp"

namespace cliff {

enum class IdentityId {
  // Products of two generators.
  vector_vector,
  vector_bivector,
  bivector_vector,
  vector_trivector,
  trivector_vector,
  vector_pseudoscalar,
  bivector_bivector,
  bivector_trivector,
  trivector_bivector,
  bivector_pseudoscalar,
  trivector_trivector,
  trivector_pseudoscalar,
  pseudoscalar_square,
  // Expansions of the double epsilon contractions.
  contraction_bivector_bivector,
  contraction_bivector_trivector_grade3,
  contraction_bivector_trivector_grade1,
  contraction_trivector_trivector_grade2,
  contraction_trivector_trivector_grade0,
  // Antisymmetrized product of four vectors.
  four_blade,
  // eps^{ABCD} eps_{EFGH} as a determinant of Kronecker deltas.
  epsilon_determinant,
  // Every ordered pair of canonical blades against the oracle.
  product_table,
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  // One letter per free index, in enumeration order.
  std::string_view letters;
  std::string_view statement;
};

const std::vector<IdentityInfo> &identity_catalog();
const IdentityInfo &info(IdentityId id);
std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

// The product identity whose check exercises a given engine branch.
// Grade pairs involving the scalar have none.
std::optional<IdentityId> identity_for(GradePair branch);

// 4^(free indices), 65536 for the determinant formula, 256 for the table.
std::size_t expected_cases(IdentityId id);

struct Counterexample {
  // Free-index assignment in enumeration order. For the product table these
  // are the canonical ordinals of the two blades.
  std::vector<int> indices;
  std::string label;
  Multivector engine;
  Multivector oracle;
};

struct IdentityReport {
  IdentityId identity{};
  RepresentationKind representation{};
  std::size_t cases_checked = 0;
  // Sorted lexicographically by index tuple.
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

// Enumerates every assignment of the identity's free indices. Each case
// compares the engine (closed form and table product) with the oracle
// (explicit matrices decomposed onto the blade basis) and records the index
// assignment of any disagreement.
IdentityReport verify_identity(IdentityId id, const Representation &rep,
                               const ProductEngine &engine = ProductEngine::instance());

IdentityReport verify_table(const Representation &rep,
                            const ProductEngine &engine = ProductEngine::instance());

std::vector<IdentityReport> verify_all(const Representation &rep,
                                       const ProductEngine &engine = ProductEngine::instance());
std::vector<IdentityReport> verify_all(const Representation &rep, std::span<const IdentityId> ids,
                                       const ProductEngine &engine = ProductEngine::instance());

} // namespace cliff
