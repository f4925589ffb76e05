#include <gtest/gtest.h>

#include "printers.hpp"
#include "cliff/oracle.hpp"

namespace cliff {
namespace {

TetradIndex ix(int v) { return TetradIndex(v); }

GaussianRational re(Rational r) { return {r, 0}; }
GaussianRational im(Rational r) { return {0, r}; }

const auto kBoth = ::testing::Values(RepresentationKind::standard, RepresentationKind::chiral);
auto rep_name = [](const auto &info) { return std::string(to_string(info.param)); };

TEST(ComplexMatrix, Basics) {
  const auto one = ComplexMatrix::identity();
  EXPECT_EQ(one.trace(), re(4));
  EXPECT_EQ(one * one, one);
  ComplexMatrix m;
  m(0, 1) = im(2);
  EXPECT_EQ(m.adjoint()(1, 0), im(-2));
  EXPECT_EQ(trace_of_product(m, m.adjoint()), (m * m.adjoint()).trace());
}

TEST(StandardRepresentation, DiracMatrices) {
  const auto &rep = Representation::standard();
  const auto &g0 = rep.dirac_matrix(ix(0));
  EXPECT_EQ(g0(0, 0), re(1));
  EXPECT_EQ(g0(2, 2), re(-1));
  const auto &g2 = rep.dirac_matrix(ix(2));
  // s_y in the upper-right block, -s_y in the lower-left.
  EXPECT_EQ(g2(0, 3), im(-1));
  EXPECT_EQ(g2(1, 2), im(1));
  EXPECT_EQ(g2(3, 0), im(-1));
}

TEST(StandardRepresentation, PseudoscalarMatrix) {
  // g0 g1 g2 g3 = -i [[0, 1], [1, 0]] in the Dirac-Pauli basis.
  const auto &g5 = Representation::standard().pseudoscalar_matrix();
  ComplexMatrix expected;
  expected(0, 2) = im(-1);
  expected(1, 3) = im(-1);
  expected(2, 0) = im(-1);
  expected(3, 1) = im(-1);
  EXPECT_EQ(g5, expected);
}

TEST(StandardRepresentation, DecomposeExamples) {
  const auto &rep = Representation::standard();
  const auto m = Rational(3) * rep.blade_matrix(Blade::bivector(ix(1), ix(3))) +
                 Rational(-1, 2) * ComplexMatrix::identity();
  Multivector expected(Blade::bivector(ix(1), ix(3)), 3);
  expected.add_term(Blade::scalar(), Rational(-1, 2));
  EXPECT_EQ(rep.decompose(m), expected);
  EXPECT_TRUE(rep.decompose(ComplexMatrix{}).is_zero());
}

TEST(StandardRepresentation, DecomposeRejectsNonRealCombinations) {
  const auto &rep = Representation::standard();
  ComplexMatrix i_identity;
  for (std::size_t k = 0; k < 4; ++k) {
    i_identity(k, k) = im(1);
  }
  EXPECT_THROW(rep.decompose(i_identity), DecompositionError);
}

TEST(ChiralRepresentation, VectorTimesPseudoscalar) {
  EXPECT_EQ(Representation::chiral().oracle_blade_product(Blade::vector(ix(0)), Blade::pseudoscalar()),
            Multivector(Blade::trivector(ix(1), ix(2), ix(3))));
  EXPECT_EQ(Representation::chiral().oracle_blade_product(Blade::pseudoscalar(), Blade::pseudoscalar()),
            Multivector::scalar(-1));
}

TEST(Representation, RejectsInvalidGenerators) {
  auto gens = std::array<ComplexMatrix, 4>{
      Representation::standard().dirac_matrix(ix(0)), Representation::standard().dirac_matrix(ix(1)),
      Representation::standard().dirac_matrix(ix(2)), Representation::standard().dirac_matrix(ix(3))};
  gens[3] = gens[2];
  EXPECT_THROW(Representation(RepresentationKind::standard, gens), std::invalid_argument);
}

TEST(Representation, NamesRoundTrip) {
  EXPECT_EQ(parse_representation("chiral"), RepresentationKind::chiral);
  EXPECT_EQ(parse_representation(to_string(RepresentationKind::standard)),
            RepresentationKind::standard);
  EXPECT_FALSE(parse_representation("majorana").has_value());
}

class EachRepresentation : public ::testing::TestWithParam<RepresentationKind> {};

TEST_P(EachRepresentation, CliffordRelation) {
  const auto &rep = Representation::get(GetParam());
  for (auto a : kTetradIndices) {
    for (auto b : kTetradIndices) {
      const auto ab = rep.dirac_matrix(a) * rep.dirac_matrix(b);
      const auto ba = rep.dirac_matrix(b) * rep.dirac_matrix(a);
      EXPECT_EQ(ab + ba, Rational(2 * metric(a, b)) * ComplexMatrix::identity());
    }
  }
}

TEST_P(EachRepresentation, BladesAreTraceOrthogonal) {
  const auto &rep = Representation::get(GetParam());
  for (auto a : Blade::all()) {
    for (auto b : Blade::all()) {
      const auto t = trace_of_product(rep.blade_matrix(a), rep.blade_matrix(b));
      if (a == b) {
        EXPECT_EQ(t, re(rep.normalizer(a)));
        EXPECT_NE(rep.normalizer(a), 0);
      } else {
        EXPECT_TRUE(t.is_zero()) << to_string(a) << ", " << to_string(b);
      }
    }
  }
}

TEST_P(EachRepresentation, NormalizersArePlusOrMinusFour) {
  const auto &rep = Representation::get(GetParam());
  for (auto b : Blade::all()) {
    EXPECT_TRUE(rep.normalizer(b) == 4 || rep.normalizer(b) == -4) << to_string(b);
  }
}

TEST_P(EachRepresentation, OnlyTheIdentityHasTrace) {
  const auto &rep = Representation::get(GetParam());
  for (auto b : Blade::all()) {
    if (b.grade() == 0) {
      EXPECT_EQ(rep.blade_matrix(b).trace(), re(4));
    } else {
      EXPECT_TRUE(rep.blade_matrix(b).trace().is_zero()) << to_string(b);
    }
  }
}

TEST_P(EachRepresentation, BracketMatchesOrderedProductForDistinctIndices) {
  const auto &rep = Representation::get(GetParam());
  EXPECT_EQ(rep.bracket_matrix({ix(0), ix(1)}), rep.dirac_matrix(ix(0)) * rep.dirac_matrix(ix(1)));
  EXPECT_EQ(rep.bracket_matrix({ix(2), ix(1), ix(3)}),
            rep.dirac_matrix(ix(2)) * rep.dirac_matrix(ix(1)) * rep.dirac_matrix(ix(3)));
  EXPECT_EQ(rep.bracket_matrix({ix(0), ix(1), ix(2), ix(3)}), rep.pseudoscalar_matrix());
  EXPECT_EQ(rep.bracket_matrix({ix(1), ix(1)}), ComplexMatrix{});
}

TEST_P(EachRepresentation, DecomposeInvertsBladeMatrices) {
  const auto &rep = Representation::get(GetParam());
  for (auto b : Blade::all()) {
    EXPECT_EQ(rep.decompose(rep.blade_matrix(b)), Multivector(b, 1));
  }
}

TEST_P(EachRepresentation, AgreesWithStandardOnEveryProduct) {
  const auto &rep = Representation::get(GetParam());
  const auto &standard = Representation::standard();
  for (auto a : Blade::all()) {
    for (auto b : Blade::all()) {
      EXPECT_EQ(rep.oracle_blade_product(a, b), standard.oracle_blade_product(a, b));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothRepresentations, EachRepresentation, kBoth, rep_name);

} // namespace
} // namespace cliff
