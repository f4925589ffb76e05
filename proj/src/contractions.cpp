#include "cliff/contractions.hpp"

namespace cliff::contraction {

namespace {

constexpr auto kUUUU = slots("uuuu");
constexpr auto kUUDU = slots("uudu");
constexpr auto kUUDD = slots("uudd");
constexpr auto kUDDD = slots("uddd");
constexpr auto kUUUD = slots("uuud");

void add_bracket(Multivector &acc, const Rational &coeff, std::initializer_list<TetradIndex> idx) {
  if (coeff == 0) {
    return;
  }
  const auto canon = canonicalize_indices(std::span(idx.begin(), idx.size()));
  if (canon.sign != 0) {
    acc.add_term(*canon.blade, coeff * canon.sign);
  }
}

} // namespace

Multivector bivector_bivector(TetradIndex a, TetradIndex b, TetradIndex d, TetradIndex e) {
  Multivector out;
  for (auto f : kTetradIndices) {
    for (auto g : kTetradIndices) {
      int sum = 0;
      for (auto h : kTetradIndices) {
        sum += epsilon_pseudo(kUUDU, {a, b, f, h}) * epsilon_pseudo(kUUDD, {d, e, g, h}) -
               epsilon_pseudo(kUUDU, {a, b, g, h}) * epsilon_pseudo(kUUDD, {d, e, f, h});
      }
      add_bracket(out, Rational(sum, 2), {f, g});
    }
  }
  return out;
}

Multivector bivector_trivector_grade3(TetradIndex d, TetradIndex e, TetradIndex a, TetradIndex b,
                                      TetradIndex c) {
  const int upper_d = epsilon_pseudo(kUUUU, {d, a, b, c});
  const int upper_e = epsilon_pseudo(kUUUU, {e, a, b, c});
  Multivector out;
  if (upper_d == 0 && upper_e == 0) {
    return out;
  }
  for (auto f : kTetradIndices) {
    for (auto g : kTetradIndices) {
      for (auto h : kTetradIndices) {
        const int sum = upper_d * epsilon_pseudo(kUDDD, {e, f, g, h}) -
                        upper_e * epsilon_pseudo(kUDDD, {d, f, g, h});
        add_bracket(out, Rational(sum, 6), {f, g, h});
      }
    }
  }
  return out;
}

Multivector bivector_trivector_grade1(TetradIndex a, TetradIndex b, TetradIndex c, TetradIndex d,
                                      TetradIndex e) {
  Multivector out;
  for (auto h : kTetradIndices) {
    int sum = 0;
    for (auto f : kTetradIndices) {
      sum += epsilon_pseudo(kUUUU, {a, b, c, f}) * epsilon_pseudo(kUUDD, {d, e, h, f});
    }
    add_bracket(out, Rational(sum), {h});
  }
  return out;
}

Multivector trivector_trivector_grade2(TetradIndex a, TetradIndex b, TetradIndex c, TetradIndex h,
                                       TetradIndex f, TetradIndex g) {
  Multivector out;
  for (auto d : kTetradIndices) {
    for (auto e : kTetradIndices) {
      const int sum = epsilon_pseudo(kUUUD, {a, b, c, d}) * epsilon_pseudo(kUUUD, {h, f, g, e}) -
                      epsilon_pseudo(kUUUD, {a, b, c, e}) * epsilon_pseudo(kUUUD, {h, f, g, d});
      add_bracket(out, Rational(sum, 2), {e, d});
    }
  }
  return out;
}

Rational trivector_trivector_grade0(TetradIndex h, TetradIndex f, TetradIndex g, TetradIndex a,
                                    TetradIndex b, TetradIndex c) {
  int sum = 0;
  for (auto d : kTetradIndices) {
    sum += epsilon_pseudo(kUUUU, {h, f, g, d}) * epsilon_pseudo(kUUUD, {a, b, c, d});
  }
  return Rational(sum);
}

} // namespace cliff::contraction
