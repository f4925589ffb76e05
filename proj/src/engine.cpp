#include "cliff/engine.hpp"

#include <string>

#include "cliff/contractions.hpp"

namespace cliff {

namespace {

using T = TetradIndex;

constexpr auto kUUUU = slots("uuuu");
constexpr auto kUDDD = slots("uddd");
constexpr auto kUUDD = slots("uudd");
constexpr auto kDUUU = slots("duuu");

Multivector g5(Rational c = Rational(1)) { return Multivector(Blade::pseudoscalar(), c); }

Multivector unit(Rational c = Rational(1)) { return Multivector::scalar(c); }

Multivector vec(T a) { return Multivector(Blade::vector(a)); }

Rational r(int v) { return Rational(v); }

// g^a g^b
Multivector vector_vector(T a, T b) { return bracket({a, b}) + unit(metric(a, b)); }

// g^e g^[ab]
Multivector vector_bivector(T e, T a, T b) {
  return bracket({e, a, b}) + r(metric(e, a)) * vec(b) - r(metric(e, b)) * vec(a);
}

// g^[ab] g^e
Multivector bivector_vector(T a, T b, T e) {
  return bracket({e, a, b}) - r(metric(e, a)) * vec(b) + r(metric(e, b)) * vec(a);
}

Multivector vector_trivector_common(T e, T a, T b, T c) {
  return r(metric(e, a)) * bracket({b, c}) + r(metric(e, b)) * bracket({c, a}) +
         r(metric(e, c)) * bracket({a, b});
}

// g^e g^[abc]
Multivector vector_trivector(T e, T a, T b, T c) {
  return g5(-epsilon_pseudo(kUUUU, {e, a, b, c})) + vector_trivector_common(e, a, b, c);
}

// g^[abc] g^e
Multivector trivector_vector(T a, T b, T c, T e) {
  return g5(epsilon_pseudo(kUUUU, {e, a, b, c})) + vector_trivector_common(e, a, b, c);
}

// g^e g5 = (1/3!) eps^e_{abc} g^[abc]
Multivector vector_pseudoscalar(T e) {
  Multivector out;
  for (auto a : kTetradIndices) {
    for (auto b : kTetradIndices) {
      for (auto c : kTetradIndices) {
        const int eps = epsilon_pseudo(kUDDD, {e, a, b, c});
        if (eps != 0) {
          out += Rational(eps, 6) * bracket({a, b, c});
        }
      }
    }
  }
  return out;
}

// g5 g^e = -g^e g5
Multivector pseudoscalar_vector(T e) { return -vector_pseudoscalar(e); }

// g^[ab] g^[de]
Multivector bivector_bivector(T a, T b, T d, T e) {
  return g5(-epsilon_pseudo(kUUUU, {d, e, a, b})) + contraction::bivector_bivector(a, b, d, e) +
         unit(metric(b, d) * metric(a, e) - metric(d, a) * metric(b, e));
}

// g^[de] g^[abc]
Multivector bivector_trivector(T d, T e, T a, T b, T c) {
  return contraction::bivector_trivector_grade3(d, e, a, b, c) +
         contraction::bivector_trivector_grade1(a, b, c, d, e);
}

// g^[abc] g^[de]
Multivector trivector_bivector(T a, T b, T c, T d, T e) {
  return contraction::bivector_trivector_grade1(a, b, c, d, e) -
         contraction::bivector_trivector_grade3(d, e, a, b, c);
}

// g^[de] g5 = g5 g^[de] = (1/2) eps^{ed}_{ab} g^[ab]
Multivector bivector_pseudoscalar(T d, T e) {
  Multivector out;
  for (auto a : kTetradIndices) {
    for (auto b : kTetradIndices) {
      const int eps = epsilon_pseudo(kUUDD, {e, d, a, b});
      if (eps != 0) {
        out += Rational(eps, 2) * bracket({a, b});
      }
    }
  }
  return out;
}

// g^[hfg] g^[abc]
Multivector trivector_trivector(T h, T f, T g, T a, T b, T c) {
  return contraction::trivector_trivector_grade2(a, b, c, h, f, g) +
         unit(contraction::trivector_trivector_grade0(h, f, g, a, b, c));
}

// g^[hfg] g5 = eps_a^{hfg} g^a
Multivector trivector_pseudoscalar(T h, T f, T g) {
  Multivector out;
  for (auto a : kTetradIndices) {
    out += r(epsilon_pseudo(kDUUU, {a, h, f, g})) * vec(a);
  }
  return out;
}

// g5 g^[hfg] = -g^[hfg] g5
Multivector pseudoscalar_trivector(T h, T f, T g) { return -trivector_pseudoscalar(h, f, g); }

Multivector pseudoscalar_pseudoscalar() { return unit(-1); }

Multivector factor(int grade, std::span<const T> idx) {
  switch (grade) {
  case 0:
    return unit();
  case 4:
    return g5();
  default:
    return bracket(idx);
  }
}

void check_arity(int grade, std::span<const T> idx) {
  if (grade < 0 || grade > 4) {
    throw InvalidArity("grade must be in 0..4, got " + std::to_string(grade));
  }
  const std::size_t expected = (grade == 0 || grade == 4) ? 0 : static_cast<std::size_t>(grade);
  if (idx.size() != expected) {
    throw InvalidArity("grade " + std::to_string(grade) + " factor expects " +
                       std::to_string(expected) + " indices, got " + std::to_string(idx.size()));
  }
}

Multivector dispatch(GradePair grades, std::span<const T> l, std::span<const T> rr) {
  if (grades.left == 0) {
    return factor(grades.right, rr);
  }
  if (grades.right == 0) {
    return factor(grades.left, l);
  }
  switch (grades.left * 10 + grades.right) {
  case 11:
    return vector_vector(l[0], rr[0]);
  case 12:
    return vector_bivector(l[0], rr[0], rr[1]);
  case 21:
    return bivector_vector(l[0], l[1], rr[0]);
  case 13:
    return vector_trivector(l[0], rr[0], rr[1], rr[2]);
  case 31:
    return trivector_vector(l[0], l[1], l[2], rr[0]);
  case 14:
    return vector_pseudoscalar(l[0]);
  case 41:
    return pseudoscalar_vector(rr[0]);
  case 22:
    return bivector_bivector(l[0], l[1], rr[0], rr[1]);
  case 23:
    return bivector_trivector(l[0], l[1], rr[0], rr[1], rr[2]);
  case 32:
    return trivector_bivector(l[0], l[1], l[2], rr[0], rr[1]);
  case 24:
    return bivector_pseudoscalar(l[0], l[1]);
  case 42:
    return bivector_pseudoscalar(rr[0], rr[1]);
  case 33:
    return trivector_trivector(l[0], l[1], l[2], rr[0], rr[1], rr[2]);
  case 34:
    return trivector_pseudoscalar(l[0], l[1], l[2]);
  case 43:
    return pseudoscalar_trivector(rr[0], rr[1], rr[2]);
  case 44:
    return pseudoscalar_pseudoscalar();
  default:
    break;
  }
  throw InvalidArity("no product branch for grades " + std::to_string(grades.left) + "," +
                     std::to_string(grades.right));
}

std::span<const T> free_indices(Blade b) {
  return b.grade() == 4 ? std::span<const T>{} : b.indices();
}

} // namespace

ProductEngine::ProductEngine(FaultInjection fault) : fault_(fault) {
  for (auto a : Blade::all()) {
    for (auto b : Blade::all()) {
      table_[a.ordinal()][b.ordinal()] =
          closed_form({a.grade(), b.grade()}, free_indices(a), free_indices(b));
    }
  }
}

const ProductEngine &ProductEngine::instance() {
  static const ProductEngine engine;
  return engine;
}

Multivector ProductEngine::closed_form(GradePair grades, std::span<const TetradIndex> left,
                                       std::span<const TetradIndex> right) const {
  check_arity(grades.left, left);
  check_arity(grades.right, right);
  Multivector out = dispatch(grades, left, right);
  if (fault_.negate_branch == grades) {
    out *= Rational(-1);
  }
  return out;
}

Multivector ProductEngine::product(const Multivector &x, const Multivector &y) const {
  Multivector out;
  for (const auto &[a, ca] : x.terms()) {
    for (const auto &[b, cb] : y.terms()) {
      const Rational c = ca * cb;
      for (const auto &[blade, coeff] : blade_product(a, b).terms()) {
        out.add_term(blade, c * coeff);
      }
    }
  }
  return out;
}

Multivector ProductEngine::anticommutator(TetradIndex a, TetradIndex b) const {
  const Multivector ga(Blade::vector(a));
  const Multivector gb(Blade::vector(b));
  return product(ga, gb) + product(gb, ga);
}

Multivector four_blade_reduce(TetradIndex e, TetradIndex a, TetradIndex b, TetradIndex c) {
  return Multivector(Blade::pseudoscalar(), Rational(-epsilon_pseudo(kUUUU, {e, a, b, c})));
}

} // namespace cliff
