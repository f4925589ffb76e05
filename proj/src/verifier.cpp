#include "cliff/verifier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cliff/contractions.hpp"

namespace cliff {

namespace {

using T = TetradIndex;

const std::vector<IdentityInfo> kCatalog{
    {IdentityId::vector_vector, "vector-vector", "AB", "g^A g^B = g^[AB] + eta^{AB} I"},
    {IdentityId::vector_bivector, "vector-bivector", "EAB",
     "g^E g^[AB] = g^[EAB] + eta^{EA} g^B - eta^{EB} g^A"},
    {IdentityId::bivector_vector, "bivector-vector", "ABE",
     "g^[AB] g^E = g^[EAB] - eta^{EA} g^B + eta^{EB} g^A"},
    {IdentityId::vector_trivector, "vector-trivector", "EABC",
     "g^E g^[ABC] = -eps^{EABC} g5 + eta^{EA} g^[BC] + eta^{EB} g^[CA] + eta^{EC} g^[AB]"},
    {IdentityId::trivector_vector, "trivector-vector", "ABCE",
     "g^[ABC] g^E = eps^{EABC} g5 + eta^{EA} g^[BC] + eta^{EB} g^[CA] + eta^{EC} g^[AB]"},
    {IdentityId::vector_pseudoscalar, "vector-pseudoscalar", "E",
     "g^E g5 = -g5 g^E = (1/3!) eps^E_{ABC} g^[ABC]"},
    {IdentityId::bivector_bivector, "bivector-bivector", "ABDE",
     "g^[AB] g^[DE] = -eps^{DEAB} g5 + eps^{AB}_{[F|}^H eps^{DE}_{|G]H} g^[FG]"
     " + eta^{BD} eta^{AE} - eta^{DA} eta^{BE}"},
    {IdentityId::bivector_trivector, "bivector-trivector", "DEABC",
     "g^[DE] g^[ABC] = (1/3) eps^{[D|ABC} eps^{|E]}_{FGH} g^[FGH] + eps^{ABCF} eps^{DE}_{HF} g^H"},
    {IdentityId::trivector_bivector, "trivector-bivector", "ABCDE",
     "g^[ABC] g^[DE] = -(1/3) eps^{[D|ABC} eps^{|E]}_{FGH} g^[FGH] + eps^{ABCF} eps^{DE}_{HF} g^H"},
    {IdentityId::bivector_pseudoscalar, "bivector-pseudoscalar", "DE",
     "g^[DE] g5 = g5 g^[DE] = (1/2) eps^{ED}_{AB} g^[AB]"},
    {IdentityId::trivector_trivector, "trivector-trivector", "HFGABC",
     "g^[HFG] g^[ABC] = eps^{ABC}_{[D|} eps^{HFG}_{|E]} g^[ED] + eps^{HFGD} eps^{ABC}_D"},
    {IdentityId::trivector_pseudoscalar, "trivector-pseudoscalar", "HFG",
     "g^[HFG] g5 = -g5 g^[HFG] = eps_A^{HFG} g^A"},
    {IdentityId::pseudoscalar_square, "pseudoscalar-square", "", "g5 g5 = -I"},
    {IdentityId::contraction_bivector_bivector, "contraction-bivector-bivector", "ABDE",
     "eps^{AB}_{[F|}^H eps^{DE}_{|G]H} g^[FG] = eta^{EA} g^[BD] + eta^{EB} g^[DA]"
     " + eta^{DA} g^[EB] + eta^{DB} g^[AE]"},
    {IdentityId::contraction_bivector_trivector_grade3, "contraction-bivector-trivector-grade3",
     "DEABC",
     "(1/3) eps^{[D|ABC} eps^{|E]}_{FGH} g^[FGH] = eta^{EA} g^[DBC] + eta^{DA} g^[ECB]"
     " + eta^{EC} g^[DAB] + eta^{DC} g^[AEB] + eta^{DB} g^[EAC] + eta^{EB} g^[DCA]"},
    {IdentityId::contraction_bivector_trivector_grade1, "contraction-bivector-trivector-grade1",
     "ABCDE",
     "eps^{ABCF} eps^{DE}_{HF} g^H = (eta^{DB} eta^{EA} - eta^{DA} eta^{EB}) g^C"
     " + (eta^{DA} eta^{EC} - eta^{DC} eta^{EA}) g^B + (eta^{DC} eta^{EB} - eta^{DB} eta^{EC}) g^A"},
    {IdentityId::contraction_trivector_trivector_grade2, "contraction-trivector-trivector-grade2",
     "ABCHFG", "eps^{ABC}_{[D|} eps^{HFG}_{|E]} g^[ED] = nine eta.eta g^[XY] terms"},
    {IdentityId::contraction_trivector_trivector_grade0, "contraction-trivector-trivector-grade0",
     "HFGABC",
     "eps^{HFGD} eps^{ABC}_D = eta^{AH}(eta^{BG} eta^{CF} - eta^{BF} eta^{CG})"
     " + eta^{AG}(eta^{BF} eta^{CH} - eta^{BH} eta^{CF}) + eta^{AF}(eta^{BH} eta^{CG} - eta^{BG} eta^{CH})"},
    {IdentityId::four_blade, "four-blade", "EABC", "g^[E} g^A g^B g^{C] = -eps^{EABC} g5"},
    {IdentityId::epsilon_determinant, "epsilon-determinant", "ABCDEFGH",
     "eps^{ABCD} eps_{EFGH} = det[delta^{ABCD}_{EFGH}]"},
    {IdentityId::product_table, "product-table", "",
     "blade_product(a, b) matches the matrix product for all ordered blade pairs"},
};

// ---------------------------------------------------------------------------
// Printed expansions of the double contractions.
// ---------------------------------------------------------------------------

Rational r(int v) { return Rational(v); }

Multivector vec(T a) { return Multivector(Blade::vector(a)); }

Multivector expansion_bivector_bivector(T a, T b, T d, T e) {
  return r(metric(e, a)) * bracket({b, d}) + r(metric(e, b)) * bracket({d, a}) +
         r(metric(d, a)) * bracket({e, b}) + r(metric(d, b)) * bracket({a, e});
}

Multivector expansion_bivector_trivector_grade3(T d, T e, T a, T b, T c) {
  return r(metric(e, a)) * bracket({d, b, c}) + r(metric(d, a)) * bracket({e, c, b}) +
         r(metric(e, c)) * bracket({d, a, b}) + r(metric(d, c)) * bracket({a, e, b}) +
         r(metric(d, b)) * bracket({e, a, c}) + r(metric(e, b)) * bracket({d, c, a});
}

Multivector expansion_bivector_trivector_grade1(T a, T b, T c, T d, T e) {
  return r(metric(d, b) * metric(e, a) - metric(d, a) * metric(e, b)) * vec(c) +
         r(metric(d, a) * metric(e, c) - metric(d, c) * metric(e, a)) * vec(b) +
         r(metric(d, c) * metric(e, b) - metric(d, b) * metric(e, c)) * vec(a);
}

Multivector expansion_trivector_trivector_grade2(T a, T b, T c, T h, T f, T g) {
  const auto m = [](T x, T y) { return metric(x, y); };
  return r(m(h, c) * m(b, f) - m(c, f) * m(h, b)) * bracket({g, a}) +
         r(m(h, c) * m(b, g) - m(c, g) * m(h, b)) * bracket({a, f}) +
         r(m(c, g) * m(b, f) - m(c, f) * m(b, g)) * bracket({a, h}) +
         r(m(a, g) * m(h, b) - m(h, a) * m(b, g)) * bracket({c, f}) +
         r(m(a, f) * m(h, b) - m(h, a) * m(b, f)) * bracket({g, c}) +
         r(m(a, f) * m(b, g) - m(a, g) * m(b, f)) * bracket({c, h}) +
         r(m(c, g) * m(h, a) - m(h, c) * m(a, g)) * bracket({b, f}) +
         r(m(c, f) * m(h, a) - m(h, c) * m(a, f)) * bracket({g, b}) +
         r(m(c, f) * m(a, g) - m(c, g) * m(a, f)) * bracket({b, h});
}

Rational expansion_trivector_trivector_grade0(T h, T f, T g, T a, T b, T c) {
  const auto m = [](T x, T y) { return metric(x, y); };
  return r(m(a, h) * (m(b, g) * m(c, f) - m(b, f) * m(c, g)) +
           m(a, g) * (m(b, f) * m(c, h) - m(b, h) * m(c, f)) +
           m(a, f) * (m(b, h) * m(c, g) - m(b, g) * m(c, h)));
}

// ---------------------------------------------------------------------------
// Matrix-side evaluation of the contraction sums.
// ---------------------------------------------------------------------------

constexpr auto kUUUU = slots("uuuu");
constexpr auto kUUDU = slots("uudu");
constexpr auto kUUDD = slots("uudd");
constexpr auto kUDDD = slots("uddd");
constexpr auto kUUUD = slots("uuud");

void accumulate(ComplexMatrix &acc, const Rational &c, const ComplexMatrix &m) {
  if (c != 0) {
    acc += c * m;
  }
}

ComplexMatrix matrix_bivector_bivector(const Representation &rep, T a, T b, T d, T e) {
  ComplexMatrix out;
  for (auto f : kTetradIndices) {
    for (auto g : kTetradIndices) {
      int sum = 0;
      for (auto h : kTetradIndices) {
        sum += epsilon_pseudo(kUUDU, {a, b, f, h}) * epsilon_pseudo(kUUDD, {d, e, g, h}) -
               epsilon_pseudo(kUUDU, {a, b, g, h}) * epsilon_pseudo(kUUDD, {d, e, f, h});
      }
      accumulate(out, Rational(sum, 2), rep.bracket_matrix({f, g}));
    }
  }
  return out;
}

ComplexMatrix matrix_bivector_trivector_grade3(const Representation &rep, T d, T e, T a, T b, T c) {
  ComplexMatrix out;
  for (auto f : kTetradIndices) {
    for (auto g : kTetradIndices) {
      for (auto h : kTetradIndices) {
        const int sum =
            epsilon_pseudo(kUUUU, {d, a, b, c}) * epsilon_pseudo(kUDDD, {e, f, g, h}) -
            epsilon_pseudo(kUUUU, {e, a, b, c}) * epsilon_pseudo(kUDDD, {d, f, g, h});
        accumulate(out, Rational(sum, 6), rep.bracket_matrix({f, g, h}));
      }
    }
  }
  return out;
}

ComplexMatrix matrix_bivector_trivector_grade1(const Representation &rep, T a, T b, T c, T d, T e) {
  ComplexMatrix out;
  for (auto f : kTetradIndices) {
    for (auto h : kTetradIndices) {
      const int term = epsilon_pseudo(kUUUU, {a, b, c, f}) * epsilon_pseudo(kUUDD, {d, e, h, f});
      accumulate(out, Rational(term), rep.dirac_matrix(h));
    }
  }
  return out;
}

ComplexMatrix matrix_trivector_trivector_grade2(const Representation &rep, T a, T b, T c, T h,
                                                T f, T g) {
  ComplexMatrix out;
  for (auto d : kTetradIndices) {
    for (auto e : kTetradIndices) {
      const int sum = epsilon_pseudo(kUUUD, {a, b, c, d}) * epsilon_pseudo(kUUUD, {h, f, g, e}) -
                      epsilon_pseudo(kUUUD, {a, b, c, e}) * epsilon_pseudo(kUUUD, {h, f, g, d});
      accumulate(out, Rational(sum, 2), rep.bracket_matrix({e, d}));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Case enumeration
// ---------------------------------------------------------------------------

struct Check {
  Multivector engine;
  Multivector oracle;
};

using CaseFn = std::function<void(std::span<const T>, std::vector<Check> &)>;

std::string assignment_label(std::string_view letters, std::span<const int> values) {
  if (values.empty()) {
    return "(no free indices)";
  }
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += letters[i];
    out += '=';
    out += std::to_string(values[i]);
  }
  return out;
}

IdentityReport run_cases(IdentityId id, const Representation &rep, const CaseFn &fn) {
  const auto &meta = info(id);
  const std::size_t n = meta.letters.size();
  IdentityReport report{id, rep.kind(), 0, {}};

  std::vector<T> idx(n);
  std::vector<int> values(n, 0);
  std::vector<Check> checks;
  const std::size_t total = expected_cases(id);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t pos = n; pos-- > 0;) {
      values[pos] = static_cast<int>(rest % 4);
      idx[pos] = T(values[pos]);
      rest /= 4;
    }
    checks.clear();
    fn(idx, checks);
    ++report.cases_checked;
    const auto bad = std::find_if(checks.begin(), checks.end(),
                                  [](const Check &c) { return c.engine != c.oracle; });
    if (bad != checks.end()) {
      report.counterexamples.push_back(
          {values, assignment_label(meta.letters, values), bad->engine, bad->oracle});
    }
  }
  return report;
}

// Matrix of one factor: I for grade 0, g5 for grade 4, otherwise the
// literal bracket of the given indices.
ComplexMatrix factor_matrix(const Representation &rep, int grade, std::span<const T> idx) {
  switch (grade) {
  case 0:
    return ComplexMatrix::identity();
  case 4:
    return rep.pseudoscalar_matrix();
  default:
    return rep.bracket_matrix(idx);
  }
}

Multivector factor_multivector(int grade, std::span<const T> idx) {
  switch (grade) {
  case 0:
    return Multivector::scalar(1);
  case 4:
    return Multivector(Blade::pseudoscalar());
  default:
    return bracket(idx);
  }
}

// Returns the oracle value of the product.
Multivector product_checks(const ProductEngine &engine, const Representation &rep,
                           GradePair grades, std::span<const T> left, std::span<const T> right,
                           std::vector<Check> &out) {
  Multivector oracle = rep.decompose(factor_matrix(rep, grades.left, left) *
                                     factor_matrix(rep, grades.right, right));
  out.push_back({engine.closed_form(grades, left, right), oracle});
  out.push_back({engine.product(factor_multivector(grades.left, left),
                                factor_multivector(grades.right, right)),
                 oracle});
  return oracle;
}

CaseFn product_identity(const ProductEngine &engine, const Representation &rep,
                        GradePair grades) {
  const auto arity = [](int grade) -> std::size_t {
    return (grade == 0 || grade == 4) ? 0 : static_cast<std::size_t>(grade);
  };
  const std::size_t left_count = arity(grades.left);
  return [&engine, &rep, grades, left_count](std::span<const T> idx, std::vector<Check> &out) {
    product_checks(engine, rep, grades, idx.first(left_count), idx.subspan(left_count), out);
  };
}

// X g5 = sign * g5 X = closed form, for X of the given grade.
CaseFn pseudoscalar_chain(const ProductEngine &engine, const Representation &rep, int grade,
                          int sign) {
  return [&engine, &rep, grade, sign](std::span<const T> idx, std::vector<Check> &out) {
    const std::span<const T> none;
    const GradePair forward{grade, 4};
    const GradePair backward{4, grade};
    product_checks(engine, rep, forward, idx, none, out);
    const Multivector mirrored = product_checks(engine, rep, backward, none, idx, out);
    out.push_back({engine.closed_form(forward, idx, none), Rational(sign) * mirrored});
  };
}

Multivector antisymmetrized_engine_product(const ProductEngine &engine, std::span<const T> idx) {
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  Multivector sum;
  do {
    Multivector term = Multivector(Blade::vector(idx[perm[0]]));
    for (std::size_t i = 1; i < 4; ++i) {
      term = engine.product(term, Multivector(Blade::vector(idx[perm[i]])));
    }
    int inversions = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        inversions += perm[i] > perm[j] ? 1 : 0;
      }
    }
    sum += Rational(inversions % 2 == 0 ? 1 : -1) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(1, 24) * sum;
}

IdentityReport verify_determinant(const Representation &rep) {
  const auto &meta = info(IdentityId::epsilon_determinant);
  IdentityReport report{IdentityId::epsilon_determinant, rep.kind(), 0, {}};
  const std::size_t total = expected_cases(IdentityId::epsilon_determinant);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> values(8);
    std::size_t rest = code;
    for (std::size_t pos = 8; pos-- > 0;) {
      values[pos] = static_cast<int>(rest % 4);
      rest /= 4;
    }
    const IndexQuad upper{T(values[0]), T(values[1]), T(values[2]), T(values[3])};
    const IndexQuad lower{T(values[4]), T(values[5]), T(values[6]), T(values[7])};
    const int det = epsilon_det_product(upper, lower);
    const int symbols = epsilon_symbol(upper) * epsilon_symbol(lower);
    ++report.cases_checked;
    if (det != symbols) {
      report.counterexamples.push_back({values, assignment_label(meta.letters, values),
                                        Multivector::scalar(det), Multivector::scalar(symbols)});
    }
  }
  return report;
}

CaseFn case_function(IdentityId id, const ProductEngine &engine, const Representation &rep) {
  switch (id) {
  case IdentityId::vector_vector:
    return product_identity(engine, rep, {1, 1});
  case IdentityId::vector_bivector:
    return product_identity(engine, rep, {1, 2});
  case IdentityId::bivector_vector:
    return product_identity(engine, rep, {2, 1});
  case IdentityId::vector_trivector:
    return product_identity(engine, rep, {1, 3});
  case IdentityId::trivector_vector:
    return product_identity(engine, rep, {3, 1});
  case IdentityId::vector_pseudoscalar:
    return pseudoscalar_chain(engine, rep, 1, -1);
  case IdentityId::bivector_bivector:
    return product_identity(engine, rep, {2, 2});
  case IdentityId::bivector_trivector:
    return product_identity(engine, rep, {2, 3});
  case IdentityId::trivector_bivector:
    return product_identity(engine, rep, {3, 2});
  case IdentityId::bivector_pseudoscalar:
    return pseudoscalar_chain(engine, rep, 2, 1);
  case IdentityId::trivector_trivector:
    return product_identity(engine, rep, {3, 3});
  case IdentityId::trivector_pseudoscalar:
    return pseudoscalar_chain(engine, rep, 3, -1);
  case IdentityId::pseudoscalar_square:
    return product_identity(engine, rep, {4, 4});

  case IdentityId::contraction_bivector_bivector:
    return [&rep](std::span<const T> i, std::vector<Check> &out) {
      const auto oracle = rep.decompose(matrix_bivector_bivector(rep, i[0], i[1], i[2], i[3]));
      out.push_back({contraction::bivector_bivector(i[0], i[1], i[2], i[3]), oracle});
      out.push_back({expansion_bivector_bivector(i[0], i[1], i[2], i[3]), oracle});
    };
  case IdentityId::contraction_bivector_trivector_grade3:
    return [&rep](std::span<const T> i, std::vector<Check> &out) {
      const auto oracle =
          rep.decompose(matrix_bivector_trivector_grade3(rep, i[0], i[1], i[2], i[3], i[4]));
      out.push_back(
          {contraction::bivector_trivector_grade3(i[0], i[1], i[2], i[3], i[4]), oracle});
      out.push_back({expansion_bivector_trivector_grade3(i[0], i[1], i[2], i[3], i[4]), oracle});
    };
  case IdentityId::contraction_bivector_trivector_grade1:
    return [&rep](std::span<const T> i, std::vector<Check> &out) {
      const auto oracle =
          rep.decompose(matrix_bivector_trivector_grade1(rep, i[0], i[1], i[2], i[3], i[4]));
      out.push_back(
          {contraction::bivector_trivector_grade1(i[0], i[1], i[2], i[3], i[4]), oracle});
      out.push_back({expansion_bivector_trivector_grade1(i[0], i[1], i[2], i[3], i[4]), oracle});
    };
  case IdentityId::contraction_trivector_trivector_grade2:
    return [&rep](std::span<const T> i, std::vector<Check> &out) {
      const auto oracle = rep.decompose(
          matrix_trivector_trivector_grade2(rep, i[0], i[1], i[2], i[3], i[4], i[5]));
      out.push_back(
          {contraction::trivector_trivector_grade2(i[0], i[1], i[2], i[3], i[4], i[5]), oracle});
      out.push_back(
          {expansion_trivector_trivector_grade2(i[0], i[1], i[2], i[3], i[4], i[5]), oracle});
    };
  case IdentityId::contraction_trivector_trivector_grade0:
    return [](std::span<const T> i, std::vector<Check> &out) {
      out.push_back(
          {Multivector::scalar(
               contraction::trivector_trivector_grade0(i[0], i[1], i[2], i[3], i[4], i[5])),
           Multivector::scalar(
               expansion_trivector_trivector_grade0(i[0], i[1], i[2], i[3], i[4], i[5]))});
    };

  case IdentityId::four_blade:
    return [&engine, &rep](std::span<const T> i, std::vector<Check> &out) {
      const auto oracle = rep.decompose(rep.bracket_matrix(i));
      out.push_back({four_blade_reduce(i[0], i[1], i[2], i[3]), oracle});
      out.push_back({antisymmetrized_engine_product(engine, i), oracle});
    };

  case IdentityId::epsilon_determinant:
  case IdentityId::product_table:
    break;
  }
  throw std::logic_error("identity has no case function");
}

} // namespace

const std::vector<IdentityInfo> &identity_catalog() { return kCatalog; }

const IdentityInfo &info(IdentityId id) {
  for (const auto &entry : kCatalog) {
    if (entry.id == id) {
      return entry;
    }
  }
  throw std::logic_error("identity missing from catalog");
}

std::string_view to_string(IdentityId id) { return info(id).name; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto &entry : kCatalog) {
    if (entry.name == name) {
      return entry.id;
    }
  }
  return std::nullopt;
}

std::optional<IdentityId> identity_for(GradePair branch) {
  switch (branch.left * 10 + branch.right) {
  case 11:
    return IdentityId::vector_vector;
  case 12:
    return IdentityId::vector_bivector;
  case 21:
    return IdentityId::bivector_vector;
  case 13:
    return IdentityId::vector_trivector;
  case 31:
    return IdentityId::trivector_vector;
  case 14:
  case 41:
    return IdentityId::vector_pseudoscalar;
  case 22:
    return IdentityId::bivector_bivector;
  case 23:
    return IdentityId::bivector_trivector;
  case 32:
    return IdentityId::trivector_bivector;
  case 24:
  case 42:
    return IdentityId::bivector_pseudoscalar;
  case 33:
    return IdentityId::trivector_trivector;
  case 34:
  case 43:
    return IdentityId::trivector_pseudoscalar;
  case 44:
    return IdentityId::pseudoscalar_square;
  default:
    return std::nullopt;
  }
}

std::size_t expected_cases(IdentityId id) {
  if (id == IdentityId::product_table) {
    return Blade::kCount * Blade::kCount;
  }
  return std::size_t{1} << (2 * info(id).letters.size());
}

IdentityReport verify_identity(IdentityId id, const Representation &rep,
                               const ProductEngine &engine) {
  switch (id) {
  case IdentityId::product_table:
    return verify_table(rep, engine);
  case IdentityId::epsilon_determinant:
    return verify_determinant(rep);
  default:
    return run_cases(id, rep, case_function(id, engine, rep));
  }
}

IdentityReport verify_table(const Representation &rep, const ProductEngine &engine) {
  IdentityReport report{IdentityId::product_table, rep.kind(), 0, {}};
  for (auto a : Blade::all()) {
    for (auto b : Blade::all()) {
      const Multivector &mine = engine.blade_product(a, b);
      Multivector oracle = rep.oracle_blade_product(a, b);
      ++report.cases_checked;
      if (mine != oracle) {
        report.counterexamples.push_back({{static_cast<int>(a.ordinal()), static_cast<int>(b.ordinal())},
                                          to_string(a) + "*" + to_string(b),
                                          mine,
                                          std::move(oracle)});
      }
    }
  }
  return report;
}

std::vector<IdentityReport> verify_all(const Representation &rep, const ProductEngine &engine) {
  std::vector<IdentityId> ids;
  for (const auto &entry : kCatalog) {
    ids.push_back(entry.id);
  }
  return verify_all(rep, ids, engine);
}

std::vector<IdentityReport> verify_all(const Representation &rep, std::span<const IdentityId> ids,
                                       const ProductEngine &engine) {
  std::vector<IdentityReport> reports;
  reports.reserve(ids.size());
  for (auto id : ids) {
    reports.push_back(verify_identity(id, rep, engine));
  }
  return reports;
}

} // namespace cliff
