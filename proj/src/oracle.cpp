#include "cliff/oracle.hpp"

#include <algorithm>
#include <string>

namespace cliff {

ComplexMatrix ComplexMatrix::identity() {
  ComplexMatrix m;
  for (std::size_t i = 0; i < kDim; ++i) {
    m(i, i) = {Rational(1), Rational(0)};
  }
  return m;
}

GaussianRational ComplexMatrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < kDim; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      m(i, j) = (*this)(j, i).conj();
    }
  }
  return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    e_[i] += o.e_[i];
  }
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    e_[i] -= o.e_[i];
  }
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(const Rational &c) {
  for (auto &x : e_) {
    x.re *= c;
    x.im *= c;
  }
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix &x, const ComplexMatrix &y) {
  ComplexMatrix out;
  for (std::size_t i = 0; i < ComplexMatrix::kDim; ++i) {
    for (std::size_t k = 0; k < ComplexMatrix::kDim; ++k) {
      const auto &xik = x(i, k);
      if (xik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < ComplexMatrix::kDim; ++j) {
        const auto &ykj = y(k, j);
        if (!ykj.is_zero()) {
          out(i, j) += xik * ykj;
        }
      }
    }
  }
  return out;
}

GaussianRational trace_of_product(const ComplexMatrix &x, const ComplexMatrix &y) {
  GaussianRational t;
  for (std::size_t i = 0; i < ComplexMatrix::kDim; ++i) {
    for (std::size_t j = 0; j < ComplexMatrix::kDim; ++j) {
      if (!x(i, j).is_zero() && !y(j, i).is_zero()) {
        t += x(i, j) * y(j, i);
      }
    }
  }
  return t;
}

std::string_view to_string(RepresentationKind kind) {
  switch (kind) {
  case RepresentationKind::standard:
    return "standard";
  case RepresentationKind::chiral:
    return "chiral";
  }
  return "unknown";
}

std::optional<RepresentationKind> parse_representation(std::string_view name) {
  if (name == "standard") {
    return RepresentationKind::standard;
  }
  if (name == "chiral") {
    return RepresentationKind::chiral;
  }
  return std::nullopt;
}

namespace {

using Block = std::array<std::array<GaussianRational, 2>, 2>;

GaussianRational re(int v) { return {Rational(v), Rational(0)}; }
GaussianRational im(int v) { return {Rational(0), Rational(v)}; }

const Block kZero{{{re(0), re(0)}, {re(0), re(0)}}};
const Block kOne{{{re(1), re(0)}, {re(0), re(1)}}};
const std::array<Block, 3> kPauli{{
    {{{re(0), re(1)}, {re(1), re(0)}}},
    {{{re(0), im(-1)}, {im(1), re(0)}}},
    {{{re(1), re(0)}, {re(0), re(-1)}}},
}};

Block negate(const Block &b) {
  Block out = b;
  for (auto &row : out) {
    for (auto &x : row) {
      x = -x;
    }
  }
  return out;
}

// [[tl, tr], [bl, br]]
ComplexMatrix from_blocks(const Block &tl, const Block &tr, const Block &bl, const Block &br) {
  ComplexMatrix m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = tl[i][j];
      m(i, j + 2) = tr[i][j];
      m(i + 2, j) = bl[i][j];
      m(i + 2, j + 2) = br[i][j];
    }
  }
  return m;
}

std::array<ComplexMatrix, 4> spatial_with(const ComplexMatrix &g0) {
  std::array<ComplexMatrix, 4> gens;
  gens[0] = g0;
  for (std::size_t k = 0; k < 3; ++k) {
    gens[k + 1] = from_blocks(kZero, kPauli[k], negate(kPauli[k]), kZero);
  }
  return gens;
}

int permutation_sign(std::span<const std::size_t> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      inversions += perm[i] > perm[j] ? 1 : 0;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

ComplexMatrix Representation::alternating_sum(std::span<const ComplexMatrix, 4> gens,
                                              std::span<const TetradIndex> indices) {
  const std::size_t n = indices.size();
  if (n == 0 || n > 4) {
    throw InvalidArity("bracket matrix needs 1..4 indices");
  }
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  std::int64_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    factorial *= static_cast<std::int64_t>(i);
  }
  ComplexMatrix sum;
  do {
    ComplexMatrix term = gens[indices[perm[0]].value()];
    for (std::size_t i = 1; i < n; ++i) {
      term = term * gens[indices[perm[i]].value()];
    }
    if (permutation_sign(std::span(perm.data(), n)) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
  sum *= Rational(1, factorial);
  return sum;
}

std::size_t Representation::cache_slot(std::span<const TetradIndex> indices) {
  // Offsets 0, 4, 20 for lengths 1, 2, 3; base-4 digits within.
  static constexpr std::array<std::size_t, 4> kOffset{0, 0, 4, 20};
  std::size_t code = 0;
  for (auto i : indices) {
    code = code * 4 + static_cast<std::size_t>(i.value());
  }
  return kOffset[indices.size()] + code;
}

Representation::Representation(RepresentationKind kind,
                               const std::array<ComplexMatrix, 4> &generators)
    : kind_(kind), generators_(generators) {
  const ComplexMatrix one = ComplexMatrix::identity();
  for (auto a : kTetradIndices) {
    for (auto b : kTetradIndices) {
      const ComplexMatrix anti = dirac_matrix(a) * dirac_matrix(b) + dirac_matrix(b) * dirac_matrix(a);
      if (anti != Rational(2 * metric(a, b)) * one) {
        throw std::invalid_argument("generators violate the anticommutation relation at (" +
                                    std::to_string(a.value()) + "," +
                                    std::to_string(b.value()) + ")");
      }
    }
  }
  if (generators_[0].adjoint() != generators_[0]) {
    throw std::invalid_argument("g^0 must be Hermitian");
  }
  for (std::size_t k = 1; k < 4; ++k) {
    if (generators_[k].adjoint() != -generators_[k]) {
      throw std::invalid_argument("g^" + std::to_string(k) + " must be anti-Hermitian");
    }
  }

  for (std::size_t n = 1; n <= 3; ++n) {
    std::array<TetradIndex, 3> idx{};
    const std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t code = 0; code < count; ++code) {
      std::size_t rest = code;
      for (std::size_t pos = n; pos-- > 0;) {
        idx[pos] = TetradIndex(static_cast<int>(rest % 4));
        rest /= 4;
      }
      const auto tuple = std::span<const TetradIndex>(idx.data(), n);
      bracket_cache_[cache_slot(tuple)] = alternating_sum(generators_, tuple);
    }
  }

  for (auto b : Blade::all()) {
    ComplexMatrix m;
    switch (b.grade()) {
    case 0:
      m = one;
      break;
    case 4:
      m = generators_[0] * generators_[1] * generators_[2] * generators_[3];
      break;
    default:
      m = bracket_matrix(b.indices());
      break;
    }
    blades_[b.ordinal()] = m;
    const GaussianRational norm = trace_of_product(m, m);
    if (norm.im != 0 || norm.re == 0) {
      throw std::invalid_argument("blade " + to_string(b) + " has a degenerate normalizer");
    }
    normalizers_[b.ordinal()] = norm.re;
  }
}

const Representation &Representation::standard() {
  static const Representation rep(
      RepresentationKind::standard,
      spatial_with(from_blocks(kOne, kZero, kZero, negate(kOne))));
  return rep;
}

const Representation &Representation::chiral() {
  static const Representation rep(RepresentationKind::chiral,
                                  spatial_with(from_blocks(kZero, kOne, kOne, kZero)));
  return rep;
}

const Representation &Representation::get(RepresentationKind kind) {
  return kind == RepresentationKind::chiral ? chiral() : standard();
}

ComplexMatrix Representation::bracket_matrix(std::span<const TetradIndex> indices) const {
  if (!indices.empty() && indices.size() <= 3) {
    return bracket_cache_[cache_slot(indices)];
  }
  return alternating_sum(generators_, indices);
}

Multivector Representation::decompose(const ComplexMatrix &m) const {
  Multivector out;
  ComplexMatrix rebuilt;
  for (auto b : Blade::all()) {
    const GaussianRational projection = trace_of_product(m, blade_matrix(b));
    if (projection.im != 0) {
      throw DecompositionError("matrix has a non-real coefficient on blade " + to_string(b));
    }
    const Rational coeff = projection.re / normalizer(b);
    if (coeff != 0) {
      out.add_term(b, coeff);
      rebuilt += coeff * blade_matrix(b);
    }
  }
  if (rebuilt != m) {
    throw DecompositionError("matrix is not in the span of the blade matrices");
  }
  return out;
}

} // namespace cliff
