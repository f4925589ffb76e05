#include "cliff/algebra.hpp"

#include <algorithm>
#include <bit>

namespace cliff {

namespace {

// Index bitmasks of the blades in canonical order.
constexpr std::array<std::uint8_t, Blade::kCount> kMasks{
    0b0000,                                         // I
    0b0001, 0b0010, 0b0100, 0b1000,                 // g^A
    0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, // g^[AB]
    0b0111, 0b1011, 0b1101, 0b1110,                 // g^[ABC]
    0b1111,                                         // g5
};

struct BladeTables {
  std::array<std::array<TetradIndex, 4>, Blade::kCount> indices{};
  std::array<int, Blade::kCount> grades{};
  std::array<std::uint8_t, 16> ordinal_of_mask{};

  BladeTables() {
    for (std::size_t ord = 0; ord < Blade::kCount; ++ord) {
      const unsigned mask = kMasks[ord];
      int n = 0;
      for (int bit = 0; bit < 4; ++bit) {
        if ((mask >> bit) & 1U) {
          indices[ord][n++] = TetradIndex(bit);
        }
      }
      grades[ord] = n;
      ordinal_of_mask[mask] = static_cast<std::uint8_t>(ord);
    }
  }
};

const BladeTables &tables() {
  static const BladeTables t;
  return t;
}

} // namespace

Blade Blade::vector(TetradIndex a) {
  return from_ascending(std::array{a});
}

Blade Blade::bivector(TetradIndex a, TetradIndex b) {
  return from_ascending(std::array{a, b});
}

Blade Blade::trivector(TetradIndex a, TetradIndex b, TetradIndex c) {
  return from_ascending(std::array{a, b, c});
}

Blade Blade::from_ascending(std::span<const TetradIndex> indices) {
  if (indices.size() > 4) {
    throw std::invalid_argument("a blade has at most four indices");
  }
  unsigned mask = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0 && !(indices[i - 1] < indices[i])) {
      throw std::invalid_argument("blade indices must be strictly ascending");
    }
    mask |= 1U << indices[i].value();
  }
  return Blade(tables().ordinal_of_mask[mask]);
}

Blade Blade::from_ordinal(std::size_t ordinal) {
  if (ordinal >= kCount) {
    throw std::out_of_range("blade ordinal must be below 16");
  }
  return Blade(static_cast<std::uint8_t>(ordinal));
}

const std::array<Blade, Blade::kCount> &Blade::all() {
  static const auto blades = [] {
    std::array<Blade, kCount> out{};
    for (std::size_t i = 0; i < kCount; ++i) {
      out[i] = Blade(static_cast<std::uint8_t>(i));
    }
    return out;
  }();
  return blades;
}

int Blade::grade() const { return tables().grades[ordinal_]; }

std::span<const TetradIndex> Blade::indices() const {
  return {tables().indices[ordinal_].data(), static_cast<std::size_t>(grade())};
}

std::string to_string(Blade b) {
  switch (b.grade()) {
  case 0:
    return "1";
  case 4:
    return "g5";
  default:
    break;
  }
  std::string out = "g(";
  bool first = true;
  for (auto i : b.indices()) {
    if (!first) {
      out += ',';
    }
    out += std::to_string(i.value());
    first = false;
  }
  return out + ")";
}

CanonicalIndices canonicalize_indices(std::span<const TetradIndex> indices) {
  if (indices.empty() || indices.size() > 4) {
    throw InvalidArity("antisymmetrized index tuple must have length 1..4, got " +
                       std::to_string(indices.size()));
  }
  std::array<TetradIndex, 4> sorted{};
  std::copy(indices.begin(), indices.end(), sorted.begin());
  const std::size_t n = indices.size();

  // Insertion sort, counting transpositions.
  int sign = 1;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j > 0 && sorted[j] < sorted[j - 1]; --j) {
      std::swap(sorted[j], sorted[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (sorted[i] == sorted[i - 1]) {
      return {};
    }
  }
  return {sign, Blade::from_ascending(std::span(sorted.data(), n))};
}

int epsilon_symbol(const IndexQuad &indices) {
  return canonicalize_indices(indices).sign;
}

int epsilon_pseudo(const RaisedSlots &raised, const IndexQuad &indices) {
  int value = epsilon_symbol(indices);
  for (std::size_t slot = 0; slot < 4; ++slot) {
    if (raised[slot]) {
      value *= metric(indices[slot], indices[slot]);
    }
  }
  return value;
}

int epsilon_det_product(const IndexQuad &upper, const IndexQuad &lower) {
  std::array<std::array<int, 4>, 4> m{};
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < 4; ++col) {
      m[row][col] = upper[col] == lower[row] ? 1 : 0;
    }
  }
  // Leibniz expansion over the 24 permutations.
  std::array<int, 4> perm{0, 1, 2, 3};
  int det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        inversions += perm[i] > perm[j] ? 1 : 0;
      }
    }
    int term = inversions % 2 == 0 ? 1 : -1;
    for (int row = 0; row < 4 && term != 0; ++row) {
      term *= m[row][perm[row]];
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Multivector::Multivector(Blade b, Rational coefficient) { add_term(b, coefficient); }

Rational Multivector::coefficient(Blade b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(Blade b, const Rational &coefficient) {
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(b, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Multivector &Multivector::operator+=(const Multivector &other) {
  for (const auto &[b, c] : other.terms_) {
    add_term(b, c);
  }
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &other) {
  for (const auto &[b, c] : other.terms_) {
    add_term(b, -c);
  }
  return *this;
}

Multivector &Multivector::operator*=(const Rational &factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[b, c] : terms_) {
    c *= factor;
  }
  return *this;
}

Multivector bracket(std::span<const TetradIndex> indices) {
  const auto canon = canonicalize_indices(indices);
  if (canon.sign == 0) {
    return {};
  }
  return Multivector(*canon.blade, Rational(canon.sign));
}

std::string to_string(const Multivector &mv) {
  if (mv.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto &[blade, coeff] : mv.terms()) {
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? -coeff : coeff;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (blade.grade() == 0) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += to_string(blade);
    } else {
      out += to_string(magnitude) + "*" + to_string(blade);
    }
  }
  return out;
}

} // namespace cliff
