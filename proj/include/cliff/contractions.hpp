#pragma once

#include "cliff/algebra.hpp"

// Double Levi-Civita contractions that appear in the products of bivectors
// and trivectors. Each sum runs over its dummy indices explicitly; raised
// slots use the pseudo-tensor. Pairs written [x|...|y] are antisymmetrized
// with weight 1/2.
namespace cliff::contraction {

// eps^{ab}_{[f|}^{h} eps^{de}_{|g]h} g^[fg]
Multivector bivector_bivector(TetradIndex a, TetradIndex b, TetradIndex d, TetradIndex e);

// (1/3) eps^{[d|abc} eps^{|e]}_{fgh} g^[fgh]
Multivector bivector_trivector_grade3(TetradIndex d, TetradIndex e, TetradIndex a, TetradIndex b,
                                      TetradIndex c);

// eps^{abcf} eps^{de}_{hf} g^h
Multivector bivector_trivector_grade1(TetradIndex a, TetradIndex b, TetradIndex c, TetradIndex d,
                                      TetradIndex e);

// eps^{abc}_{[d|} eps^{hfg}_{|e]} g^[ed]
Multivector trivector_trivector_grade2(TetradIndex a, TetradIndex b, TetradIndex c, TetradIndex h,
                                       TetradIndex f, TetradIndex g);

// eps^{hfgd} eps^{abc}_{d}
Rational trivector_trivector_grade0(TetradIndex h, TetradIndex f, TetradIndex g, TetradIndex a,
                                    TetradIndex b, TetradIndex c);

} // namespace cliff::contraction
