#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mahon/elements.hpp"

namespace mahon {

// Named permutation statistics. Inv and Maj take an explicit letter order;
// every other name fixes its own comparison convention:
//
//   r = 2 only:
//     Neg      number of colored positions
//     SumNeg   sum of |values| over colored positions
//     Major    maj under SignBlockB
//     LenB     inv under IntegerB + SumNeg          (Coxeter length of B_n)
//     Fmaj     2 * Major + Neg
//     FmajCap  2 * maj under IntegerB + Neg
//     Nmaj     maj under IntegerB + SumNeg
//     NegEven  colored positions holding an even value
//     LenD     LenB - Neg   (even-signed subgroup; needs an even Neg)
//     Dmaj     Nmaj - Neg   (same constraint)
//
//   any r:
//     Z            sum of colors
//     Zhat         sum of color * value
//     LenG         inv under ValueBlockG + sum over colored positions of (value + color - 1)
//     Lmaj         maj under ValueBlockG + the same sum
//     ColorExcess  sum over colored positions of (value - 1)
//     FmajG        r * maj under ColorBlockG + Z
//     Rmaj         maj under ColorBlockG + Zhat
//     Rinv         inv under ColorBlockG + Zhat
//     Fmaf         r * sum_j (i_j - j) over the uncolored fixed points
//                  i_1 < ... < i_k, plus FmajG of the fixed-point-free
//                  reduction
//     Fix          number of uncolored fixed points
enum class Stat {
  Inv,
  Maj,
  Neg,
  SumNeg,
  Major,
  LenB,
  Fmaj,
  FmajCap,
  Nmaj,
  NegEven,
  LenD,
  Dmaj,
  Z,
  Zhat,
  LenG,
  Lmaj,
  ColorExcess,
  FmajG,
  Rmaj,
  Rinv,
  Fmaf,
  Fix,
};

std::int64_t inv(const ColoredPerm& pi, LetterOrder order);
std::int64_t maj(const ColoredPerm& pi, LetterOrder order);

// Inv and Maj require the two-argument overload.
std::int64_t stat_value(Stat s, const ColoredPerm& pi);
std::int64_t stat_value(Stat s, const ColoredPerm& pi, LetterOrder order);

const char* stat_name(Stat s);
std::optional<Stat> stat_from_name(const std::string& name);  // case-sensitive ("fmaj" vs "Fmaj")

// True for the statistics that only make sense on r = 2 elements.
bool stat_requires_signed(Stat s);

}  // namespace mahon
