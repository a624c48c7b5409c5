#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mahon/errors.hpp"

namespace mahon {

enum class Family { S, B, D, G };

Family family_from_name(const std::string& name);  // "s" | "b" | "d" | "g"
const char* family_name(Family f);

// Letter comparison conventions. A letter is a value v in 1..n with a color
// c in 0..r-1 (color 0 = uncolored; for r = 2, color 1 is the negative sign).
//
//   NaturalS    1 < 2 < ... < n                       (colors ignored)
//   IntegerB    -n < ... < -1 < 1 < ... < n           (signed integers, r = 2)
//   SignBlockB  -1 < -2 < ... < -n < 1 < ... < n      (r = 2)
//   ValueBlockG colored letters first, grouped by value descending, colors
//               descending inside a value; then uncolored ascending:
//               n^[r-1] < ... < n^[1] < ... < 1^[r-1] < ... < 1^[1] < 1 < ... < n
//   ColorBlockG colored letters grouped by color descending, values ascending
//               inside a color; then uncolored ascending:
//               1^[r-1] < ... < n^[r-1] < ... < 1^[1] < ... < n^[1] < 1 < ... < n
//
// For r = 2, ValueBlockG coincides with IntegerB and ColorBlockG with
// SignBlockB.
enum class LetterOrder { NaturalS, IntegerB, SignBlockB, ValueBlockG, ColorBlockG };

LetterOrder order_from_name(const std::string& name);
const char* order_name(LetterOrder o);

struct Letter {
  int value = 0;
  int color = 0;
  bool operator==(const Letter& o) const { return value == o.value && color == o.color; }
};

bool letter_less(LetterOrder o, const Letter& a, const Letter& b);
int compare_letters(LetterOrder o, const Letter& a, const Letter& b);  // -1 / 0 / +1

// An r-colored permutation of n letters in window notation: position i holds
// value sigma_i with color z_i. sigma is a permutation of 1..n. The classical
// groups embed as r = 1 (symmetric), r = 2 (hyperoctahedral; even color count
// for the even-signed subgroup).
class ColoredPerm {
 public:
  ColoredPerm();  // n = 0, r = 1
  ColoredPerm(int r, std::vector<int> sigma, std::vector<int> z);

  static ColoredPerm identity(int r, int n);

  // Whitespace separated letters: "5" (uncolored), "3[2]" (color 2), and for
  // r = 2 also "-3" as an alias of "3[1]".
  static ColoredPerm parse(int r, const std::string& text);

  int r() const { return r_; }
  int n() const { return static_cast<int>(sigma_.size()); }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& z() const { return z_; }
  Letter letter(int i) const { return Letter{sigma_[static_cast<size_t>(i)], z_[static_cast<size_t>(i)]}; }

  bool operator==(const ColoredPerm& o) const {
    return r_ == o.r_ && sigma_ == o.sigma_ && z_ == o.z_;
  }
  bool operator!=(const ColoredPerm& o) const { return !(*this == o); }

  std::string to_string() const;

  // Forget colors: the underlying permutation of 1..n as an r = 1 element.
  ColoredPerm abs_perm() const;

 private:
  int r_ = 1;
  std::vector<int> sigma_;
  std::vector<int> z_;

  void validate() const;

  friend class GroupStream;
  friend class USetStream;
};

// pi = tau * rho with tau the letters of pi sorted increasingly under the
// given order and rho in S_n the positions: pi_i = tau_{rho_i}.
struct Decomposed {
  ColoredPerm tau;
  ColoredPerm rho;  // r = 1
};

Decomposed decompose(const ColoredPerm& pi, LetterOrder order);

// Inverse of decompose: tau may carry any colors, rho must be uncolored.
ColoredPerm recompose(const ColoredPerm& tau, const ColoredPerm& rho);

// Remove uncolored fixed points (positions i with sigma_i = i, z_i = 0) and
// renumber the surviving values order-preservingly.
struct FixedReduction {
  std::vector<int> fixed_positions;  // 1-based, ascending
  ColoredPerm reduced;
};

FixedReduction drop_fixed_points(const ColoredPerm& pi);

std::uint64_t group_order(Family f, int n, int r);

// r implied by the family where it is fixed (S: 1, B/D: 2); must match.
void check_family_r(Family f, int r);

// Lazy stream over a whole group in lexicographic (sigma, z) order, z running
// fastest as a little-endian base-r odometer. The three-argument constructor
// restricts the stream to elements whose first letter is the given one, which
// partitions the group for parallel folds.
class GroupStream {
 public:
  GroupStream(Family f, int n, int r);
  GroupStream(Family f, int n, int r, Letter first);

  bool next(ColoredPerm& out);

  static std::vector<Letter> first_letters(Family f, int n, int r);

 private:
  Family f_;
  int n_, r_;
  bool fixed_first_ = false;
  bool done_ = false;
  std::vector<int> sigma_, z_;

  bool z_valid() const;
  bool advance_z();
  bool advance_sigma();
  void settle();  // move to the next valid state including the current one
};

// Lazy stream over the elements whose letters increase under the given order
// (one element per color assignment to values; r^n in total, or the
// even-colored half when even_colored_only is set).
class USetStream {
 public:
  USetStream(int n, int r, LetterOrder order, bool even_colored_only = false);

  bool next(ColoredPerm& out);

 private:
  int n_, r_;
  LetterOrder order_;
  bool even_only_;
  bool done_ = false;
  std::vector<int> colors_;  // colors_[v-1] = color of value v

  bool colors_valid() const;
  bool advance_colors();
  void emit(ColoredPerm& out) const;
};

}  // namespace mahon
