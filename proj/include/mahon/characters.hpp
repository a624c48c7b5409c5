#pragma once

#include <optional>
#include <string_view>

#include "mahon/cyclotomic.hpp"
#include "mahon/elements.hpp"

namespace mahon {

// One-dimensional multiplicative weights attached to group elements.
//
//   Trivial    always 1
//   Sign       (-1)^length: inv for S, lenb for B, lend for D
//   NegParity  (-1)^neg, signed families only
//   AbsSign    (-1)^inv(|pi|), the sign of the underlying plain permutation
//   InvA       (-1)^inv_A, the inversion count of the signed window read
//              left to right (not multiplicative, but used as a weight)
//   Chi        chi_{a,b} on wreath elements: (-1)^(a*(leng - z)) * w^(b*z)
//              with w a primitive r-th root of unity; the 2r choices of
//              (a, b) with a in {0,1}, b in {0,...,r-1} exhaust the
//              one-dimensional characters of the wreath product.
enum class CharName { Trivial, Sign, NegParity, AbsSign, InvA, Chi };

struct CharSpec {
  Family family = Family::B;
  CharName name = CharName::Trivial;
  int a = 0;  // only read when name == Chi
  int b = 0;  // only read when name == Chi

  static CharSpec named(Family f, CharName n);
  static CharSpec chi(int a, int b);
};

// A weight value factored as (-1)^parity * w^omega_pow with
// parity in {0,1} and omega_pow in [0, pi.r()).
struct CharValue {
  int parity = 0;
  int omega_pow = 0;
};

CharValue char_components(const CharSpec& spec, const ColoredPerm& pi);

// The same value materialized in Z[w_ring]. ring must be a multiple of
// pi.r() whenever the omega part is nonzero.
CycInt char_value(const CharSpec& spec, const ColoredPerm& pi, int ring);

// Group law on wreath elements: apply rho first, then pi. Values compose
// as plain permutations and colors add mod r along the way.
ColoredPerm wreath_compose(const ColoredPerm& pi, const ColoredPerm& rho);

const char* char_name(CharName name);
std::optional<CharName> char_from_name(std::string_view text);

}  // namespace mahon
