#include "mahon/characters.hpp"

#include <string>

#include "mahon/checked_int.hpp"
#include "mahon/errors.hpp"
#include "mahon/statistics.hpp"

namespace mahon {

CharSpec CharSpec::named(Family f, CharName n) {
  if (n == CharName::Chi) throw DomainError("chi characters take explicit indices; use CharSpec::chi");
  if (f == Family::G) throw DomainError("wreath families use chi characters");
  if (f == Family::S && n != CharName::Trivial && n != CharName::Sign) {
    throw DomainError("plain permutations only carry the trivial and sign characters");
  }
  CharSpec s;
  s.family = f;
  s.name = n;
  return s;
}

CharSpec CharSpec::chi(int a, int b) {
  CharSpec s;
  s.family = Family::G;
  s.name = CharName::Chi;
  s.a = a;
  s.b = b;
  return s;
}

namespace {

int parity_of(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

CharValue char_components(const CharSpec& spec, const ColoredPerm& pi) {
  CharValue out;
  switch (spec.name) {
    case CharName::Trivial:
      return out;
    case CharName::Sign:
      switch (spec.family) {
        case Family::S: out.parity = parity_of(inv(pi, LetterOrder::NaturalS)); return out;
        case Family::B: out.parity = parity_of(stat_value(Stat::LenB, pi)); return out;
        case Family::D: out.parity = parity_of(stat_value(Stat::LenD, pi)); return out;
        case Family::G: break;
      }
      break;
    case CharName::NegParity:
      out.parity = parity_of(stat_value(Stat::Neg, pi));
      return out;
    case CharName::AbsSign:
      out.parity = parity_of(inv(pi.abs_perm(), LetterOrder::NaturalS));
      return out;
    case CharName::InvA:
      out.parity = parity_of(inv(pi, LetterOrder::IntegerB));
      return out;
    case CharName::Chi: {
      if (spec.a < 0 || spec.a > 1) throw DomainError("chi index a must be 0 or 1");
      if (spec.b < 0 || spec.b >= pi.r()) {
        throw DomainError("chi index b must lie in [0, r)");
      }
      const std::int64_t z = stat_value(Stat::Z, pi);
      const std::int64_t leng = stat_value(Stat::LenG, pi);
      out.parity = parity_of(spec.a * (leng - z));
      out.omega_pow = static_cast<int>((static_cast<std::int64_t>(spec.b) * z) % pi.r());
      return out;
    }
  }
  throw DomainError("character is not defined for this family");
}

CycInt char_value(const CharSpec& spec, const ColoredPerm& pi, int ring) {
  const CharValue v = char_components(spec, pi);
  CycInt out(ring, v.parity ? -1 : 1);
  if (v.omega_pow != 0) {
    if (ring % pi.r() != 0) {
      throw RingMismatchError("ring order must be a multiple of the color count");
    }
    out *= CycInt::omega(ring, static_cast<long long>(v.omega_pow) * (ring / pi.r()));
  }
  return out;
}

ColoredPerm wreath_compose(const ColoredPerm& pi, const ColoredPerm& rho) {
  if (pi.r() != rho.r()) throw DomainError("composition needs matching color counts");
  if (pi.n() != rho.n()) throw DomainError("composition needs matching sizes");
  const int n = pi.n();
  std::vector<int> sigma(static_cast<size_t>(n));
  std::vector<int> z(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = rho.sigma()[static_cast<size_t>(i)];
    sigma[static_cast<size_t>(i)] = pi.sigma()[static_cast<size_t>(j - 1)];
    z[static_cast<size_t>(i)] =
        (pi.z()[static_cast<size_t>(j - 1)] + rho.z()[static_cast<size_t>(i)]) % pi.r();
  }
  return ColoredPerm(pi.r(), sigma, z);
}

const char* char_name(CharName name) {
  switch (name) {
    case CharName::Trivial: return "trivial";
    case CharName::Sign: return "sign";
    case CharName::NegParity: return "negparity";
    case CharName::AbsSign: return "abssign";
    case CharName::InvA: return "inva";
    case CharName::Chi: return "chi";
  }
  throw DomainError("unknown character");
}

std::optional<CharName> char_from_name(std::string_view text) {
  for (CharName c : {CharName::Trivial, CharName::Sign, CharName::NegParity, CharName::AbsSign,
                     CharName::InvA, CharName::Chi}) {
    if (text == char_name(c)) return c;
  }
  return std::nullopt;
}

}  // namespace mahon
