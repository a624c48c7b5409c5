#include "mahon/statistics.hpp"

#include "mahon/checked_int.hpp"

namespace mahon {

std::int64_t inv(const ColoredPerm& pi, LetterOrder order) {
  const int n = pi.n();
  std::int64_t count = 0;
  for (int i = 0; i < n; ++i) {
    const Letter a = pi.letter(i);
    for (int j = i + 1; j < n; ++j) {
      if (letter_less(order, pi.letter(j), a)) ++count;
    }
  }
  return count;
}

std::int64_t maj(const ColoredPerm& pi, LetterOrder order) {
  const int n = pi.n();
  std::int64_t sum = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (letter_less(order, pi.letter(i + 1), pi.letter(i))) sum += i + 1;
  }
  return sum;
}

namespace {

void require_signed(const ColoredPerm& pi, Stat s) {
  if (pi.r() != 2) {
    throw DomainError(std::string(stat_name(s)) + " needs a signed (r = 2) element");
  }
}

void require_even_colored(const ColoredPerm& pi, Stat s) {
  std::int64_t colored = 0;
  for (int c : pi.z()) colored += c != 0;
  if (colored % 2 != 0) {
    throw DomainError(std::string(stat_name(s)) + " needs an even number of signs");
  }
}

std::int64_t neg_count(const ColoredPerm& pi) {
  std::int64_t c = 0;
  for (int z : pi.z()) c += z != 0;
  return c;
}

std::int64_t sum_neg(const ColoredPerm& pi) {
  std::int64_t s = 0;
  for (int i = 0; i < pi.n(); ++i) {
    if (pi.z()[static_cast<size_t>(i)] != 0) s += pi.sigma()[static_cast<size_t>(i)];
  }
  return s;
}

std::int64_t color_sum(const ColoredPerm& pi) {
  std::int64_t s = 0;
  for (int z : pi.z()) s += z;
  return s;
}

std::int64_t color_value_sum(const ColoredPerm& pi) {
  std::int64_t s = 0;
  for (int i = 0; i < pi.n(); ++i) {
    s += static_cast<std::int64_t>(pi.z()[static_cast<size_t>(i)]) * pi.sigma()[static_cast<size_t>(i)];
  }
  return s;
}

std::int64_t colored_shift_sum(const ColoredPerm& pi) {
  // sum over colored positions of (value + color - 1)
  std::int64_t s = 0;
  for (int i = 0; i < pi.n(); ++i) {
    const int z = pi.z()[static_cast<size_t>(i)];
    if (z != 0) s += pi.sigma()[static_cast<size_t>(i)] + z - 1;
  }
  return s;
}

std::int64_t fmaf(const ColoredPerm& pi) {
  const FixedReduction red = drop_fixed_points(pi);
  std::int64_t shift = 0;
  for (size_t j = 0; j < red.fixed_positions.size(); ++j) {
    shift += red.fixed_positions[j] - (static_cast<std::int64_t>(j) + 1);
  }
  return checked_add(checked_mul(pi.r(), shift), stat_value(Stat::FmajG, red.reduced));
}

}  // namespace

std::int64_t stat_value(Stat s, const ColoredPerm& pi) {
  switch (s) {
    case Stat::Inv:
    case Stat::Maj:
      throw DomainError("inv and maj need an explicit letter order");
    case Stat::Neg:
      require_signed(pi, s);
      return neg_count(pi);
    case Stat::SumNeg:
      require_signed(pi, s);
      return sum_neg(pi);
    case Stat::Major:
      require_signed(pi, s);
      return maj(pi, LetterOrder::SignBlockB);
    case Stat::LenB:
      require_signed(pi, s);
      return checked_add(inv(pi, LetterOrder::IntegerB), sum_neg(pi));
    case Stat::Fmaj:
      require_signed(pi, s);
      return checked_add(2 * maj(pi, LetterOrder::SignBlockB), neg_count(pi));
    case Stat::FmajCap:
      require_signed(pi, s);
      return checked_add(2 * maj(pi, LetterOrder::IntegerB), neg_count(pi));
    case Stat::Nmaj:
      require_signed(pi, s);
      return checked_add(maj(pi, LetterOrder::IntegerB), sum_neg(pi));
    case Stat::NegEven: {
      require_signed(pi, s);
      std::int64_t c = 0;
      for (int i = 0; i < pi.n(); ++i) {
        if (pi.z()[static_cast<size_t>(i)] != 0 && pi.sigma()[static_cast<size_t>(i)] % 2 == 0) ++c;
      }
      return c;
    }
    case Stat::LenD:
      require_signed(pi, s);
      require_even_colored(pi, s);
      return checked_add(inv(pi, LetterOrder::IntegerB), sum_neg(pi)) - neg_count(pi);
    case Stat::Dmaj:
      require_signed(pi, s);
      require_even_colored(pi, s);
      return checked_add(maj(pi, LetterOrder::IntegerB), sum_neg(pi)) - neg_count(pi);
    case Stat::Z:
      return color_sum(pi);
    case Stat::Zhat:
      return color_value_sum(pi);
    case Stat::LenG:
      return checked_add(inv(pi, LetterOrder::ValueBlockG), colored_shift_sum(pi));
    case Stat::Lmaj:
      return checked_add(maj(pi, LetterOrder::ValueBlockG), colored_shift_sum(pi));
    case Stat::ColorExcess: {
      std::int64_t sum = 0;
      for (int i = 0; i < pi.n(); ++i) {
        if (pi.z()[static_cast<size_t>(i)] != 0) sum += pi.sigma()[static_cast<size_t>(i)] - 1;
      }
      return sum;
    }
    case Stat::FmajG:
      return checked_add(checked_mul(pi.r(), maj(pi, LetterOrder::ColorBlockG)), color_sum(pi));
    case Stat::Rmaj:
      return checked_add(maj(pi, LetterOrder::ColorBlockG), color_value_sum(pi));
    case Stat::Rinv:
      return checked_add(inv(pi, LetterOrder::ColorBlockG), color_value_sum(pi));
    case Stat::Fmaf:
      return fmaf(pi);
    case Stat::Fix: {
      std::int64_t c = 0;
      for (int i = 0; i < pi.n(); ++i) {
        if (pi.sigma()[static_cast<size_t>(i)] == i + 1 && pi.z()[static_cast<size_t>(i)] == 0) ++c;
      }
      return c;
    }
  }
  throw DomainError("unhandled statistic");
}

std::int64_t stat_value(Stat s, const ColoredPerm& pi, LetterOrder order) {
  switch (s) {
    case Stat::Inv:
      return inv(pi, order);
    case Stat::Maj:
      return maj(pi, order);
    default:
      return stat_value(s, pi);
  }
}

const char* stat_name(Stat s) {
  switch (s) {
    case Stat::Inv: return "inv";
    case Stat::Maj: return "maj";
    case Stat::Neg: return "neg";
    case Stat::SumNeg: return "sumneg";
    case Stat::Major: return "major";
    case Stat::LenB: return "lenb";
    case Stat::Fmaj: return "fmaj";
    case Stat::FmajCap: return "Fmaj";
    case Stat::Nmaj: return "nmaj";
    case Stat::NegEven: return "negeven";
    case Stat::LenD: return "lend";
    case Stat::Dmaj: return "dmaj";
    case Stat::Z: return "z";
    case Stat::Zhat: return "zhat";
    case Stat::LenG: return "leng";
    case Stat::Lmaj: return "lmaj";
    case Stat::ColorExcess: return "colorexcess";
    case Stat::FmajG: return "fmajg";
    case Stat::Rmaj: return "rmaj";
    case Stat::Rinv: return "rinv";
    case Stat::Fmaf: return "fmaf";
    case Stat::Fix: return "fix";
  }
  return "?";
}

std::optional<Stat> stat_from_name(const std::string& name) {
  for (Stat s : {Stat::Inv, Stat::Maj, Stat::Neg, Stat::SumNeg, Stat::Major, Stat::LenB,
                 Stat::Fmaj, Stat::FmajCap, Stat::Nmaj, Stat::NegEven, Stat::LenD, Stat::Dmaj,
                 Stat::Z, Stat::Zhat, Stat::LenG, Stat::Lmaj, Stat::ColorExcess, Stat::FmajG,
                 Stat::Rmaj, Stat::Rinv, Stat::Fmaf, Stat::Fix}) {
    if (name == stat_name(s)) return s;
  }
  return std::nullopt;
}

bool stat_requires_signed(Stat s) {
  switch (s) {
    case Stat::Neg:
    case Stat::SumNeg:
    case Stat::Major:
    case Stat::LenB:
    case Stat::Fmaj:
    case Stat::FmajCap:
    case Stat::Nmaj:
    case Stat::NegEven:
    case Stat::LenD:
    case Stat::Dmaj:
      return true;
    default:
      return false;
  }
}

}  // namespace mahon
