#include "mahon/selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mahon/characters.hpp"
#include "mahon/verifier.hpp"

namespace mahon {

namespace {

// Runs the body, recording an exception as a failure instead of propagating.
SelfCheck checked(const std::string& name, const std::function<std::string()>& body) {
  SelfCheck c;
  c.name = name;
  try {
    c.detail = body();
    c.passed = true;
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = e.what();
  }
  return c;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("failed: " + what);
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << "failed: " << what << " (got " << got << ", want " << want << ")";
    throw std::runtime_error(os.str());
  }
}

std::string signed_example() {
  const ColoredPerm pi = ColoredPerm::parse(2, "-3 1 -6 2 -5 -4");
  expect_eq(inv(pi, LetterOrder::IntegerB), std::int64_t{8}, "inv");
  expect_eq(maj(pi, LetterOrder::IntegerB), std::int64_t{6}, "maj");
  expect_eq(stat_value(Stat::Major, pi), std::int64_t{11}, "major");
  expect_eq(stat_value(Stat::Neg, pi), std::int64_t{4}, "neg");
  expect_eq(stat_value(Stat::SumNeg, pi), std::int64_t{18}, "sumneg");
  expect_eq(stat_value(Stat::LenB, pi), std::int64_t{26}, "lenb");
  expect_eq(stat_value(Stat::Fmaj, pi), std::int64_t{26}, "fmaj");
  expect_eq(stat_value(Stat::FmajCap, pi), std::int64_t{16}, "Fmaj");
  expect_eq(stat_value(Stat::NegEven, pi), std::int64_t{2}, "negeven");
  expect_eq(stat_value(Stat::Nmaj, pi), std::int64_t{24}, "nmaj");
  return "-3 1 -6 2 -5 -4: ten statistics as recorded (nmaj = 24; a published "
         "restatement shows 30)";
}

std::string colored_example() {
  const ColoredPerm pi = ColoredPerm::parse(4, "2[1] 1[3] 5 4 3[2]");
  expect_eq(maj(pi, LetterOrder::ColorBlockG), std::int64_t{8}, "maj");
  expect_eq(inv(pi, LetterOrder::ColorBlockG), std::int64_t{5}, "inv");
  expect_eq(stat_value(Stat::Z, pi), std::int64_t{6}, "z");
  expect_eq(stat_value(Stat::Zhat, pi), std::int64_t{11}, "zhat");
  expect_eq(stat_value(Stat::FmajG, pi), std::int64_t{38}, "fmajg");
  expect_eq(stat_value(Stat::Rmaj, pi), std::int64_t{19}, "rmaj");
  expect_eq(stat_value(Stat::Rinv, pi), std::int64_t{16}, "rinv");
  expect_eq(stat_value(Stat::Fmaf, pi), std::int64_t{34}, "fmaf");
  expect_eq(stat_value(Stat::Fix, pi), std::int64_t{1}, "fix");
  return "2[1] 1[3] 5 4 3[2] (r = 4): nine statistics as recorded";
}

std::string decomposition_roundtrip() {
  const ColoredPerm pi = ColoredPerm::parse(4, "2[1] 1[3] 5 4 3[2]");
  for (LetterOrder order : {LetterOrder::ValueBlockG, LetterOrder::ColorBlockG}) {
    const Decomposed d = decompose(pi, order);
    expect(recompose(d.tau, d.rho) == pi, "recompose(tau, rho) == pi");
    for (int i = 0; i + 1 < d.tau.n(); ++i) {
      expect(letter_less(order, d.tau.letter(i), d.tau.letter(i + 1)),
             "tau increasing in the chosen order");
    }
  }
  return "tau * rho factorization round-trips in both colored orders";
}

std::string even_signed_enumeration() {
  GroupStream stream(Family::D, 2, 2);
  ColoredPerm pi;
  std::vector<std::string> got;
  while (stream.next(pi)) {
    expect(stat_value(Stat::Neg, pi) % 2 == 0, "even number of negative letters");
    got.push_back(pi.to_string());
  }
  expect_eq(got.size(), size_t{4}, "|D_2|");
  std::vector<std::string> want = {"1 2", "-1 -2", "2 1", "-2 -1"};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  expect(got == want, "D_2 window list");
  return "D_2 = {1 2, -1 -2, 2 1, -2 -1}";
}

std::string length_distribution() {
  Poly2 dist(2);
  GroupStream stream(Family::B, 4, 2);
  ColoredPerm pi;
  std::uint64_t count = 0;
  const CycInt one(2, 1);
  while (stream.next(pi)) {
    dist.add_term(static_cast<int>(stat_value(Stat::LenB, pi)), 0, one);
    ++count;
  }
  expect_eq(count, std::uint64_t{384}, "|B_4|");
  Poly2 product = Poly2::one(2);
  for (int k = 1; k <= 4; ++k) product *= Poly2::q_bracket(2 * k, one, 1, 0);
  expect(dist == product, "length distribution = [2]_q [4]_q [6]_q [8]_q");
  return "B_4: 384 elements, length distribution equals [2]_q[4]_q[6]_q[8]_q";
}

std::string character_values() {
  const ColoredPerm pi = ColoredPerm::parse(2, "-2 1");
  const auto value = [&](CharName name) {
    return char_value(CharSpec::named(Family::B, name), pi, 2);
  };
  expect(value(CharName::Sign) == CycInt(2, 1), "sign(-2 1) = +1");
  expect(value(CharName::NegParity) == CycInt(2, -1), "negparity(-2 1) = -1");
  expect(value(CharName::AbsSign) == CycInt(2, -1), "abssign(-2 1) = -1");
  expect(value(CharName::InvA) == CycInt(2, 1), "inva(-2 1) = +1");
  expect(char_value(CharSpec::chi(1, 1), pi, 2) == CycInt(2, 1), "chi_{1,1} = sign");
  return "-2 1: the four order-two characters and chi_{1,1} agree with the tables";
}

std::string catalog_integrity() {
  const auto& cat = all_identities();
  expect_eq(cat.size(), size_t{47}, "catalog size");
  for (const IdentityRecord& rec : cat) {
    expect(find_identity(rec.id) == &rec, "find_identity(" + rec.id + ")");
    expect(!rec.weights.empty(), rec.id + " has a weight");
    expect(!rec.source.empty(), rec.id + " has a source");
  }
  return "47 entries, ids unique and resolvable, every entry sourced";
}

std::string verifier_spot_run() {
  VerifyParams p;
  p.n = 4;
  const VerifyReport s = verify("S.gessel-simion", p);
  expect(s.verdict == Verdict::Equal, "S.gessel-simion at n = 4");
  p.n = 2;
  const VerifyReport erratum = verify("D.len.invA.printed", p);
  expect(erratum.verdict == Verdict::ExpectedMismatchConfirmed,
         "the recorded-as-printed product fails, as its catalog row predicts");
  const VerifyReport fixed = verify("D.len.invA.corrected", p);
  expect(fixed.verdict == Verdict::Equal, "the corrected product matches");
  return "alternating sum certified; known erratum confirmed; correction certified";
}

}  // namespace

std::vector<SelfCheck> run_selftest() {
  return {
      checked("signed worked example", signed_example),
      checked("colored worked example", colored_example),
      checked("decomposition round-trip", decomposition_roundtrip),
      checked("even-signed enumeration", even_signed_enumeration),
      checked("length distribution product", length_distribution),
      checked("character values", character_values),
      checked("catalog integrity", catalog_integrity),
      checked("verifier spot run", verifier_spot_run),
  };
}

bool all_passed(const std::vector<SelfCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SelfCheck& c) { return c.passed; });
}

}  // namespace mahon
