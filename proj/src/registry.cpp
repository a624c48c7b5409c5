#include "mahon/registry.hpp"

#include <utility>

#include "mahon/errors.hpp"

namespace mahon {

namespace {

CycInt sgn(int ring, long long e) { return CycInt(ring, ((e % 2) + 2) % 2 ? -1 : 1); }

Poly2 br(int k, const CycInt& u, int qp, int tp = 0) { return Poly2::q_bracket(k, u, qp, tp); }

// ---- product formulas, plain permutations (ring 1) ----

Poly2 rhs_s_factorial(const VerifyParams& p) {
  Poly2 out = Poly2::one(1);
  for (int k = 1; k <= p.n; ++k) out *= br(k, CycInt(1, 1), 1);
  return out;
}

Poly2 rhs_s_alternating(const VerifyParams& p) {
  Poly2 out = Poly2::one(1);
  for (int k = 1; k <= p.n; ++k) out *= br(k, sgn(1, k - 1), 1);
  return out;
}

// ---- product formulas, signed permutations (ring 2) ----

Poly2 rhs_b_even_product(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2 * k, CycInt(2, 1), 1);
  return out;
}

Poly2 rhs_b_u_tq(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, CycInt(2, 1), k, 1);
  return out;
}

Poly2 rhs_b_u_evenneg(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, sgn(2, k - 1), k);
  return out;
}

Poly2 rhs_b_len_sign(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2 * k, CycInt(2, -1), 1);
  return out;
}

Poly2 rhs_b_len_neg(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, CycInt(2, -1), k) * br(k, CycInt(2, 1), 1);
  return out;
}

Poly2 rhs_b_len_abssign(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, sgn(2, k - 1), k) * br(k, CycInt(2, -1), 1);
  return out;
}

Poly2 rhs_b_len_inva(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, CycInt(2, 1), k) * br(k, CycInt(2, -1), 1);
  return out;
}

Poly2 rhs_b_nmaj_sign(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, sgn(2, k), k) * br(k, sgn(2, k - 1), 1);
  return out;
}

Poly2 rhs_b_nmaj_abssign(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, sgn(2, k - 1), k) * br(k, sgn(2, k - 1), 1);
  return out;
}

Poly2 rhs_b_nmaj_inva(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, CycInt(2, 1), k) * br(k, sgn(2, k - 1), 1);
  return out;
}

Poly2 rhs_b_fmajcap_sign(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, sgn(2, k), 1) * br(k, sgn(2, k - 1), 2);
  return out;
}

Poly2 rhs_b_fmajcap_neg(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, CycInt(2, -1), 1) * br(k, CycInt(2, 1), 2);
  return out;
}

Poly2 rhs_b_fmajcap_abssign(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, sgn(2, k - 1), 1) * br(k, sgn(2, k - 1), 2);
  return out;
}

Poly2 rhs_b_fmajcap_inva(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k <= p.n; ++k) out *= br(2, CycInt(2, 1), 1) * br(k, sgn(2, k - 1), 2);
  return out;
}

// ---- product formulas, even-signed permutations (ring 2) ----

Poly2 rhs_d_dist(const VerifyParams& p) {
  Poly2 out = br(p.n, CycInt(2, 1), 1);
  for (int k = 1; k < p.n; ++k) out *= br(2 * k, CycInt(2, 1), 1);
  return out;
}

Poly2 rhs_d_uset(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k < p.n; ++k) out *= br(2, CycInt(2, 1), k);
  return out;
}

Poly2 rhs_d_len_sign(const VerifyParams& p) {
  Poly2 out = br(p.n, CycInt(2, -1), 1);
  for (int k = 1; k < p.n; ++k) out *= br(2 * k, CycInt(2, -1), 1);
  return out;
}

Poly2 rhs_d_len_inva_printed(const VerifyParams& p) {
  Poly2 out = br(p.n, CycInt(2, -1), 1);
  for (int k = 1; k <= p.n; ++k) out *= br(2, CycInt(2, 1), k) * br(k, CycInt(2, -1), 1);
  return out;
}

Poly2 rhs_d_len_inva_corrected(const VerifyParams& p) {
  Poly2 out = Poly2::one(2);
  for (int k = 1; k < p.n; ++k) out *= br(2, CycInt(2, 1), k);
  for (int k = 1; k <= p.n; ++k) out *= br(k, CycInt(2, -1), 1);
  return out;
}

Poly2 rhs_d_dmaj_sign(const VerifyParams& p) {
  Poly2 out = br(p.n, sgn(2, p.n - 1), 1);
  for (int k = 1; k < p.n; ++k) out *= br(2, sgn(2, k), k) * br(k, sgn(2, k - 1), 1);
  return out;
}

Poly2 rhs_d_dmaj_inva(const VerifyParams& p) {
  Poly2 out = br(p.n, sgn(2, p.n - 1), 1);
  for (int k = 1; k < p.n; ++k) out *= br(2, CycInt(2, 1), k) * br(k, sgn(2, k - 1), 1);
  return out;
}

// ---- product formulas, colored permutations (ring r) ----

Poly2 rhs_g_mahonian(const VerifyParams& p) {
  const CycInt one(p.r, 1);
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) {
    Poly2 factor = Poly2::one(p.r);
    factor += Poly2::term(one, k, 0) * br(p.r - 1, one, 1);
    out *= br(k, one, 1) * factor;
  }
  return out;
}

Poly2 rhs_g_u_f(const VerifyParams& p) {
  const CycInt one(p.r, 1);
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) {
    Poly2 factor = Poly2::one(p.r);
    factor += Poly2::term(one, 1, k - 1) * br(p.r - 1, one, 1);
    out *= factor;
  }
  return out;
}

Poly2 chi_factor(const VerifyParams& p, int k) {
  const CycInt wb = CycInt::omega(p.r, p.b);
  Poly2 factor = Poly2::one(p.r);
  factor += Poly2::term(sgn(p.r, static_cast<long long>(p.a) * (k + 1)) * wb, k, 0) *
            br(p.r - 1, wb, 1);
  return factor;
}

Poly2 rhs_g_len_chi(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) out *= br(k, sgn(p.r, p.a), 1) * chi_factor(p, k);
  return out;
}

Poly2 rhs_g_lmaj_chi(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) {
    out *= br(k, sgn(p.r, static_cast<long long>(p.a) * (k - 1)), 1) * chi_factor(p, k);
  }
  return out;
}

Poly2 rhs_g5_dist(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) out *= br(p.r * k, CycInt(p.r, 1), 1);
  return out;
}

Poly2 rhs_g5_u_r(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) out *= br(p.r, CycInt(p.r, 1), k, 1);
  return out;
}

Poly2 rhs_g5_rmaj_fmaj(const VerifyParams& p) {
  const CycInt one(p.r, 1);
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) out *= br(p.r, one, 1, k) * br(k, one, p.r, 1);
  return out;
}

Poly2 rhs_g5_rinv_rmaj(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) out *= br(p.r, sgn(p.r, k), k) * br(k, sgn(p.r, k - 1), 1);
  return out;
}

Poly2 rhs_g5_rinv_fmaj(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) out *= br(p.r, sgn(p.r, k), 1) * br(k, sgn(p.r, k - 1), p.r);
  return out;
}

Poly2 rhs_g5_fmaj_rinv(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) {
    out *= br(p.r, CycInt(p.r, -1), k) *
           br(k, sgn(p.r, static_cast<long long>(k - 1) * p.r), 1);
  }
  return out;
}

Poly2 rhs_g5_fmaf_signed(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) out *= br(p.r, CycInt(p.r, -1), k) * br(k, CycInt(p.r, 1), 1);
  return out;
}

Poly2 rhs_g5_flag_alternating(const VerifyParams& p) {
  Poly2 out = Poly2::one(p.r);
  for (int k = 1; k <= p.n; ++k) out *= br(p.r * k, CycInt(p.r, -1), 1);
  return out;
}

// ---- weight shorthands ----

WeightSpec wq(Stat q) {
  WeightSpec w;
  w.q_stat = q;
  return w;
}

WeightSpec wqt(Stat q, Stat t) {
  WeightSpec w;
  w.q_stat = q;
  w.t_stat = t;
  return w;
}

WeightSpec wchar(CharSpec c, Stat q) {
  WeightSpec w;
  w.character = c;
  w.q_stat = q;
  return w;
}

WeightSpec wsign(Stat s, Stat q) {
  WeightSpec w;
  w.sign_stat = s;
  w.q_stat = q;
  return w;
}

bool parity_lemma_holds(const ColoredPerm& pi) {
  const std::int64_t both =
      inv(pi.abs_perm(), LetterOrder::NaturalS) + inv(pi, LetterOrder::IntegerB);
  return ((both % 2) + 2) % 2 == stat_value(Stat::NegEven, pi) % 2;
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> cat;
  const CharSpec b_sign = CharSpec::named(Family::B, CharName::Sign);
  const CharSpec b_neg = CharSpec::named(Family::B, CharName::NegParity);
  const CharSpec b_abs = CharSpec::named(Family::B, CharName::AbsSign);
  const CharSpec b_inva = CharSpec::named(Family::B, CharName::InvA);
  const CharSpec d_sign = CharSpec::named(Family::D, CharName::Sign);
  const CharSpec d_inva = CharSpec::named(Family::D, CharName::InvA);
  const CharSpec chi_ab = CharSpec::chi(0, 0);  // indices substituted per run

  cat.push_back({.id = "S.poincare",
                 .family = Family::S,
                 .weights = {wq(Stat::Inv), wq(Stat::Maj)},
                 .rhs = rhs_s_factorial,
                 .fixed_r = 1,
                 .source = "Eq. (1)"});
  cat.push_back({.id = "S.gessel-simion",
                 .family = Family::S,
                 .weights = {wchar(CharSpec::named(Family::S, CharName::Sign), Stat::Maj)},
                 .rhs = rhs_s_alternating,
                 .fixed_r = 1,
                 .source = "Eq. (2)"});

  cat.push_back({.id = "B.dist.len",
                 .family = Family::B,
                 .weights = {wq(Stat::LenB)},
                 .rhs = rhs_b_even_product,
                 .fixed_r = 2,
                 .source = "Eq. (5)"});
  cat.push_back({.id = "B.dist.fmaj",
                 .family = Family::B,
                 .weights = {wq(Stat::Fmaj)},
                 .rhs = rhs_b_even_product,
                 .fixed_r = 2,
                 .source = "Eq. (6)"});
  cat.push_back({.id = "B.dist.Fmaj",
                 .family = Family::B,
                 .weights = {wq(Stat::FmajCap)},
                 .rhs = rhs_b_even_product,
                 .fixed_r = 2,
                 .source = "Eq. (6)"});
  cat.push_back({.id = "B.dist.nmaj",
                 .family = Family::B,
                 .weights = {wq(Stat::Nmaj)},
                 .rhs = rhs_b_even_product,
                 .fixed_r = 2,
                 .source = "Eq. (6)",
                 .note = "the worked six-letter example evaluates to 24 under the definition; "
                         "the text prints 30 for it"});

  cat.push_back({.id = "B.U.Btq",
                 .family = Family::B,
                 .domain = DomainKind::USet,
                 .enum_order = LetterOrder::IntegerB,
                 .weights = {wqt(Stat::LenB, Stat::Neg)},
                 .rhs = rhs_b_u_tq,
                 .fixed_r = 2,
                 .source = "Lemma 2.2, Eq. (7)"});
  cat.push_back({.id = "B.U.evenneg",
                 .family = Family::B,
                 .domain = DomainKind::USet,
                 .enum_order = LetterOrder::IntegerB,
                 .weights = {wsign(Stat::NegEven, Stat::LenB)},
                 .rhs = rhs_b_u_evenneg,
                 .fixed_r = 2,
                 .source = "Lemma 2.2, Eq. (8)"});
  cat.push_back({.id = "B.parity",
                 .family = Family::B,
                 .check = CheckKind::Pointwise,
                 .weights = {wq(Stat::LenB)},
                 .pointwise = parity_lemma_holds,
                 .fixed_r = 2,
                 .source = "Lemma 2.3",
                 .note = "per element, inv of the underlying permutation plus the window "
                         "inversion count has the parity of the even-valued negative count"});

  cat.push_back({.id = "B.len.sign",
                 .family = Family::B,
                 .weights = {wchar(b_sign, Stat::LenB)},
                 .rhs = rhs_b_len_sign,
                 .fixed_r = 2,
                 .source = "Thm 2.4(1)"});
  cat.push_back({.id = "B.len.neg",
                 .family = Family::B,
                 .weights = {wchar(b_neg, Stat::LenB)},
                 .rhs = rhs_b_len_neg,
                 .fixed_r = 2,
                 .source = "Thm 2.4(2)"});
  cat.push_back({.id = "B.len.abssign",
                 .family = Family::B,
                 .weights = {wchar(b_abs, Stat::LenB)},
                 .rhs = rhs_b_len_abssign,
                 .fixed_r = 2,
                 .source = "Thm 2.4(3)"});
  cat.push_back({.id = "B.len.invA",
                 .family = Family::B,
                 .weights = {wchar(b_inva, Stat::LenB)},
                 .rhs = rhs_b_len_inva,
                 .fixed_r = 2,
                 .source = "Thm 2.4(4)"});

  cat.push_back({.id = "B.nmaj.sign",
                 .family = Family::B,
                 .weights = {wchar(b_sign, Stat::Nmaj)},
                 .rhs = rhs_b_nmaj_sign,
                 .fixed_r = 2,
                 .source = "Thm 2.5(1)"});
  cat.push_back({.id = "B.nmaj.neg",
                 .family = Family::B,
                 .weights = {wchar(b_neg, Stat::Nmaj)},
                 .rhs = rhs_b_len_neg,
                 .fixed_r = 2,
                 .source = "Thm 2.5(2)"});
  cat.push_back({.id = "B.nmaj.abssign",
                 .family = Family::B,
                 .weights = {wchar(b_abs, Stat::Nmaj)},
                 .rhs = rhs_b_nmaj_abssign,
                 .fixed_r = 2,
                 .source = "Thm 2.5(3)"});
  cat.push_back({.id = "B.nmaj.invA",
                 .family = Family::B,
                 .weights = {wchar(b_inva, Stat::Nmaj)},
                 .rhs = rhs_b_nmaj_inva,
                 .fixed_r = 2,
                 .source = "Thm 2.5(4)"});

  cat.push_back({.id = "B.Fmaj.sign",
                 .family = Family::B,
                 .weights = {wchar(b_sign, Stat::FmajCap)},
                 .rhs = rhs_b_fmajcap_sign,
                 .fixed_r = 2,
                 .source = "Thm 2.6(1)"});
  cat.push_back({.id = "B.Fmaj.neg",
                 .family = Family::B,
                 .weights = {wchar(b_neg, Stat::FmajCap)},
                 .rhs = rhs_b_fmajcap_neg,
                 .fixed_r = 2,
                 .source = "Thm 2.6(2)"});
  cat.push_back({.id = "B.Fmaj.abssign",
                 .family = Family::B,
                 .weights = {wchar(b_abs, Stat::FmajCap)},
                 .rhs = rhs_b_fmajcap_abssign,
                 .fixed_r = 2,
                 .source = "Thm 2.6(3)"});
  cat.push_back({.id = "B.Fmaj.invA",
                 .family = Family::B,
                 .weights = {wchar(b_inva, Stat::FmajCap)},
                 .rhs = rhs_b_fmajcap_inva,
                 .fixed_r = 2,
                 .source = "Thm 2.6(4)"});

  cat.push_back({.id = "D.dist",
                 .family = Family::D,
                 .weights = {wq(Stat::LenD), wq(Stat::Dmaj)},
                 .rhs = rhs_d_dist,
                 .fixed_r = 2,
                 .source = "Eq. (9)"});
  cat.push_back({.id = "D.U.BD",
                 .family = Family::D,
                 .domain = DomainKind::USet,
                 .enum_order = LetterOrder::IntegerB,
                 .weights = {wq(Stat::LenD)},
                 .rhs = rhs_d_uset,
                 .fixed_r = 2,
                 .source = "Lemma 3.1"});
  cat.push_back({.id = "D.len.sign",
                 .family = Family::D,
                 .weights = {wchar(d_sign, Stat::LenD)},
                 .rhs = rhs_d_len_sign,
                 .fixed_r = 2,
                 .source = "Thm 3.2(1)"});
  cat.push_back({.id = "D.len.invA.printed",
                 .family = Family::D,
                 .weights = {wchar(d_inva, Stat::LenD)},
                 .rhs = rhs_d_len_inva_printed,
                 .fixed_r = 2,
                 .expected = ExpectedStatus::KnownErratum,
                 .source = "Thm 3.2(2) as printed",
                 .note = "fails already at n = 2; the stated product keeps a stray leading "
                         "factor and runs the doubled factors one term too far"});
  cat.push_back({.id = "D.len.invA.corrected",
                 .family = Family::D,
                 .weights = {wchar(d_inva, Stat::LenD)},
                 .rhs = rhs_d_len_inva_corrected,
                 .fixed_r = 2,
                 .source = "Thm 3.2(2) corrected",
                 .note = "replacement derived from the increasing-window sum times the "
                         "alternating factorial product"});
  cat.push_back({.id = "D.dmaj.sign",
                 .family = Family::D,
                 .weights = {wchar(d_sign, Stat::Dmaj)},
                 .rhs = rhs_d_dmaj_sign,
                 .fixed_r = 2,
                 .source = "Thm 3.3(1)"});
  cat.push_back({.id = "D.dmaj.invA",
                 .family = Family::D,
                 .weights = {wchar(d_inva, Stat::Dmaj)},
                 .rhs = rhs_d_dmaj_inva,
                 .fixed_r = 2,
                 .source = "Thm 3.3(2)"});

  cat.push_back({.id = "G.dist.len",
                 .family = Family::G,
                 .weights = {wq(Stat::LenG)},
                 .rhs = rhs_g_mahonian,
                 .source = "Sec. 4.1"});
  cat.push_back({.id = "G.dist.lmaj",
                 .family = Family::G,
                 .weights = {wq(Stat::Lmaj)},
                 .rhs = rhs_g_mahonian,
                 .source = "Sec. 4.1"});
  cat.push_back({.id = "G.U.F",
                 .family = Family::G,
                 .domain = DomainKind::USet,
                 .enum_order = LetterOrder::ValueBlockG,
                 .weights = {wqt(Stat::Z, Stat::ColorExcess)},
                 .rhs = rhs_g_u_f,
                 .source = "Lemma 4.2"});
  cat.push_back({.id = "G.len.chi",
                 .family = Family::G,
                 .weights = {wchar(chi_ab, Stat::LenG)},
                 .rhs = rhs_g_len_chi,
                 .takes_ab = true,
                 .source = "Thm 4.3, Eq. (14)"});
  cat.push_back({.id = "G.lmaj.chi",
                 .family = Family::G,
                 .weights = {wchar(chi_ab, Stat::Lmaj)},
                 .rhs = rhs_g_lmaj_chi,
                 .takes_ab = true,
                 .source = "Thm 4.3, Eq. (15)"});

  cat.push_back({.id = "G5.dist.fmaj",
                 .family = Family::G,
                 .weights = {wq(Stat::FmajG)},
                 .rhs = rhs_g5_dist,
                 .source = "Eq. (16)"});
  cat.push_back({.id = "G5.dist.rmaj",
                 .family = Family::G,
                 .weights = {wq(Stat::Rmaj)},
                 .rhs = rhs_g5_dist,
                 .source = "Eq. (16)"});
  cat.push_back({.id = "G5.dist.fmaf",
                 .family = Family::G,
                 .weights = {wq(Stat::Fmaf)},
                 .rhs = rhs_g5_dist,
                 .source = "Eq. (16)"});
  cat.push_back({.id = "G5.dist.rinv",
                 .family = Family::G,
                 .weights = {wq(Stat::Rinv)},
                 .rhs = rhs_g5_dist,
                 .source = "Thm 5.1 with Eq. (16)"});
  cat.push_back({.id = "G5.symmetry",
                 .family = Family::G,
                 .check = CheckKind::Transpose,
                 .weights = {wqt(Stat::Rmaj, Stat::Rinv)},
                 .source = "Thm 5.1"});
  cat.push_back({.id = "G5.U.R",
                 .family = Family::G,
                 .domain = DomainKind::USet,
                 .enum_order = LetterOrder::ColorBlockG,
                 .weights = {wqt(Stat::Zhat, Stat::Z)},
                 .rhs = rhs_g5_u_r,
                 .source = "Lemma 5.2"});
  cat.push_back({.id = "G5.rmaj-fmaj",
                 .family = Family::G,
                 .weights = {wqt(Stat::FmajG, Stat::Rmaj)},
                 .rhs = rhs_g5_rmaj_fmaj,
                 .source = "Thm 5.3"});
  cat.push_back({.id = "G5.rinv-rmaj",
                 .family = Family::G,
                 .weights = {wsign(Stat::Rinv, Stat::Rmaj), wsign(Stat::Rmaj, Stat::Rinv)},
                 .rhs = rhs_g5_rinv_rmaj,
                 .source = "Thm 5.4"});
  cat.push_back({.id = "G5.rinv-fmaj",
                 .family = Family::G,
                 .weights = {wsign(Stat::Rinv, Stat::FmajG)},
                 .rhs = rhs_g5_rinv_fmaj,
                 .source = "Thm 5.5(1)"});
  cat.push_back({.id = "G5.fmaj-rinv",
                 .family = Family::G,
                 .weights = {wsign(Stat::FmajG, Stat::Rinv)},
                 .rhs = rhs_g5_fmaj_rinv,
                 .source = "Thm 5.5(2)"});
  cat.push_back({.id = "G5.fmaf-rinv",
                 .family = Family::G,
                 .weights = {wsign(Stat::Fmaf, Stat::Rinv)},
                 .rhs = rhs_g5_fmaf_signed,
                 .even_r_only = true,
                 .source = "Thm 5.6"});
  cat.push_back({.id = "G5.fmaf-rmaj",
                 .family = Family::G,
                 .weights = {wsign(Stat::Fmaf, Stat::Rmaj)},
                 .rhs = rhs_g5_fmaf_signed,
                 .even_r_only = true,
                 .source = "Thm 5.6"});
  cat.push_back({.id = "G5.fmaj-fmaf",
                 .family = Family::G,
                 .weights = {wsign(Stat::FmajG, Stat::Fmaf)},
                 .rhs = rhs_g5_flag_alternating,
                 .even_r_only = true,
                 .source = "Thm 5.7"});
  cat.push_back({.id = "G5.fmaf-fmaj",
                 .family = Family::G,
                 .weights = {wsign(Stat::Fmaf, Stat::FmajG)},
                 .rhs = rhs_g5_flag_alternating,
                 .even_r_only = true,
                 .source = "Thm 5.7"});

  return cat;
}

}  // namespace

const std::vector<IdentityRecord>& all_identities() {
  static const std::vector<IdentityRecord> catalog = build_catalog();
  return catalog;
}

const IdentityRecord* find_identity(std::string_view id) {
  for (const IdentityRecord& rec : all_identities()) {
    if (rec.id == id) return &rec;
  }
  return nullptr;
}

std::vector<const IdentityRecord*> list_identities(std::string_view filter) {
  std::vector<const IdentityRecord*> out;
  std::string prefix;
  if (!filter.empty()) prefix = std::string(filter) + ".";
  for (const IdentityRecord& rec : all_identities()) {
    if (prefix.empty() || rec.id.rfind(prefix, 0) == 0) out.push_back(&rec);
  }
  return out;
}

std::string domain_description(const IdentityRecord& rec) {
  if (rec.domain == DomainKind::Group) {
    switch (rec.family) {
      case Family::S: return "S_n";
      case Family::B: return "B_n";
      case Family::D: return "D_n";
      case Family::G: return "G(r,n)";
    }
  }
  switch (rec.family) {
    case Family::B: return "U_n in B_n";
    case Family::D: return "U_n^D in D_n";
    case Family::G:
      return rec.enum_order == LetterOrder::ColorBlockG ? "U_{r,n} (color blocks)"
                                                        : "U_{r,n} (value blocks)";
    case Family::S: break;
  }
  return "U_n in S_n";
}

std::string constraints_description(const IdentityRecord& rec) {
  std::string out;
  if (rec.fixed_r != 0) {
    out = "r=" + std::to_string(rec.fixed_r);
  } else if (rec.even_r_only) {
    out = "r even";
  } else {
    out = "r>=1";
  }
  if (rec.min_n > 1) out += "; n>=" + std::to_string(rec.min_n);
  if (rec.takes_ab) out += "; a in {0,1}, b in [0,r)";
  if (rec.expected == ExpectedStatus::KnownErratum) out += "; expected mismatch";
  return out;
}

std::string weight_description(const WeightSpec& w) {
  std::string out;
  if (w.character) {
    if (w.character->name == CharName::Chi) {
      out += "chi_{a,b} * ";
    } else {
      out += std::string(char_name(w.character->name)) + " * ";
    }
  }
  if (w.sign_stat) out += std::string("(-1)^") + stat_name(*w.sign_stat) + " * ";
  if (w.t_stat) out += std::string("t^") + stat_name(*w.t_stat) + " ";
  out += std::string("q^") + stat_name(w.q_stat);
  return out;
}

std::string weights_description(const IdentityRecord& rec) {
  std::string out;
  for (const WeightSpec& w : rec.weights) {
    if (!out.empty()) out += " and ";
    out += weight_description(w);
  }
  if (rec.check == CheckKind::Transpose) out += " vs its (q,t) transpose";
  if (rec.check == CheckKind::Pointwise) out += " (per-element parity check)";
  return out;
}

}  // namespace mahon
