#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "mahon/cyclotomic.hpp"

using mahon::CycInt;
using mahon::cyclotomic_degree;
using mahon::cyclotomic_poly;

namespace {

// Independent long-division oracle (no reuse of the library's divider).
std::vector<std::int64_t> oracle_divide(std::vector<std::int64_t> num,
                                        const std::vector<std::int64_t>& den) {
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
    std::int64_t c = num[i];
    if (!c) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (auto c : num) REQUIRE(c == 0);
  return q;
}

CycInt random_cycint(int r, std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  std::vector<std::int64_t> c(cyclotomic_degree(r));
  for (auto& x : c) x = d(rng);
  return CycInt::from_coeffs(r, c);
}

}  // namespace

TEST_CASE("low-order cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_poly(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_poly(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_poly(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_poly(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("order six against a hand-rolled division oracle") {
  // (x^6 - 1) / (Phi_1 Phi_2 Phi_3) = x^2 - x + 1
  std::vector<std::int64_t> p{-1, 0, 0, 0, 0, 0, 1};
  p = oracle_divide(p, {-1, 1});
  p = oracle_divide(p, {1, 1});
  p = oracle_divide(p, {1, 1, 1});
  CHECK(p == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_poly(6) == p);
}

TEST_CASE("degrees match Euler phi") {
  const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (int r = 1; r <= 12; ++r) CHECK(cyclotomic_degree(r) == phi[r]);
}

TEST_CASE("roots of unity") {
  CHECK(CycInt::omega(2, 1) == CycInt(2, -1));
  CHECK(CycInt::omega(4, 2) == CycInt(4, -1));
  CHECK(CycInt::omega(4, 1) * CycInt::omega(4, 3) == CycInt(4, 1));
  CHECK(CycInt::omega(5, 2) * CycInt::omega(5, 4) == CycInt::omega(5, 1));
  CHECK(CycInt::omega(3, -1) == CycInt::omega(3, 2));

  SUBCASE("w^r = 1 and w^j runs the full cycle") {
    for (int r = 1; r <= 10; ++r) {
      for (int k = 0; k < r; ++k) {
        CHECK(CycInt::omega(r, k).pow(r) == CycInt(r, 1));
        CHECK(CycInt::omega(r, k) * CycInt::omega(r, r - k) == CycInt(r, 1));
      }
    }
  }

  SUBCASE("sum of all r-th roots vanishes for r > 1") {
    for (int r = 2; r <= 10; ++r) {
      CycInt s(r);
      for (int j = 0; j < r; ++j) s += CycInt::omega(r, j);
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("omega(3) arithmetic") {
  const CycInt w = CycInt::omega(3, 1);
  CHECK((CycInt(3, 1) + w + w * w).is_zero());
  CHECK(w * w == CycInt::from_coeffs(3, {-1, -1}));
  CHECK(w.to_string() == "w");
  CHECK((w * w).to_string() == "-1-w");
  CHECK((CycInt(3, 2) + w).to_string() == "2+w");
}

TEST_CASE("ring axioms on pseudorandom elements") {
  std::mt19937 rng(20240815);
  for (int r : {1, 2, 3, 4, 5, 6, 8, 12}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycInt a = random_cycint(r, rng);
      const CycInt b = random_cycint(r, rng);
      const CycInt c = random_cycint(r, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a + CycInt(r) == a);
      CHECK(a * CycInt(r, 1) == a);
      CHECK(a - b == a + (-b));
    }
  }
}

TEST_CASE("integer detection") {
  CHECK(CycInt(3, 7).is_integer());
  CHECK(CycInt(3, 7).integer_value() == 7);
  CHECK_FALSE(CycInt::omega(3, 1).is_integer());
  CHECK_THROWS_AS(CycInt::omega(3, 1).integer_value(), mahon::DomainError);
  // w is an integer in the degenerate rings
  CHECK(CycInt::omega(1, 1).integer_value() == 1);
  CHECK(CycInt::omega(2, 1).integer_value() == -1);
}

TEST_CASE("overflow is detected, never wrapped") {
  const CycInt big(2, std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * CycInt(2, 4), mahon::OverflowError);
  const CycInt maxv(2, INT64_MAX);
  CHECK_THROWS_AS(maxv + CycInt(2, 1), mahon::OverflowError);
  CHECK_THROWS_AS(CycInt(2, INT64_MIN) - CycInt(2, 1), mahon::OverflowError);
}

TEST_CASE("ring mismatch is an error") {
  CHECK_THROWS_AS(CycInt(2, 1) + CycInt(3, 1), mahon::RingMismatchError);
  CHECK_THROWS_AS(CycInt(4, 1) * CycInt(2, 1), mahon::RingMismatchError);
  CHECK(CycInt(2, 1) != CycInt(3, 1));
}

TEST_CASE("bad orders are rejected") {
  CHECK_THROWS_AS(cyclotomic_poly(0), mahon::DomainError);
  CHECK_THROWS_AS(CycInt::omega(-2, 1), mahon::DomainError);
}
