#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mahon/checked_int.hpp"
#include "mahon/errors.hpp"

namespace mahon {

// Coefficients of the monic r-th cyclotomic polynomial, ascending degree
// (constant term first, leading 1 last). Computed once per r by exact
// division of x^r - 1 by the lower cyclotomics; cached thereafter.
const std::vector<std::int64_t>& cyclotomic_poly(int r);

// Euler phi(r) = deg Phi_r.
int cyclotomic_degree(int r);

// Element of Z[w], w a fixed primitive r-th root of unity, stored as the
// canonical residue in Z[x]/(Phi_r(x)): exactly deg Phi_r coefficients,
// ascending powers of w. Coefficient vectors are equal iff the ring elements
// are, so operator== is exact. r = 1 degenerates to plain integers (w = 1)
// and r = 2 to signed integers (w = -1).
class CycInt {
 public:
  explicit CycInt(int r = 1);
  CycInt(int r, std::int64_t value);

  // w^k, any integer k (reduced mod r, then mod Phi_r).
  static CycInt omega(int r, long long k);

  // Arbitrary integer polynomial in w, ascending degree; reduced mod Phi_r.
  static CycInt from_coeffs(int r, const std::vector<std::int64_t>& raw);

  int order() const { return r_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integer() const;
  std::int64_t integer_value() const;  // DomainError when not an integer

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { a += b; return a; }
  friend CycInt operator-(CycInt a, const CycInt& b) { a -= b; return a; }
  friend CycInt operator*(CycInt a, const CycInt& b) { a *= b; return a; }

  CycInt pow(long long e) const;  // e >= 0

  bool operator==(const CycInt& o) const { return r_ == o.r_ && c_ == o.c_; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  // "0", "-3", "w", "-1-w", "2+w^2", ascending powers of w.
  std::string to_string() const;

 private:
  int r_;
  std::vector<std::int64_t> c_;

  void check_ring(const CycInt& o) const;
};

}  // namespace mahon
