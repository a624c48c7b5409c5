#pragma once

#include <map>
#include <string>

#include "mahon/cyclotomic.hpp"

namespace mahon {

// Exponent pair of a q^a t^b monomial.
struct QT {
  int q = 0;
  int t = 0;
  bool operator==(const QT& o) const { return q == o.q && t == o.t; }
};

// Storage and print order: ascending total degree, ties by ascending q-degree.
struct QTGradedLess {
  bool operator()(const QT& a, const QT& b) const {
    const long da = static_cast<long>(a.q) + a.t;
    const long db = static_cast<long>(b.q) + b.t;
    if (da != db) return da < db;
    return a.q < b.q;
  }
};

// Sparse polynomial in q and t with coefficients in Z[w]. Zero coefficients
// are never stored, so map equality is polynomial equality. All arithmetic is
// exact and overflow-checked.
class Poly2 {
 public:
  using TermMap = std::map<QT, CycInt, QTGradedLess>;

  explicit Poly2(int ring_order = 1);
  static Poly2 zero(int r) { return Poly2(r); }
  static Poly2 one(int r) { return constant(CycInt(r, 1)); }
  static Poly2 constant(const CycInt& c);
  static Poly2 term(const CycInt& c, int qexp, int texp);

  // [k]_u = 1 + u + ... + u^{k-1} with u = unit * q^qpow * t^tpow.
  // k >= 0; [0] is the zero polynomial. unit may be any element of Z[w].
  static Poly2 q_bracket(int k, const CycInt& unit, int qpow, int tpow);

  int ring_order() const { return r_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  CycInt coeff(int qexp, int texp) const;

  void add_term(int qexp, int texp, const CycInt& c);

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { a += b; return a; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { a -= b; return a; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);

  bool operator==(const Poly2& o) const { return r_ == o.r_ && terms_ == o.terms_; }
  bool operator!=(const Poly2& o) const { return !(*this == o); }

  CycInt eval_one() const;   // value at q = t = 1
  Poly2 transposed() const;  // swap q and t exponents
  int q_degree() const;      // -1 for the zero polynomial
  int t_degree() const;

  // Human form, e.g. "1 + 2q + q^2", "1 - q^3t", "1 + (w)q + (-1-w)q^2".
  std::string to_string() const;

 private:
  int r_;
  TermMap terms_;

  void check_ring(const Poly2& o) const;
};

}  // namespace mahon
