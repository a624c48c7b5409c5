#include "mahon/poly.hpp"

#include <climits>

namespace mahon {

namespace {

int checked_exp_add(int a, int b) {
  const long s = static_cast<long>(a) + b;
  if (s > INT_MAX) throw OverflowError("monomial exponent overflow");
  return static_cast<int>(s);
}

void require_nonneg(int qexp, int texp) {
  if (qexp < 0 || texp < 0) throw DomainError("negative monomial exponent");
}

}  // namespace

Poly2::Poly2(int ring_order) : r_(ring_order) {
  if (ring_order < 1) throw DomainError("ring order must be >= 1");
}

Poly2 Poly2::constant(const CycInt& c) {
  Poly2 p(c.order());
  p.add_term(0, 0, c);
  return p;
}

Poly2 Poly2::term(const CycInt& c, int qexp, int texp) {
  Poly2 p(c.order());
  p.add_term(qexp, texp, c);
  return p;
}

Poly2 Poly2::q_bracket(int k, const CycInt& unit, int qpow, int tpow) {
  if (k < 0) throw DomainError("bracket size must be >= 0");
  if (qpow < 0 || tpow < 0) throw DomainError("bracket exponents must be >= 0");
  Poly2 p(unit.order());
  CycInt upow(unit.order(), 1);
  for (int j = 0; j < k; ++j) {
    p.add_term(checked_exp_add(0, j * qpow), j * tpow, upow);
    if (j + 1 < k) upow *= unit;
  }
  return p;
}

CycInt Poly2::coeff(int qexp, int texp) const {
  const auto it = terms_.find(QT{qexp, texp});
  return it == terms_.end() ? CycInt(r_) : it->second;
}

void Poly2::check_ring(const Poly2& o) const {
  if (r_ != o.r_) {
    throw RingMismatchError("mixed polynomial rings " + std::to_string(r_) + " and " +
                            std::to_string(o.r_));
  }
}

void Poly2::add_term(int qexp, int texp, const CycInt& c) {
  require_nonneg(qexp, texp);
  if (c.order() != r_) {
    throw RingMismatchError("coefficient ring " + std::to_string(c.order()) +
                            " does not match polynomial ring " + std::to_string(r_));
  }
  if (c.is_zero()) return;
  const QT key{qexp, texp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly2 Poly2::operator-() const {
  Poly2 out(r_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  check_ring(o);
  for (const auto& [k, c] : o.terms_) add_term(k.q, k.t, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  check_ring(o);
  for (const auto& [k, c] : o.terms_) add_term(k.q, k.t, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  a.check_ring(b);
  Poly2 out(a.ring_order());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      out.add_term(checked_exp_add(ka.q, kb.q), checked_exp_add(ka.t, kb.t), ca * cb);
    }
  }
  return out;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = *this * o;
  return *this;
}

CycInt Poly2::eval_one() const {
  CycInt s(r_);
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

Poly2 Poly2::transposed() const {
  Poly2 out(r_);
  for (const auto& [k, c] : terms_) out.add_term(k.t, k.q, c);
  return out;
}

int Poly2::q_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.q);
  return d;
}

int Poly2::t_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.t);
  return d;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    if (k.q == 1) mono += "q";
    else if (k.q > 1) mono += "q^" + std::to_string(k.q);
    if (k.t == 1) mono += "t";
    else if (k.t > 1) mono += "t^" + std::to_string(k.t);

    if (c.is_integer()) {
      const std::int64_t v = c.integer_value();
      const bool neg = v < 0;
      const unsigned long long mag =
          neg ? 0ULL - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mag != 1 || mono.empty()) out += std::to_string(mag);
      out += mono;
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")" + mono;
    }
  }
  return out;
}

}  // namespace mahon
