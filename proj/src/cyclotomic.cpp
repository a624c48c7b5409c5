#include "mahon/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace mahon {

namespace {

using Coeffs = std::vector<std::int64_t>;

// Exact division num / den with den monic; requires zero remainder.
Coeffs divide_exact(Coeffs num, const Coeffs& den) {
  const int dd = static_cast<int>(den.size()) - 1;
  const int dn = static_cast<int>(num.size()) - 1;
  Coeffs quot(static_cast<size_t>(dn - dd) + 1, 0);
  for (int i = dn; i >= dd; --i) {
    const std::int64_t c = num[static_cast<size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = num[static_cast<size_t>(i - dd + j)];
      slot = checked_sub(slot, checked_mul(c, den[static_cast<size_t>(j)]));
    }
  }
  for (std::int64_t c : num) {
    if (c != 0) throw DomainError("cyclotomic division left a remainder");
  }
  return quot;
}

std::mutex cache_mutex;
std::map<int, Coeffs>& cache() {
  static std::map<int, Coeffs> c;
  return c;
}

const Coeffs& cyclotomic_locked(int r) {
  auto it = cache().find(r);
  if (it != cache().end()) return it->second;
  // x^r - 1 divided by Phi_d for every proper divisor d of r. Divisors are
  // filled in increasing order so the recursion below always hits the cache.
  Coeffs poly(static_cast<size_t>(r) + 1, 0);
  poly[0] = -1;
  poly[static_cast<size_t>(r)] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    poly = divide_exact(std::move(poly), cyclotomic_locked(d));
  }
  return cache().emplace(r, std::move(poly)).first->second;
}

// Reduce an arbitrary coefficient vector mod the monic polynomial phi and
// resize it to deg(phi) entries.
void reduce_mod(Coeffs& v, const Coeffs& phi) {
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(v.size()) - 1; i >= deg; --i) {
    const std::int64_t c = v[static_cast<size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j) {
      auto& slot = v[static_cast<size_t>(i - deg + j)];
      slot = checked_sub(slot, checked_mul(c, phi[static_cast<size_t>(j)]));
    }
  }
  v.resize(static_cast<size_t>(deg), 0);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_poly(int r) {
  if (r < 1) throw DomainError("cyclotomic order must be >= 1");
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cyclotomic_locked(r);
}

int cyclotomic_degree(int r) {
  return static_cast<int>(cyclotomic_poly(r).size()) - 1;
}

CycInt::CycInt(int r) : r_(r) {
  c_.assign(static_cast<size_t>(cyclotomic_degree(r)), 0);
}

CycInt::CycInt(int r, std::int64_t value) : CycInt(r) { c_[0] = value; }

CycInt CycInt::omega(int r, long long k) {
  if (r < 1) throw DomainError("cyclotomic order must be >= 1");
  const long long kk = ((k % r) + r) % r;
  Coeffs raw(static_cast<size_t>(kk) + 1, 0);
  raw[static_cast<size_t>(kk)] = 1;
  return from_coeffs(r, raw);
}

CycInt CycInt::from_coeffs(int r, const std::vector<std::int64_t>& raw) {
  CycInt out(r);
  Coeffs v = raw;
  if (v.size() < out.c_.size()) v.resize(out.c_.size(), 0);
  reduce_mod(v, cyclotomic_poly(r));
  out.c_ = std::move(v);
  return out;
}

bool CycInt::is_zero() const {
  for (std::int64_t c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::is_integer() const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

std::int64_t CycInt::integer_value() const {
  if (!is_integer()) throw DomainError("not an integer: " + to_string());
  return c_[0];
}

void CycInt::check_ring(const CycInt& o) const {
  if (r_ != o.r_) {
    throw RingMismatchError("mixed cyclotomic orders " + std::to_string(r_) + " and " +
                            std::to_string(o.r_));
  }
}

CycInt CycInt::operator-() const {
  CycInt out(*this);
  for (auto& c : out.c_) c = checked_neg(c);
  return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_ring(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_ring(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  check_ring(o);
  const size_t d = c_.size();
  Coeffs conv(2 * d - 1, 0);
  for (size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] = checked_add(conv[i + j], checked_mul(c_[i], o.c_[j]));
    }
  }
  reduce_mod(conv, cyclotomic_poly(r_));
  c_ = std::move(conv);
  return *this;
}

CycInt CycInt::pow(long long e) const {
  if (e < 0) throw DomainError("negative exponent");
  CycInt acc(r_, 1);
  for (long long i = 0; i < e; ++i) acc *= *this;
  return acc;
}

std::string CycInt::to_string() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    const std::int64_t c = c_[i];
    if (c == 0) continue;
    const unsigned long long mag =
        c < 0 ? 0ULL - static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (i == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace mahon
