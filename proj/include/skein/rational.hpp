#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/localized.hpp"

namespace skein {

namespace detail {

// Dense integer polynomials, index = degree; used for gcd computations only.
using ZPoly = std::vector<BigInt>;

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline BigInt content(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

inline ZPoly primitive_part(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  BigInt g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// lc(b)^(deg a - deg b + 1) * a mod b
inline ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

/// gcd in Z[x], normalized to positive leading coefficient.
inline ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) {
    ZPoly r = a.empty() ? b : a;
    if (!r.empty() && r.back() < 0)
      for (auto& c : r) c = -c;
    return r;
  }
  const BigInt g = gcd(content(a), content(b));
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& c : a) c *= g;
  return a;
}

inline ZPoly to_zpoly(const LaurentPoly& p, int shift) {
  ZPoly r;
  if (p.is_zero()) return r;
  r.assign(static_cast<std::size_t>(p.max_exponent() - shift + 1), 0);
  for (const auto& [e, c] : p.terms()) r[static_cast<std::size_t>(e - shift)] = c;
  return r;
}

inline LaurentPoly from_zpoly(const ZPoly& p, int shift) {
  LaurentPoly::Terms t;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) t.emplace(static_cast<int>(i) + shift, p[i]);
  return LaurentPoly::from_terms(t);
}

}  // namespace detail

/// Quotient of Laurent polynomials in A, kept reduced: no common factor, the
/// denominator has lowest exponent 0 and a positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT: integer constants
  RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) { reduce(); }  // NOLINT
  RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
  }
  explicit RationalFunction(const LocalizedElement& a)
      : RationalFunction(a.numerator(), d_power_expansion(a.d_power())) {}

  static RationalFunction d() { return RationalFunction(d_expansion()); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
  }

  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (den_ == LaurentPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    const int dshift = den_.min_exponent();
    const int nshift = num_.min_exponent();
    auto n = detail::to_zpoly(num_, nshift);
    auto d = detail::to_zpoly(den_, dshift);
    auto g = detail::zpoly_gcd(n, d);
    if (g.size() > 1 || g[0] != 1) {
      LaurentPoly gl = detail::from_zpoly(g, 0);
      n = detail::to_zpoly(*detail::from_zpoly(n, 0).exact_divide(gl), 0);
      d = detail::to_zpoly(*detail::from_zpoly(d, 0).exact_divide(gl), 0);
    }
    if (d.back() < 0) {
      for (auto& c : n) c = -c;
      for (auto& c : d) c = -c;
    }
    num_ = detail::from_zpoly(n, nshift - dshift);
    den_ = detail::from_zpoly(d, 0);
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace skein
