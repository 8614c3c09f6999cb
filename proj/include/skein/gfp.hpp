#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/localized.hpp"

namespace skein {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

/// Primes are kept below 2^31 so that residue products fit in 64 bits.
inline std::uint64_t checked_prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw std::invalid_argument("p must be a prime below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime (got " + std::to_string(p) + ")");
  return p;
}

inline std::uint64_t mod_reduce(const BigInt& c, std::uint64_t p) {
  BigInt r = c % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("GF(p): inverse of zero");
  return mod_pow(a, p - 2, p);
}

/// Laurent polynomial in A over GF(p); coefficients in [1, p).
class GfpLaurent {
 public:
  using Terms = std::map<int, std::uint64_t>;

  explicit GfpLaurent(std::uint64_t p) : p_(checked_prime(p)) {}
  /// Skips the primality check; p must already be validated.
  struct TrustedPrime {};
  GfpLaurent(std::uint64_t p, TrustedPrime) : p_(p) {}
  GfpLaurent(const LaurentPoly& poly, std::uint64_t p) : p_(checked_prime(p)) {
    for (const auto& [e, c] : poly.terms()) add_term(e, mod_reduce(c, p_));
  }
  GfpLaurent(std::uint64_t p, const Terms& terms) : p_(checked_prime(p)) {
    for (const auto& [e, c] : terms) add_term(e, c % p_);
  }

  std::uint64_t prime() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }
  int min_exponent() const {
    if (is_zero()) throw std::domain_error("GfpLaurent: zero has no exponents");
    return terms_.begin()->first;
  }
  int max_exponent() const {
    if (is_zero()) throw std::domain_error("GfpLaurent: zero has no exponents");
    return terms_.rbegin()->first;
  }

  GfpLaurent shifted(int k) const {
    GfpLaurent r(p_, TrustedPrime{});
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// Exponents reduced modulo m, i.e. the image in GF(p)[A]/(A^m - 1).
  GfpLaurent folded(int m) const {
    if (m <= 0) throw std::invalid_argument("fold modulus must be positive");
    GfpLaurent r(p_, TrustedPrime{});
    for (const auto& [e, c] : terms_) r.add_term(((e % m) + m) % m, c);
    return r;
  }

  GfpLaurent& operator+=(const GfpLaurent& o) {
    same_field(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  GfpLaurent& operator-=(const GfpLaurent& o) {
    same_field(o);
    for (const auto& [e, c] : o.terms_) add_term(e, p_ - c);
    return *this;
  }
  friend GfpLaurent operator+(GfpLaurent a, const GfpLaurent& b) { return a += b; }
  friend GfpLaurent operator-(GfpLaurent a, const GfpLaurent& b) { return a -= b; }
  friend GfpLaurent operator*(const GfpLaurent& a, const GfpLaurent& b) {
    a.same_field(b);
    GfpLaurent r(a.p_, TrustedPrime{});
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb % a.p_);
    return r;
  }
  friend bool operator==(const GfpLaurent& a, const GfpLaurent& b) { return a.p_ == b.p_ && a.terms_ == b.terms_; }

  void set_coefficient(int e, std::uint64_t c) {
    c %= p_;
    if (c == 0)
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += '+';
      const auto& [e, c] = *it;
      if (e == 0) {
        s += std::to_string(c);
        continue;
      }
      if (c != 1) s += std::to_string(c) + "*";
      s += "A";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  void same_field(const GfpLaurent& o) const {
    if (o.p_ != p_) throw std::invalid_argument("GfpLaurent: mismatched primes");
  }
  void add_term(int e, std::uint64_t c) {
    c %= p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = (it->second + c) % p_;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::uint64_t p_;
  Terms terms_;
};

/// Dense polynomial over GF(p); index = degree, no trailing zeros.
class GfpPoly {
 public:
  explicit GfpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs = {}) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
  }

  /// Polynomial part of a Laurent element with nonnegative exponents.
  static GfpPoly from_laurent(const GfpLaurent& a) {
    GfpPoly r(a.prime());
    if (a.is_zero()) return r;
    if (a.min_exponent() < 0) throw std::invalid_argument("GfpPoly: negative exponent");
    r.c_.assign(static_cast<std::size_t>(a.max_exponent()) + 1, 0);
    for (const auto& [e, c] : a.terms()) r.c_[static_cast<std::size_t>(e)] = c;
    return r;
  }

  GfpLaurent to_laurent(int shift = 0) const {
    GfpLaurent r(p_, GfpLaurent::TrustedPrime{});
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i]) r.set_coefficient(static_cast<int>(i) + shift, c_[i]);
    return r;
  }

  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<std::uint64_t>& coefficients() const { return c_; }

  GfpPoly monic() const {
    if (is_zero()) return *this;
    const std::uint64_t inv = mod_inverse(c_.back(), p_);
    GfpPoly r(*this);
    for (auto& x : r.c_) x = x * inv % p_;
    return r;
  }

  friend GfpPoly operator*(const GfpPoly& a, const GfpPoly& b) {
    if (a.is_zero() || b.is_zero()) return GfpPoly(a.p_);
    std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    return GfpPoly(a.p_, std::move(r));
  }
  friend bool operator==(const GfpPoly& a, const GfpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  /// a = q*f + r with deg r < deg f.
  static std::pair<GfpPoly, GfpPoly> divrem(const GfpPoly& a, const GfpPoly& f) {
    if (f.is_zero()) throw std::domain_error("GF(p) division by the zero polynomial");
    const std::uint64_t p = a.p_;
    std::vector<std::uint64_t> r = a.c_;
    const int df = f.degree();
    if (a.degree() < df) return {GfpPoly(p), a};
    std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - df + 1), 0);
    const std::uint64_t inv = mod_inverse(f.c_.back(), p);
    for (int i = a.degree(); i >= df; --i) {
      const std::uint64_t coef = r[static_cast<std::size_t>(i)] * inv % p;
      if (!coef) continue;
      q[static_cast<std::size_t>(i - df)] = coef;
      for (int j = 0; j <= df; ++j) {
        auto& slot = r[static_cast<std::size_t>(i - df + j)];
        slot = (slot + p - coef * f.c_[static_cast<std::size_t>(j)] % p) % p;
      }
    }
    return {GfpPoly(p, std::move(q)), GfpPoly(p, std::move(r))};
  }

  /// Monic gcd (zero only if both inputs are zero).
  static GfpPoly gcd(GfpPoly a, GfpPoly b) {
    while (!b.is_zero()) {
      GfpPoly r = divrem(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Reduction of a localized element modulo p: (numerator mod p, d-power).
inline std::pair<GfpLaurent, unsigned> to_gfp(const LocalizedElement& a, std::uint64_t p) {
  return {GfpLaurent(a.numerator(), p), a.d_power()};
}

/// Shift exponent making a Laurent element a polynomial: 0 when already nonnegative.
inline int polynomial_shift(const GfpLaurent& a) {
  if (a.is_zero()) return 0;
  return std::min(0, a.min_exponent());
}

/// Division with remainder of Laurent elements after shifting each into
/// nonnegative exponents; the shifts are undone on the results.
inline std::pair<GfpLaurent, GfpLaurent> gfp_divrem(const GfpLaurent& a, const GfpLaurent& f) {
  if (f.is_zero()) throw std::domain_error("GF(p) division by the zero polynomial");
  const int sa = polynomial_shift(a), sf = polynomial_shift(f);
  auto [q, r] = GfpPoly::divrem(GfpPoly::from_laurent(a.shifted(-sa)), GfpPoly::from_laurent(f.shifted(-sf)));
  return {q.to_laurent(sa - sf), r.to_laurent(sa)};
}

/// Monic gcd of the polynomial parts (units A^k discarded).
inline GfpLaurent gfp_gcd(const GfpLaurent& a, const GfpLaurent& b) {
  auto strip = [](const GfpLaurent& x) {
    return x.is_zero() ? GfpPoly(x.prime()) : GfpPoly::from_laurent(x.shifted(-x.min_exponent()));
  };
  return GfpPoly::gcd(strip(a), strip(b)).to_laurent();
}

}  // namespace skein
