#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial with arbitrary-precision integer coefficients.
///
/// The type does not fix the name of its variable: it stores the powers of A
/// throughout the ring code, and the flat evaluator reuses it for Laurent
/// polynomials in d.  No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(BigInt(c), 0) {}  // NOLINT: integer constants
  LaurentPoly(const BigInt& c, int exponent = 0) {
    if (c != 0) terms_.emplace(exponent, c);
  }

  static LaurentPoly monomial(const BigInt& c, int exponent) { return {c, exponent}; }
  static LaurentPoly from_terms(const Terms& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms)
      if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int min_exponent() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  int max_exponent() const {
    require_nonzero();
    return terms_.rbegin()->first;
  }
  const BigInt& leading_coefficient() const {
    require_nonzero();
    return terms_.rbegin()->second;
  }
  BigInt coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Multiplication by the unit A^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  /// Substitution A -> A^{-1}.
  LaurentPoly inverted() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Substitution A -> A^k (k != 0).
  LaurentPoly substitute_power(int k) const {
    if (k == 0) throw std::invalid_argument("substitute_power: exponent must be nonzero");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
    return r;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly result(1), base(*this);
    while (n) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return result;
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) g = gcd(g, c);
    return g;
  }

  /// Exact division over Z[A^{+-1}]; nullopt if the quotient is not integral.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly{};
    const int dlo = divisor.min_exponent(), dhi = divisor.max_exponent();
    const BigInt& lead = divisor.leading_coefficient();
    LaurentPoly rem(*this), quot;
    while (!rem.is_zero()) {
      const int rhi = rem.max_exponent();
      if (rhi - rem.min_exponent() < dhi - dlo) return std::nullopt;
      BigInt q, r;
      boost::multiprecision::divide_qr(rem.leading_coefficient(), lead, q, r);
      if (r != 0) return std::nullopt;
      const int shift = rhi - dhi;
      quot.terms_.emplace(shift, q);
      rem -= divisor.shifted(shift) * LaurentPoly(q);
    }
    return quot;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 || b.size() == 1) {
      const auto& mono = a.size() == 1 ? a : b;
      const auto& other = a.size() == 1 ? b : a;
      const auto& [me, mc] = *mono.terms_.begin();
      LaurentPoly r;
      for (const auto& [e, c] : other.terms_) r.terms_.emplace_hint(r.terms_.end(), e + me, c * mc);
      return r;
    }
    const int lo = a.min_exponent() + b.min_exponent();
    const int hi = a.max_exponent() + b.max_exponent();
    std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    LaurentPoly r;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (acc[i] != 0) r.terms_.emplace_hint(r.terms_.end(), lo + static_cast<int>(i), std::move(acc[i]));
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  /// Human-readable form such as "-A^-34+10*A^6+1".
  std::string to_string(const std::string& var = "A") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (c < 0)
        os << '-';
      else if (!first)
        os << '+';
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag << '*';
      os << var;
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: operation undefined on zero");
  }
  void add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace skein
