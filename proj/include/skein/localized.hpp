#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Expansion of d = -A^2 - A^{-2} in powers of A.
inline const LaurentPoly& d_expansion() {
  static const LaurentPoly d = LaurentPoly(-1, 2) + LaurentPoly(-1, -2);
  return d;
}

/// d^k expanded in A.  Cached; safe under concurrent callers.
inline LaurentPoly d_power_expansion(unsigned k) {
  static std::mutex mu;
  static std::vector<LaurentPoly> cache{LaurentPoly(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) cache.push_back(cache.back() * d_expansion());
  return cache[k];
}

/// Element of Z[A^{+-1}, d^{-1}] stored as numerator / d^k.
///
/// Invariant: the representation is canonical, i.e. either k == 0 or the
/// numerator is not divisible by d.  Equality of canonical forms is equality
/// in the ring.
class LocalizedElement {
 public:
  LocalizedElement() = default;
  LocalizedElement(int c) : numerator_(c) {}  // NOLINT: integer constants
  explicit LocalizedElement(LaurentPoly numerator, unsigned d_power = 0)
      : numerator_(std::move(numerator)), d_power_(d_power) {
    canonicalize();
  }

  static LocalizedElement A(int k) { return LocalizedElement(LaurentPoly(1, k)); }
  static LocalizedElement d() { return LocalizedElement(d_expansion()); }
  static LocalizedElement d_inverse(unsigned k = 1) { return LocalizedElement(LaurentPoly(1), k); }

  /// Embeds a Laurent polynomial in d (as stored by LaurentPoly) into the ring.
  static LocalizedElement from_d_laurent(const LaurentPoly& in_d) {
    if (in_d.is_zero()) return {};
    const int lo = in_d.min_exponent();
    const unsigned shift = lo < 0 ? static_cast<unsigned>(-lo) : 0U;
    LaurentPoly num;
    for (const auto& [e, c] : in_d.terms())
      num += d_power_expansion(static_cast<unsigned>(e + static_cast<int>(shift))) * LaurentPoly(c);
    return LocalizedElement(std::move(num), shift);
  }

  const LaurentPoly& numerator() const { return numerator_; }
  unsigned d_power() const { return d_power_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Substitution A -> A^{-1}; d is fixed, so the d-power is unchanged.
  LocalizedElement inverted_variable() const { return LocalizedElement(numerator_.inverted(), d_power_); }

  LocalizedElement pow(unsigned n) const {
    LocalizedElement result(1), base(*this);
    while (n) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return result;
  }

  /// Rewrites the element as a Laurent polynomial in d when it lies in Z[d^{+-1}].
  std::optional<LaurentPoly> to_d_laurent() const {
    LaurentPoly rest = numerator_;
    LaurentPoly in_d;
    while (!rest.is_zero()) {
      const int top = rest.max_exponent();
      if (top < 0 || top % 2 != 0) return std::nullopt;
      const unsigned j = static_cast<unsigned>(top / 2);
      // leading term of d^j is (-1)^j A^{2j}
      BigInt c = rest.leading_coefficient();
      if (j % 2 == 1) c = -c;
      in_d += LaurentPoly(c, static_cast<int>(j));
      rest -= d_power_expansion(j) * LaurentPoly(c);
    }
    return in_d.shifted(-static_cast<int>(d_power_));
  }

  /// "d^2-1" style when the element lies in Z[d^{+-1}], else the A-form.
  std::string to_string() const {
    if (auto in_d = to_d_laurent()) return in_d->to_string("d");
    return a_form();
  }

  /// Expanded form "numerator" or "(numerator)/d^k".
  std::string a_form() const {
    if (d_power_ == 0) return numerator_.to_string("A");
    return "(" + numerator_.to_string("A") + ")/d^" + std::to_string(d_power_);
  }

  LocalizedElement operator-() const {
    LocalizedElement r(*this);
    r.numerator_ = -r.numerator_;
    return r;
  }

  LocalizedElement& operator+=(const LocalizedElement& o) { return *this = *this + o; }
  LocalizedElement& operator-=(const LocalizedElement& o) { return *this = *this - o; }
  LocalizedElement& operator*=(const LocalizedElement& o) { return *this = *this * o; }

  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const unsigned m = std::max(a.d_power_, b.d_power_);
    LaurentPoly num = a.numerator_ * d_power_expansion(m - a.d_power_) + b.numerator_ * d_power_expansion(m - b.d_power_);
    return LocalizedElement(std::move(num), m);
  }
  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) { return a + (-b); }
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LocalizedElement(a.numerator_ * b.numerator_, a.d_power_ + b.d_power_);
  }
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
    return a.d_power_ == b.d_power_ && a.numerator_ == b.numerator_;
  }
  friend bool operator<(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.d_power_ != b.d_power_) return a.d_power_ < b.d_power_;
    return a.numerator_ < b.numerator_;
  }

 private:
  void canonicalize() {
    if (numerator_.is_zero()) {
      d_power_ = 0;
      return;
    }
    while (d_power_ > 0) {
      auto q = numerator_.exact_divide(d_expansion());
      if (!q) break;
      numerator_ = std::move(*q);
      --d_power_;
    }
  }

  LaurentPoly numerator_;
  unsigned d_power_ = 0;
};

inline LocalizedElement invert_variable(const LocalizedElement& a) { return a.inverted_variable(); }

}  // namespace skein
