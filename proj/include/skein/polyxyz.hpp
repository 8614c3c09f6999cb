#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "skein/localized.hpp"

namespace skein {

/// Exponents of x^i y^j z^k t^eps, eps in {0,1}.
struct Monomial {
  int x = 0, y = 0, z = 0, t = 0;

  int degree() const { return x + y + z + t; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z, a.t + b.t};
  }

  std::string to_string(const std::array<const char*, 4>& names = {"x", "y", "z", "t"}) const {
    std::string s;
    const std::array<int, 4> e{t, x, y, z};
    const std::array<const char*, 4> n{names[3], names[0], names[1], names[2]};
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      s += n[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }
};

/// Graded lexicographic order (total degree, then x, y, z, t).
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return std::tuple(a.degree(), a.x, a.y, a.z, a.t) < std::tuple(b.degree(), b.x, b.y, b.z, b.t);
  }
};

/// Commutative polynomial in x, y, z (and at most linear in t) over
/// Z[A^{+-1}, d^{-1}].  A product whose t-degree would exceed one throws:
/// reducing t^2 needs a relation, which lives in surface_algebra.hpp.
class PolyXYZ {
 public:
  using Terms = std::map<Monomial, LocalizedElement, GradedOrder>;

  PolyXYZ() = default;
  PolyXYZ(const LocalizedElement& c) { add(Monomial{}, c); }  // NOLINT
  PolyXYZ(int c) : PolyXYZ(LocalizedElement(c)) {}            // NOLINT
  PolyXYZ(const Monomial& m, const LocalizedElement& c) { add(m, c); }

  static PolyXYZ x() { return PolyXYZ(Monomial{1, 0, 0, 0}, 1); }
  static PolyXYZ y() { return PolyXYZ(Monomial{0, 1, 0, 0}, 1); }
  static PolyXYZ z() { return PolyXYZ(Monomial{0, 0, 1, 0}, 1); }
  static PolyXYZ t() { return PolyXYZ(Monomial{0, 0, 0, 1}, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LocalizedElement coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LocalizedElement{} : it->second;
  }
  /// Largest monomial in graded order and its coefficient.
  const std::pair<const Monomial, LocalizedElement>& leading_term() const {
    if (is_zero()) throw std::domain_error("PolyXYZ: zero has no leading term");
    return *terms_.rbegin();
  }

  void add(const Monomial& m, const LocalizedElement& c) {
    if (m.t > 1) throw std::domain_error("PolyXYZ: t-degree above one requires relation reduction");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyXYZ pow(unsigned n) const {
    PolyXYZ r(1);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  PolyXYZ operator-() const {
    PolyXYZ r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  PolyXYZ& operator+=(const PolyXYZ& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  PolyXYZ& operator-=(const PolyXYZ& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  PolyXYZ& operator*=(const PolyXYZ& o) { return *this = *this * o; }
  friend PolyXYZ operator+(PolyXYZ a, const PolyXYZ& b) { return a += b; }
  friend PolyXYZ operator-(PolyXYZ a, const PolyXYZ& b) { return a -= b; }
  friend PolyXYZ operator*(const PolyXYZ& a, const PolyXYZ& b) {
    PolyXYZ r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const PolyXYZ& a, const PolyXYZ& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::array<const char*, 4>& names = {"x", "y", "z", "t"}) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string cs = c.to_string();
      const bool unit_mono = m == Monomial{};
      if (!s.empty()) s += " + ";
      if (unit_mono)
        s += "(" + cs + ")";
      else if (cs == "1")
        s += m.to_string(names);
      else
        s += "(" + cs + ")*" + m.to_string(names);
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace skein
