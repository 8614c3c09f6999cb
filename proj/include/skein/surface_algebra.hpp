#pragma once

// Skein algebras of the annulus and the disk with two holes as polynomial
// algebras, the generator tables of the cabling map and its inverse on the
// even subalgebra <x^2, y^2, z^2, xyz>, and the relation satisfied by t^2.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/polyxyz.hpp"

namespace skein {

namespace detail {
inline LocalizedElement dinv(unsigned k = 1) { return LocalizedElement::d_inverse(k); }
}  // namespace detail

/// Images of the generators x, y, z, t under the cabling map.
struct PhiTable {
  PolyXYZ x, y, z, t;

  static PhiTable printed() {
    const PolyXYZ one(1);
    const PolyXYZ X = PolyXYZ::x(), Y = PolyXYZ::y(), Z = PolyXYZ::z();
    const PolyXYZ D(detail::dinv());
    return {X * X - one, Y * Y - one, Z * Z - one, X * Y * Z - D * X * X - D * Y * Y + D};
  }
};

/// Images of x^2, y^2, z^2, xyz under the inverse map, in x, y, z, t.
struct PsiTable {
  PolyXYZ x2, y2, z2, xyz;

  static PsiTable printed() {
    const PolyXYZ one(1);
    const PolyXYZ D(detail::dinv());
    return {PolyXYZ::x() + one, PolyXYZ::y() + one, PolyXYZ::z() + one,
            PolyXYZ::t() + D * PolyXYZ::x() + D * PolyXYZ::y() + D};
  }
};

/// Substitutes the table into a polynomial in x, y, z, t (t at most linear).
inline PolyXYZ apply_phi(const PolyXYZ& p, const PhiTable& phi = PhiTable::printed()) {
  PolyXYZ out;
  for (const auto& [m, c] : p.terms()) {
    PolyXYZ img(c);
    img = img * phi.x.pow(static_cast<unsigned>(m.x)) * phi.y.pow(static_cast<unsigned>(m.y)) *
          phi.z.pow(static_cast<unsigned>(m.z));
    if (m.t) img = img * phi.t;
    out += img;
  }
  return out;
}

/// Inverse map on the even subalgebra: x^a y^b z^c with a, b, c of equal
/// parity.  Throws for monomials outside it.
inline PolyXYZ apply_psi(const PolyXYZ& p, const PsiTable& psi = PsiTable::printed()) {
  PolyXYZ out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.x % 2;
    if (m.t != 0 || m.y % 2 != e || m.z % 2 != e) throw std::invalid_argument("apply_psi: monomial outside the even subalgebra");
    PolyXYZ img(c);
    img = img * psi.x2.pow(static_cast<unsigned>((m.x - e) / 2)) * psi.y2.pow(static_cast<unsigned>((m.y - e) / 2)) *
          psi.z2.pow(static_cast<unsigned>((m.z - e) / 2));
    if (e) img = img * psi.xyz;
    out += img;
  }
  return out;
}

/// Comparison of one coefficient of the t^2 relation.
struct CoefficientCheck {
  Monomial monomial;
  LocalizedElement derived;
  LocalizedElement printed;
  bool match = false;
};

struct RelationReport {
  /// t^2 = sum derived[m] m, over basis monomials x^i y^j z^k t^eps.
  std::map<Monomial, LocalizedElement, GradedOrder> derived;
  std::map<Monomial, LocalizedElement, GradedOrder> printed;
  std::vector<CoefficientCheck> checks;
  /// Phi(t)^2 equals the derived combination of basis images exactly.
  bool identity_holds = false;
  /// Basis images have pairwise distinct leading monomials, so the
  /// coefficients (and the split by eps) are unique.
  bool leading_monomials_distinct = false;
  /// The printed right-hand side also satisfies the identity.
  bool printed_identity_holds = false;

  int mismatch_count() const {
    int n = 0;
    for (const auto& c : checks) n += c.match ? 0 : 1;
    return n;
  }
  /// Matching coefficients plus the uniqueness check.
  int match_count() const {
    int n = leading_monomials_distinct ? 1 : 0;
    for (const auto& c : checks) n += c.match ? 1 : 0;
    return n;
  }

  std::string to_text() const {
    static const std::array<const char*, 4> names{"x", "y", "z", "t"};
    std::string s = "t^2 relation (derived by elimination)\n";
    for (const auto& c : checks) {
      s += "  " + c.monomial.to_string(names) + ": derived " + c.derived.to_string() + ", printed " +
           c.printed.to_string() + (c.match ? "  match\n" : "  MISMATCH\n");
    }
    s += std::string("  unique eps-split: ") + (leading_monomials_distinct ? "yes" : "no") + "\n";
    s += std::string("  identity Phi(t)^2 = sum c Phi(basis): ") + (identity_holds ? "holds" : "FAILS") + "\n";
    s += std::string("  printed relation satisfies the identity: ") + (printed_identity_holds ? "yes" : "no") + "\n";
    s += "  matches " + std::to_string(match_count()) + ", mismatches " + std::to_string(mismatch_count()) + "\n";
    return s;
  }
};

/// Right-hand side of the printed t^2 relation, coefficients as displayed.
inline std::map<Monomial, LocalizedElement, GradedOrder> printed_t_squared() {
  const LocalizedElement D = detail::dinv(), D2 = detail::dinv(2), one(1), two(2);
  return {
      {{0, 0, 0, 0}, one + D2 - two * D}, {{1, 0, 0, 0}, one - two * D}, {{0, 1, 0, 0}, one - two * D},
      {{0, 0, 1, 0}, one},                {{0, 0, 0, 1}, -two * D},      {{1, 1, 0, 0}, one - two * D2},
      {{1, 0, 1, 0}, one},                {{0, 1, 1, 0}, one},           {{1, 0, 0, 1}, -two * D},
      {{0, 1, 0, 1}, -two * D},           {{2, 0, 0, 0}, -D2},           {{0, 2, 0, 0}, -D2},
      {{1, 1, 1, 0}, one},
  };
}

/// Writes Phi(t)^2 in the basis Phi(x)^i Phi(y)^j Phi(z)^k Phi(t)^eps by
/// triangular elimination on leading monomials, and compares the result
/// with the printed relation.
inline RelationReport derive_t_squared_relation(const PhiTable& phi = PhiTable::printed()) {
  RelationReport r;
  const PolyXYZ target = phi.t * phi.t;
  PolyXYZ rest = target;
  std::set<Monomial, GradedOrder> leads;
  r.leading_monomials_distinct = true;
  auto basis_image = [&](const Monomial& b) { return apply_phi(PolyXYZ(b, 1), phi); };
  int guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 10000) throw std::runtime_error("elimination did not terminate");
    const auto [lead, c] = rest.leading_term();
    const int e = lead.x % 2;
    if (lead.y % 2 != e || lead.z % 2 != e) throw std::runtime_error("elimination failure: leading monomial outside the even subalgebra");
    const Monomial b{(lead.x - e) / 2, (lead.y - e) / 2, (lead.z - e) / 2, e};
    const PolyXYZ img = basis_image(b);
    if (!(img.leading_term().first == lead)) throw std::runtime_error("elimination failure: basis image has unexpected leading monomial");
    if (!leads.insert(lead).second) r.leading_monomials_distinct = false;
    r.derived[b] += c;
    rest -= PolyXYZ(c) * img;
  }
  for (auto it = r.derived.begin(); it != r.derived.end();) it = it->second.is_zero() ? r.derived.erase(it) : std::next(it);

  auto combination = [&](const std::map<Monomial, LocalizedElement, GradedOrder>& coeffs) {
    PolyXYZ s;
    for (const auto& [m, c] : coeffs) s += PolyXYZ(c) * basis_image(m);
    return s;
  };
  r.identity_holds = combination(r.derived) == target;
  r.printed = printed_t_squared();
  r.printed_identity_holds = combination(r.printed) == target;

  std::set<Monomial, GradedOrder> all;
  for (const auto& [m, c] : r.derived) all.insert(m);
  for (const auto& [m, c] : r.printed) all.insert(m);
  for (const auto& m : all) {
    CoefficientCheck ch{m, {}, {}, false};
    if (auto it = r.derived.find(m); it != r.derived.end()) ch.derived = it->second;
    if (auto it = r.printed.find(m); it != r.printed.end()) ch.printed = it->second;
    ch.match = ch.derived == ch.printed;
    r.checks.push_back(ch);
  }
  std::reverse(r.checks.begin(), r.checks.end());
  return r;
}

/// Psi(Phi(g)) = g for g in {x, y, z, t} and Phi(Psi(xyz)) = xyz.
inline bool verify_psi_phi(const PhiTable& phi = PhiTable::printed(), const PsiTable& psi = PsiTable::printed()) {
  bool ok = apply_psi(phi.x, psi) == PolyXYZ::x() && apply_psi(phi.y, psi) == PolyXYZ::y() &&
            apply_psi(phi.z, psi) == PolyXYZ::z() && apply_psi(phi.t, psi) == PolyXYZ::t();
  const PolyXYZ xyz = PolyXYZ::x() * PolyXYZ::y() * PolyXYZ::z();
  ok = ok && apply_phi(psi.xyz, phi) == xyz;
  ok = ok && apply_phi(psi.x2, phi) == PolyXYZ::x() * PolyXYZ::x() && apply_phi(psi.y2, phi) == PolyXYZ::y() * PolyXYZ::y() &&
       apply_phi(psi.z2, phi) == PolyXYZ::z() * PolyXYZ::z();
  return ok;
}

/// Image of b^k in the annulus algebra, b stored as x: (b^2 - 1)^k.
inline PolyXYZ annulus_phi_powers(int k) {
  if (k < 0) throw std::invalid_argument("annulus_phi_powers needs k >= 0");
  return (PolyXYZ::x() * PolyXYZ::x() - PolyXYZ(1)).pow(static_cast<unsigned>(k));
}

/// Difference between a computed image of t and the printed one.
inline PolyXYZ t_image_delta(const PolyXYZ& computed) { return computed - PhiTable::printed().t; }

}  // namespace skein
