#pragma once

// Congruence obstructions to Z_p-symmetry of spatial graphs.  Each test asks
// whether a difference of Yamada values lies in the ideal (p, f) of
// Z[A^{+-1}, d^{-1}] for a modulus f = A^m - 1 or d^m - 1.  Failure rules the
// symmetry out; success decides nothing.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skein/gfp.hpp"
#include "skein/localized.hpp"

namespace skein {

struct Modulus {
  enum class Kind { APower, DPower };
  Kind kind = Kind::APower;
  int m = 1;
  std::string printed;  // as the congruence is usually stated

  static Modulus a_power(int m, std::string printed = {}) { return make(Kind::APower, m, std::move(printed)); }
  static Modulus d_power(int m, std::string printed = {}) { return make(Kind::DPower, m, std::move(printed)); }

  /// Free symmetry: d^{2p} - d^2, i.e. d^{2p-2} - 1 after dividing by the unit d^2.
  static Modulus free_symmetry(int p) { return d_power(2 * p - 2, "d^" + std::to_string(2 * p) + "-d^2"); }
  /// Vertex-fixing symmetry: d^{p-1} - 1.
  static Modulus vertex_fixing(int p) { return d_power(p - 1); }
  /// Palindrome test for either kind of symmetry: A^{8p} - 1.
  static Modulus palindrome(int p) { return a_power(8 * p); }
  /// Periodic, quotient comparison: d^p - d, i.e. d^{p-1} - 1.
  static Modulus periodic_quotient(int p) { return d_power(p - 1, "d^" + std::to_string(p) + "-d"); }
  /// Periodic, palindrome test: A^{2p} - 1.
  static Modulus periodic_palindrome(int p) { return a_power(2 * p); }

  std::string localized() const { return std::string(kind == Kind::APower ? "A^" : "d^") + std::to_string(m) + "-1"; }

  /// f as an element of the localized ring.
  LocalizedElement element() const {
    const LocalizedElement base = kind == Kind::APower ? LocalizedElement::A(1) : LocalizedElement::d();
    return base.pow(static_cast<unsigned>(m)) - LocalizedElement(1);
  }

 private:
  static Modulus make(Kind k, int m, std::string printed) {
    if (m < 1) throw std::invalid_argument("modulus exponent must be positive");
    Modulus r{k, m, std::move(printed)};
    if (r.printed.empty()) r.printed = r.localized();
    return r;
  }
};

enum class MembershipMode { Folded, Saturated };

inline std::string to_string(MembershipMode m) { return m == MembershipMode::Folded ? "folded" : "saturated"; }

struct Membership {
  bool member = false;
  /// Folded: the folded element.  Saturated: remainder modulo the stripped modulus.
  GfpLaurent witness{2};
  /// Saturated only: the modulus with every factor shared with A^4 + 1 removed.
  GfpLaurent reduced_modulus{2};
};

/// Whether `folded` mode can be used for this input.
inline bool folded_applicable(const LocalizedElement& e, const Modulus& f) {
  return f.kind == Modulus::Kind::APower && e.d_power() == 0;
}

inline Membership ideal_member(const LocalizedElement& e, std::uint64_t p, const Modulus& f,
                               MembershipMode mode = MembershipMode::Saturated) {
  checked_prime(p);
  Membership out;
  out.witness = GfpLaurent(p, GfpLaurent::TrustedPrime{});
  out.reduced_modulus = GfpLaurent(p, GfpLaurent::TrustedPrime{});
  const GfpLaurent num(e.numerator(), p);
  if (mode == MembershipMode::Folded) {
    if (!folded_applicable(e, f)) throw std::invalid_argument("folded membership needs an A-power modulus and no d-denominator");
    out.witness = num.folded(f.m);
    out.member = out.witness.is_zero();
    return out;
  }
  const GfpLaurent d_num(d_expansion().shifted(2), p);  // A^4 + 1 up to sign
  GfpLaurent mod(f.element().numerator(), p);
  mod = mod.shifted(-polynomial_shift(mod));
  if (mod.is_zero()) throw std::invalid_argument("modulus vanishes mod p");
  for (GfpLaurent g = gfp_gcd(mod, d_num); g.max_exponent() > 0; g = gfp_gcd(mod, d_num)) {
    auto [q, r] = gfp_divrem(mod, g);
    if (!r.is_zero()) throw std::logic_error("gcd does not divide");
    mod = q;
  }
  out.reduced_modulus = GfpPoly::from_laurent(mod.shifted(-polynomial_shift(mod))).monic().to_laurent();
  const GfpLaurent a = num.shifted(-polynomial_shift(num));
  out.witness = a.is_zero() ? a : gfp_divrem(a, out.reduced_modulus).second;
  out.member = out.witness.is_zero();
  return out;
}

enum class Verdict { Obstructed, Inconclusive, Skipped };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Skipped: return "Skipped";
  }
  return "?";
}

struct TestResult {
  std::string test;
  std::string claim;  // which symmetry the test can rule out
  Modulus modulus;
  MembershipMode mode = MembershipMode::Saturated;
  Verdict verdict = Verdict::Skipped;
  std::optional<GfpLaurent> witness;  // for Obstructed verdicts
  std::optional<GfpLaurent> reduced_modulus;
};

namespace detail {

inline TestResult run_test(std::string name, std::string claim, const LocalizedElement& diff, std::uint64_t p,
                           const Modulus& f, MembershipMode mode) {
  TestResult t{std::move(name), std::move(claim), f, mode, Verdict::Inconclusive, std::nullopt, std::nullopt};
  if (mode == MembershipMode::Folded && !folded_applicable(diff, f)) t.mode = MembershipMode::Saturated;
  const Membership m = ideal_member(diff, p, f, t.mode);
  if (t.mode == MembershipMode::Saturated) t.reduced_modulus = m.reduced_modulus;
  if (!m.member) {
    t.verdict = Verdict::Obstructed;
    t.witness = m.witness;
  }
  return t;
}

inline TestResult skipped(std::string name, std::string claim, const Modulus& f, MembershipMode mode) {
  return {std::move(name), std::move(claim), f, mode, Verdict::Skipped, std::nullopt, std::nullopt};
}

inline int small_prime(std::uint64_t p) { return static_cast<int>(checked_prime(p)); }

}  // namespace detail

/// Y(A) against Y(A^{-1}) modulo (p, A^{8p} - 1).
inline TestResult check_palindrome(const LocalizedElement& yg, std::uint64_t p, MembershipMode mode = MembershipMode::Saturated) {
  const int q = detail::small_prime(p);
  return detail::run_test("palindrome", "free or vertex-fixing symmetry", yg - yg.inverted_variable(), p,
                          Modulus::palindrome(q), mode);
}

/// Y(G) against Y(quotient)^p modulo (p, d^{2p-2} - 1).
inline TestResult check_free_symmetry(const LocalizedElement& yg, const LocalizedElement& yq, std::uint64_t p,
                                      MembershipMode mode = MembershipMode::Saturated) {
  const int q = detail::small_prime(p);
  return detail::run_test("free", "free symmetry", yg - yq.pow(static_cast<unsigned>(q)), p, Modulus::free_symmetry(q), mode);
}

/// Y(G) against Y(quotient)^p modulo (p, d^{p-1} - 1).
inline TestResult check_vertex_fixing(const LocalizedElement& yg, const LocalizedElement& yq, std::uint64_t p,
                                      MembershipMode mode = MembershipMode::Saturated) {
  const int q = detail::small_prime(p);
  return detail::run_test("vertex-fixing", "vertex-fixing symmetry", yg - yq.pow(static_cast<unsigned>(q)), p,
                          Modulus::vertex_fixing(q), mode);
}

/// Quotient test modulo (p, d^p - d) and palindrome test modulo (p, A^{2p} - 1)
/// for periodic graphs; the first is skipped without a quotient.
inline std::pair<TestResult, TestResult> check_periodic_link_style(const LocalizedElement& yg,
                                                                   const std::optional<LocalizedElement>& yq,
                                                                   std::uint64_t p,
                                                                   MembershipMode mode = MembershipMode::Saturated) {
  const int q = detail::small_prime(p);
  const Modulus fa = Modulus::periodic_quotient(q), fb = Modulus::periodic_palindrome(q);
  TestResult a = yq ? detail::run_test("periodic-quotient", "periodic symmetry", yg - yq->pow(static_cast<unsigned>(q)), p, fa, mode)
                    : detail::skipped("periodic-quotient", "periodic symmetry", fa, mode);
  TestResult b = detail::run_test("periodic-palindrome", "periodic symmetry", yg - yg.inverted_variable(), p, fb, mode);
  return {std::move(a), std::move(b)};
}

struct ObstructionReport {
  std::uint64_t prime = 0;
  MembershipMode requested_mode = MembershipMode::Saturated;
  std::vector<TestResult> tests;

  const TestResult& test(const std::string& name) const {
    for (const auto& t : tests)
      if (t.test == name) return t;
    throw std::out_of_range("no test named " + name);
  }

  std::string to_text() const {
    std::string s = "prime " + std::to_string(prime) + ", requested mode " + to_string(requested_mode) + "\n";
    for (const auto& t : tests) {
      s += "  " + t.test + " (" + t.claim + "), modulus " + t.modulus.printed;
      if (t.modulus.printed != t.modulus.localized()) s += " [localized " + t.modulus.localized() + "]";
      s += ", " + to_string(t.mode) + ": " + to_string(t.verdict) + "\n";
      if (t.witness) s += "    witness: " + t.witness->to_string() + "\n";
    }
    return s;
  }
};

/// All tests for one prime; quotient tests are skipped without a quotient.
/// Folded mode falls back to saturated where it does not apply.
inline ObstructionReport full_report(const LocalizedElement& yg, const std::optional<LocalizedElement>& yq,
                                     std::uint64_t p, MembershipMode mode = MembershipMode::Saturated) {
  const int q = detail::small_prime(p);
  ObstructionReport r{p, mode, {}};
  if (yq) {
    r.tests.push_back(check_free_symmetry(yg, *yq, p, mode));
    r.tests.push_back(check_vertex_fixing(yg, *yq, p, mode));
  } else {
    r.tests.push_back(detail::skipped("free", "free symmetry", Modulus::free_symmetry(q), mode));
    r.tests.push_back(detail::skipped("vertex-fixing", "vertex-fixing symmetry", Modulus::vertex_fixing(q), mode));
  }
  r.tests.push_back(check_palindrome(yg, p, mode));
  auto [a, b] = check_periodic_link_style(yg, yq, p, mode);
  r.tests.push_back(std::move(a));
  r.tests.push_back(std::move(b));
  return r;
}

}  // namespace skein
