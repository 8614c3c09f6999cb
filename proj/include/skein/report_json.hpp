#pragma once

// Machine-readable forms of reports.  Coefficients that do not fit in 64
// bits are written as decimal strings.

#include <string>

#include <json.hpp>

#include "skein/gfp.hpp"
#include "skein/localized.hpp"
#include "skein/surface_algebra.hpp"
#include "skein/symmetry.hpp"
#include "skein/verify.hpp"

namespace skein {

inline nlohmann::json json_integer(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

inline nlohmann::json to_json(const LocalizedElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  const auto& t = a.numerator().terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) terms.push_back({json_integer(it->second), it->first});
  return {{"terms", terms}, {"d_power", a.d_power()}};
}

inline nlohmann::json to_json(const GfpLaurent& a) {
  nlohmann::json terms = nlohmann::json::array();
  const auto& t = a.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) terms.push_back({it->second, it->first});
  return {{"terms", terms}, {"prime", a.prime()}};
}

inline nlohmann::json to_json(const ObstructionReport& r) {
  nlohmann::json tests = nlohmann::json::array();
  for (const auto& t : r.tests) {
    nlohmann::json j = {{"test", t.test},
                        {"rules_out", t.claim},
                        {"modulus", {{"printed", t.modulus.printed}, {"localized", t.modulus.localized()}}},
                        {"mode", to_string(t.mode)},
                        {"verdict", to_string(t.verdict)}};
    j["witness"] = t.witness ? to_json(*t.witness) : nlohmann::json(nullptr);
    if (t.reduced_modulus) j["reduced_modulus"] = to_json(*t.reduced_modulus);
    tests.push_back(std::move(j));
  }
  return {{"prime", r.prime}, {"requested_mode", to_string(r.requested_mode)}, {"tests", tests}};
}

inline nlohmann::json to_json(const RelationReport& r) {
  static const std::array<const char*, 4> names{"x", "y", "z", "t"};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"monomial", c.monomial.to_string(names)},
                      {"derived", c.derived.to_string()},
                      {"printed", c.printed.to_string()},
                      {"derived_terms", to_json(c.derived)},
                      {"printed_terms", to_json(c.printed)},
                      {"match", c.match}});
  return {{"coefficients", checks},
          {"identity_holds", r.identity_holds},
          {"unique_eps_split", r.leading_monomials_distinct},
          {"printed_identity_holds", r.printed_identity_holds},
          {"matches", r.match_count()},
          {"mismatches", r.mismatch_count()}};
}

inline nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : s.checks) checks.push_back({{"check", c.description}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", s.name}, {"passed", s.passed()}, {"seconds", s.seconds}, {"checks", checks}};
}

}  // namespace skein
