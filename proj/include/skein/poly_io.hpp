#pragma once

// Polynomial documents:
//   {"terms": [[coefficient, exponent], ...], "d_power": k}
// Coefficients may be JSON integers of any length or decimal strings.

#include <cctype>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skein/errors.hpp"
#include "skein/localized.hpp"

namespace skein {

namespace detail {

// Builds a DOM in which every number is kept as its decimal token, so that
// integers wider than 64 bits survive parsing.
class ExactNumberSax {
 public:
  using json = nlohmann::json;

  bool null() { return put(json(nullptr)); }
  bool boolean(bool v) { return put(json(v)); }
  bool number_integer(json::number_integer_t v) { return put(json(std::to_string(v))); }
  bool number_unsigned(json::number_unsigned_t v) { return put(json(std::to_string(v))); }
  bool number_float(json::number_float_t, const json::string_t& s) { return put(json(s)); }
  bool string(json::string_t& s) { return put(json(s)); }
  bool binary(json::binary_t&) { return put(json(nullptr)); }
  bool start_object(std::size_t) {
    stack_.push_back(json::object());
    return true;
  }
  bool key(json::string_t& k) {
    keys_.push_back(k);
    return true;
  }
  bool end_object() { return pop(); }
  bool start_array(std::size_t) {
    stack_.push_back(json::array());
    return true;
  }
  bool end_array() { return pop(); }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) {
    throw ParseError("invalid polynomial document at byte " + std::to_string(pos) + ": " + ex.what());
  }

  json result;

 private:
  bool put(json v) {
    if (stack_.empty()) {
      result = std::move(v);
    } else if (stack_.back().is_array()) {
      stack_.back().push_back(std::move(v));
    } else {
      stack_.back()[keys_.back()] = std::move(v);
      keys_.pop_back();
    }
    return true;
  }
  bool pop() {
    json v = std::move(stack_.back());
    stack_.pop_back();
    return put(std::move(v));
  }

  std::vector<json> stack_;
  std::vector<std::string> keys_;
};

inline BigInt parse_integer_token(const nlohmann::json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be an integer");
  const std::string& s = v.get_ref<const std::string&>();
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError(std::string(what) + " must be an integer, got '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError(std::string(what) + " must be an integer, got '" + s + "'");
  BigInt r(s.substr(i));
  return s[0] == '-' ? BigInt(-r) : r;
}

inline int parse_small_integer(const nlohmann::json& v, const char* what) {
  BigInt b = parse_integer_token(v, what);
  if (b > std::numeric_limits<int>::max() || b < std::numeric_limits<int>::min())
    throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(b);
}

}  // namespace detail

inline LocalizedElement parse_polynomial(const std::string& text) {
  detail::ExactNumberSax sax;
  nlohmann::json::sax_parse(text, &sax);
  const auto& doc = sax.result;
  if (!doc.is_object()) throw ParseError("polynomial document must be an object");
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw ParseError("polynomial document needs a 'terms' list");
  LaurentPoly num;
  for (const auto& term : doc["terms"]) {
    if (!term.is_array() || term.size() != 2) throw ParseError("each term must be a [coefficient, exponent] pair");
    num += LaurentPoly(detail::parse_integer_token(term[0], "coefficient"),
                       detail::parse_small_integer(term[1], "exponent"));
  }
  int d_power = 0;
  if (doc.contains("d_power")) d_power = detail::parse_small_integer(doc["d_power"], "d_power");
  if (d_power < 0) throw ParseError("d_power must be nonnegative");
  return LocalizedElement(std::move(num), static_cast<unsigned>(d_power));
}

/// Canonical document, highest exponent first.
inline std::string serialize_polynomial(const LocalizedElement& a) {
  std::ostringstream os;
  os << "{\"terms\": [";
  bool first = true;
  const auto& t = a.numerator().terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (!first) os << ", ";
    first = false;
    os << '[' << it->second << ", " << it->first << ']';
  }
  os << "], \"d_power\": " << a.d_power() << '}';
  return os.str();
}

}  // namespace skein
