#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "skein/skein.hpp"

using namespace skein;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("shipped fixture files match the built-in copies") {
  for (const auto& f : fixtures()) {
    INFO(f.name);
    CHECK(slurp(std::string(SKEIN_SOURCE_DIR) + "/fixtures/" + fixture_file_name(f)) == f.payload);
  }
}

TEST_CASE("every fixture parses") {
  for (const auto& f : fixtures()) {
    INFO(f.name);
    if (f.kind == Fixture::Kind::Diagram)
      CHECK_NOTHROW(parse_diagram(f.payload));
    else
      CHECK_NOTHROW(parse_polynomial(f.payload));
  }
  CHECK_THROWS_AS(fixture("nonexistent"), std::out_of_range);
}

TEST_CASE("Petersen fixture is the published polynomial") {
  const LocalizedElement y = parse_polynomial(fixture("petersen").payload);
  const std::vector<std::pair<int, int>> expected = {
      {-34, -1}, {-30, -6}, {-26, -15}, {-22, -35}, {-18, -65}, {-14, -66}, {-10, -36}, {-6, -15}, {-2, -5},
      {6, 10},   {10, 35},  {14, 61},   {18, 66},   {22, 40},   {26, 15},   {30, 10},   {34, 6},   {38, 1}};
  LaurentPoly p;
  for (auto [e, c] : expected) p += LaurentPoly(c, e);
  CHECK(y == LocalizedElement(p));
}

TEST_CASE("machine output round-trips through the polynomial parser") {
  for (const char* name : {"circle", "theta", "k4", "kink", "hopf", "trefoil", "theta_twist"}) {
    const LocalizedElement y = yamada(parse_diagram(fixture(name).payload));
    CHECK(parse_polynomial(serialize_polynomial(y)) == y);
    CHECK(parse_polynomial(to_json(y).dump()) == y);
  }
  const LocalizedElement big(LaurentPoly(BigInt("-98765432109876543210987654321"), 7), 2);
  CHECK(to_json(big)["terms"][0][0] == "-98765432109876543210987654321");
  CHECK(parse_polynomial(to_json(big).dump()) == big);
  CHECK(json_integer(BigInt(42)) == 42);
}

TEST_CASE("report documents carry prime, moduli, mode, verdict and witness") {
  const nlohmann::json j = to_json(full_report(parse_polynomial(fixture("petersen").payload), std::nullopt, 5));
  CHECK(j["prime"] == 5);
  bool seen = false;
  for (const auto& t : j["tests"]) {
    CHECK(t.contains("modulus"));
    CHECK(t["modulus"].contains("printed"));
    CHECK(t["modulus"].contains("localized"));
    CHECK(t.contains("mode"));
    if (t["test"] == "palindrome") {
      seen = true;
      CHECK(t["verdict"] == "Obstructed");
      CHECK(t["modulus"]["printed"] == "A^40-1");
      CHECK(t["witness"]["prime"] == 5);
      CHECK_FALSE(t["witness"]["terms"].empty());
    }
    if (t["test"] == "free") {
      CHECK(t["verdict"] == "Skipped");
      CHECK(t["modulus"]["printed"] == "d^10-d^2");
      CHECK(t["modulus"]["localized"] == "d^8-1");
    }
  }
  CHECK(seen);
}

TEST_CASE("suites report in both forms") {
  const SuiteResult r = run_suite("thm11");
  CHECK(r.passed());
  const nlohmann::json j = to_json(r);
  CHECK(j["suite"] == "thm11");
  CHECK(j["passed"] == true);
  CHECK(to_json(derive_t_squared_relation())["mismatches"] == 3);
  CHECK_THROWS(run_suite("nonsense"));
  CHECK(suite_names().size() == 6);
}
