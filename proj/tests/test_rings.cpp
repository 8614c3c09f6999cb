#include <catch_amalgamated.hpp>

#include <random>

#include "skein/gfp.hpp"
#include "skein/localized.hpp"
#include "skein/poly_io.hpp"
#include "skein/rational.hpp"

using namespace skein;

namespace {

LaurentPoly random_laurent(std::mt19937_64& rng, int span = 6, int terms = 5, bool big = false) {
  std::uniform_int_distribution<int> e(-span, span), c(-9, 9), n(0, terms);
  LaurentPoly p;
  for (int i = n(rng); i > 0; --i) {
    BigInt coeff = c(rng);
    if (big) coeff *= BigInt("123456789012345678901234567890");
    p += LaurentPoly(coeff, e(rng));
  }
  return p;
}

LocalizedElement random_element(std::mt19937_64& rng) {
  return LocalizedElement(random_laurent(rng), std::uniform_int_distribution<unsigned>(0, 3)(rng));
}

const LocalizedElement d = LocalizedElement::d();

}  // namespace

TEST_CASE("Laurent polynomials form a commutative ring") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const bool big = i % 10 == 0;
    const LaurentPoly a = random_laurent(rng, 6, 5, big), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
  }
}

TEST_CASE("Laurent polynomial basics") {
  const LaurentPoly x = LaurentPoly(1, 1);
  CHECK((x + LaurentPoly(1)).pow(3).to_string() == "A^3+3*A^2+3*A+1");
  CHECK(LaurentPoly(2, -3).inverted() == LaurentPoly(2, 3));
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(-1, -2).to_string() == "-A^-2");
  const LaurentPoly f = (x + LaurentPoly(1)) * (x - LaurentPoly(2));
  REQUIRE(f.exact_divide(x - LaurentPoly(2)).has_value());
  CHECK(*f.exact_divide(x - LaurentPoly(2)) == x + LaurentPoly(1));
  CHECK_FALSE(f.exact_divide(x - LaurentPoly(3)).has_value());
}

TEST_CASE("localized ring axioms on random elements") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const LocalizedElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LocalizedElement());
  }
}

TEST_CASE("d is a unit and canonical forms are unique") {
  CHECK(d * LocalizedElement::d_inverse() == LocalizedElement(1));
  CHECK(LocalizedElement(d_expansion() * d_expansion(), 3) == LocalizedElement::d_inverse());
  CHECK(LocalizedElement(d_expansion(), 1).d_power() == 0);
  CHECK(d.to_string() == "d");
  CHECK((d * d - LocalizedElement(1)).to_string() == "d^2-1");
  CHECK((d * d - LocalizedElement(1)).a_form() == "A^4+1+A^-4");
  CHECK(LocalizedElement::A(1).to_string() == "A");
  const LocalizedElement theta = d.pow(3) - LocalizedElement(3) * d + LocalizedElement(2) * LocalizedElement::d_inverse();
  CHECK(theta.to_string() == "d^3-3*d+2*d^-1");
  CHECK(theta.d_power() == 1);
}

TEST_CASE("invert_variable is an involutive ring homomorphism fixing d") {
  std::mt19937_64 rng(3);
  CHECK(invert_variable(d) == d);
  for (int i = 0; i < 200; ++i) {
    const LocalizedElement a = random_element(rng), b = random_element(rng);
    CHECK(invert_variable(invert_variable(a)) == a);
    CHECK(invert_variable(a * b) == invert_variable(a) * invert_variable(b));
    CHECK(invert_variable(a + b) == invert_variable(a) + invert_variable(b));
  }
}

TEST_CASE("reduction mod p is a homomorphism on numerators") {
  std::mt19937_64 rng(4);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 101ULL}) {
    for (int i = 0; i < 50; ++i) {
      const LaurentPoly a = random_laurent(rng, 6, 5, i % 7 == 0), b = random_laurent(rng);
      CHECK(GfpLaurent(a * b, p) == GfpLaurent(a, p) * GfpLaurent(b, p));
      CHECK(GfpLaurent(a + b, p) == GfpLaurent(a, p) + GfpLaurent(b, p));
    }
  }
  const auto [g, k] = to_gfp(LocalizedElement(LaurentPoly(7) + LaurentPoly(3, 2), 2), 5);
  CHECK(k == 2);
  CHECK(g.coefficient(0) == 2);
  CHECK(g.coefficient(2) == 3);
}

TEST_CASE("GF(p) division and gcd") {
  const GfpLaurent a41(LaurentPoly(1, 41), 5);
  const GfpLaurent a40m1(LaurentPoly(1, 40) - LaurentPoly(1), 5);
  auto [q, r] = gfp_divrem(a41, a40m1);
  CHECK(q == GfpLaurent(LaurentPoly(1, 1), 5));
  CHECK(r == GfpLaurent(LaurentPoly(1, 1), 5));

  const GfpLaurent a4p1(LaurentPoly(1, 4) + LaurentPoly(1), 5);
  const GfpLaurent a8m1(LaurentPoly(1, 8) - LaurentPoly(1), 5);
  CHECK(gfp_gcd(a4p1, a8m1) == a4p1);

  // d^4 - 1 = ((A^4+1)^4 - A^8)/A^8 shares no factor with A^4 + 1 over GF(3).
  const LaurentPoly d4m1 = d_power_expansion(4) - LaurentPoly(1);
  const GfpLaurent g = gfp_gcd(GfpLaurent(LaurentPoly(1, 4) + LaurentPoly(1), 3), GfpLaurent(d4m1, 3));
  CHECK(g == GfpLaurent(LaurentPoly(1), 3));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const GfpLaurent x(random_laurent(rng, 8, 8), 7), f(random_laurent(rng, 4, 4), 7);
    if (f.is_zero()) continue;
    auto [qq, rr] = gfp_divrem(x, f);
    CHECK(qq * f + rr == x);
  }
  CHECK_THROWS_AS(gfp_divrem(a41, GfpLaurent(5)), std::domain_error);
}

TEST_CASE("primes are checked") {
  CHECK_THROWS_WITH(GfpLaurent(6), Catch::Matchers::ContainsSubstring("p must be prime"));
  CHECK_THROWS_AS(GfpLaurent(1), std::invalid_argument);
  CHECK_NOTHROW(GfpLaurent(2));
  CHECK(is_prime(2147483647ULL));
}

TEST_CASE("Frobenius identity over GF(p)") {
  const LocalizedElement d2m1 = d * d - LocalizedElement(1);
  for (unsigned p : {2U, 3U, 5U, 7U, 11U}) {
    const LaurentPoly lhs = d2m1.pow(p).numerator();
    const LaurentPoly rhs = (d.pow(2 * p) - LocalizedElement(1)).numerator();
    CHECK(GfpLaurent(lhs, p) == GfpLaurent(rhs, p));
  }
}

TEST_CASE("polynomial documents round-trip") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const LocalizedElement a(random_laurent(rng, 10, 6, i % 5 == 0), std::uniform_int_distribution<unsigned>(0, 4)(rng));
    CHECK(parse_polynomial(serialize_polynomial(a)) == a);
  }
  const auto y = parse_polynomial(R"({"terms": [[1, 4], [1, 0], [1, -4]], "d_power": 0})");
  CHECK(y == d * d - LocalizedElement(1));
  CHECK(serialize_polynomial(y) == R"({"terms": [[1, 4], [1, 0], [1, -4]], "d_power": 0})");
  CHECK(parse_polynomial(R"({"terms": []})").is_zero());
}

TEST_CASE("polynomial documents keep wide integers exact") {
  const std::string big = "340282366920938463463374607431768211457";
  const auto a = parse_polynomial(R"({"terms": [[)" + big + R"(, 3], [-)" + big + R"(, -1]], "d_power": 0})");
  CHECK(a.numerator().coefficient(3) == BigInt(big));
  CHECK(a.numerator().coefficient(-1) == -BigInt(big));
  CHECK(serialize_polynomial(a).find(big) != std::string::npos);
}

TEST_CASE("malformed polynomial documents") {
  CHECK_THROWS_AS(parse_polynomial("{"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[]"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"terms": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"terms": [[1.5, 2]]})"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"terms": [["x", 2]]})"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"terms": [[1, 2]], "d_power": -1})"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R"({"terms": [[1, 99999999999]]})"), ParseError);
}

TEST_CASE("rational functions") {
  const RationalFunction dd = RationalFunction::d();
  CHECK(dd * dd.inverse() == RationalFunction(1));
  CHECK((dd - dd.inverse()) * dd == dd * dd - RationalFunction(1));
  const RationalFunction a = RationalFunction(1) / (dd - RationalFunction(1));
  CHECK(a * (dd - RationalFunction(1)) == RationalFunction(1));
  CHECK(RationalFunction(LocalizedElement::d_inverse(2)) == (dd * dd).inverse());
  CHECK_THROWS(RationalFunction().inverse());
}
