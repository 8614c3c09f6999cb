#include <catch_amalgamated.hpp>

#include <random>

#include "skein/cabling.hpp"
#include "skein/fixtures.hpp"
#include "skein/surface_algebra.hpp"

using namespace skein;

namespace {

const PolyXYZ one(1), x = PolyXYZ::x(), y = PolyXYZ::y(), z = PolyXYZ::z(), t = PolyXYZ::t();
const LocalizedElement D = LocalizedElement::d_inverse(), D2 = LocalizedElement::d_inverse(2);

PolyXYZ random_even(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 2), coeff(-3, 3), odd(0, 1);
  PolyXYZ p;
  for (int i = 0; i < 4; ++i) {
    const int e = odd(rng);
    p += PolyXYZ(Monomial{2 * deg(rng) + e, 2 * deg(rng) + e, 2 * deg(rng) + e, 0}, LocalizedElement(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomials in x, y, z, t") {
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * y).to_string() == "xy");
  CHECK((x + one).pow(2) == x * x + PolyXYZ(2) * x + one);
  CHECK((PolyXYZ(D) * z).to_string() == "(d^-1)*z");
  CHECK((x * x * y).leading_term().first == Monomial{2, 1, 0, 0});
}

TEST_CASE("tables are mutually inverse") {
  CHECK(verify_psi_phi());
  CHECK(apply_psi(PhiTable::printed().t) == t);
  CHECK(apply_psi(x * x * y * y) == (x + one) * (y + one));
  CHECK_THROWS_AS(apply_psi(x), std::invalid_argument);
  CHECK_THROWS_AS(apply_psi(t), std::invalid_argument);
}

TEST_CASE("Phi after Psi is the identity on the even subalgebra") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const PolyXYZ p = random_even(rng);
    CHECK(apply_phi(apply_psi(p)) == p);
  }
}

TEST_CASE("derived t^2 relation") {
  const RelationReport r = derive_t_squared_relation();
  CHECK(r.identity_holds);
  CHECK(r.leading_monomials_distinct);
  CHECK_FALSE(r.printed_identity_holds);
  CHECK(r.match_count() == 11);
  CHECK(r.mismatch_count() == 3);
  CHECK(r.derived.at({0, 0, 0, 0}) == LocalizedElement(1) - D2);
  CHECK(r.derived.at({1, 0, 0, 0}) == LocalizedElement(1) - LocalizedElement(2) * D2);
  CHECK(r.derived.at({0, 1, 0, 0}) == LocalizedElement(1) - LocalizedElement(2) * D2);
  CHECK(r.derived.at({1, 1, 1, 0}) == LocalizedElement(1));
  CHECK(r.derived.at({0, 0, 0, 1}) == LocalizedElement(-2) * D);
  for (const auto& c : r.checks) {
    const bool expected_mismatch = c.monomial == Monomial{0, 0, 0, 0} || c.monomial == Monomial{1, 0, 0, 0} ||
                                   c.monomial == Monomial{0, 1, 0, 0};
    CHECK(c.match != expected_mismatch);
  }
  CHECK_THAT(r.to_text(), Catch::Matchers::ContainsSubstring("matches 11, mismatches 3"));
}

TEST_CASE("the derived relation holds in the algebra") {
  // t^2 - sum c * basis expressed in x, y, z, t, mapped through Phi, vanishes
  const RelationReport r = derive_t_squared_relation();
  PolyXYZ rhs;
  for (const auto& [m, c] : r.derived) rhs += PolyXYZ(m, c);
  const PhiTable phi = PhiTable::printed();
  CHECK(apply_phi(rhs) == phi.t * phi.t);
}

TEST_CASE("annulus powers") {
  CHECK(annulus_phi_powers(0) == one);
  CHECK(annulus_phi_powers(2) == x.pow(4) - PolyXYZ(2) * x * x + one);
  CHECK_THROWS(annulus_phi_powers(-1));
}

TEST_CASE("image of t from the theta diagram differs from the table") {
  const PolyXYZ computed = phi_punctured(parse_diagram(fixture("disk_t").payload));
  CHECK(t_image_delta(computed) == PolyXYZ(D) - PolyXYZ(D) * z * z);
}
