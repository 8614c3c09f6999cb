#include <catch_amalgamated.hpp>

#include <random>

#include "skein/temperley_lieb.hpp"

using namespace skein;

namespace {

const RationalFunction d = RationalFunction::d();

TangleElement U(int n, int i) { return TangleElement::generator(n, i); }

}  // namespace

TEST_CASE("crossingless pairings are counted by Catalan numbers") {
  const std::vector<std::size_t> catalan = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) CHECK(all_pairings(n).size() == catalan[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("pairings are validated") {
  CHECK_THROWS(PlanarPairing({1, 0, 3}));
  CHECK_THROWS(PlanarPairing({3, 2, 1, 0}));  // bottom-left to top-right crosses bottom-right to top-left
  CHECK(PlanarPairing({2, 3, 0, 1}) == PlanarPairing::identity(2));
  CHECK_NOTHROW(PlanarPairing({1, 0, 3, 2}));
  CHECK_THROWS(PlanarPairing::generator(3, 3));
  CHECK_THROWS(PlanarPairing::generator(3, 0));
}

TEST_CASE("Temperley-Lieb relations") {
  for (int n = 2; n <= 5; ++n) {
    const TangleElement id = TangleElement::identity(n);
    for (int i = 1; i < n; ++i) {
      CHECK(tl_mul(U(n, i), U(n, i)) == d * U(n, i));
      CHECK(tl_mul(id, U(n, i)) == U(n, i));
      CHECK(tl_mul(U(n, i), id) == U(n, i));
      if (i + 1 < n) {
        CHECK(tl_mul(tl_mul(U(n, i), U(n, i + 1)), U(n, i)) == U(n, i));
        CHECK(tl_mul(tl_mul(U(n, i + 1), U(n, i)), U(n, i + 1)) == U(n, i + 1));
      }
      for (int j = i + 2; j < n; ++j) CHECK(tl_mul(U(n, i), U(n, j)) == tl_mul(U(n, j), U(n, i)));
    }
  }
}

TEST_CASE("multiplication is associative on random basis elements") {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 5; ++n) {
    const auto basis = all_pairings(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int k = 0; k < 30; ++k) {
      const TangleElement a(basis[pick(rng)]), b(basis[pick(rng)]), c(basis[pick(rng)]);
      CHECK(tl_mul(tl_mul(a, b), c) == tl_mul(a, tl_mul(b, c)));
    }
  }
}

TEST_CASE("composition counts closed loops") {
  auto [p, loops] = compose(PlanarPairing::generator(2, 1), PlanarPairing::generator(2, 1));
  CHECK(loops == 1);
  CHECK(p == PlanarPairing::generator(2, 1));
  auto [q, none] = compose(PlanarPairing::identity(3), PlanarPairing::generator(3, 2));
  CHECK(none == 0);
  CHECK(q == PlanarPairing::generator(3, 2));
}

TEST_CASE("Jones-Wenzl projectors") {
  CHECK(jones_wenzl(1) == TangleElement::identity(1));
  CHECK(jones_wenzl(2) == TangleElement::identity(2) - d.inverse() * U(2, 1));
  for (int n = 1; n <= 5; ++n) {
    INFO("n = " << n);
    const TangleElement f = jones_wenzl(n);
    CHECK(tl_mul(f, f) == f);
    for (int i = 1; i < n; ++i) {
      CHECK(tl_mul(f, U(n, i)).is_zero());
      CHECK(tl_mul(U(n, i), f).is_zero());
    }
    CHECK(f.coefficient(PlanarPairing::identity(n)) == RationalFunction(1));
  }
  // f_3 = 1 + (d/(1-d^2))(U1 + U2) + (1/(d^2-1))(U1U2 + U2U1)
  const TangleElement f3 = jones_wenzl(3);
  const RationalFunction a = d / (RationalFunction(1) - d * d), b = RationalFunction(1) / (d * d - RationalFunction(1));
  CHECK(f3.coefficient(PlanarPairing::generator(3, 1)) == a);
  CHECK(f3.coefficient(PlanarPairing::generator(3, 2)) == a);
  const auto u12 = tl_mul(U(3, 1), U(3, 2)).terms().begin()->first;
  const auto u21 = tl_mul(U(3, 2), U(3, 1)).terms().begin()->first;
  CHECK(f3.coefficient(u12) == b);
  CHECK(f3.coefficient(u21) == b);
  CHECK(f3.terms().size() == 5);
  CHECK_THROWS(jones_wenzl(0));
}

TEST_CASE("traces of projectors follow the Chebyshev recurrence") {
  RationalFunction prev = 1, cur = d;
  for (int n = 1; n <= 6; ++n) {
    CHECK(markov_trace(jones_wenzl(n)) == cur);
    const RationalFunction next = d * cur - prev;
    prev = cur;
    cur = next;
  }
  CHECK(markov_trace(TangleElement::identity(3)) == d * d * d);
  CHECK(markov_trace(U(2, 1)) == d);
}
