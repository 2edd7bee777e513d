#include <doctest.h>

#include <random>
#include <stdexcept>

#include "minplus/polynomial.hpp"
#include "support.hpp"

using namespace minplus;
using testing::poly;

namespace {
const Value E = Value::epsilon();

const Polynomial kFigure = poly({0, 2, 6});                            // x²⊕2⊗x⊕6
const Polynomial kTropdet = poly({0, 3, 8, 6, 20, E, E, E});           // g_A of the 7×7 example
const Polynomial kFlv = poly({0, 3, 6, 6, 9, 12, 12, 15});             // ĝ_A of the 7×7 example

bool chain_holds(const Polynomial& p) {
  std::optional<Rational> prev;
  for (std::size_t j = 1; j <= p.degree() && p.coeff(j).is_finite(); ++j) {
    Rational d = p.coeff(j).finite() - p.coeff(j - 1).finite();
    if (prev && d < *prev) return false;
    prev = d;
  }
  return true;
}
}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(kFigure, 3) == Value(5));
  CHECK(evaluate(kFigure, 2) == Value(4));
  CHECK(evaluate(kFigure, E) == Value(6));
  CHECK(evaluate(kTropdet, E) == E);
  CHECK(evaluate(kFigure, Value(-1, 2)) == Value(-1));
}

TEST_CASE("canonicalize follows the lower hull") {
  CHECK(canonicalize(kTropdet) == poly({0, 2, 4, 6, 20, E, E, E}));
  CHECK(canonicalize(kFlv) == poly({0, 2, 4, 6, 8, 10, 12, 15}));
  CHECK(canonicalize(kFigure) == kFigure);
  CHECK(canonicalize(poly({0, E, 4})) == poly({0, 2, 4}));
  CHECK(canonicalize(Polynomial::monomial(4)) == Polynomial::monomial(4));
  CHECK(canonicalize(poly({0, 1, 0})) == poly({0, 0, 0}));
  CHECK(canonicalize(poly({0, Value(1, 2), 5, 1})) == poly({0, Value(1, 3), Value(2, 3), 1}));
  CHECK(canonicalize(poly({0})) == poly({0}));
}

TEST_CASE("canonicalize requires a monic polynomial") {
  CHECK_THROWS_AS(canonicalize(poly({1, 2, 3})), std::domain_error);
  CHECK_THROWS_AS(canonicalize(poly({E, 2, 3})), std::domain_error);
  CHECK_THROWS_AS(factorize(poly({2, 0})), std::domain_error);
}

TEST_CASE("tied slopes pivot on the farthest point") {
  // From c_0 the slopes to j = 3 and j = 6 are both 2.
  const Polynomial c = canonicalize(kFlv);
  CHECK(c.coeff(3) == Value(6));
  CHECK(c.coeff(6) == Value(12));
  CHECK(chain_holds(c));
  CHECK(factorize(kFlv).factors.front() == Root{2, 6});
}

TEST_CASE("is_equivalent") {
  CHECK(is_equivalent(kFigure, expand(Factorization{{{2, 1}, {4, 1}}, 0})));
  CHECK(is_equivalent(kTropdet, kTropdet));
  CHECK(is_equivalent(poly({0, 0, 0}), poly({0, 1, 0})));
  CHECK_FALSE(is_equivalent(kTropdet, kFlv));
  CHECK_FALSE(is_equivalent(poly({0, 0}), poly({0, 0, 0})));
  // Non-monic inputs compare as functions too.
  CHECK(is_equivalent(poly({3, 3, 3}), poly({3, 4, 3})));
  CHECK_FALSE(is_equivalent(poly({E, 0, 1}), poly({E, 0, 2})));
  CHECK(is_equivalent(poly({E, E, E}), poly({E, E, E})));
}

TEST_CASE("factorize") {
  CHECK(factorize(kFigure) == Factorization{{{2, 1}, {4, 1}}, 0});
  CHECK(factorize(kTropdet) == Factorization{{{2, 3}, {14, 1}}, 3});
  CHECK(factorize(kFlv) == Factorization{{{2, 6}, {3, 1}}, 0});
  CHECK(factorize(Polynomial::monomial(3)) == Factorization{{}, 3});
  CHECK(factorize(poly({0, 3, 6, 6, 9})) == Factorization{{{2, 3}, {3, 1}}, 0});
}

TEST_CASE("expand") {
  CHECK(expand(Factorization{{{2, 1}, {4, 1}}, 0}) == kFigure);
  CHECK(expand(Factorization{{}, 5}) == Polynomial::monomial(5));
  CHECK(expand(Factorization{{{2, 3}, {14, 1}}, 3}) == poly({0, 2, 4, 6, 20, E, E, E}));
  CHECK(expand(Factorization{{{14, 1}, {2, 3}}, 3}) == canonicalize(kTropdet));
}

TEST_CASE("breakpoints") {
  CHECK(breakpoints(kFigure) == std::vector<Breakpoint>{{2, 4, 2, 1}, {4, 6, 1, 0}});
  CHECK(breakpoints(Polynomial::monomial(4)).empty());
  const auto b = breakpoints(kFlv);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Breakpoint{2, 14, 7, 1});
  CHECK(b[1] == Breakpoint{3, 15, 1, 0});
  // g_A keeps slope 3 after its last root because of the x^3 factor.
  const auto g = breakpoints(kTropdet);
  REQUIRE(g.size() == 2);
  CHECK(g[1] == Breakpoint{14, 62, 4, 3});
  // Non-monic: shifted and leading-ε polynomials.
  CHECK(breakpoints(poly({1, 3, 7})) == std::vector<Breakpoint>{{2, 5, 2, 1}, {4, 7, 1, 0}});
  CHECK(breakpoints(poly({E, 0, 2})) == std::vector<Breakpoint>{{2, 2, 1, 0}});
  CHECK(breakpoints(poly({E, E})).empty());
}

TEST_CASE("to_string") {
  CHECK(to_string(kTropdet) == "x^7 ⊕ 3⊗x^6 ⊕ 8⊗x^5 ⊕ 6⊗x^4 ⊕ 20⊗x^3");
  CHECK(to_string(kFigure) == "x^2 ⊕ 2⊗x ⊕ 6");
  CHECK(to_string(Polynomial::monomial(3)) == "x^3");
  CHECK(to_string(factorize(kTropdet)) == "(x⊕2)^3 ⊗ (x⊕14) ⊗ x^3");
  CHECK(to_string(factorize(kFlv)) == "(x⊕2)^6 ⊗ (x⊕3)");
  CHECK(to_string(Factorization{}) == "0");
}

TEST_CASE("canonical form properties on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 11);
    const Polynomial p = testing::random_polynomial(rng, n, trial % 3 == 0 ? 0.5 : 0.2);
    const Polynomial c = canonicalize(p);
    CAPTURE(to_string(p));
    REQUIRE(c.degree() == p.degree());
    for (const Value& x : testing::sample_grid(p, c)) CHECK(evaluate(p, x) == evaluate(c, x));
    CHECK(chain_holds(c));
    CHECK(canonicalize(c) == c);
    const Factorization f = factorize(p);
    CHECK(f.degree() == n);
    for (std::size_t k = 1; k < f.factors.size(); ++k) CHECK(f.factors[k - 1].value < f.factors[k].value);
    CHECK(expand(f) == c);
    if (f.degree() - f.xpower <= 12) CHECK(testing::brute_expand(f) == c);
    CHECK(is_equivalent(p, c));
  }
}
