#include <doctest.h>

#include <random>
#include <stdexcept>

#include "minplus/charpoly.hpp"
#include "minplus/error.hpp"
#include "minplus/network.hpp"
#include "support.hpp"

using namespace minplus;
using testing::poly;

namespace {
const Value E = Value::epsilon();
}

TEST_CASE("tropdet on small matrices") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(tropdet_bruteforce(a) == Value(5));
  CHECK(tropdet_assignment(a) == Value(5));
  const Matrix b{{0, 7}, {1, 9}};
  CHECK(tropdet_bruteforce(b) == Value(8));
  CHECK(tropdet_assignment(b) == Value(8));
  CHECK(tropdet_assignment(identity(4)) == Value(0));
  CHECK(tropdet_assignment(Matrix{{Value(-5, 2)}}) == Value(-5, 2));
}

TEST_CASE("tropdet is ε when no finite permutation exists") {
  const Matrix a{{E, 1}, {E, 2}};
  CHECK(tropdet_bruteforce(a) == E);
  CHECK(tropdet_assignment(a) == E);
  CHECK(tropdet_assignment(Matrix(5)) == E);
  CHECK(tropdet_assignment(testing::golden_matrix()) == E);
}

TEST_CASE("tropdet_bruteforce refuses orders above its cap") {
  CHECK_THROWS_AS(tropdet_bruteforce(identity(10)), CapExceeded);
  CHECK_THROWS_AS(tropdet_bruteforce(identity(4), 3), CapExceeded);
  CHECK(tropdet_bruteforce(identity(4), 4) == Value(0));
}

TEST_CASE("golden characteristic polynomials") {
  const Matrix a = testing::golden_matrix();
  CHECK(charpoly_tropdet(a) == poly({0, 3, 8, 6, 20, E, E, E}));
  CHECK(charpoly_flv(a) == poly({0, 3, 6, 6, 9, 12, 12, 15}));
  CHECK(eigenvalue_from_charpoly(charpoly_tropdet(a)) == Value(2));
  CHECK(eigenvalue_from_charpoly(charpoly_flv(a)) == Value(2));
}

TEST_CASE("trivial characteristic polynomials") {
  CHECK(charpoly_tropdet(identity(3)) == poly({0, 0, 0, 0}));
  CHECK(charpoly_flv(identity(3)) == poly({0, 0, 0, 0}));
  CHECK(charpoly_tropdet(Matrix(3)) == Polynomial::monomial(3));
  CHECK(charpoly_flv(Matrix(3)) == Polynomial::monomial(3));
  CHECK(charpoly_tropdet(Matrix{{5}}) == poly({0, 5}));
}

TEST_CASE("diag(1,2,3): ĝ counts the cheapest loop repeatedly") {
  const Matrix d = testing::diagonal({1, 2, 3});
  CHECK(charpoly_tropdet(d) == poly({0, 1, 3, 6}));
  CHECK(charpoly_flv(d) == poly({0, 1, 2, 3}));
  CHECK(factorize(charpoly_tropdet(d)) == Factorization{{{1, 1}, {2, 1}, {3, 1}}, 0});
  CHECK(factorize(charpoly_flv(d)) == Factorization{{{1, 3}}, 0});
}

TEST_CASE("charpoly_tropdet refuses orders above its cap") {
  CHECK_THROWS_AS(charpoly_tropdet(identity(4), 3), CapExceeded);
  CHECK_THROWS_AS(charpoly_tropdet(identity(17)), CapExceeded);
}

TEST_CASE("eigenvalue_from_charpoly") {
  CHECK(eigenvalue_from_charpoly(poly({0, 2, 6})) == Value(2));
  CHECK(eigenvalue_from_charpoly(poly({0, 4, 6})) == Value(3));
  CHECK(eigenvalue_from_charpoly(poly({0, E, 3})) == Value(3, 2));
  CHECK(eigenvalue_from_charpoly(Polynomial::monomial(4)) == E);
  CHECK_THROWS_AS(eigenvalue_from_charpoly(poly({1, 2})), std::domain_error);
}

TEST_CASE("random matrices: both determinant routes and the Faddeev-LeVerrier form") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Matrix a = testing::random_matrix(rng, n, testing::random_density(rng));
    CHECK(tropdet_bruteforce(a) == tropdet_assignment(a));
    const Polynomial g = charpoly_tropdet(a);
    CHECK(g.coeff(0) == Value::unit());
    CHECK(g.coeff(n) == tropdet_assignment(a));
    CHECK(g.coeff(1) == trace(a));
    CHECK(charpoly_flv(a) == testing::flv_by_traces(a));
    // Pointwise: g(x) = tropdet(A ⊕ x⊗I).
    for (long x = -12; x <= 12; x += 3) {
      CHECK(evaluate(g, x) == tropdet_bruteforce(oplus(a, scalar_otimes(x, identity(n)))));
    }
    CHECK(evaluate(g, E) == tropdet_assignment(a));
  }
}

TEST_CASE("characteristic polynomials are invariant under diagonal similarity") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix a = testing::random_matrix(rng, n, testing::random_density(rng));
    std::vector<Rational> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(testing::random_finite(rng, -5, 5).finite());
    const Matrix b = testing::diagonal_similarity(a, d);
    CHECK(charpoly_tropdet(a) == charpoly_tropdet(b));
    CHECK(charpoly_flv(a) == charpoly_flv(b));
  }
}

TEST_CASE("coefficients of g_A are lightest extended circuits") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix a = testing::random_matrix(rng, n, testing::random_density(rng));
    const Polynomial g = charpoly_tropdet(a);
    const std::vector<Value> oracle = testing::brute_extended_minima(a);
    for (std::size_t j = 0; j <= n; ++j) CHECK(g.coeff(j) == oracle[j]);
  }
}

TEST_CASE("eigenvalue triangle") {
  std::mt19937_64 rng(80);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Matrix a = testing::random_matrix(rng, n, testing::random_density(rng));
    const Value karp = min_cycle_mean(network_from_matrix(a));
    CHECK(eigenvalue_from_charpoly(charpoly_tropdet(a)) == karp);
    CHECK(eigenvalue_from_charpoly(charpoly_flv(a)) == karp);
  }
}
