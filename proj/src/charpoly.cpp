#include "minplus/charpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minplus/error.hpp"

namespace minplus {

Value tropdet_bruteforce(const Matrix& a, std::size_t cap) {
  const std::size_t n = a.order();
  if (n > cap) {
    throw CapExceeded("tropdet_bruteforce: order " + std::to_string(n) + " exceeds permutation cap " +
                          std::to_string(cap) + "; use tropdet_assignment",
                      cap, n);
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Value best = Value::epsilon();
  Rational sum;
  do {
    sum = 0;
    bool finite = true;
    for (std::size_t i = 0; i < n && finite; ++i) {
      const Value& v = a(i, sigma[i]);
      if (v.is_epsilon()) {
        finite = false;
      } else {
        sum += v.finite();
      }
    }
    if (finite && (best.is_epsilon() || sum < best.finite())) best = Value(sum);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

// Shortest-augmenting-path Hungarian method with row/column potentials.
// Rows and columns are 1-based; column 0 is the virtual root of each search.
Value tropdet_assignment(const Matrix& a) {
  const std::size_t n = a.order();
  std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    match[0] = row;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Value& c = a(i0 - 1, j - 1);
        if (c.is_finite()) {
          Rational reduced = c.finite() - u[i0] - v[j];
          if (!minv[j] || reduced < *minv[j]) {
            minv[j] = reduced;
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      // Every column reachable from the search tree is already used: by Hall's
      // condition no perfect matching over finite cells exists.
      if (!delta) return Value::epsilon();
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Rational total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += a(match[j] - 1, j - 1).finite();
  return Value(total);
}

Polynomial charpoly_tropdet(const Matrix& a, std::size_t cap) {
  const std::size_t n = a.order();
  if (n > cap) {
    throw CapExceeded("charpoly_tropdet: order " + std::to_string(n) + " exceeds subset cap " + std::to_string(cap),
                      cap, n);
  }
  std::vector<Value> c(n + 1);
  c[0] = Value::unit();
  std::vector<std::size_t> subset;
  subset.reserve(n);
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(i);
    }
    const std::size_t j = subset.size();
    c[j] = oplus(c[j], tropdet_assignment(principal_submatrix(a, subset)));
  }
  return Polynomial(std::move(c));
}

Polynomial charpoly_flv(const Matrix& a) {
  const std::size_t n = a.order();
  std::vector<Matrix> powers;  // powers[k] = A^(k+1)
  powers.reserve(n);
  powers.push_back(a);
  for (std::size_t k = 1; k < n; ++k) powers.push_back(otimes(powers.back(), a));

  std::vector<Value> c(n + 1);
  c[0] = Value::unit();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix acc = powers[k - 1];
    for (std::size_t i = 1; i < k; ++i) acc = oplus(acc, scalar_otimes(c[i], powers[k - i - 1]));
    c[k] = trace(acc);
  }
  return Polynomial(std::move(c));
}

Value eigenvalue_from_charpoly(const Polynomial& p) {
  if (!p.is_monic()) throw std::domain_error("eigenvalue_from_charpoly: polynomial is not monic");
  Value best = Value::epsilon();
  for (std::size_t j = 1; j <= p.degree(); ++j) {
    const Value& c = p.coeff(j);
    if (c.is_epsilon()) continue;
    best = oplus(best, Value(Rational(c.finite() / Rational(static_cast<long>(j)))));
  }
  return best;
}

}  // namespace minplus
