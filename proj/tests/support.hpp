#pragma once

// Random generators and brute-force oracles shared by the test binaries.
// Everything here is deliberately naive and shares no code with the
// library algorithms; it just enumerates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "minplus/charpoly.hpp"
#include "minplus/matrix.hpp"
#include "minplus/network.hpp"
#include "minplus/polynomial.hpp"

namespace minplus::testing {

/// The 7×7 example matrix with circuits of averages 2, 3, 4 and 5.
inline Matrix golden_matrix() {
  const Value E;
  return Matrix{{E, E, 2, E, E, E, E}, {3, E, E, 2, E, E, E}, {E, 1, 3, 9, 1, E, E}, {E, 6, E, E, E, 2, E},
                {E, E, E, E, E, 2, 1}, {E, E, E, E, E, E, 1}, {E, E, E, E, E, E, E}};
}

inline Polynomial poly(std::initializer_list<Value> c) { return Polynomial(c); }

/// Integer in [lo, hi], or a half/third of one with probability `fraction`.
inline Value random_finite(std::mt19937_64& rng, long lo, long hi, double fraction = 0.2) {
  long num = std::uniform_int_distribution<long>(lo, hi)(rng);
  if (std::bernoulli_distribution(fraction)(rng)) {
    long den = std::uniform_int_distribution<long>(2, 3)(rng);
    return Value(num, den);
  }
  return Value(num);
}

inline Value random_value(std::mt19937_64& rng, double density, long lo = -10, long hi = 10) {
  if (!std::bernoulli_distribution(density)(rng)) return Value::epsilon();
  return random_finite(rng, lo, hi);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n, double density, long lo = -10, long hi = 10) {
  std::vector<Value> e;
  e.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) e.push_back(random_value(rng, density, lo, hi));
  return Matrix(n, std::move(e));
}

inline double random_density(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.3, 1.0)(rng); }

/// Monic polynomial with ε coefficients mixed in (possibly trailing, possibly interior).
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, double eps_probability = 0.25) {
  std::vector<Value> c{Value::unit()};
  for (std::size_t j = 1; j <= n; ++j) {
    c.push_back(std::bernoulli_distribution(eps_probability)(rng) ? Value::epsilon() : random_finite(rng, -15, 30));
  }
  return Polynomial(std::move(c));
}

/// Lightest walk with exactly k edges from i to j, by enumerating every walk.
inline Value brute_walk(const Matrix& a, std::size_t i, std::size_t j, std::size_t k) {
  if (k == 0) return i == j ? Value::unit() : Value::epsilon();
  Value best;
  for (std::size_t next = 0; next < a.order(); ++next) {
    if (a(i, next).is_epsilon()) continue;
    best = oplus(best, otimes(a(i, next), brute_walk(a, next, j, k - 1)));
  }
  return best;
}

/// Every elementary circuit, found by trying all sequences of distinct
/// vertices that start at their minimum.
inline std::vector<Circuit> brute_circuits(const Matrix& a) {
  const std::size_t n = a.order();
  std::vector<Circuit> out;
  std::vector<std::size_t> path;
  std::vector<bool> on(n, false);
  auto walk = [&](auto&& self, std::size_t start) -> void {
    const std::size_t last = path.back();
    if (a(last, start).is_finite()) {
      Circuit c{path, 0};
      for (std::size_t k = 0; k < path.size(); ++k) c.weight += a(path[k], path[(k + 1) % path.size()]).finite();
      out.push_back(c);
    }
    for (std::size_t v = start + 1; v < n; ++v) {
      if (on[v] || a(last, v).is_epsilon()) continue;
      on[v] = true;
      path.push_back(v);
      self(self, start);
      path.pop_back();
      on[v] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    on.assign(n, false);
    on[s] = true;
    walk(walk, s);
  }
  std::sort(out.begin(), out.end(), [](const Circuit& x, const Circuit& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.vertices < y.vertices;
  });
  return out;
}

/// Lightest vertex-disjoint family of circuits per total length, over all
/// subsets of the brute-force circuit list.
inline std::vector<Value> brute_extended_minima(const Matrix& a) {
  const std::vector<Circuit> cs = brute_circuits(a);
  std::vector<Value> best(a.order() + 1);
  best[0] = Value::unit();
  const std::size_t m = cs.size();
  // Families never exceed n circuits; enumerate index subsets by recursion.
  std::vector<bool> used(a.order(), false);
  auto rec = [&](auto&& self, std::size_t from, std::size_t len, const Rational& w) -> void {
    for (std::size_t k = from; k < m; ++k) {
      bool ok = true;
      for (std::size_t v : cs[k].vertices) ok = ok && !used[v];
      if (!ok) continue;
      for (std::size_t v : cs[k].vertices) used[v] = true;
      Rational w2 = w + cs[k].weight;
      const std::size_t l2 = len + cs[k].length();
      best[l2] = oplus(best[l2], Value(w2));
      self(self, k + 1, l2, w2);
      for (std::size_t v : cs[k].vertices) used[v] = false;
    }
  };
  rec(rec, 0, 0, Rational(0));
  return best;
}

/// ĝ_A through trace linearity: c_k = min(tr A^k, min_i c_i + tr A^(k-i)),
/// a different algebraic route from forming the ⊕-sum of matrices.
inline Polynomial flv_by_traces(const Matrix& a) {
  const std::size_t n = a.order();
  std::vector<Value> tr(n + 1);
  Matrix p = a;
  for (std::size_t k = 1; k <= n; ++k) {
    tr[k] = trace(p);
    p = otimes(p, a);
  }
  std::vector<Value> c(n + 1);
  c[0] = Value::unit();
  for (std::size_t k = 1; k <= n; ++k) {
    Value v = tr[k];
    for (std::size_t i = 1; i < k; ++i) v = oplus(v, otimes(c[i], tr[k - i]));
    c[k] = v;
  }
  return Polynomial(std::move(c));
}

/// Product of linear factors by brute force: c_j = min over j-subsets of the
/// root multiset of their sum.
inline Polynomial brute_expand(const Factorization& f) {
  std::vector<Rational> roots;
  for (const Root& r : f.factors) roots.insert(roots.end(), r.multiplicity, r.value);
  const std::size_t m = roots.size();
  std::vector<Value> c(f.degree() + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Rational s = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        s += roots[i];
        ++j;
      }
    }
    c[j] = oplus(c[j], Value(s));
  }
  return Polynomial(std::move(c));
}

/// Sample x values: every pairwise intersection of the polynomial's term
/// lines (a superset of all breakpoints), midpoints between them, and points
/// well outside on both sides.
inline std::vector<Value> sample_grid(const Polynomial& p, const Polynomial& q) {
  std::set<Rational> xs;
  auto add_intersections = [&xs](const Polynomial& r) {
    const std::size_t n = r.degree();
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = i + 1; k <= n; ++k) {
        if (r.coeff(i).is_epsilon() || r.coeff(k).is_epsilon()) continue;
        // c_i + (n-i)x = c_k + (n-k)x
        xs.insert(Rational((r.coeff(k).finite() - r.coeff(i).finite()) / Rational(static_cast<long>(k - i))));
      }
    }
  };
  add_intersections(p);
  add_intersections(q);
  if (xs.empty()) xs.insert(Rational(0));
  std::vector<Rational> sorted(xs.begin(), xs.end());
  std::vector<Value> grid;
  grid.push_back(Value(Rational(sorted.front() - 7)));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    grid.push_back(Value(sorted[i]));
    if (i + 1 < sorted.size()) grid.push_back(Value(Rational((sorted[i] + sorted[i + 1]) / 2)));
  }
  grid.push_back(Value(Rational(sorted.back() + 7)));
  grid.push_back(Value::epsilon());
  return grid;
}

/// Min-plus similarity D⊗A⊗D^{-1}: a_ij ↦ d_i + a_ij − d_j.
inline Matrix diagonal_similarity(const Matrix& a, const std::vector<Rational>& d) {
  const std::size_t n = a.order();
  std::vector<Value> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e.push_back(a(i, j).is_epsilon() ? Value::epsilon() : Value(Rational(d[i] + a(i, j).finite() - d[j])));
    }
  }
  return Matrix(n, std::move(e));
}

inline Matrix diagonal(std::initializer_list<Value> d) {
  const std::size_t n = d.size();
  std::vector<Value> e(n * n);
  std::size_t i = 0;
  for (const Value& v : d) {
    e[i * n + i] = v;
    ++i;
  }
  return Matrix(n, std::move(e));
}

}  // namespace minplus::testing
