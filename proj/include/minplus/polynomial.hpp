#pragma once

/**
 * Univariate min-plus polynomials
 *
 *   p(x) = c_0⊗x^n ⊕ c_1⊗x^(n-1) ⊕ ... ⊕ c_n  =  min_j { c_j + (n-j)·x }
 *
 * treated as piecewise-linear functions. Two polynomials are equivalent when
 * they define the same function; the canonical representative is the lower
 * convex hull of the points (j, c_j), whose successive differences are the
 * roots of its linear factors.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "minplus/value.hpp"

namespace minplus {

class Polynomial {
 public:
  /// Coefficients c_0..c_n; must be non-empty.
  explicit Polynomial(std::vector<Value> coeffs);
  Polynomial(std::initializer_list<Value> coeffs);

  /// x^n: c_0 = e, the rest ε.
  static Polynomial monomial(std::size_t n);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const Value& coeff(std::size_t j) const { return coeffs_.at(j); }
  std::span<const Value> coeffs() const noexcept { return coeffs_; }
  bool is_monic() const { return coeffs_.front() == Value::unit(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Value> coeffs_;
};

struct Root {
  Rational value;
  std::size_t multiplicity = 0;

  friend bool operator==(const Root&, const Root&) = default;
};

/// (x⊕ρ_1)^{m_1} ⊗ ... ⊗ (x⊕ρ_k)^{m_k} ⊗ x^r with ρ_1 < ... < ρ_k.
struct Factorization {
  std::vector<Root> factors;
  std::size_t xpower = 0;

  std::size_t degree() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct Breakpoint {
  Rational x;
  Rational y;
  std::size_t slope_left = 0;
  std::size_t slope_right = 0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

Value evaluate(const Polynomial& p, const Value& x);

/// Equivalent polynomial whose finite coefficients lie on the lower convex
/// hull of (j, c_j). Trailing ε coefficients (no finite point to their right)
/// stay ε. Throws std::domain_error unless p is monic.
Polynomial canonicalize(const Polynomial& p);

bool is_equivalent(const Polynomial& p, const Polynomial& q);

/// Throws std::domain_error unless p is monic.
Factorization factorize(const Polynomial& p);

/// Multiplies the linear factors back out; the result is canonical.
Polynomial expand(const Factorization& f);

/// Points where the function changes slope, in increasing x. Slopes are the
/// x-exponents of the active terms on either side.
std::vector<Breakpoint> breakpoints(const Polynomial& p);

/// "x^7 ⊕ 3⊗x^6 ⊕ ..." with ε terms omitted.
std::string to_string(const Polynomial& p);
/// "(x⊕2)^3 ⊗ (x⊕14) ⊗ x^3".
std::string to_string(const Factorization& f);

}  // namespace minplus
