#pragma once

// Cross-checks between the algebraic side (characteristic polynomials) and
// the graph side (circuits of N(A)). Each check yields a Report; a check
// whose hypothesis does not hold is recorded with hypothesis_met = false and
// passes vacuously.

#include <string>
#include <vector>

#include "minplus/io.hpp"
#include "minplus/limits.hpp"
#include "minplus/matrix.hpp"
#include "minplus/network.hpp"
#include "minplus/polynomial.hpp"

namespace minplus {

struct Report {
  std::string check;
  bool hypothesis_met = true;
  bool pass = true;
  json details = json::object();
};

json to_json(const Report& r);

/// Coefficient j of g_A against the lightest extended circuit of length j.
Report coefficient_check(const Matrix& a, const Limits& limits = {});

/// Lists the circuits and whether they are pairwise vertex-disjoint. Informational.
Report separation_report(const Matrix& a, const Limits& limits = {});

/// Minimum cycle mean against the minimum roots of g_A and ĝ_A.
Report eigenvalue_check(const Matrix& a, const Limits& limits = {});

/// (x⊕p̃_1)^ℓ̃_1 ⊗ ... ⊗ (x⊕p̃_k)^ℓ̃_k ⊗ x^r built by merging circuits of equal
/// average; r = n - Σℓ̃_i. Meaningful for separated circuit sets.
Factorization homogeneous_factorization(const std::vector<Circuit>& circuits, std::size_t n);

/// For separated networks: the homogeneous prediction equals factorize(g_A),
/// and every factor of g_A is matched by a homogeneous extended circuit.
Report verify_separated_factorization(const Matrix& a, const Limits& limits = {});

/// For separated networks: g_A ≡ ĝ_A. Otherwise the outcome is only recorded.
Report verify_corollary_equivalence(const Matrix& a, const Limits& limits = {});

/// All of the above, in a fixed order.
std::vector<Report> verify_all(const Matrix& a, const Limits& limits = {});

}  // namespace minplus
