#pragma once

#include <cstddef>

#include "minplus/limits.hpp"
#include "minplus/matrix.hpp"
#include "minplus/polynomial.hpp"

namespace minplus {

/// Tropical determinant ⊕_σ ⊗_i a_{iσ(i)} by enumerating all n! permutations.
/// Throws CapExceeded when n > cap.
Value tropdet_bruteforce(const Matrix& a, std::size_t cap = Limits{}.permutation_cap);

/// Tropical determinant as a minimum-cost perfect assignment (Hungarian
/// method, ε cells forbidden). ε when no finite assignment exists. O(n^3).
Value tropdet_assignment(const Matrix& a);

/// g_A(x) = tropdet(A ⊕ x⊗I). Coefficient c_j is the minimum tropical
/// determinant over the size-j principal submatrices. Throws CapExceeded when
/// n > cap.
Polynomial charpoly_tropdet(const Matrix& a, std::size_t cap = Limits{}.subset_cap);

/// The min-plus Faddeev-LeVerrier recursion
///   c_1 = Tr(A),  c_k = Tr(A^k ⊕ c_1⊗A^(k-1) ⊕ ... ⊕ c_(k-1)⊗A).
Polynomial charpoly_flv(const Matrix& a);

/// Minimum root of a monic polynomial: min over finite c_j (j ≥ 1) of c_j / j,
/// ε when c_1..c_n are all ε. Works on truncated prefixes of a characteristic
/// polynomial as well. Throws std::domain_error unless p is monic.
Value eigenvalue_from_charpoly(const Polynomial& p);

}  // namespace minplus
