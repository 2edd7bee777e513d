#pragma once

#include <cstddef>

namespace minplus {

// Size caps for the exhaustive routines. The assignment-based determinant has none.
struct Limits {
  std::size_t permutation_cap = 9;      // tropdet_bruteforce: n! permutations
  std::size_t subset_cap = 16;          // charpoly_tropdet: 2^n principal minors
  std::size_t circuit_cap = 1'000'000;  // enumerate_circuits
  std::size_t exhaustive_cap = 10;      // extended-circuit enumeration: vertex count
};

}  // namespace minplus
