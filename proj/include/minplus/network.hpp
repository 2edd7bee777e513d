#pragma once

/**
 * Weighted directed networks N(A) and their circuit structure.
 *
 * Vertices are 0-based here; textual reports print them 1-based. The edge
 * (i, j) of N(A) exists exactly when a_ij is finite and carries weight a_ij.
 */

#include <cstddef>
#include <vector>

#include "minplus/limits.hpp"
#include "minplus/matrix.hpp"

namespace minplus {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Network {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

/// Elementary circuit, rotated to start at its smallest vertex.
struct Circuit {
  std::vector<std::size_t> vertices;
  Rational weight;

  std::size_t length() const noexcept { return vertices.size(); }
  Rational average() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Pairwise vertex-disjoint family of circuits, viewed as one object.
struct ExtendedCircuit {
  std::vector<Circuit> circuits;
  std::size_t total_length = 0;
  Rational weight;

  Rational average() const;
};

/// One edge per finite entry, in row-major order.
Network network_from_matrix(const Matrix& a);

/// Weighted adjacency matrix. Throws std::invalid_argument on duplicate
/// edges, out-of-range vertices, or an empty vertex set.
Matrix matrix_from_network(const Network& net);

/// All elementary circuits sorted by (length, vertex sequence). Throws
/// CapExceeded once more than `cap` circuits have been found.
std::vector<Circuit> enumerate_circuits(const Network& net, std::size_t cap = Limits{}.circuit_cap);

/// Minimum average circuit weight by Karp's walk-length recurrence; ε when
/// the network is acyclic.
Value min_cycle_mean(const Network& net);

/// Every vertex-disjoint family of circuits whose lengths sum to
/// `total_length`. Throws CapExceeded when the vertex count exceeds
/// limits.exhaustive_cap.
std::vector<ExtendedCircuit> enumerate_extended_circuits(const Network& net, std::size_t total_length,
                                                         const Limits& limits = {});

/// Entry j (1 ≤ j ≤ m) is the minimum weight over extended circuits of total
/// length j, ε if there are none; entry 0 is e. Same caps as above.
std::vector<Value> min_extended_weights(const Network& net, const Limits& limits = {});

/// True iff all elementary circuits are pairwise vertex-disjoint.
bool separated_check(const Network& net, std::size_t cap = Limits{}.circuit_cap);
bool separated_check(const std::vector<Circuit>& circuits);

}  // namespace minplus
