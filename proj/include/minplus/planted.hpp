#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "minplus/matrix.hpp"

namespace minplus {

struct PlantOptions {
  std::size_t max_order = 8;
  std::size_t cycles = 3;          // number of disjoint cycles to plant
  long weight_min = -6;
  long weight_max = 12;
  double cross_edge_probability = 0.35;
};

/// A matrix whose only circuits are the planted, pairwise vertex-disjoint cycles.
struct PlantedInstance {
  Matrix matrix;
  std::vector<std::vector<std::size_t>> cycles;  // vertex order along each cycle
  std::size_t free_vertices = 0;
};

/// Plants `options.cycles` disjoint cycles (lengths ≥ 1) on a random subset of
/// at most max_order vertices, leaves the rest circuit-free, then adds edges
/// between distinct components only along a random topological order so no
/// further circuits arise. Some cycles are given equal averages on purpose so
/// homogeneous groups with several members occur. Throws
/// std::invalid_argument when cycles > max_order or cycles == 0.
PlantedInstance plant_separated_instance(std::mt19937_64& rng, const PlantOptions& options = {});

}  // namespace minplus
