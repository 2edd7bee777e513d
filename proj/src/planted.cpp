#include "minplus/planted.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace minplus {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// k positive parts summing to total (total ≥ k ≥ 1).
std::vector<std::size_t> random_composition(std::mt19937_64& rng, std::size_t total, std::size_t k) {
  std::vector<std::size_t> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), std::size_t{1});
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> parts;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(total - prev);
  return parts;
}

}  // namespace

PlantedInstance plant_separated_instance(std::mt19937_64& rng, const PlantOptions& options) {
  const std::size_t k = options.cycles;
  if (k == 0 || k > options.max_order) throw std::invalid_argument("cycle count must be in 1..max_order");

  const auto n = static_cast<std::size_t>(uniform(rng, static_cast<long>(k), static_cast<long>(options.max_order)));
  const auto free = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n - k)));
  const std::vector<std::size_t> lengths = random_composition(rng, n - free, k);

  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  std::shuffle(labels.begin(), labels.end(), rng);

  std::vector<Value> e(n * n);
  auto set = [&](std::size_t i, std::size_t j, const Rational& w) { e[i * n + j] = Value(w); };

  PlantedInstance inst{Matrix(1), {}, free};
  std::vector<Rational> averages;
  std::size_t next = 0;
  for (std::size_t len : lengths) {
    std::vector<std::size_t> cycle(labels.begin() + static_cast<long>(next),
                                   labels.begin() + static_cast<long>(next + len));
    next += len;
    std::vector<Rational> w(len);
    for (auto& x : w) x = uniform(rng, options.weight_min, options.weight_max);
    if (!averages.empty() && uniform(rng, 0, 2) == 0) {
      // Reuse an earlier average; the closing edge absorbs the difference.
      const Rational& target = averages[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(averages.size()) - 1))];
      Rational partial = 0;
      for (std::size_t i = 0; i + 1 < len; ++i) partial += w[i];
      w[len - 1] = target * Rational(static_cast<long>(len)) - partial;
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < len; ++i) {
      set(cycle[i], cycle[(i + 1) % len], w[i]);
      sum += w[i];
    }
    averages.push_back(Rational(sum / Rational(static_cast<long>(len))));
    inst.cycles.push_back(std::move(cycle));
  }

  // Components: each cycle, then each free vertex on its own.
  std::vector<std::vector<std::size_t>> components = inst.cycles;
  for (std::size_t i = next; i < n; ++i) components.push_back({labels[i]});
  std::shuffle(components.begin(), components.end(), rng);
  std::bernoulli_distribution cross(options.cross_edge_probability);
  for (std::size_t a = 0; a < components.size(); ++a) {
    for (std::size_t b = a + 1; b < components.size(); ++b) {
      for (std::size_t u : components[a]) {
        for (std::size_t v : components[b]) {
          if (cross(rng)) set(u, v, Rational(uniform(rng, options.weight_min, options.weight_max)));
        }
      }
    }
  }
  inst.matrix = Matrix(n, std::move(e));
  return inst;
}

}  // namespace minplus
