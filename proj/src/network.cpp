#include "minplus/network.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "minplus/error.hpp"

namespace minplus {

namespace {

struct Arc {
  std::size_t head;
  Rational weight;
};

using Adjacency = std::vector<std::vector<Arc>>;

Adjacency adjacency(const Matrix& a) {
  const std::size_t n = a.order();
  Adjacency adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_finite()) adj[i].push_back({j, a(i, j).finite()});
    }
  }
  return adj;
}

std::uint64_t vertex_mask(const Circuit& c) {
  std::uint64_t mask = 0;
  for (std::size_t v : c.vertices) mask |= std::uint64_t{1} << v;
  return mask;
}

// Johnson-style search for the circuits whose smallest vertex is `start`:
// vertices that cannot currently reach `start` stay blocked until a circuit
// through one of their successors is found.
class CircuitSearch {
 public:
  CircuitSearch(const Matrix& a, std::size_t cap) : a_(a), adj_(adjacency(a)), cap_(cap) {}

  std::vector<Circuit> run() {
    const std::size_t n = a_.order();
    for (start_ = 0; start_ < n; ++start_) {
      blocked_.assign(n, false);
      blocked_by_.assign(n, {});
      search(start_);
    }
    std::sort(out_.begin(), out_.end(), [](const Circuit& x, const Circuit& y) {
      if (x.length() != y.length()) return x.length() < y.length();
      return x.vertices < y.vertices;
    });
    return std::move(out_);
  }

 private:
  bool search(std::size_t v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[v] = true;
    for (const Arc& arc : adj_[v]) {
      if (arc.head < start_) continue;
      if (arc.head == start_) {
        emit();
        found = true;
      } else if (!blocked_[arc.head] && search(arc.head)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (const Arc& arc : adj_[v]) {
        if (arc.head < start_) continue;
        auto& b = blocked_by_[arc.head];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
    }
    stack_.pop_back();
    return found;
  }

  void unblock(std::size_t u) {
    blocked_[u] = false;
    std::vector<std::size_t> waiting;
    waiting.swap(blocked_by_[u]);
    for (std::size_t w : waiting) {
      if (blocked_[w]) unblock(w);
    }
  }

  void emit() {
    if (out_.size() >= cap_) {
      throw CapExceeded("enumerate_circuits: more than " + std::to_string(cap_) + " circuits (" +
                            std::to_string(out_.size()) + " found before stopping)",
                        cap_, out_.size());
    }
    Circuit c;
    c.vertices = stack_;
    c.weight = 0;
    for (std::size_t k = 0; k < stack_.size(); ++k) {
      c.weight += a_(stack_[k], stack_[(k + 1) % stack_.size()]).finite();
    }
    out_.push_back(std::move(c));
  }

  const Matrix& a_;
  Adjacency adj_;
  std::size_t cap_;
  std::size_t start_ = 0;
  std::vector<bool> blocked_;
  std::vector<std::vector<std::size_t>> blocked_by_;
  std::vector<std::size_t> stack_;
  std::vector<Circuit> out_;
};

// Calls visit(family, length, weight) for every non-empty vertex-disjoint
// family whose total length does not exceed max_length.
void for_each_family(const std::vector<Circuit>& circuits, std::size_t max_length,
                     const std::function<void(const std::vector<std::size_t>&, std::size_t, const Rational&)>& visit) {
  std::vector<std::uint64_t> masks;
  masks.reserve(circuits.size());
  for (const Circuit& c : circuits) masks.push_back(vertex_mask(c));

  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::uint64_t, std::size_t, const Rational&)> extend =
      [&](std::size_t from, std::uint64_t used, std::size_t length, const Rational& weight) {
        for (std::size_t k = from; k < circuits.size(); ++k) {
          // Circuits are sorted by length, so nothing further fits either.
          if (length + circuits[k].length() > max_length) break;
          if (used & masks[k]) continue;
          chosen.push_back(k);
          const Rational w = weight + circuits[k].weight;
          visit(chosen, length + circuits[k].length(), w);
          extend(k + 1, used | masks[k], length + circuits[k].length(), w);
          chosen.pop_back();
        }
      };
  extend(0, 0, 0, Rational(0));
}

void require_exhaustive(const Network& net, const Limits& limits, const char* op) {
  if (net.vertex_count > limits.exhaustive_cap || net.vertex_count > 63) {
    throw CapExceeded(std::string(op) + ": " + std::to_string(net.vertex_count) +
                          " vertices exceed exhaustive cap " + std::to_string(limits.exhaustive_cap),
                      limits.exhaustive_cap, net.vertex_count);
  }
}

}  // namespace

Rational Circuit::average() const { return Rational(weight / Rational(static_cast<long>(length()))); }

Rational ExtendedCircuit::average() const { return Rational(weight / Rational(static_cast<long>(total_length))); }

Network network_from_matrix(const Matrix& a) {
  Network net;
  net.vertex_count = a.order();
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (a(i, j).is_finite()) net.edges.push_back({i, j, a(i, j).finite()});
    }
  }
  return net;
}

Matrix matrix_from_network(const Network& net) {
  const std::size_t m = net.vertex_count;
  if (m == 0) throw std::invalid_argument("network has no vertices");
  std::vector<Value> e(m * m);
  for (const Edge& edge : net.edges) {
    if (edge.tail >= m || edge.head >= m) {
      throw std::invalid_argument("edge (" + std::to_string(edge.tail + 1) + "," + std::to_string(edge.head + 1) +
                                  ") refers to a vertex outside 1.." + std::to_string(m));
    }
    Value& cell = e[edge.tail * m + edge.head];
    if (cell.is_finite()) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(edge.tail + 1) + "," +
                                  std::to_string(edge.head + 1) + ")");
    }
    cell = Value(edge.weight);
  }
  return Matrix(m, std::move(e));
}

std::vector<Circuit> enumerate_circuits(const Network& net, std::size_t cap) {
  const Matrix a = matrix_from_network(net);
  return CircuitSearch(a, cap).run();
}

Value min_cycle_mean(const Network& net) {
  const Matrix a = matrix_from_network(net);
  const Adjacency adj = adjacency(a);
  const std::size_t n = a.order();
  // walk[k][v]: lightest walk of exactly k edges ending at v, from any start.
  std::vector<std::vector<Value>> walk(n + 1, std::vector<Value>(n));
  for (std::size_t v = 0; v < n; ++v) walk[0][v] = Value::unit();
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (walk[k - 1][u].is_epsilon()) continue;
      for (const Arc& arc : adj[u]) {
        walk[k][arc.head] = oplus(walk[k][arc.head], otimes(walk[k - 1][u], Value(arc.weight)));
      }
    }
  }
  Value best = Value::epsilon();
  for (std::size_t v = 0; v < n; ++v) {
    if (walk[n][v].is_epsilon()) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (walk[k][v].is_epsilon()) continue;
      Rational r = (walk[n][v].finite() - walk[k][v].finite()) / Rational(static_cast<long>(n - k));
      if (!worst || r > *worst) worst = r;
    }
    best = oplus(best, Value(*worst));
  }
  return best;
}

std::vector<ExtendedCircuit> enumerate_extended_circuits(const Network& net, std::size_t total_length,
                                                         const Limits& limits) {
  require_exhaustive(net, limits, "enumerate_extended_circuits");
  const std::vector<Circuit> circuits = enumerate_circuits(net, limits.circuit_cap);
  std::vector<ExtendedCircuit> out;
  for_each_family(circuits, total_length,
                  [&](const std::vector<std::size_t>& family, std::size_t length, const Rational& weight) {
                    if (length != total_length) return;
                    ExtendedCircuit ec;
                    for (std::size_t k : family) ec.circuits.push_back(circuits[k]);
                    ec.total_length = length;
                    ec.weight = weight;
                    out.push_back(std::move(ec));
                  });
  return out;
}

std::vector<Value> min_extended_weights(const Network& net, const Limits& limits) {
  require_exhaustive(net, limits, "min_extended_weights");
  const std::vector<Circuit> circuits = enumerate_circuits(net, limits.circuit_cap);
  std::vector<Value> best(net.vertex_count + 1);
  best[0] = Value::unit();
  for_each_family(circuits, net.vertex_count,
                  [&](const std::vector<std::size_t>&, std::size_t length, const Rational& weight) {
                    if (best[length].is_epsilon() || weight < best[length].finite()) best[length] = Value(weight);
                  });
  return best;
}

bool separated_check(const std::vector<Circuit>& circuits) {
  std::vector<bool> seen;
  for (const Circuit& c : circuits) {
    for (std::size_t v : c.vertices) {
      if (v >= seen.size()) seen.resize(v + 1, false);
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

bool separated_check(const Network& net, std::size_t cap) { return separated_check(enumerate_circuits(net, cap)); }

}  // namespace minplus
