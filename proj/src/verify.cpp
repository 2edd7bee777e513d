#include "minplus/verify.hpp"

#include <map>

#include "minplus/charpoly.hpp"

namespace minplus {

namespace {

json roots_json(const Factorization& f) {
  json out = json::array();
  for (const Root& r : f.factors) out.push_back(to_json(Value(r.value)));
  return out;
}

}  // namespace

json to_json(const Report& r) {
  return {{"check", r.check}, {"hypothesis_met", r.hypothesis_met}, {"details", r.details}, {"pass", r.pass}};
}

Report coefficient_check(const Matrix& a, const Limits& limits) {
  Report report{"coefficient_check"};
  const Polynomial g = charpoly_tropdet(a, limits.subset_cap);
  const std::vector<Value> lightest = min_extended_weights(network_from_matrix(a), limits);
  json rows = json::array();
  for (std::size_t j = 1; j <= a.order(); ++j) {
    const bool equal = g.coeff(j) == lightest[j];
    report.pass = report.pass && equal;
    rows.push_back({{"j", j},
                    {"coefficient", to_json(g.coeff(j))},
                    {"enumerated_minimum", to_json(lightest[j])},
                    {"equal", equal}});
  }
  report.details = {{"per_j", std::move(rows)}};
  return report;
}

Report separation_report(const Matrix& a, const Limits& limits) {
  Report report{"separated_check"};
  const std::vector<Circuit> circuits = enumerate_circuits(network_from_matrix(a), limits.circuit_cap);
  json list = json::array();
  for (const Circuit& c : circuits) list.push_back(to_json(c));
  report.details = {{"separated", separated_check(circuits)}, {"circuits", std::move(list)}};
  return report;
}

Report eigenvalue_check(const Matrix& a, const Limits& limits) {
  Report report{"eigenvalue_check"};
  const Value karp = min_cycle_mean(network_from_matrix(a));
  const Value from_g = eigenvalue_from_charpoly(charpoly_tropdet(a, limits.subset_cap));
  const Value from_ghat = eigenvalue_from_charpoly(charpoly_flv(a));
  report.pass = karp == from_g && karp == from_ghat;
  report.details = {{"min_cycle_mean", to_json(karp)},
                    {"min_root_tropdet", to_json(from_g)},
                    {"min_root_flv", to_json(from_ghat)},
                    {"agree", report.pass}};
  return report;
}

Factorization homogeneous_factorization(const std::vector<Circuit>& circuits, std::size_t n) {
  std::map<Rational, std::size_t> groups;
  std::size_t covered = 0;
  for (const Circuit& c : circuits) {
    groups[c.average()] += c.length();
    covered += c.length();
  }
  Factorization f;
  for (const auto& [average, length] : groups) f.factors.push_back({average, length});
  f.xpower = covered <= n ? n - covered : 0;
  return f;
}

Report verify_separated_factorization(const Matrix& a, const Limits& limits) {
  Report report{"separated_factorization"};
  const std::vector<Circuit> circuits = enumerate_circuits(network_from_matrix(a), limits.circuit_cap);
  if (!separated_check(circuits)) {
    report.hypothesis_met = false;
    report.details = {{"outcome", "hypothesis not met"}};
    return report;
  }
  const std::size_t n = a.order();
  const Factorization predicted = homogeneous_factorization(circuits, n);
  const Factorization actual = factorize(charpoly_tropdet(a, limits.subset_cap));

  const bool forward = predicted == actual;

  // Converse direction: each factor (x⊕ρ)^m of g_A must be realized by the
  // circuits of average ρ, whose lengths add up to m.
  bool converse = true;
  std::size_t covered = 0;
  for (const Root& r : actual.factors) {
    std::size_t length = 0;
    for (const Circuit& c : circuits) {
      if (c.average() == r.value) length += c.length();
    }
    converse = converse && length == r.multiplicity;
    covered += length;
  }
  std::size_t on_circuits = 0;
  for (const Circuit& c : circuits) on_circuits += c.length();
  converse = converse && covered == on_circuits && actual.xpower == n - on_circuits;

  report.pass = forward && converse;
  json groups = json::array();
  for (const Root& r : predicted.factors) {
    groups.push_back({{"average", to_json(Value(r.value))}, {"total_length", r.multiplicity}});
  }
  report.details = {{"homogeneous_extended_circuits", std::move(groups)},
                    {"predicted", to_json(predicted)},
                    {"factorized", to_json(actual)},
                    {"forward", forward},
                    {"converse", converse}};
  return report;
}

Report verify_corollary_equivalence(const Matrix& a, const Limits& limits) {
  Report report{"corollary_equivalence"};
  const bool separated = separated_check(network_from_matrix(a), limits.circuit_cap);
  const Polynomial g = charpoly_tropdet(a, limits.subset_cap);
  const Polynomial ghat = charpoly_flv(a);
  const bool equivalent = is_equivalent(g, ghat);
  const Factorization fg = factorize(g);
  const Factorization fghat = factorize(ghat);
  report.hypothesis_met = separated;
  report.pass = !separated || equivalent;
  report.details = {{"equivalent", equivalent},
                    {"outcome", separated ? "asserted" : "recorded only"},
                    {"tropdet", {{"coeffs", to_json(g)["coeffs"]}, {"factorization", to_json(fg)}}},
                    {"flv", {{"coeffs", to_json(ghat)["coeffs"]}, {"factorization", to_json(fghat)}}},
                    {"roots_tropdet", roots_json(fg)},
                    {"roots_flv", roots_json(fghat)}};
  return report;
}

std::vector<Report> verify_all(const Matrix& a, const Limits& limits) {
  return {eigenvalue_check(a, limits), coefficient_check(a, limits), separation_report(a, limits),
          verify_separated_factorization(a, limits), verify_corollary_equivalence(a, limits)};
}

}  // namespace minplus
