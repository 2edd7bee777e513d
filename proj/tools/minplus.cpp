// minplus: command-line front end for min-plus characteristic polynomials.
//
//   minplus <command> [options] <input-file>
//
// Exit codes: 0 success, 2 parse or usage error, 3 cap exceeded,
// 4 invariant or verification failure.

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minplus/charpoly.hpp"
#include "minplus/error.hpp"
#include "minplus/io.hpp"
#include "minplus/planted.hpp"
#include "minplus/verify.hpp"

namespace {

using namespace minplus;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kCap = 3;
constexpr int kFailed = 4;

struct RunConfig {
  std::string command;
  std::string method;
  std::string format;
  bool canonical = false;
  Limits limits;
  std::uint64_t seed = 1;
  std::size_t random_separated = 0;
  std::string input;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  std::string text;
  int code = kOk;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string coeff_list(const Polynomial& p) {
  std::vector<std::string> parts;
  for (const Value& c : p.coeffs()) parts.push_back(to_string(c));
  return join(parts, " ");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Input load(const RunConfig& cfg) { return parse_input(read_file(cfg.input)); }

Matrix load_matrix(const RunConfig& cfg) {
  Input in = load(cfg);
  if (!std::holds_alternative<Matrix>(in)) throw UsageError("command '" + cfg.command + "' needs a matrix file");
  return std::get<Matrix>(std::move(in));
}

Polynomial require_monic(Polynomial p) {
  if (!p.is_monic()) throw UsageError("polynomial must be monic (leading coefficient c_0 = 0)");
  return p;
}

// The polynomials a command works on: the file itself for a polynomial
// file, otherwise g_A and/or ĝ_A of the matrix according to --method.
std::vector<std::pair<std::string, Polynomial>> polynomials(const RunConfig& cfg, const Input& in) {
  if (const auto* p = std::get_if<Polynomial>(&in)) return {{"polynomial", *p}};
  const Matrix& a = std::get<Matrix>(in);
  std::vector<std::pair<std::string, Polynomial>> out;
  if (cfg.method == "tropdet" || cfg.method == "both") out.emplace_back("tropdet", charpoly_tropdet(a, cfg.limits.subset_cap));
  if (cfg.method == "flv" || cfg.method == "both") out.emplace_back("flv", charpoly_flv(a));
  return out;
}

Result cmd_charpoly(const RunConfig& cfg) {
  const Matrix a = load_matrix(cfg);
  const auto polys = polynomials(cfg, a);
  // c_n is the tropical determinant; below the permutation cap it is
  // recomputed over all permutations as a cross-check.
  Result r;
  for (const auto& [name, p] : polys) {
    if (name == "tropdet" && a.order() <= cfg.limits.permutation_cap &&
        tropdet_bruteforce(a, cfg.limits.permutation_cap) != p.coeff(a.order())) {
      r.code = kFailed;
    }
  }
  std::ostringstream os;
  if (cfg.format == "json") {
    json j = json::object();
    for (const auto& [name, p] : polys) {
      j[name] = to_json(p);
      if (cfg.canonical) j[name]["canonical"] = to_json(canonicalize(p))["coeffs"];
    }
    os << dump(j);
  } else if (cfg.format == "tsv") {
    os << "method\tj\tcoefficient" << (cfg.canonical ? "\tcanonical" : "") << "\n";
    for (const auto& [name, p] : polys) {
      const Polynomial c = cfg.canonical ? canonicalize(p) : p;
      for (std::size_t j = 0; j <= p.degree(); ++j) {
        os << name << '\t' << j << '\t' << to_string(p.coeff(j));
        if (cfg.canonical) os << '\t' << to_string(c.coeff(j));
        os << '\n';
      }
    }
  } else {
    for (const auto& [name, p] : polys) {
      os << name << ": " << coeff_list(p) << "\n  " << to_string(p) << "\n";
      if (cfg.canonical) {
        const Polynomial c = canonicalize(p);
        os << name << " canonical: " << coeff_list(c) << "\n  " << to_string(c) << "\n";
      }
    }
  }
  if (r.code == kFailed) std::cerr << "minplus: assignment and permutation determinants disagree\n";
  r.text = os.str();
  return r;
}

Result cmd_factor(const RunConfig& cfg) {
  const Input in = load(cfg);
  std::ostringstream os;
  json j = json::object();
  if (cfg.format == "tsv") os << "method\troot\tmultiplicity\n";
  for (const auto& [name, p] : polynomials(cfg, in)) {
    const Factorization f = factorize(require_monic(p));
    if (cfg.format == "json") {
      j[name] = to_json(f);
    } else if (cfg.format == "tsv") {
      for (const Root& root : f.factors) os << name << '\t' << to_string(root.value) << '\t' << root.multiplicity << '\n';
      if (f.xpower) os << name << "\tinf\t" << f.xpower << '\n';
    } else {
      os << name << ": " << to_string(f) << "\n";
    }
  }
  if (cfg.format == "json") os << dump(j);
  return {os.str()};
}

Result cmd_roots(const RunConfig& cfg) {
  const Input in = load(cfg);
  std::ostringstream os;
  json j = json::object();
  if (cfg.format == "tsv") os << "method\troot\tmultiplicity\n";
  for (const auto& [name, p] : polynomials(cfg, in)) {
    const Factorization f = factorize(require_monic(p));
    std::vector<std::pair<std::string, std::size_t>> roots;
    json list = json::array();
    for (const Root& root : f.factors) {
      roots.emplace_back(to_string(root.value), root.multiplicity);
      list.push_back({{"root", to_json(Value(root.value))}, {"multiplicity", root.multiplicity}});
    }
    if (f.xpower) {
      roots.emplace_back("inf", f.xpower);
      list.push_back({{"root", "inf"}, {"multiplicity", f.xpower}});
    }
    if (cfg.format == "json") {
      j[name] = std::move(list);
    } else if (cfg.format == "tsv") {
      for (const auto& [v, m] : roots) os << name << '\t' << v << '\t' << m << '\n';
    } else {
      std::vector<std::string> parts;
      for (const auto& [v, m] : roots) parts.push_back(v + " (multiplicity " + std::to_string(m) + ")");
      os << name << ": " << (parts.empty() ? "none" : join(parts, ", ")) << "\n";
    }
  }
  if (cfg.format == "json") os << dump(j);
  return {os.str()};
}

Result cmd_eigenvalue(const RunConfig& cfg) {
  const Matrix a = load_matrix(cfg);
  std::vector<std::pair<std::string, Value>> values;
  if (cfg.method == "karp" || cfg.method == "all") values.emplace_back("karp", min_cycle_mean(network_from_matrix(a)));
  if (cfg.method == "tropdet" || cfg.method == "all") {
    values.emplace_back("tropdet", eigenvalue_from_charpoly(charpoly_tropdet(a, cfg.limits.subset_cap)));
  }
  if (cfg.method == "flv" || cfg.method == "all") values.emplace_back("flv", eigenvalue_from_charpoly(charpoly_flv(a)));
  bool agree = true;
  for (const auto& [name, v] : values) agree = agree && v == values.front().second;

  std::ostringstream os;
  if (cfg.format == "json") {
    json j = json::object();
    for (const auto& [name, v] : values) j[name] = to_json(v);
    if (cfg.method == "all") j["agree"] = agree;
    os << dump(j);
  } else if (cfg.format == "tsv") {
    os << "method\teigenvalue\n";
    for (const auto& [name, v] : values) os << name << '\t' << to_string(v) << '\n';
  } else {
    for (const auto& [name, v] : values) os << name << ": " << to_string(v) << "\n";
    if (cfg.method == "all") os << "agree: " << (agree ? "true" : "false") << "\n";
  }
  return {os.str(), agree ? kOk : kFailed};
}

Result cmd_circuits(const RunConfig& cfg) {
  const Matrix a = load_matrix(cfg);
  const Network net = network_from_matrix(a);
  const std::vector<Circuit> circuits = enumerate_circuits(net, cfg.limits.circuit_cap);
  const bool separated = separated_check(circuits);
  const Value mean = min_cycle_mean(net);

  std::ostringstream os;
  if (cfg.format == "json") {
    json list = json::array();
    for (const Circuit& c : circuits) list.push_back(to_json(c));
    os << dump({{"circuits", std::move(list)}, {"separated", separated}, {"min_cycle_mean", to_json(mean)}});
  } else {
    if (cfg.format == "tsv") os << "vertices\tlength\tweight\taverage\n";
    for (const Circuit& c : circuits) {
      std::vector<std::string> vs;
      for (std::size_t v : c.vertices) vs.push_back(std::to_string(v + 1));
      if (cfg.format == "tsv") {
        os << join(vs, ",") << '\t' << c.length() << '\t' << to_string(c.weight) << '\t' << to_string(c.average())
           << '\n';
      } else {
        os << "(" << join(vs, " ") << ")  length " << c.length() << "  weight " << to_string(c.weight)
           << "  average " << to_string(c.average()) << "\n";
      }
    }
    if (cfg.format == "text") {
      os << "circuits: " << circuits.size() << "\nseparated: " << (separated ? "true" : "false")
         << "\nmin_cycle_mean: " << to_string(mean) << "\n";
    }
  }
  return {os.str()};
}

Result cmd_verify(const RunConfig& cfg) {
  json instance;
  Matrix a(1);
  if (cfg.random_separated) {
    if (!cfg.input.empty()) throw UsageError("--random-separated does not take an input file");
    std::mt19937_64 rng(cfg.seed);
    PlantOptions options;
    options.cycles = cfg.random_separated;
    options.max_order = std::max(options.max_order, options.cycles);
    const PlantedInstance inst = plant_separated_instance(rng, options);
    a = inst.matrix;
    json cycles = json::array();
    for (const auto& c : inst.cycles) {
      json vs = json::array();
      for (std::size_t v : c) vs.push_back(v + 1);
      cycles.push_back(std::move(vs));
    }
    instance = {{"seed", cfg.seed}, {"matrix", to_json(a)}, {"planted_cycles", std::move(cycles)},
                {"free_vertices", inst.free_vertices}};
  } else {
    if (cfg.input.empty()) throw UsageError("verify needs an input file or --random-separated K");
    a = load_matrix(cfg);
  }
  const std::vector<Report> reports = verify_all(a, cfg.limits);
  bool pass = true;
  for (const Report& r : reports) pass = pass && r.pass;

  std::ostringstream os;
  if (cfg.format == "text" || cfg.format == "tsv") {
    if (cfg.format == "tsv") os << "check\thypothesis_met\tpass\n";
    for (const Report& r : reports) {
      if (cfg.format == "tsv") {
        os << r.check << '\t' << (r.hypothesis_met ? "true" : "false") << '\t' << (r.pass ? "true" : "false") << '\n';
      } else {
        std::string status = !r.hypothesis_met ? "hypothesis not met" : r.pass ? "pass" : "FAIL";
        if (r.check == "separated_check") status = r.details["separated"].get<bool>() ? "separated" : "not separated";
        os << r.check << ": " << status << "\n";
      }
    }
    if (cfg.format == "text") os << "overall: " << (pass ? "pass" : "FAIL") << "\n";
  } else {
    json checks = json::array();
    for (const Report& r : reports) checks.push_back(to_json(r));
    json out = {{"checks", std::move(checks)}, {"pass", pass}};
    if (!instance.is_null()) out["instance"] = std::move(instance);
    os << dump(out);
  }
  return {os.str(), pass ? kOk : kFailed};
}

Result cmd_plot_data(const RunConfig& cfg) {
  const Input in = load(cfg);
  const auto polys = polynomials(cfg, in);
  const Polynomial& p = polys.front().second;
  const std::vector<Breakpoint> breaks = breakpoints(p);

  // Two points on the outer rays, one unit beyond the outermost breaks.
  const Rational lo = breaks.empty() ? Rational(-1) : Rational(breaks.front().x - 1);
  const Rational hi = breaks.empty() ? Rational(1) : Rational(breaks.back().x + 1);
  auto anchor = [&p](const Rational& x) { return std::pair{x, evaluate(p, Value(x))}; };
  const std::vector<std::pair<Rational, Value>> anchors{anchor(lo), anchor(hi)};

  std::ostringstream os;
  if (cfg.format == "json") {
    json bs = json::array();
    for (const Breakpoint& b : breaks) bs.push_back(to_json(b));
    json as = json::array();
    for (const auto& [x, y] : anchors) as.push_back({{"x", to_json(Value(x))}, {"y", to_json(y)}});
    os << dump({{"polynomial", to_json(p)}, {"breakpoints", std::move(bs)}, {"anchors", std::move(as)}});
  } else if (cfg.format == "tsv") {
    os << "kind\tx\ty\tslope_left\tslope_right\n";
    os << "anchor\t" << to_string(anchors[0].first) << '\t' << to_string(anchors[0].second) << "\t\t\n";
    for (const Breakpoint& b : breaks) {
      os << "break\t" << to_string(b.x) << '\t' << to_string(b.y) << '\t' << b.slope_left << '\t' << b.slope_right
         << '\n';
    }
    os << "anchor\t" << to_string(anchors[1].first) << '\t' << to_string(anchors[1].second) << "\t\t\n";
  } else {
    os << polys.front().first << ": " << to_string(p) << "\n";
    for (const Breakpoint& b : breaks) {
      os << "break (" << to_string(b.x) << ", " << to_string(b.y) << ")  slope " << b.slope_left << " -> "
         << b.slope_right << "\n";
    }
    for (const auto& [x, y] : anchors) os << "anchor (" << to_string(x) << ", " << to_string(y) << ")\n";
  }
  return {os.str()};
}

void add_common(CLI::App* sub, RunConfig& cfg, const std::vector<std::string>& methods, const std::string& method) {
  if (!methods.empty()) {
    sub->add_option("--method", cfg.method, "Polynomial or eigenvalue route")
        ->check(CLI::IsMember(methods))
        ->default_str(method);
  }
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  sub->add_flag("--canonical", cfg.canonical, "Also print the canonical form");
  sub->add_option("--cap-perms", cfg.limits.permutation_cap, "Largest order for permutation enumeration")
      ->check(CLI::PositiveNumber);
  sub->add_option("--cap-subsets", cfg.limits.subset_cap, "Largest order for principal-subset enumeration")
      ->check(CLI::PositiveNumber);
  sub->add_option("--cap-circuits", cfg.limits.circuit_cap, "Most circuits to enumerate")->check(CLI::PositiveNumber);
  sub->add_option("--cap-exhaustive", cfg.limits.exhaustive_cap, "Largest order for extended-circuit search")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Seed for --random-separated");
  sub->add_option("input", cfg.input, "Matrix file (JSON or text) or polynomial file (JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Min-plus characteristic polynomials, roots and circuit checks", "minplus"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    std::vector<std::string> methods;
    std::string method;
    Result (*run)(const RunConfig&);
  };
  const std::vector<Command> commands{
      {"charpoly", "Print g_A (tropdet) and/or ĝ_A (flv)", {"tropdet", "flv", "both"}, "both", cmd_charpoly},
      {"factor", "Factor the characteristic polynomials or a polynomial file", {"tropdet", "flv", "both"}, "both",
       cmd_factor},
      {"roots", "List roots with multiplicities", {"tropdet", "flv", "both"}, "both", cmd_roots},
      {"eigenvalue", "Minimum cycle mean and minimum roots", {"karp", "tropdet", "flv", "all"}, "all", cmd_eigenvalue},
      {"circuits", "Elementary circuits of the network", {}, "", cmd_circuits},
      {"verify", "Cross-check polynomials against circuits", {}, "", cmd_verify},
      {"plot-data", "Breakpoints and ray anchors of a polynomial", {"tropdet", "flv"}, "tropdet", cmd_plot_data},
  };
  Result (*run)(const RunConfig&) = nullptr;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, cfg, c.methods, c.method);
    if (std::string(c.name) == "verify") {
      sub->add_option("--random-separated", cfg.random_separated, "Verify a generated instance with K disjoint cycles")
          ->check(CLI::Range(1, 8));
    } else {
      sub->get_option("input")->required();
    }
    sub->callback([&cfg, &run, c] {
      cfg.command = c.name;
      if (cfg.method.empty()) cfg.method = c.method;
      if (cfg.format.empty()) cfg.format = cfg.command == "verify" ? "json" : "text";
      run = c.run;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Result r = run(cfg);
    std::cout << r.text;
    return r.code;
  } catch (const ParseError& e) {
    std::cerr << "minplus: " << cfg.input;
    if (e.line()) std::cerr << ":" << e.line() << ":" << e.column();
    std::cerr << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "minplus: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "minplus: " << e.what() << " (cap " << e.cap() << ", reached " << e.reached() << ")\n";
    return kCap;
  }
}
