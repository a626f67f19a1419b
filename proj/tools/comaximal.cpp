// Command-line front end: analyze, verify, sweep, export, distance, robustness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "comaximal/comaximal.hpp"

namespace {

using namespace comaximal;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_invalid = 2;

struct Caps {
  integer graph = default_graph_cap;
  integer flow = default_flow_cap;
};

// --cap wins over COMAXIMAL_CAP, which wins over the defaults.
Caps resolve_caps(const std::optional<integer>& flag) {
  Caps caps;
  std::optional<integer> value = flag;
  if (!value) {
    if (const char* env = std::getenv("COMAXIMAL_CAP"); env && *env) {
      try {
        value = std::stoull(env);
      } catch (const std::exception&) {
        throw error(errc::out_of_range, std::string("COMAXIMAL_CAP is not a number: ") + env);
      }
    }
  }
  if (value) caps.graph = caps.flow = *value;
  return caps;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::out_of_range, "cannot open " + path + " for writing");
  out << text;
}

int cmd_analyze(integer n, bool as_json) {
  if (n >= 2 && is_prime(n)) {
    if (as_json) {
      json j{{"n", n}, {"primes", {n}}, {"vertex_count", 0}, {"kappa", 0}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "n = " << n << " is prime: G2 is empty, kappa = 0\n";
    }
    return exit_ok;
  }
  const AnalysisReport report = analyze(factor_squarefree(n));
  std::cout << (as_json ? render_json(report) : render_text(report));
  return exit_ok;
}

int cmd_verify(integer n, const Caps& caps, bool deep, std::size_t trials, std::uint64_t seed) {
  VerifyOptions options;
  options.graph_cap = caps.graph;
  options.flow_cap = caps.flow;
  options.deep = deep;
  options.trials = trials;
  options.seed = seed;
  const VerificationReport report = verify(factor_squarefree(n), options);
  std::cout << render_text(report);
  return report.passed() ? exit_ok : exit_mismatch;
}

int cmd_sweep(integer max_n, const Caps& caps, const std::string& path) {
  if (max_n < 6) throw error(errc::too_small, "--max must be at least 6");
  const auto rows = sweep(max_n, caps.flow);
  write_output(sweep_csv(rows), path);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.match; });
  return all ? exit_ok : exit_mismatch;
}

int cmd_export(integer n, const std::string& format, const std::string& level, const Caps& caps,
               const std::string& path) {
  const Modulus mod = factor_squarefree(n);
  ExportFormat f = ExportFormat::dot;
  if (format == "csv") f = ExportFormat::csv;
  else if (format == "json") f = ExportFormat::json;
  if (level == "quotient") write_output(export_quotient(build_quotient(mod), f), path);
  else write_output(export_explicit(build_graph(mod, caps.graph), f), path);
  return exit_ok;
}

int cmd_distance(integer n, integer x, integer y, const Caps& caps) {
  const Modulus mod = factor_squarefree(n);
  auto require = [&](integer r) {
    if (r == 0 || r >= n || std::gcd(r, n) == 1) {
      std::string why = r >= n ? "out of range" : r == 0 ? "zero" : "a unit";
      throw error(errc::not_a_vertex, std::to_string(r) + " is " + why + " mod " + std::to_string(n));
    }
    return SupportSet(mod.m(), zero_mask(mod, r));
  };
  const SupportSet zx = require(x), zy = require(y);
  const int formula = x == y ? 0 : layer_distance(zx, zy);
  std::cout << "d(" << x << ", " << y << ") = " << formula << " in G2(" << n << ")\n";
  std::cout << "  Z(" << x << ") = " << zx.to_string() << ", Z(" << y << ") = " << zy.to_string();
  if (x == y) std::cout << ": same vertex\n";
  else if (zx == zy) std::cout << ": same layer, distinct false twins\n";
  else std::cout << ": " << describe(distance_case(zx, zy)) << "\n";

  if (n > caps.graph) {
    std::cout << "  bfs: skipped (n exceeds cap " << caps.graph << ")\n";
    return exit_ok;
  }
  const ExplicitGraph graph = build_graph(mod, caps.graph);
  const auto d = bfs_distances(graph, x).to(y);
  const bool match = d && *d == formula;
  std::cout << "  bfs: " << (d ? std::to_string(*d) : std::string("unreachable"))
            << (match ? " (match)" : " (MISMATCH)") << "\n";
  return match ? exit_ok : exit_mismatch;
}

int cmd_robustness(integer n, std::size_t trials, std::uint64_t seed, const Caps& caps,
                   const std::string& path) {
  const Modulus mod = factor_squarefree(n);
  const ExplicitGraph graph = build_graph(mod, caps.graph);
  const auto results = robustness_trials(graph, trials, seed);
  const auto control = negative_control(graph);

  std::ostringstream out;
  out << "trial_index,deleted_size,connected_after,max_pair_distance_after,anchor_found\n";
  bool ok = true;
  auto emit = [&](std::size_t index, const RobustnessTrial& t) {
    out << index << "," << t.deleted.size() << "," << (t.connected_after ? 1 : 0) << ",";
    if (t.max_pair_distance_after != no_distance) out << t.max_pair_distance_after;
    out << "," << (t.anchor_found ? 1 : 0) << "\n";
  };
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& t = results[i];
    emit(i, t);
    ok = ok && t.connected_after && t.max_pair_distance_after <= 4 && t.anchor_found &&
         t.anchor_reach != no_distance && t.anchor_reach <= 2;
  }
  emit(results.size(), control);
  ok = ok && !control.connected_after;
  write_output(out.str(), path);
  return ok ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural invariants of the comaximal graph core G2 of Z_n, squarefree n"};
  app.require_subcommand(1);

  integer n = 0;
  std::optional<integer> cap;
  std::string output;

  auto* analyze_cmd = app.add_subcommand("analyze", "closed-form report for n");
  bool as_json = false;
  analyze_cmd->add_option("n", n, "modulus")->required();
  analyze_cmd->add_flag("--json", as_json, "emit JSON instead of a text table");

  auto* verify_cmd = app.add_subcommand("verify", "certify every closed form against brute force");
  bool deep = false;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  verify_cmd->add_option("n", n, "modulus")->required();
  verify_cmd->add_option("--cap", cap, "largest n for graph construction and flow oracles");
  verify_cmd->add_flag("--deep", deep, "also run seeded sub-threshold deletion trials");
  verify_cmd->add_option("--trials", trials, "trials for --deep")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "seed for --deep")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV over all squarefree composites up to --max");
  integer max_n = 0;
  sweep_cmd->add_option("--max", max_n, "largest n")->required();
  sweep_cmd->add_option("--cap", cap, "largest n given flow oracle columns");
  sweep_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* export_cmd = app.add_subcommand("export", "write the quotient or explicit graph");
  std::string format = "dot", level = "quotient";
  export_cmd->add_option("n", n, "modulus")->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "csv", "json"}))->capture_default_str();
  export_cmd->add_option("--level", level)->check(CLI::IsMember({"quotient", "explicit"}))->capture_default_str();
  export_cmd->add_option("--cap", cap, "largest n for the explicit level");
  export_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* distance_cmd = app.add_subcommand("distance", "distance between two vertices of G2(n)");
  integer x = 0, y = 0;
  distance_cmd->add_option("n", n, "modulus")->required();
  distance_cmd->add_option("x", x, "first residue")->required();
  distance_cmd->add_option("y", y, "second residue")->required();
  distance_cmd->add_option("--cap", cap, "largest n checked by BFS");

  auto* robustness_cmd = app.add_subcommand("robustness", "random deletions of size kappa - 1, as CSV");
  robustness_cmd->add_option("n", n, "modulus")->required();
  robustness_cmd->add_option("--trials", trials)->capture_default_str();
  robustness_cmd->add_option("--seed", seed)->capture_default_str();
  robustness_cmd->add_option("--cap", cap, "largest n for graph construction");
  robustness_cmd->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    const Caps caps = resolve_caps(cap);
    if (*analyze_cmd) return cmd_analyze(n, as_json);
    if (*verify_cmd) return cmd_verify(n, caps, deep, trials, seed);
    if (*sweep_cmd) return cmd_sweep(max_n, caps, output);
    if (*export_cmd) return cmd_export(n, format, level, caps, output);
    if (*distance_cmd) return cmd_distance(n, x, y, caps);
    if (*robustness_cmd) return cmd_robustness(n, trials, seed, caps, output);
  } catch (const comaximal::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}
