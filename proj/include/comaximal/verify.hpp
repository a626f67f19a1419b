#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "comaximal/cut_experiments.hpp"
#include "comaximal/explicit_graph.hpp"
#include "comaximal/oracles.hpp"
#include "comaximal/support_model.hpp"

namespace comaximal {

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "";
}

struct CheckGroup {
  explicit CheckGroup(std::string group_name) : name(std::move(group_name)) {}

  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    status = CheckStatus::fail;
    if (witnesses.size() < 10) witnesses.push_back(std::move(witness));
  }
};

struct VerificationReport {
  integer n = 0;
  std::vector<CheckGroup> groups;
  std::optional<std::size_t> kappa_oracle;
  std::optional<std::size_t> lambda_oracle;

  bool passed() const {
    return std::none_of(groups.begin(), groups.end(),
                        [](const CheckGroup& g) { return g.status == CheckStatus::fail; });
  }

  const CheckGroup* group(const std::string& name) const {
    for (const auto& g : groups)
      if (g.name == name) return &g;
    return nullptr;
  }
};

struct VerifyOptions {
  integer graph_cap = default_graph_cap;
  integer flow_cap = default_flow_cap;
  bool deep = false;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  OracleOptions oracle;
};

namespace detail {

inline std::string eq_detail(const char* what, integer got, integer want) {
  return std::string(what) + " " + std::to_string(got) + (got == want ? " = " : " != ") +
         std::to_string(want);
}

}  // namespace detail

// Builds G2(n) explicitly and certifies every closed form against a
// brute-force computation on it.
inline VerificationReport verify(const Modulus& mod, const VerifyOptions& options = {}) {
  VerificationReport report;
  report.n = mod.n();
  const ExplicitGraph graph = build_graph(mod, options.graph_cap);
  const QuotientModel model = build_quotient(mod);
  const auto& vs = graph.vertices();
  const auto& adj = graph.adjacency();

  {
    CheckGroup g{"vertex_count"};
    const integer want = mod.n() - 1 - euler_phi(mod);
    g.detail = detail::eq_detail("|V| =", graph.size(), want);
    if (graph.size() != want || model.vertex_count() != want)
      g.fail("explicit " + std::to_string(graph.size()) + ", model " +
             std::to_string(model.vertex_count()) + ", n - 1 - phi " + std::to_string(want));
    report.groups.push_back(std::move(g));
  }
  {
    CheckGroup g{"blowup"};
    auto structure = check_blowup(graph, model);
    auto forms = check_adjacency_forms(graph);
    for (auto& w : structure.discrepancies) g.fail(w);
    for (auto& w : forms.discrepancies) g.fail(w);
    g.detail = std::to_string(model.layers().size()) + " layers, " +
               std::to_string(graph.edge_count()) + " edges";
    report.groups.push_back(std::move(g));
  }
  {
    CheckGroup g{"degrees"};
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const integer want = model.layer(vs[i].zero_set).degree;
      if (adj[i].size() != want)
        g.fail("deg(" + std::to_string(vs[i].residue) + ") = " + std::to_string(adj[i].size()) +
               ", formula " + std::to_string(want) + " for " + vs[i].zero_set.to_string());
    }
    g.detail = "all " + std::to_string(vs.size()) + " vertices";
    report.groups.push_back(std::move(g));
  }
  {
    CheckGroup g{"delta"};
    const MinDegree formula = min_degree(mod);
    std::size_t observed = adj.empty() ? 0 : adj[0].size();
    for (const auto& nbrs : adj) observed = std::min(observed, nbrs.size());
    g.detail = detail::eq_detail("delta", observed, formula.value);
    if (observed != formula.value) g.fail(g.detail);
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (adj[i].size() == observed && vs[i].zero_set != formula.argmin)
        g.fail(std::to_string(vs[i].residue) + " attains the minimum degree outside " +
               formula.argmin.to_string());
    report.groups.push_back(std::move(g));
  }

  const integer formula_kappa = kappa(mod);
  {
    CheckGroup g{"kappa"};
    const integer phi = euler_phi(mod);
    if (phi / (mod.largest_prime() - 1) != formula_kappa || prior_upper_bound(mod) != formula_kappa)
      g.fail("Euler form or prior bound differs from " + std::to_string(formula_kappa));
    if (mod.n() > options.flow_cap) {
      g.status = CheckStatus::skip;
      g.detail = "n exceeds flow cap " + std::to_string(options.flow_cap);
    } else {
      const auto oracle = vertex_connectivity(adj, options.oracle);
      report.kappa_oracle = oracle.value;
      g.detail = detail::eq_detail("kappa oracle", oracle.value, formula_kappa);
      if (oracle.value != formula_kappa) g.fail(g.detail);
      if (!validate_cut(adj, oracle.certificate) || oracle.certificate.cut.size() != oracle.value)
        g.fail("flow certificate does not separate");
      const auto separator = demonstrate_separator(graph);
      if (separator.cut_vertices.size() != formula_kappa)
        g.fail("|X_{m}| = " + std::to_string(separator.cut_vertices.size()));
    }
    report.groups.push_back(std::move(g));
  }
  {
    CheckGroup g{"lambda"};
    if (mod.n() > options.flow_cap) {
      g.status = CheckStatus::skip;
      g.detail = "n exceeds flow cap " + std::to_string(options.flow_cap);
    } else {
      const auto oracle = edge_connectivity(adj, options.oracle);
      report.lambda_oracle = oracle;
      g.detail = detail::eq_detail("lambda oracle", oracle, lambda_edge(mod));
      if (oracle != lambda_edge(mod)) g.fail(g.detail);
    }
    report.groups.push_back(std::move(g));
  }

  std::vector<int> ecc(vs.size(), 0);
  {
    CheckGroup g{"distances"};
    std::size_t pairs = 0;
    for (std::uint32_t s = 0; s < vs.size(); ++s) {
      const auto dist = bfs(adj, s);
      for (std::uint32_t t = 0; t < vs.size(); ++t) {
        if (t == s) continue;
        ++pairs;
        ecc[s] = std::max(ecc[s], dist[t]);
        const int want = layer_distance(vs[s].zero_set, vs[t].zero_set);
        if (dist[t] != want)
          g.fail("d(" + std::to_string(vs[s].residue) + ", " + std::to_string(vs[t].residue) +
                 ") = " + std::to_string(dist[t]) + ", formula " + std::to_string(want));
      }
    }
    g.detail = std::to_string(pairs) + " ordered pairs";
    report.groups.push_back(std::move(g));
  }
  {
    CheckGroup g{"metric"};
    const int diam = *std::max_element(ecc.begin(), ecc.end());
    const int rad = *std::min_element(ecc.begin(), ecc.end());
    g.detail = "diameter " + std::to_string(diam) + ", radius " + std::to_string(rad);
    if (diam != diameter(mod)) g.fail("diameter formula " + std::to_string(diameter(mod)));
    if (mod.m() >= 3) {
      const auto rc = radius_and_center(mod);
      if (rad != rc.radius) g.fail("radius formula " + std::to_string(rc.radius));
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const bool in_center = vs[i].zero_set.size() == 1;
        if ((ecc[i] == rad) != in_center)
          g.fail(std::to_string(vs[i].residue) + " has eccentricity " + std::to_string(ecc[i]));
      }
    }
    report.groups.push_back(std::move(g));
  }

  if (options.deep) {
    CheckGroup g{"robustness"};
    const auto trials = robustness_trials(graph, options.trials, options.seed);
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const auto& t = trials[i];
      if (!t.connected_after || t.max_pair_distance_after > 4 || !t.anchor_found ||
          t.anchor_reach == no_distance || t.anchor_reach > 2)
        g.fail("trial " + std::to_string(i) + " violates the sub-threshold guarantees");
    }
    if (negative_control(graph).connected_after) g.fail("deleting X_{m} left G2 connected");
    g.detail = std::to_string(trials.size()) + " deletions of size " +
               std::to_string(formula_kappa - 1) + ", seed " + std::to_string(options.seed);
    report.groups.push_back(std::move(g));
  }
  return report;
}

inline std::string render_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "verify n = " << r.n << "\n";
  for (const auto& g : r.groups) {
    out << "  [" << to_string(g.status) << "] " << g.name;
    if (!g.detail.empty()) out << ": " << g.detail;
    out << "\n";
    for (const auto& w : g.witnesses) out << "      " << w << "\n";
  }
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

struct SweepRow {
  integer n;
  std::vector<integer> primes;
  integer phi;
  integer bound;
  integer kappa_formula;
  std::optional<std::size_t> kappa_oracle;
  integer delta;
  std::optional<std::size_t> lambda_oracle;
  int diameter;
  bool match;
};

inline bool is_squarefree_composite(integer n) {
  if (n < 6 || is_prime(n)) return false;
  const auto primes = distinct_prime_factors(n);
  integer product = 1;
  for (integer p : primes) product *= p;
  return product == n;
}

inline SweepRow sweep_row(const Modulus& mod, integer oracle_cap) {
  SweepRow row{mod.n(), {mod.primes().begin(), mod.primes().end()}, euler_phi(mod),
               prior_upper_bound(mod), kappa(mod), std::nullopt, min_degree(mod).value,
               std::nullopt, diameter(mod), true};
  row.match = row.bound == row.kappa_formula && row.delta == row.kappa_formula;
  if (mod.n() <= oracle_cap) {
    const ExplicitGraph graph = build_graph(mod, oracle_cap);
    row.kappa_oracle = vertex_connectivity(graph.adjacency()).value;
    row.lambda_oracle = edge_connectivity(graph.adjacency());
    row.match = row.match && *row.kappa_oracle == row.kappa_formula &&
                *row.lambda_oracle == row.kappa_formula;
  }
  return row;
}

inline std::vector<SweepRow> sweep(integer max_n, integer oracle_cap) {
  std::vector<SweepRow> rows;
  for (integer n = 6; n <= max_n; ++n)
    if (is_squarefree_composite(n)) rows.push_back(sweep_row(factor_squarefree(n), oracle_cap));
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,primes,phi,bound,kappa_formula,kappa_oracle,delta,lambda_oracle,diameter,match\n";
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : rows) {
    out << r.n << ",";
    for (std::size_t i = 0; i < r.primes.size(); ++i) out << (i ? "*" : "") << r.primes[i];
    out << "," << r.phi << "," << r.bound << "," << r.kappa_formula << "," << opt(r.kappa_oracle)
        << "," << r.delta << "," << opt(r.lambda_oracle) << "," << r.diameter << ","
        << (r.match ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace comaximal
