// Acceptance suite: one PASS/FAIL line per criterion. All quantities are
// integers and are compared exactly.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "comaximal/comaximal.hpp"

using namespace comaximal;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (note.empty()) note = what;
    }
  }
};

std::string join(const std::vector<integer>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "(" + out + ")";
}

SupportSet S(std::size_t m, std::initializer_list<std::size_t> members) { return SupportSet(m, members); }

Outcome table1() {
  Outcome o;
  const auto r = analyze(factor_squarefree(30));
  std::vector<std::string> supports;
  std::vector<integer> sizes, divisors;
  for (const auto& l : r.layers) {
    supports.push_back(detail::braces(l.support));
    sizes.push_back(l.size);
    divisors.push_back(l.divisor);
  }
  o.expect(supports == std::vector<std::string>{"{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}"},
           "support order");
  o.expect(sizes == std::vector<integer>{8, 4, 2, 4, 2, 1}, "sizes " + join(sizes));
  o.expect(divisors == std::vector<integer>{2, 3, 5, 6, 10, 15}, "divisors " + join(divisors));
  o.expect(r.kappa == 2, "kappa");
  o.note = o.ok ? "sizes " + join(sizes) + ", divisors " + join(divisors) : o.note;
  return o;
}

Outcome table2() {
  Outcome o;
  const auto mod = factor_squarefree(210);
  const auto model = build_quotient(mod);
  const auto graph = build_graph(mod);
  const std::vector<SupportSet> rows{S(4, {1}), S(4, {2}), S(4, {3}), S(4, {4}),
                                     S(4, {1, 2}), S(4, {1, 2, 3}), S(4, {1, 2, 4})};
  std::vector<integer> degrees, sizes, counted;
  for (const auto& s : rows) {
    degrees.push_back(model.layer(s).degree);
    sizes.push_back(model.layer(s).size);
    const auto members = layer_members(graph, s);
    counted.push_back(graph.adjacency()[members.front()].size());
  }
  o.expect(degrees == std::vector<integer>{57, 92, 120, 132, 22, 8, 12}, "degrees " + join(degrees));
  o.expect(sizes == std::vector<integer>{48, 24, 12, 8, 24, 6, 4}, "sizes " + join(sizes));
  o.expect(counted == degrees, "counted degrees " + join(counted));
  if (o.ok) o.note = "degrees " + join(degrees) + ", sizes " + join(sizes);
  return o;
}

Outcome table3_and_5() {
  Outcome o;
  const std::vector<integer> ns{6, 30, 42, 70, 210, 2310};
  std::vector<integer> kappas, deltas, phis, bounds, diameters, euler;
  for (integer n : ns) {
    const auto r = analyze(factor_squarefree(n));
    kappas.push_back(r.kappa);
    deltas.push_back(r.delta);
    phis.push_back(r.phi);
    bounds.push_back(r.prior_bound);
    diameters.push_back(static_cast<integer>(r.diameter));
    euler.push_back(r.phi / (r.primes.back() - 1));
  }
  o.expect(kappas == std::vector<integer>{1, 2, 2, 4, 8, 48}, "kappa " + join(kappas));
  o.expect(deltas == kappas, "delta " + join(deltas));
  o.expect(phis == std::vector<integer>{2, 8, 12, 24, 48, 480}, "phi " + join(phis));
  o.expect(bounds == kappas, "prior bound " + join(bounds));
  o.expect(euler == kappas, "phi/(p_m-1) " + join(euler));
  o.expect(diameters == std::vector<integer>{2, 3, 3, 3, 3, 3}, "diameter " + join(diameters));
  if (o.ok) o.note = "kappa " + join(kappas) + ", phi " + join(phis) + ", diameter " + join(diameters);
  return o;
}

Outcome table4() {
  Outcome o;
  const auto graph = build_graph(factor_squarefree(210));
  const std::vector<std::pair<SupportSet, SupportSet>> pairs{
      {S(4, {1}), S(4, {2})},       {S(4, {1, 2}), S(4, {4})},       {S(4, {1, 2}), S(4, {2, 4})},
      {S(4, {1}), S(4, {1, 3})},    {S(4, {1, 2}), S(4, {2, 3, 4})}, {S(4, {1, 3}), S(4, {2, 3, 4})}};
  std::vector<integer> formula;
  for (const auto& [a, b] : pairs) {
    const int want = layer_distance(a, b);
    formula.push_back(static_cast<integer>(want));
    for (auto x : layer_members(graph, a)) {
      const auto dist = bfs(graph.adjacency(), x);
      for (auto y : layer_members(graph, b))
        o.expect(dist[y] == want, "bfs disagrees for " + a.to_string() + ", " + b.to_string());
    }
  }
  o.expect(formula == std::vector<integer>{1, 1, 2, 2, 3, 3}, "distances " + join(formula));
  if (o.ok) o.note = "distances " + join(formula) + ", every vertex pair confirmed by BFS";
  return o;
}

Outcome oracle_sweep() {
  Outcome o;
  std::size_t count = 0;
  for (integer n = 6; n <= 300; ++n) {
    if (!is_squarefree_composite(n)) continue;
    ++count;
    const auto mod = factor_squarefree(n);
    // Plain pair family, no twin-class shortcut, at this size.
    VerifyOptions options;
    options.oracle.merge_twins = false;
    const auto report = verify(mod, options);
    for (const auto& g : report.groups)
      o.expect(g.status == CheckStatus::pass,
               "n = " + std::to_string(n) + " group " + g.name + ": " +
                   (g.witnesses.empty() ? g.detail : g.witnesses.front()));
    const integer alg1 = kappa_from_primes(mod.primes());
    const integer euler = euler_phi(mod) / (mod.largest_prime() - 1);
    o.expect(report.kappa_oracle && *report.kappa_oracle == alg1 && alg1 == euler,
             "kappa routes differ at n = " + std::to_string(n));
    o.expect(report.lambda_oracle && *report.lambda_oracle == alg1,
             "lambda differs at n = " + std::to_string(n));
  }
  if (o.ok) o.note = std::to_string(count) + " moduli, all 8 check groups each";
  return o;
}

Outcome large_spot_check() {
  Outcome o;
  const auto graph = build_graph(factor_squarefree(2310));
  const auto kappa_oracle = vertex_connectivity_oracle(graph, {.merge_twins = false});
  const auto kappa_merged = vertex_connectivity_oracle(graph, {.merge_twins = true});
  const auto profile = eccentricity_profile(graph);
  o.expect(graph.size() == 1829, "vertex count " + std::to_string(graph.size()));
  o.expect(kappa_oracle.value == 48, "oracle kappa " + std::to_string(kappa_oracle.value));
  o.expect(kappa_merged.value == 48, "twin-merged oracle kappa " + std::to_string(kappa_merged.value));
  o.expect(validate_cut(graph, kappa_oracle.certificate) &&
               kappa_oracle.certificate.cut_vertices.size() == 48,
           "oracle certificate does not separate");
  o.expect(profile.diameter == 3, "diameter " + std::to_string(profile.diameter));
  if (o.ok) o.note = "|V| = 1829, oracle kappa = 48 (plain and twin-merged pair families), diameter 3";
  return o;
}

Outcome separator_sharpness_check() {
  Outcome o;
  std::ostringstream note;
  for (integer n : {30, 210, 2310}) {
    const auto mod = factor_squarefree(n);
    const auto graph = build_graph(mod);
    const auto report = separator_sharpness(graph, 50, 20260 + n);
    const std::string tag = "n = " + std::to_string(n);
    o.expect(report.full_cut_disconnects, tag + ": deleting X_{m} left G2 connected");
    o.expect(report.cut_size == kappa(mod), tag + ": |X_{m}| != kappa");
    o.expect(report.subsets_tested == 50 && report.subsets_connected == 50,
             tag + ": a proper subset disconnected");
    note << n << ":|X_m|=" << report.cut_size << " ";
  }
  if (o.ok) o.note = note.str() + "50/50 proper subsets connected each";
  return o;
}

Outcome robustness_suite() {
  Outcome o;
  for (integer n : {30, 42, 70, 210}) {
    const auto mod = factor_squarefree(n);
    const auto trials = robustness_trials(build_graph(mod), 200, 1000 + n);
    const std::string tag = "n = " + std::to_string(n);
    o.expect(trials.size() == 200, tag + ": trial count");
    for (const auto& t : trials) {
      o.expect(t.deleted.size() == kappa(mod) - 1, tag + ": deletion size");
      o.expect(t.connected_after, tag + ": disconnected below threshold");
      o.expect(t.anchor_found && t.anchor_reach != no_distance && t.anchor_reach <= 2,
               tag + ": survivor beyond distance 2 of the anchor");
      o.expect(t.max_pair_distance_after != no_distance && t.max_pair_distance_after <= 4,
               tag + ": post-deletion diameter above 4");
    }
  }
  if (o.ok) o.note = "4 x 200 deletions: 100% connected, anchor reach <= 2, diameter <= 4";
  return o;
}

Outcome append_prime() {
  Outcome o;
  static const integer pool[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  SplitMix64 rng(77);
  for (int i = 0; i < 20; ++i) {
    std::vector<integer> chosen(std::begin(pool), std::end(pool));
    std::shuffle(chosen.begin(), chosen.end(), rng);
    const std::size_t m = 2 + rng() % 4;
    chosen.resize(m);
    integer n = 1;
    for (auto p : chosen) n *= p;
    const auto mod = factor_squarefree(n);
    const integer q = next_prime(mod.largest_prime());
    const integer appended = kappa_append_prime(mod, q);
    const integer direct = kappa(factor_squarefree(n * q));
    o.expect(appended == direct, "n = " + std::to_string(n) + ", q = " + std::to_string(q));
  }
  if (o.ok) o.note = "20 seeded (n, q) pairs";
  return o;
}

Outcome largest_prime_invariance() {
  Outcome o;
  std::vector<integer> values;
  for (integer q : {7, 11, 13, 101}) values.push_back(kappa(factor_squarefree(30 * q)));
  o.expect(values == std::vector<integer>{8, 8, 8, 8}, "kappa " + join(values));
  if (o.ok) o.note = "kappa " + join(values);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double seconds_limit;
  };
  const std::vector<Criterion> criteria{
      {1, "support classes of 30", table1, 1.0},
      {2, "degrees and sizes for 210", table2, 0},
      {3, "connectivity, phi, bound, diameter table", table3_and_5, 0},
      {4, "distance samples for 210", table4, 0},
      {5, "oracle equivalence for every squarefree composite n <= 300", oracle_sweep, 300.0},
      {6, "spot check n = 2310", large_spot_check, 600.0},
      {7, "separator sharpness", separator_sharpness_check, 0},
      {8, "sub-threshold robustness", robustness_suite, 0},
      {9, "append-prime recurrence", append_prime, 0},
      {10, "largest-prime invariance", largest_prime_invariance, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.note = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds_limit > 0 && elapsed >= c.seconds_limit) {
      outcome.ok = false;
      outcome.note = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.seconds_limit);
    }
    if (!outcome.ok) ++failures;
    std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " ("
              << std::fixed << std::setprecision(2) << elapsed << " s): " << outcome.note << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
