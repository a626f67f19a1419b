#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "comaximal/explicit_graph.hpp"
#include "comaximal/oracles.hpp"
#include "comaximal/support_model.hpp"

namespace comaximal {

// SplitMix64 (Steele, Lea, Flood 2014). Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Indices of the vertices whose zero set is exactly `s`.
inline std::vector<std::uint32_t> layer_members(const ExplicitGraph& graph, const SupportSet& s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < graph.size(); ++i)
    if (graph.vertices()[i].zero_set == s) out.push_back(i);
  return out;
}

// The class X_{m} as a separator: deleting it isolates every vertex of
// X_{[m] \ {m}}. For m = 2 those isolated vertices are the only survivors,
// so the certificate splits that layer into its first vertex and the rest.
inline CutCertificate demonstrate_separator(const ExplicitGraph& graph) {
  const std::size_t m = graph.modulus().m();
  IndexCut c;
  c.cut = layer_members(graph, min_cut_support(m));
  c.side_a = layer_members(graph, min_degree_support(m));
  std::vector<std::uint8_t> in_cut_or_a(graph.size(), 0);
  for (auto v : c.cut) in_cut_or_a[v] = 1;
  for (auto v : c.side_a) in_cut_or_a[v] = 1;
  for (std::uint32_t v = 0; v < graph.size(); ++v)
    if (!in_cut_or_a[v]) c.side_b.push_back(v);
  if (c.side_b.empty() && c.side_a.size() > 1) {
    c.side_b.assign(c.side_a.begin() + 1, c.side_a.end());
    c.side_a.resize(1);
  }
  if (!validate_cut(graph.adjacency(), c))
    throw std::logic_error("X_{m} failed to separate G2 of " + std::to_string(graph.modulus().n()));
  return to_residues(graph, c);
}

inline constexpr int no_distance = -1;

struct RobustnessTrial {
  std::vector<integer> deleted;
  bool connected_after = false;
  // Diameter of G2 - W; no_distance when disconnected.
  int max_pair_distance_after = no_distance;
  // A vertex of X_{m} survived the deletion.
  bool anchor_found = false;
  integer anchor = 0;
  // Largest distance from the anchor to a survivor; no_distance when some
  // survivor is unreachable or there is no anchor.
  int anchor_reach = no_distance;
};

inline RobustnessTrial run_deletion(const ExplicitGraph& graph, std::span<const std::uint32_t> deleted) {
  const auto& adj = graph.adjacency();
  std::vector<std::uint8_t> removed(graph.size(), 0);
  RobustnessTrial trial;
  for (auto v : deleted) {
    removed[v] = 1;
    trial.deleted.push_back(graph.vertices()[v].residue);
  }
  std::sort(trial.deleted.begin(), trial.deleted.end());

  trial.connected_after = is_connected(adj, removed);
  if (trial.connected_after)
    trial.max_pair_distance_after = eccentricities(adj, removed).diameter;

  const SupportSet anchor_layer = min_cut_support(graph.modulus().m());
  for (std::uint32_t v = 0; v < graph.size(); ++v) {
    if (removed[v] || graph.vertices()[v].zero_set != anchor_layer) continue;
    trial.anchor_found = true;
    trial.anchor = graph.vertices()[v].residue;
    const auto dist = bfs(adj, v, removed);
    int reach = 0;
    for (std::uint32_t w = 0; w < graph.size() && reach != no_distance; ++w) {
      if (removed[w]) continue;
      reach = dist[w] == unreachable ? no_distance : std::max(reach, dist[w]);
    }
    trial.anchor_reach = reach;
    break;
  }
  return trial;
}

// Deletes `trials` uniformly random vertex sets of size kappa - 1.
inline std::vector<RobustnessTrial> robustness_trials(const ExplicitGraph& graph, std::size_t trials,
                                                      std::uint64_t seed) {
  const std::size_t k = kappa(graph.modulus());
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> all(graph.size());
  std::iota(all.begin(), all.end(), 0u);
  std::vector<RobustnessTrial> out;
  out.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    std::vector<std::uint32_t> w;
    std::sample(all.begin(), all.end(), std::back_inserter(w), k - 1, rng);
    out.push_back(run_deletion(graph, w));
  }
  return out;
}

inline std::vector<RobustnessTrial> robustness_trials(const Modulus& mod, std::size_t trials,
                                                      std::uint64_t seed) {
  return robustness_trials(build_graph(mod), trials, seed);
}

// Deletes the whole minimum cut X_{m}; expected to disconnect.
inline RobustnessTrial negative_control(const ExplicitGraph& graph) {
  return run_deletion(graph, layer_members(graph, min_cut_support(graph.modulus().m())));
}

struct SharpnessReport {
  std::size_t cut_size = 0;
  bool full_cut_disconnects = false;
  std::size_t subsets_tested = 0;
  std::size_t subsets_connected = 0;
};

// Deleting all of X_{m} disconnects; deleting a random proper subset of it
// (uniform size in [0, |X_{m}| - 1], then a uniform subset) does not.
inline SharpnessReport separator_sharpness(const ExplicitGraph& graph, std::size_t samples,
                                           std::uint64_t seed) {
  const auto cut = layer_members(graph, min_cut_support(graph.modulus().m()));
  SharpnessReport report;
  report.cut_size = cut.size();
  report.full_cut_disconnects = !negative_control(graph).connected_after;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(0, cut.size() - 1)(rng);
    std::vector<std::uint32_t> w;
    std::sample(cut.begin(), cut.end(), std::back_inserter(w), size, rng);
    std::vector<std::uint8_t> removed(graph.size(), 0);
    for (auto v : w) removed[v] = 1;
    ++report.subsets_tested;
    if (is_connected(graph.adjacency(), removed)) ++report.subsets_connected;
  }
  return report;
}

}  // namespace comaximal
