#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "comaximal/error.hpp"
#include "comaximal/explicit_graph.hpp"

// Brute-force graph computations that never consult the closed forms. They
// operate on plain adjacency lists, optionally with a set of deleted vertices.

namespace comaximal {

inline constexpr integer default_flow_cap = 2'500;

// Deleted-vertex mask; an empty span means nothing is deleted.
using RemovedMask = std::span<const std::uint8_t>;

namespace detail {

inline bool is_removed(RemovedMask removed, std::uint32_t v) {
  return !removed.empty() && removed[v] != 0;
}

}  // namespace detail

inline constexpr int unreachable = -1;

// Single-source BFS; entries for unreachable (or deleted) vertices hold
// `unreachable`.
inline std::vector<int> bfs(const AdjacencyList& adj, std::uint32_t source, RemovedMask removed = {}) {
  std::vector<int> dist(adj.size(), unreachable);
  if (detail::is_removed(removed, source)) return dist;
  std::vector<std::uint32_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::uint32_t w : adj[u]) {
      if (dist[w] != unreachable || detail::is_removed(removed, w)) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

// Component label per vertex; deleted vertices get label -1.
inline std::vector<int> component_labels(const AdjacencyList& adj, RemovedMask removed = {}) {
  std::vector<int> label(adj.size(), -1);
  int next = 0;
  for (std::uint32_t s = 0; s < adj.size(); ++s) {
    if (label[s] != -1 || detail::is_removed(removed, s)) continue;
    std::vector<std::uint32_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      stack.pop_back();
      for (std::uint32_t w : adj[u])
        if (label[w] == -1 && !detail::is_removed(removed, w)) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const AdjacencyList& adj, RemovedMask removed = {}) {
  const auto label = component_labels(adj, removed);
  return std::all_of(label.begin(), label.end(), [](int l) { return l <= 0; });
}

// Classes of false twins (identical open neighborhoods). Any permutation
// inside a class is an automorphism, so local connectivities depend only on
// the classes of the two endpoints.
inline std::vector<std::uint32_t> twin_classes(const AdjacencyList& adj) {
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> out(adj.size());
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    auto [it, inserted] = ids.try_emplace(adj[v], static_cast<std::uint32_t>(ids.size()));
    out[v] = it->second;
  }
  return out;
}

// Max-flow network with integer capacities, augmented one shortest path at a
// time. Every flow in this file has value bounded by a vertex degree, so the
// number of augmentations stays small.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : first_(nodes + 1, 0), stamp_(nodes, 0), parent_(nodes) {}

  void add_arc(std::uint32_t from, std::uint32_t to, int capacity, int reverse_capacity = 0) {
    pending_.push_back({from, to, capacity, reverse_capacity});
  }

  // Lays out arcs in CSR order; must be called once after the last add_arc.
  void finalize() {
    const std::size_t nodes = stamp_.size();
    std::vector<std::uint32_t> degree(nodes, 0);
    for (const auto& a : pending_) {
      ++degree[a.from];
      ++degree[a.to];
    }
    for (std::size_t v = 0; v < nodes; ++v) first_[v + 1] = first_[v] + degree[v];
    head_.resize(first_[nodes]);
    capacity_.resize(first_[nodes]);
    reverse_.resize(first_[nodes]);
    std::vector<std::uint32_t> fill(first_.begin(), first_.end() - 1);
    for (const auto& a : pending_) {
      const std::uint32_t fwd = fill[a.from]++, bwd = fill[a.to]++;
      head_[fwd] = a.to;
      capacity_[fwd] = a.capacity;
      reverse_[fwd] = bwd;
      head_[bwd] = a.from;
      capacity_[bwd] = a.reverse_capacity;
      reverse_[bwd] = fwd;
    }
    pending_.clear();
    pending_.shrink_to_fit();
    initial_ = capacity_;
  }

  void reset() { capacity_ = initial_; }

  // Pushes flow from source to sink until none is left or `limit` units have
  // been sent. Returns the amount pushed.
  int max_flow(std::uint32_t source, std::uint32_t sink, int limit) {
    int flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
  }

  // Nodes reachable from source in the residual network.
  std::vector<std::uint8_t> residual_reachable(std::uint32_t source) const {
    std::vector<std::uint8_t> seen(stamp_.size(), 0);
    std::vector<std::uint32_t> queue{source};
    seen[source] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::uint32_t a = first_[queue[h]]; a < first_[queue[h] + 1]; ++a)
        if (capacity_[a] > 0 && !seen[head_[a]]) {
          seen[head_[a]] = 1;
          queue.push_back(head_[a]);
        }
    return seen;
  }

 private:
  struct PendingArc {
    std::uint32_t from, to;
    int capacity, reverse_capacity;
  };

  // One unit along a shortest residual path.
  bool augment(std::uint32_t source, std::uint32_t sink) {
    ++epoch_;
    queue_.clear();
    queue_.push_back(source);
    stamp_[source] = epoch_;
    bool found = false;
    for (std::size_t h = 0; h < queue_.size() && !found; ++h) {
      const std::uint32_t u = queue_[h];
      for (std::uint32_t a = first_[u]; a < first_[u + 1]; ++a) {
        const std::uint32_t w = head_[a];
        if (capacity_[a] <= 0 || stamp_[w] == epoch_) continue;
        stamp_[w] = epoch_;
        parent_[w] = a;
        if (w == sink) {
          found = true;
          break;
        }
        queue_.push_back(w);
      }
    }
    if (!found) return false;
    for (std::uint32_t v = sink; v != source;) {
      const std::uint32_t a = parent_[v];
      --capacity_[a];
      ++capacity_[reverse_[a]];
      v = head_[reverse_[a]];
    }
    return true;
  }

  std::vector<PendingArc> pending_;
  std::vector<std::uint32_t> first_, head_, reverse_;
  std::vector<int> capacity_, initial_;
  std::vector<std::uint32_t> stamp_, parent_, queue_;
  std::uint32_t epoch_ = 0;
};

// A separator with two vertices (or vertex groups) it separates. Vertices are
// indices into the adjacency list here; ExplicitGraph overloads translate to
// residues.
struct IndexCut {
  std::vector<std::uint32_t> cut;
  std::vector<std::uint32_t> side_a;
  std::vector<std::uint32_t> side_b;
};

struct CutCertificate {
  std::vector<integer> cut_vertices;
  std::vector<integer> side_a;
  std::vector<integer> side_b;
};

// True when the sides are nonempty, disjoint from the cut, and no vertex of
// side_a reaches side_b once the cut is deleted.
inline bool validate_cut(const AdjacencyList& adj, const IndexCut& c) {
  if (c.side_a.empty() || c.side_b.empty()) return false;
  std::vector<std::uint8_t> removed(adj.size(), 0);
  for (auto v : c.cut) removed[v] = 1;
  for (auto v : c.side_a)
    if (removed[v]) return false;
  for (auto v : c.side_b)
    if (removed[v]) return false;
  const auto label = component_labels(adj, removed);
  std::set<int> a_labels;
  for (auto v : c.side_a) a_labels.insert(label[v]);
  return std::none_of(c.side_b.begin(), c.side_b.end(),
                      [&](std::uint32_t v) { return a_labels.count(label[v]) != 0; });
}

struct OracleOptions {
  // Evaluate one representative pair per pair of false-twin classes.
  bool merge_twins = true;
};

struct VertexConnectivityResult {
  std::size_t value = 0;
  IndexCut certificate;
};

namespace detail {

// Splits v into in(v) = 2v and out(v) = 2v + 1 joined by a unit arc; graph
// edges get capacity |V| so only vertex arcs can be cut.
inline FlowNetwork vertex_split_network(const AdjacencyList& adj) {
  FlowNetwork net(2 * adj.size());
  const int big = static_cast<int>(adj.size());
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    net.add_arc(2 * v, 2 * v + 1, 1);
    for (std::uint32_t w : adj[v]) net.add_arc(2 * v + 1, 2 * w, big);
  }
  net.finalize();
  return net;
}

inline IndexCut cut_from_split_residual(const AdjacencyList& adj, const FlowNetwork& net,
                                        std::uint32_t s, std::uint32_t t) {
  const auto seen = net.residual_reachable(2 * s + 1);
  IndexCut c;
  std::vector<std::uint8_t> removed(adj.size(), 0);
  for (std::uint32_t v = 0; v < adj.size(); ++v)
    if (v != s && seen[2 * v] && !seen[2 * v + 1]) {
      c.cut.push_back(v);
      removed[v] = 1;
    }
  const auto label = component_labels(adj, removed);
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    if (label[v] == -1) continue;
    if (label[v] == label[s]) c.side_a.push_back(v);
    else if (label[v] == label[t]) c.side_b.push_back(v);
  }
  return c;
}

inline IndexCut components_as_cut(const std::vector<int>& label) {
  IndexCut c;
  for (std::uint32_t v = 0; v < label.size(); ++v) {
    if (label[v] == 0) c.side_a.push_back(v);
    else if (label[v] == 1) c.side_b.push_back(v);
  }
  return c;
}

}  // namespace detail

// Exact vertex connectivity with a minimum separator, by Menger's theorem on
// the vertex-split digraph. Only O(|V|) vertex pairs need a flow: a fixed
// minimum-degree vertex v against each non-neighbor, and each non-adjacent
// pair of neighbors of v.
inline VertexConnectivityResult vertex_connectivity(const AdjacencyList& adj,
                                                    const OracleOptions& options = {}) {
  const std::size_t count = adj.size();
  if (count < 2) throw error(errc::complete_graph, "graph has fewer than two vertices");
  const auto label = component_labels(adj);
  if (std::any_of(label.begin(), label.end(), [](int l) { return l > 0; }))
    return {0, detail::components_as_cut(label)};

  std::uint32_t v = 0;
  for (std::uint32_t u = 1; u < count; ++u)
    if (adj[u].size() < adj[v].size()) v = u;
  if (adj[v].size() + 1 == count)
    throw error(errc::complete_graph, "complete graph has no vertex separator");

  std::vector<std::uint8_t> is_neighbor(count, 0);
  for (std::uint32_t w : adj[v]) is_neighbor[w] = 1;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t t = 0; t < count; ++t)
    if (t != v && !is_neighbor[t]) pairs.emplace_back(v, t);
  for (std::size_t i = 0; i < adj[v].size(); ++i)
    for (std::size_t j = i + 1; j < adj[v].size(); ++j) {
      const std::uint32_t x = adj[v][i], y = adj[v][j];
      if (!std::binary_search(adj[x].begin(), adj[x].end(), y)) pairs.emplace_back(x, y);
    }

  if (options.merge_twins) {
    const auto cls = twin_classes(adj);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::erase_if(pairs, [&](const auto& p) {
      auto key = std::minmax(cls[p.first], cls[p.second]);
      return !seen.insert(key).second;
    });
  }

  FlowNetwork net = detail::vertex_split_network(adj);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::pair<std::uint32_t, std::uint32_t> best_pair{};
  for (const auto& [s, t] : pairs) {
    net.reset();
    const int limit = static_cast<int>(std::min<std::size_t>(best, count));
    const auto flow = static_cast<std::size_t>(net.max_flow(2 * s + 1, 2 * t, limit));
    if (flow < best) {
      best = flow;
      best_pair = {s, t};
    }
  }
  net.reset();
  net.max_flow(2 * best_pair.first + 1, 2 * best_pair.second, static_cast<int>(count));
  return {best, detail::cut_from_split_residual(adj, net, best_pair.first, best_pair.second)};
}

// Exact edge connectivity: min over t of the s-t max flow with unit edge
// capacities, for a fixed s.
inline std::size_t edge_connectivity(const AdjacencyList& adj, const OracleOptions& options = {}) {
  const std::size_t count = adj.size();
  if (count < 2) return 0;
  if (!is_connected(adj)) return 0;

  FlowNetwork net(count);
  for (std::uint32_t u = 0; u < count; ++u)
    for (std::uint32_t w : adj[u])
      if (u < w) net.add_arc(u, w, 1, 1);
  net.finalize();

  std::uint32_t s = 0;
  for (std::uint32_t u = 1; u < count; ++u)
    if (adj[u].size() < adj[s].size()) s = u;

  std::vector<std::uint8_t> class_done;
  std::vector<std::uint32_t> cls;
  if (options.merge_twins) {
    cls = twin_classes(adj);
    class_done.assign(count, 0);
  }
  std::size_t best = adj[s].size();
  for (std::uint32_t t = 0; t < count && best > 0; ++t) {
    if (t == s) continue;
    if (options.merge_twins) {
      if (class_done[cls[t]]) continue;
      class_done[cls[t]] = 1;
    }
    net.reset();
    best = std::min(best, static_cast<std::size_t>(net.max_flow(s, t, static_cast<int>(best))));
  }
  return best;
}

// Shortest-path distances from one residue of an explicit graph.
class DistanceMap {
 public:
  DistanceMap(const ExplicitGraph& graph, std::vector<int> dist)
      : graph_(&graph), dist_(std::move(dist)) {}

  std::optional<int> to(integer residue) const {
    const int d = dist_[graph_->require_vertex(residue)];
    if (d == unreachable) return std::nullopt;
    return d;
  }

  std::span<const int> by_index() const noexcept { return dist_; }

 private:
  const ExplicitGraph* graph_;
  std::vector<int> dist_;
};

inline DistanceMap bfs_distances(const ExplicitGraph& graph, integer source) {
  return DistanceMap(graph, bfs(graph.adjacency(), graph.require_vertex(source)));
}

struct IndexEccentricity {
  int diameter = 0;
  int radius = 0;
  std::vector<std::uint32_t> center;
};

// Twin classes of the graph left after deleting `removed`.
inline std::vector<std::uint32_t> twin_classes(const AdjacencyList& adj, RemovedMask removed) {
  if (removed.empty()) return twin_classes(adj);
  AdjacencyList survivors(adj.size());
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    if (detail::is_removed(removed, v)) continue;
    for (std::uint32_t w : adj[v])
      if (!detail::is_removed(removed, w)) survivors[v].push_back(w);
  }
  return twin_classes(survivors);
}

// All-sources BFS over the surviving vertices. With merge_twins, one BFS per
// class of false twins suffices: twins are exchanged by an automorphism, so
// they share an eccentricity.
inline IndexEccentricity eccentricities(const AdjacencyList& adj, RemovedMask removed = {},
                                        const OracleOptions& options = {}) {
  IndexEccentricity out;
  out.radius = std::numeric_limits<int>::max();
  std::vector<std::uint32_t> cls;
  if (options.merge_twins) cls = twin_classes(adj, removed);
  std::map<std::uint32_t, int> class_ecc;
  std::vector<int> ecc(adj.size(), -1);
  bool any = false;
  for (std::uint32_t s = 0; s < adj.size(); ++s) {
    if (detail::is_removed(removed, s)) continue;
    any = true;
    if (options.merge_twins) {
      if (auto it = class_ecc.find(cls[s]); it != class_ecc.end()) {
        ecc[s] = it->second;
        continue;
      }
    }
    const auto dist = bfs(adj, s, removed);
    int e = 0;
    for (std::uint32_t v = 0; v < adj.size(); ++v) {
      if (detail::is_removed(removed, v)) continue;
      if (dist[v] == unreachable) throw error(errc::graph_disconnected, "graph is disconnected");
      e = std::max(e, dist[v]);
    }
    ecc[s] = e;
    if (options.merge_twins) class_ecc.emplace(cls[s], e);
  }
  if (!any) throw error(errc::graph_disconnected, "graph has no vertices");
  for (std::uint32_t s = 0; s < adj.size(); ++s) {
    if (ecc[s] < 0) continue;
    out.diameter = std::max(out.diameter, ecc[s]);
    out.radius = std::min(out.radius, ecc[s]);
  }
  for (std::uint32_t s = 0; s < adj.size(); ++s)
    if (ecc[s] == out.radius) out.center.push_back(s);
  return out;
}

struct EccentricityProfile {
  int diameter;
  int radius;
  std::vector<integer> center;
};

inline std::vector<integer> to_residues(const ExplicitGraph& graph, std::span<const std::uint32_t> ids) {
  std::vector<integer> out;
  out.reserve(ids.size());
  for (auto i : ids) out.push_back(graph.vertices()[i].residue);
  return out;
}

inline CutCertificate to_residues(const ExplicitGraph& graph, const IndexCut& c) {
  return {to_residues(graph, c.cut), to_residues(graph, c.side_a), to_residues(graph, c.side_b)};
}

inline IndexCut to_indices(const ExplicitGraph& graph, const CutCertificate& c) {
  auto ids = [&](const std::vector<integer>& residues) {
    std::vector<std::uint32_t> out;
    out.reserve(residues.size());
    for (auto r : residues) out.push_back(graph.require_vertex(r));
    return out;
  };
  return {ids(c.cut_vertices), ids(c.side_a), ids(c.side_b)};
}

inline bool validate_cut(const ExplicitGraph& graph, const CutCertificate& c) {
  return validate_cut(graph.adjacency(), to_indices(graph, c));
}

inline EccentricityProfile eccentricity_profile(const ExplicitGraph& graph,
                                                const OracleOptions& options = {}) {
  auto e = eccentricities(graph.adjacency(), {}, options);
  return {e.diameter, e.radius, to_residues(graph, e.center)};
}

struct ConnectivityOracle {
  std::size_t value;
  CutCertificate certificate;
};

inline ConnectivityOracle vertex_connectivity_oracle(const ExplicitGraph& graph,
                                                     const OracleOptions& options = {}) {
  auto r = vertex_connectivity(graph.adjacency(), options);
  return {r.value, to_residues(graph, r.certificate)};
}

inline std::size_t edge_connectivity_oracle(const ExplicitGraph& graph,
                                            const OracleOptions& options = {}) {
  if (!is_connected(graph.adjacency()))
    throw error(errc::graph_disconnected, "G2 of " + std::to_string(graph.modulus().n()) +
                                              " is disconnected");
  return edge_connectivity(graph.adjacency(), options);
}

}  // namespace comaximal
