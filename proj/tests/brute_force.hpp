#pragma once

// Test-only reference computations. Everything here works from gcds on raw
// residues and adjacency matrices, never from the library's closed forms,
// adjacency lists or flow code.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace brute {

using u64 = std::uint64_t;

inline u64 totient_by_scan(u64 n) {
  u64 count = 0;
  for (u64 x = 1; x <= n; ++x)
    if (std::gcd(x, n) == 1) ++count;
  return count;
}

// Residues x in [1, n) whose set of prime indices (1-based) dividing x is
// exactly `members`.
inline u64 layer_size_by_scan(u64 n, const std::vector<u64>& primes, const std::vector<std::size_t>& members) {
  u64 count = 0;
  for (u64 x = 1; x < n; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < primes.size() && ok; ++i) {
      const bool divides = x % primes[i] == 0;
      const bool wanted = std::find(members.begin(), members.end(), i + 1) != members.end();
      ok = divides == wanted;
    }
    if (ok) ++count;
  }
  return count;
}

struct MatrixGraph {
  std::vector<u64> residues;
  std::vector<std::vector<char>> adj;

  std::size_t size() const { return residues.size(); }
  std::size_t degree(std::size_t i) const {
    return static_cast<std::size_t>(std::count(adj[i].begin(), adj[i].end(), 1));
  }
};

// Nonzero nonunits of Z_n, adjacent when the ideal (x, y) is all of Z_n,
// i.e. some a x + b y = 1 mod n. Tested directly by scanning a, b for tiny
// n; this is the ring-theoretic definition, not a gcd shortcut.
inline MatrixGraph comaximal_by_definition(u64 n) {
  MatrixGraph g;
  for (u64 x = 1; x < n; ++x)
    if (std::gcd(x, n) != 1) g.residues.push_back(x);
  const std::size_t v = g.residues.size();
  g.adj.assign(v, std::vector<char>(v, 0));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) {
      // The ideal generated by x and y contains 1 iff some multiple of x is
      // 1 - (multiple of y); scan multiples of x mod n and multiples of y.
      std::vector<char> ideal(n, 0);
      for (u64 a = 0; a < n; ++a)
        for (u64 b = 0; b < n; ++b) ideal[(a * g.residues[i] + b * g.residues[j]) % n] = 1;
      g.adj[i][j] = g.adj[j][i] = ideal[1];
    }
  return g;
}

// Same graph via the gcd criterion, for sizes where the definition scan is
// too slow.
inline MatrixGraph comaximal_by_gcd(u64 n) {
  MatrixGraph g;
  for (u64 x = 1; x < n; ++x)
    if (std::gcd(x, n) != 1) g.residues.push_back(x);
  const std::size_t v = g.residues.size();
  g.adj.assign(v, std::vector<char>(v, 0));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (i != j && std::gcd(std::gcd(g.residues[i], g.residues[j]), n) == 1) g.adj[i][j] = 1;
  return g;
}

constexpr int inf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const std::vector<std::vector<char>>& adj) {
  const std::size_t v = adj.size();
  std::vector<std::vector<int>> d(v, std::vector<int>(v, inf));
  for (std::size_t i = 0; i < v; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < v; ++j)
      if (adj[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool connected_without(const std::vector<std::vector<char>>& adj, const std::vector<char>& removed) {
  const std::size_t v = adj.size();
  std::size_t start = v, alive = 0;
  for (std::size_t i = 0; i < v; ++i)
    if (!removed[i]) {
      ++alive;
      if (start == v) start = i;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(v, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < v; ++w)
      if (adj[u][w] && !seen[w] && !removed[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

// Smallest k such that deleting some k vertices disconnects the graph or
// leaves a single vertex, by enumerating all k-subsets.
inline std::size_t vertex_connectivity_by_subsets(const std::vector<std::vector<char>>& adj) {
  const std::size_t v = adj.size();
  for (std::size_t k = 0; k + 1 < v; ++k) {
    std::vector<char> removed(v, 0);
    std::fill(removed.begin(), removed.begin() + static_cast<long>(k), 1);
    std::sort(removed.begin(), removed.end());
    do {
      if (!connected_without(adj, removed)) return k;
    } while (std::next_permutation(removed.begin(), removed.end()));
  }
  return v - 1;
}

// Smallest number of edges whose removal disconnects, by enumerating edge
// subsets in increasing size. Only for graphs with a handful of edges.
inline std::size_t edge_connectivity_by_subsets(std::vector<std::vector<char>> adj) {
  const std::size_t v = adj.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (adj[i][j]) edges.emplace_back(i, j);
  const std::vector<char> none(v, 0);
  for (std::size_t k = 0; k <= edges.size(); ++k) {
    std::vector<char> pick(edges.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), 1);
    std::sort(pick.begin(), pick.end());
    do {
      auto cut = adj;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (pick[e]) cut[edges[e].first][edges[e].second] = cut[edges[e].second][edges[e].first] = 0;
      if (!connected_without(cut, none)) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return edges.size();
}

}  // namespace brute
