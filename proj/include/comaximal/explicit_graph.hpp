#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "comaximal/arithmetic.hpp"
#include "comaximal/support_model.hpp"
#include "comaximal/support_set.hpp"

namespace comaximal {

inline constexpr integer default_graph_cap = 10'000;

// Adjacency lists with sorted neighbor indices; the common currency of the
// brute-force oracles.
using AdjacencyList = std::vector<std::vector<std::uint32_t>>;

inline std::vector<integer> crt_encode(const Modulus& mod, integer residue) {
  if (residue >= mod.n())
    throw error(errc::out_of_range, std::to_string(residue) + " is not a residue mod " +
                                        std::to_string(mod.n()));
  std::vector<integer> coords;
  coords.reserve(mod.m());
  for (integer p : mod.primes()) coords.push_back(residue % p);
  return coords;
}

namespace detail {

// Inverse of a modulo p for prime p, a not divisible by p.
inline integer inverse_mod(integer a, integer p) {
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (s0 < 0) s0 += static_cast<std::int64_t>(p);
  return static_cast<integer>(s0);
}

__extension__ using wide = unsigned __int128;

inline integer mulmod(integer a, integer b, integer n) {
  return static_cast<integer>(static_cast<wide>(a) * b % n);
}

}  // namespace detail

inline integer crt_decode(const Modulus& mod, std::span<const integer> coords) {
  if (coords.size() != mod.m())
    throw error(errc::coordinate_out_of_range, "expected " + std::to_string(mod.m()) +
                                                   " coordinates, got " +
                                                   std::to_string(coords.size()));
  const integer n = mod.n();
  integer x = 0;
  for (std::size_t i = 0; i < mod.m(); ++i) {
    const integer p = mod.primes()[i];
    if (coords[i] >= p)
      throw error(errc::coordinate_out_of_range, "coordinate " + std::to_string(coords[i]) +
                                                     " is not a residue mod " + std::to_string(p));
    const integer cofactor = n / p;
    const integer basis = detail::mulmod(cofactor, detail::inverse_mod(cofactor % p, p), n);
    x = (x + detail::mulmod(basis, coords[i], n)) % n;
  }
  return x;
}

inline SupportSet::mask_type zero_mask(const Modulus& mod, integer residue) {
  SupportSet::mask_type mask = 0;
  for (std::size_t i = 0; i < mod.m(); ++i)
    if (residue % mod.primes()[i] == 0) mask |= SupportSet::mask_type{1} << i;
  return mask;
}

// x ~ y iff gcd(gcd(x, n), gcd(y, n)) = 1
inline bool adjacent(const Modulus& mod, integer x, integer y) {
  const integer n = mod.n();
  return std::gcd(std::gcd(x, n), std::gcd(y, n)) == 1;
}

// The second form of the same criterion: gcd(x, y, n) = 1.
inline bool adjacent_three_way(const Modulus& mod, integer x, integer y) {
  return std::gcd(std::gcd(x, y), mod.n()) == 1;
}

struct Vertex {
  integer residue;
  std::vector<integer> coords;
  SupportSet zero_set;
};

class ExplicitGraph {
 public:
  const Modulus& modulus() const noexcept { return mod_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const AdjacencyList& adjacency() const noexcept { return adjacency_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency_) twice += nbrs.size();
    return twice / 2;
  }

  std::optional<std::uint32_t> index_of(integer residue) const {
    if (residue >= index_.size() || index_[residue] < 0) return std::nullopt;
    return static_cast<std::uint32_t>(index_[residue]);
  }

  // Throws NotAVertex naming why the residue is excluded.
  std::uint32_t require_vertex(integer residue) const {
    if (auto i = index_of(residue)) return *i;
    const integer n = mod_.n();
    std::string why;
    if (residue >= n) why = "out of range [0, " + std::to_string(n - 1) + "]";
    else if (residue == 0) why = "zero";
    else why = "a unit (gcd with " + std::to_string(n) + " is 1)";
    throw error(errc::not_a_vertex, std::to_string(residue) + " is " + why);
  }

 private:
  friend ExplicitGraph build_graph(const Modulus& mod, integer cap);
  explicit ExplicitGraph(Modulus mod) : mod_(std::move(mod)) {}

  Modulus mod_;
  std::vector<Vertex> vertices_;
  AdjacencyList adjacency_;
  std::vector<std::int32_t> index_;
};

inline ExplicitGraph build_graph(const Modulus& mod, integer cap = default_graph_cap) {
  if (mod.n() > cap)
    throw error(errc::exceeds_cap, "n = " + std::to_string(mod.n()) + " exceeds graph cap " +
                                       std::to_string(cap));
  const integer n = mod.n();
  ExplicitGraph g(mod);
  g.index_.assign(n, -1);
  std::vector<integer> gcds;
  for (integer x = 1; x < n; ++x) {
    const integer d = std::gcd(x, n);
    if (d == 1) continue;
    g.index_[x] = static_cast<std::int32_t>(g.vertices_.size());
    g.vertices_.push_back({x, crt_encode(mod, x), SupportSet(mod.m(), zero_mask(mod, x))});
    gcds.push_back(d);
  }
  const std::size_t count = g.vertices_.size();
  g.adjacency_.assign(count, {});
  for (std::uint32_t i = 0; i < count; ++i)
    for (std::uint32_t j = i + 1; j < count; ++j)
      if (std::gcd(gcds[i], gcds[j]) == 1) {
        g.adjacency_[i].push_back(j);
        g.adjacency_[j].push_back(i);
      }
  return g;
}

struct BlowupReport {
  bool ok = true;
  std::vector<std::string> discrepancies;

  void fail(std::string what) {
    ok = false;
    if (discrepancies.size() < 20) discrepancies.push_back(std::move(what));
  }
};

// Checks that the explicit graph is exactly the blow-up of the quotient:
// layer sizes match, layers are independent, and every pair of layers is
// joined completely or not at all, as layers_adjacent dictates. Also checks
// the zero-set/gcd bookkeeping of every vertex.
inline BlowupReport check_blowup(const ExplicitGraph& graph, const QuotientModel& model) {
  BlowupReport report;
  const Modulus& mod = graph.modulus();
  if (!(mod == model.modulus())) {
    report.fail("graph and model are built over different moduli");
    return report;
  }
  const auto& vs = graph.vertices();
  const auto& adj = graph.adjacency();

  std::vector<std::size_t> layer_count(SupportSet::full_mask(mod.m()), 0);
  for (const auto& v : vs) {
    ++layer_count[v.zero_set.mask()];
    if (std::gcd(v.residue, mod.n()) != divisor(mod, v.zero_set))
      report.fail("gcd(" + std::to_string(v.residue) + ", n) differs from d_" +
                  v.zero_set.to_string());
    if (crt_decode(mod, v.coords) != v.residue)
      report.fail("CRT coordinates of " + std::to_string(v.residue) + " do not decode back");
  }
  for (const auto& layer : model.layers())
    if (layer_count[layer.support.mask()] != layer.size)
      report.fail("layer " + layer.support.to_string() + " has " +
                  std::to_string(layer_count[layer.support.mask()]) + " vertices, expected " +
                  std::to_string(layer.size));

  // Count edges between every ordered pair of layers.
  const std::size_t masks = SupportSet::full_mask(mod.m());
  std::vector<std::size_t> between(masks * masks, 0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::uint32_t j : adj[i]) {
      if (j <= i) continue;
      const auto a = vs[i].zero_set.mask(), b = vs[j].zero_set.mask();
      ++between[a * masks + b];
      if (a != b) ++between[b * masks + a];
    }
  for (const auto& la : model.layers())
    for (const auto& lb : model.layers()) {
      if (lb.support < la.support) continue;
      const std::size_t edges = between[la.support.mask() * masks + lb.support.mask()];
      std::size_t expected = 0;
      if (layers_adjacent(la.support, lb.support)) expected = la.size * lb.size;
      if (edges != expected)
        report.fail("layers " + la.support.to_string() + " and " + lb.support.to_string() +
                    " share " + std::to_string(edges) + " edges, expected " +
                    std::to_string(expected));
    }
  return report;
}

// Compares the stored adjacency with both gcd forms of the criterion and
// with disjointness of zero sets, over every pair of vertices.
inline BlowupReport check_adjacency_forms(const ExplicitGraph& graph) {
  BlowupReport report;
  const Modulus& mod = graph.modulus();
  const auto& vs = graph.vertices();
  const auto& adj = graph.adjacency();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::vector<char> stored(vs.size(), 0);
    for (std::uint32_t j : adj[i]) stored[j] = 1;
    if (stored[i]) report.fail(std::to_string(vs[i].residue) + " has a self loop");
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (j == i) continue;
      const integer x = vs[i].residue, y = vs[j].residue;
      const bool a = adjacent(mod, x, y);
      const bool b = adjacent_three_way(mod, x, y);
      const bool c = layers_adjacent(vs[i].zero_set, vs[j].zero_set);
      if (a != b || a != c || a != static_cast<bool>(stored[j]))
        report.fail("adjacency forms disagree on (" + std::to_string(x) + ", " +
                    std::to_string(y) + ")");
    }
  }
  return report;
}

}  // namespace comaximal
