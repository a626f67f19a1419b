#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "comaximal/arithmetic.hpp"
#include "comaximal/support_set.hpp"

namespace comaximal {

namespace detail {

inline void require_same_ambient(const SupportSet& a, const SupportSet& b) {
  if (a.m() != b.m())
    throw error(errc::out_of_range, "support sets over different ambient sizes " +
                                        std::to_string(a.m()) + " and " + std::to_string(b.m()));
}

inline void require_matching(const Modulus& mod, const SupportSet& s) {
  if (s.m() != mod.m())
    throw error(errc::out_of_range, "support set " + s.to_string() + " is over [" +
                                        std::to_string(s.m()) + "] but n = " +
                                        std::to_string(mod.n()) + " has " +
                                        std::to_string(mod.m()) + " primes");
}

// prod_{i in mask} (p_i - 1)
inline integer totient_over(const Modulus& mod, SupportSet::mask_type mask) {
  integer out = 1;
  for (std::size_t i = 0; i < mod.m(); ++i)
    if ((mask >> i) & 1u) out = checked_mul(out, mod.primes()[i] - 1);
  return out;
}

// prod_{i in mask} p_i
inline integer product_over(const Modulus& mod, SupportSet::mask_type mask) {
  integer out = 1;
  for (std::size_t i = 0; i < mod.m(); ++i)
    if ((mask >> i) & 1u) out = checked_mul(out, mod.primes()[i]);
  return out;
}

}  // namespace detail

inline bool layers_adjacent(const SupportSet& a, const SupportSet& b) {
  detail::require_same_ambient(a, b);
  return (a.mask() & b.mask()) == 0;
}

// d_S = gcd(x, n) for every x in X_S.
inline integer divisor(const Modulus& mod, const SupportSet& s) {
  detail::require_matching(mod, s);
  return detail::product_over(mod, s.mask());
}

inline integer class_size(const Modulus& mod, const SupportSet& s) {
  detail::require_matching(mod, s);
  return detail::totient_over(mod, s.complement_mask());
}

// prod_{i in S}(p_i - 1) * (prod_{j not in S} p_j - prod_{j not in S}(p_j - 1))
inline integer degree_product_form(const Modulus& mod, const SupportSet& s) {
  detail::require_matching(mod, s);
  const auto rest = s.complement_mask();
  return checked_mul(detail::totient_over(mod, s.mask()),
                     detail::product_over(mod, rest) - detail::totient_over(mod, rest));
}

// Sum of |X_T| over the nonempty T contained in the complement of S.
inline integer degree_sum_form(const Modulus& mod, const SupportSet& s) {
  detail::require_matching(mod, s);
  const auto rest = s.complement_mask();
  integer sum = 0;
  for (auto t = rest; t != 0; t = (t - 1) & rest)
    sum = checked_add(sum, detail::totient_over(mod, SupportSet::full_mask(mod.m()) & ~t));
  return sum;
}

inline integer degree(const Modulus& mod, const SupportSet& s) {
  const integer product = degree_product_form(mod, s);
  const integer sum = degree_sum_form(mod, s);
  if (product != sum)
    throw std::logic_error("degree forms disagree for n = " + std::to_string(mod.n()) + ", S = " +
                           s.to_string() + ": " + std::to_string(product) +
                           " vs " + std::to_string(sum));
  return product;
}

inline std::vector<SupportSet> neighbor_layers(const SupportSet& s) {
  std::vector<SupportSet> out;
  const auto rest = s.complement_mask();
  for (auto t = rest; t != 0; t = (t - 1) & rest) out.emplace_back(s.m(), t);
  std::sort(out.begin(), out.end());
  return out;
}

struct LayerSummary {
  SupportSet support;
  integer divisor;
  integer size;
  integer degree;

  friend bool operator==(const LayerSummary&, const LayerSummary&) = default;
};

// The weighted disjointness graph on nonempty proper subsets of [m]; G2 is
// its blow-up with each node S replaced by an independent set of |X_S|
// vertices.
class QuotientModel {
 public:
  explicit QuotientModel(Modulus mod) : mod_(std::move(mod)) {
    const auto supports = all_supports(mod_.m());
    layers_.reserve(supports.size());
    index_.assign(SupportSet::full_mask(mod_.m()), 0);
    for (const auto& s : supports) {
      index_[s.mask()] = layers_.size();
      layers_.push_back({s, divisor(mod_, s), class_size(mod_, s), degree(mod_, s)});
    }
  }

  const Modulus& modulus() const noexcept { return mod_; }
  const std::vector<LayerSummary>& layers() const noexcept { return layers_; }

  const LayerSummary& layer(const SupportSet& s) const {
    detail::require_matching(mod_, s);
    return layers_[index_[s.mask()]];
  }

  integer vertex_count() const {
    integer total = 0;
    for (const auto& l : layers_) total = checked_add(total, l.size);
    return total;
  }

  std::size_t edge_count() const {
    std::size_t edges = 0;
    for (std::size_t i = 0; i < layers_.size(); ++i)
      for (std::size_t j = i + 1; j < layers_.size(); ++j)
        if (layers_adjacent(layers_[i].support, layers_[j].support)) ++edges;
    return edges;
  }

 private:
  Modulus mod_;
  std::vector<LayerSummary> layers_;
  std::vector<std::size_t> index_;
};

inline QuotientModel build_quotient(const Modulus& mod) { return QuotientModel(mod); }

// [m] \ {m}
inline SupportSet min_degree_support(std::size_t m) {
  return SupportSet(m, SupportSet::full_mask(m) >> 1);
}

// {m}
inline SupportSet min_cut_support(std::size_t m) {
  return SupportSet(m, SupportSet::mask_type{1} << (m - 1));
}

struct MinDegree {
  integer value;
  SupportSet argmin;
};

inline MinDegree min_degree(const Modulus& mod) {
  const SupportSet expected = min_degree_support(mod.m());
  integer value = 1;
  for (std::size_t i = 0; i + 1 < mod.m(); ++i) value = checked_mul(value, mod.primes()[i] - 1);

  for (const auto& s : all_supports(mod.m())) {
    const integer d = degree(mod, s);
    if (s == expected ? d != value : d <= value)
      throw std::logic_error("minimum degree layer of n = " + std::to_string(mod.n()) +
                             " is not uniquely " + expected.to_string() + ": " + s.to_string() +
                             " has degree " + std::to_string(d));
  }
  return {value, expected};
}

inline integer kappa(const Modulus& mod) {
  const integer k = kappa_from_primes(mod.primes());
  const integer phi = euler_phi(mod);
  const integer last = mod.largest_prime() - 1;
  if (phi % last != 0 || phi / last != k)
    throw std::logic_error("connectivity routes disagree for n = " + std::to_string(mod.n()) +
                           ": product " + std::to_string(k) + ", phi/(p_m - 1) = " +
                           std::to_string(phi) + "/" + std::to_string(last));
  return k;
}

inline integer lambda_edge(const Modulus& mod) { return kappa(mod); }

// phi(p_1 ... p_{m-1}), the separator size known before the exact value.
inline integer prior_upper_bound(const Modulus& mod) {
  integer head = 1;
  for (std::size_t i = 0; i + 1 < mod.m(); ++i) head = checked_mul(head, mod.primes()[i]);
  return totient(head);
}

enum class DistanceCase { disjoint, intersecting_partial_union, intersecting_full_union };

inline DistanceCase distance_case(const SupportSet& a, const SupportSet& b) {
  detail::require_same_ambient(a, b);
  if ((a.mask() & b.mask()) == 0) return DistanceCase::disjoint;
  if ((a.mask() | b.mask()) == SupportSet::full_mask(a.m()))
    return DistanceCase::intersecting_full_union;
  return DistanceCase::intersecting_partial_union;
}

inline const char* describe(DistanceCase c) {
  switch (c) {
    case DistanceCase::disjoint: return "disjoint";
    case DistanceCase::intersecting_partial_union: return "intersecting, union != [m]";
    case DistanceCase::intersecting_full_union: return "intersecting, union = [m]";
  }
  return "";
}

// Distance between x in X_a and y in X_b, x != y. Equal supports fall in the
// partial-union case, so distinct twins are at distance 2.
inline int layer_distance(const SupportSet& a, const SupportSet& b) {
  switch (distance_case(a, b)) {
    case DistanceCase::disjoint: return 1;
    case DistanceCase::intersecting_partial_union: return 2;
    case DistanceCase::intersecting_full_union: return 3;
  }
  return 0;
}

inline int diameter(const Modulus& mod) { return mod.m() == 2 ? 2 : 3; }

struct RadiusCenter {
  int radius;
  std::vector<SupportSet> center_layers;
};

inline RadiusCenter radius_and_center(const Modulus& mod) {
  if (mod.m() < 3)
    throw error(errc::requires_three_primes,
                "radius and center are only determined for three or more primes, n = " +
                    std::to_string(mod.n()) + " has " + std::to_string(mod.m()));
  RadiusCenter out{2, {}};
  for (std::size_t i = 1; i <= mod.m(); ++i) out.center_layers.push_back(SupportSet(mod.m(), {i}));
  return out;
}

inline integer kappa_append_prime(const Modulus& mod, integer q) {
  if (!is_prime(q) || q <= mod.largest_prime())
    throw error(errc::not_larger_prime, std::to_string(q) + " is not a prime above " +
                                            std::to_string(mod.largest_prime()));
  const integer appended = checked_mul(mod.largest_prime() - 1, kappa(mod));
  const integer recomputed = kappa(factor_squarefree(checked_mul(mod.n(), q)));
  if (appended != recomputed)
    throw std::logic_error("append-prime recurrence failed for n = " + std::to_string(mod.n()) +
                           ", q = " + std::to_string(q));
  return appended;
}

}  // namespace comaximal
