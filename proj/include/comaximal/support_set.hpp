#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "comaximal/arithmetic.hpp"

namespace comaximal {

// A nonempty proper subset S of [m] = {1, ..., m}. Indices are 1-based in
// the public interface; bit i-1 of the mask represents index i.
class SupportSet {
 public:
  using mask_type = std::uint32_t;

  SupportSet(std::size_t m, mask_type mask) : mask_(mask), m_(static_cast<std::uint8_t>(m)) {
    if (m < 2 || m > max_primes)
      throw error(errc::out_of_range, "ambient size m = " + std::to_string(m) + " outside [2, 16]");
    if (mask == 0 || mask >= full_mask(m) || (mask & ~full_mask(m)) != 0)
      throw error(errc::out_of_range, "support mask " + std::to_string(mask) +
                                          " is not a nonempty proper subset of [" +
                                          std::to_string(m) + "]");
  }

  SupportSet(std::size_t m, std::initializer_list<std::size_t> members)
      : SupportSet(m, mask_of(m, members)) {}

  static SupportSet from_members(std::size_t m, std::span<const std::size_t> members) {
    mask_type mask = 0;
    for (std::size_t i : members) mask |= bit_of(m, i);
    return SupportSet(m, mask);
  }

  static mask_type full_mask(std::size_t m) noexcept { return (mask_type{1} << m) - 1; }

  mask_type mask() const noexcept { return mask_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool contains(std::size_t i) const noexcept { return i >= 1 && i <= m_ && (mask_ >> (i - 1)) & 1u; }
  mask_type complement_mask() const noexcept { return full_mask(m_) & ~mask_; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= m_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  // {1,2,3}
  std::string to_string() const { return "{" + joined(",") + "}"; }
  // 1+2+3, used in CSV cells
  std::string to_plus_string() const { return joined("+"); }
  // S_1_2_3, used as DOT node identifiers
  std::string to_identifier() const { return "S_" + joined("_"); }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

  // Canonical order: by cardinality, then lexicographically on members.
  friend std::strong_ordering operator<=>(const SupportSet& a, const SupportSet& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.members() <=> b.members();
  }

 private:
  static mask_type mask_of(std::size_t m, std::initializer_list<std::size_t> members) {
    mask_type mask = 0;
    for (std::size_t i : members) mask |= bit_of(m, i);
    return mask;
  }

  static mask_type bit_of(std::size_t m, std::size_t i) {
    if (i < 1 || i > m)
      throw error(errc::out_of_range, "index " + std::to_string(i) + " outside [1, " +
                                          std::to_string(m) + "]");
    return mask_type{1} << (i - 1);
  }

  std::string joined(const char* sep) const {
    std::string out;
    for (std::size_t i : members()) {
      if (!out.empty()) out += sep;
      out += std::to_string(i);
    }
    return out;
  }

  mask_type mask_;
  std::uint8_t m_;
};

// All nonempty proper subsets of [m] in canonical order.
inline std::vector<SupportSet> all_supports(std::size_t m) {
  std::vector<SupportSet> out;
  const auto full = SupportSet::full_mask(m);
  out.reserve(full - 1);
  for (SupportSet::mask_type mask = 1; mask < full; ++mask) out.emplace_back(m, mask);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace comaximal
