#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "comaximal/error.hpp"

namespace comaximal {

using integer = std::uint64_t;

// Largest number of distinct primes a Modulus may carry. Support sets are
// bitmasks over [m], and 2^m - 2 layers are enumerated eagerly.
inline constexpr std::size_t max_primes = 16;

inline integer checked_mul(integer a, integer b) {
  integer out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw error(errc::overflow, std::to_string(a) + " * " + std::to_string(b) + " overflows 64 bits");
  return out;
}

inline integer checked_add(integer a, integer b) {
  integer out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw error(errc::overflow, std::to_string(a) + " + " + std::to_string(b) + " overflows 64 bits");
  return out;
}

inline bool is_prime(integer n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (integer d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline integer next_prime(integer n) {
  integer q = n + 1;
  while (!is_prime(q)) ++q;
  return q;
}

// Totient of an arbitrary positive integer by trial division. Used as an
// independent route for the prior upper bound phi(p_1 ... p_{m-1}).
inline integer totient(integer n) {
  integer result = n;
  for (integer p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// A squarefree n = p_1 p_2 ... p_m with p_1 < ... < p_m and m >= 2.
class Modulus {
 public:
  integer n() const noexcept { return n_; }
  std::span<const integer> primes() const noexcept { return primes_; }
  std::size_t m() const noexcept { return primes_.size(); }

  // 1-based, matching the support-set indexing [m] = {1, ..., m}.
  integer prime(std::size_t i) const { return primes_.at(i - 1); }
  integer largest_prime() const noexcept { return primes_.back(); }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  friend Modulus factor_squarefree(integer n);
  Modulus(integer n, std::vector<integer> primes) : n_(n), primes_(std::move(primes)) {}

  integer n_;
  std::vector<integer> primes_;
};

inline std::vector<integer> distinct_prime_factors(integer n) {
  std::vector<integer> primes;
  for (integer p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

inline Modulus factor_squarefree(integer n) {
  if (n < 2) throw error(errc::too_small, "n = " + std::to_string(n) + " must be at least 2");
  std::vector<integer> primes;
  integer rest = n;
  for (integer p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0)
      throw error(errc::not_squarefree, std::to_string(p) + "^2 = " + std::to_string(p * p) +
                                            " divides " + std::to_string(n));
    primes.push_back(p);
  }
  if (rest > 1) primes.push_back(rest);
  if (primes.size() == 1)
    throw error(errc::prime_modulus, std::to_string(n) + " is prime, so G2 has no vertices");
  if (primes.size() > max_primes)
    throw error(errc::too_many_primes, std::to_string(n) + " has more than " +
                                           std::to_string(max_primes) + " prime factors");
  return Modulus(n, std::move(primes));
}

inline integer euler_phi(const Modulus& mod) {
  integer phi = 1;
  for (integer p : mod.primes()) phi = checked_mul(phi, p - 1);
  return phi;
}

// Connectivity straight from an ordered list of distinct primes, including
// the degenerate one-prime case where G2 is empty.
inline integer kappa_from_primes(std::span<const integer> primes) {
  const std::size_t m = primes.size();
  if (m <= 1) return 0;
  if (m == 2) return primes[0] - 1;
  integer k = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) k = checked_mul(k, primes[i] - 1);
  return k;
}

// Accepts any n >= 2 that is squarefree; a prime n yields 0.
inline integer kappa_of(integer n) {
  if (n < 2) throw error(errc::too_small, "n = " + std::to_string(n) + " must be at least 2");
  if (is_prime(n)) return 0;
  const Modulus mod = factor_squarefree(n);
  return kappa_from_primes(mod.primes());
}

inline std::string join_primes(const Modulus& mod, const char* sep) {
  std::string out;
  for (integer p : mod.primes()) {
    if (!out.empty()) out += sep;
    out += std::to_string(p);
  }
  return out;
}

}  // namespace comaximal
