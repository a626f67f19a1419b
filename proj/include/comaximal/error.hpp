#pragma once

#include <stdexcept>
#include <string>

namespace comaximal {

enum class errc {
  too_small,
  not_squarefree,
  prime_modulus,
  too_many_primes,
  overflow,
  out_of_range,
  coordinate_out_of_range,
  exceeds_cap,
  not_a_vertex,
  requires_three_primes,
  not_larger_prime,
  graph_disconnected,
  complete_graph,
};

inline const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::too_small: return "TooSmall";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::prime_modulus: return "PrimeModulus";
    case errc::too_many_primes: return "TooManyPrimes";
    case errc::overflow: return "Overflow";
    case errc::out_of_range: return "OutOfRange";
    case errc::coordinate_out_of_range: return "CoordinateOutOfRange";
    case errc::exceeds_cap: return "ExceedsCap";
    case errc::not_a_vertex: return "NotAVertex";
    case errc::requires_three_primes: return "RequiresThreePrimes";
    case errc::not_larger_prime: return "NotLargerPrime";
    case errc::graph_disconnected: return "GraphDisconnected";
    case errc::complete_graph: return "CompleteGraph";
  }
  return "Unknown";
}

// Recoverable input errors. Broken internal invariants (two closed forms
// disagreeing, say) are reported as std::logic_error instead.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace comaximal
