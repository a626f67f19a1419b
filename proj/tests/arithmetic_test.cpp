#include <gtest/gtest.h>

#include <optional>

#include "brute_force.hpp"
#include "comaximal/arithmetic.hpp"

using namespace comaximal;

namespace {

std::vector<integer> primes_of(const Modulus& mod) { return {mod.primes().begin(), mod.primes().end()}; }

}  // namespace

TEST(FactorSquarefree, ReturnsOrderedPrimes) {
  EXPECT_EQ(primes_of(factor_squarefree(30)), (std::vector<integer>{2, 3, 5}));
  EXPECT_EQ(primes_of(factor_squarefree(2310)), (std::vector<integer>{2, 3, 5, 7, 11}));
  EXPECT_EQ(primes_of(factor_squarefree(6)), (std::vector<integer>{2, 3}));
  EXPECT_EQ(factor_squarefree(2310).m(), 5u);
  EXPECT_EQ(factor_squarefree(2310).prime(5), 11u);
}

TEST(FactorSquarefree, RejectsSquares) {
  try {
    factor_squarefree(12);
    FAIL() << "12 accepted";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_squarefree);
    EXPECT_NE(std::string(e.what()).find("2^2"), std::string::npos);
  }
  EXPECT_THROW(factor_squarefree(4), error);
  EXPECT_THROW(factor_squarefree(2 * 3 * 25), error);
}

TEST(FactorSquarefree, RejectsPrimesAndTinyInputs) {
  auto code_of = [](integer n) {
    try {
      factor_squarefree(n);
    } catch (const error& e) {
      return e.code();
    }
    return errc::overflow;
  };
  EXPECT_EQ(code_of(7), errc::prime_modulus);
  EXPECT_EQ(code_of(2), errc::prime_modulus);
  EXPECT_EQ(code_of(1), errc::too_small);
  EXPECT_EQ(code_of(0), errc::too_small);
}

TEST(FactorSquarefree, LargePrimeCofactor) {
  const integer p = 1'000'003;
  EXPECT_EQ(primes_of(factor_squarefree(6 * p)), (std::vector<integer>{2, 3, p}));
}

TEST(EulerPhi, MatchesKnownValues) {
  EXPECT_EQ(euler_phi(factor_squarefree(30)), 8u);
  EXPECT_EQ(euler_phi(factor_squarefree(6)), 2u);
  EXPECT_EQ(euler_phi(factor_squarefree(2310)), 480u);
}

TEST(EulerPhi, AgreesWithGcdScanAndProductForAllSquarefreeComposites) {
  for (integer n = 6; n <= 3000; ++n) {
    std::optional<Modulus> parsed;
    try {
      parsed = factor_squarefree(n);
    } catch (const error&) {
      continue;
    }
    const Modulus& mod = *parsed;
    integer product = 1;
    for (integer p : mod.primes()) product *= p;
    ASSERT_EQ(product, n);
    for (std::size_t i = 1; i < mod.m(); ++i) ASSERT_LT(mod.primes()[i - 1], mod.primes()[i]);
    for (integer p : mod.primes()) ASSERT_TRUE(is_prime(p));
    ASSERT_EQ(euler_phi(mod), brute::totient_by_scan(n)) << n;
    ASSERT_EQ(totient(n), euler_phi(mod));
  }
}

TEST(KappaFromPrimes, HandlesEveryBranch) {
  const std::vector<integer> one{7}, two{5, 11}, many{2, 3, 5, 7, 11};
  EXPECT_EQ(kappa_from_primes(one), 0u);
  EXPECT_EQ(kappa_from_primes(two), 4u);
  EXPECT_EQ(kappa_from_primes(many), 48u);
  EXPECT_EQ(kappa_of(7), 0u);
  EXPECT_EQ(kappa_of(210), 8u);
  EXPECT_THROW(kappa_of(12), error);
}

TEST(CheckedArithmetic, DetectsOverflow) {
  EXPECT_THROW(checked_mul(integer{1} << 40, integer{1} << 40), error);
  EXPECT_THROW(checked_add(~integer{0}, 1), error);
  EXPECT_EQ(checked_mul(1u << 20, 1u << 20), integer{1} << 40);
}

TEST(Primes, NextPrimeAndPrimality) {
  EXPECT_EQ(next_prime(7), 11u);
  EXPECT_EQ(next_prime(13), 17u);
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
}
