#include <random>

#include <gtest/gtest.h>

#include "gaussorder/arith.hpp"
#include "oracles.hpp"

namespace {

using gaussorder::ErrorCode;
using gaussorder::Factorization;
using gaussorder::Natural;

Natural pow2(unsigned k) { return Natural(1) << k; }

TEST(IsPrime, NamedExamples) {
  EXPECT_TRUE(gaussorder::is_prime(257));
  EXPECT_FALSE(gaussorder::is_prime(1));
  EXPECT_TRUE(gaussorder::is_prime(1009));
  EXPECT_FALSE(gaussorder::is_prime(0));
  EXPECT_TRUE(gaussorder::is_prime(2));
}

TEST(IsPrime, AgreesWithTrialDivisionBelow20000) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(gaussorder::is_prime(n), oracle::is_prime(n)) << n;
  }
}

TEST(IsPrime, KnownLargeValues) {
  // Strong pseudoprime to several small bases.
  EXPECT_FALSE(gaussorder::is_prime(Natural("3825123056546413051")));
  EXPECT_TRUE(gaussorder::is_prime(Natural("18446744073709551557")));  // largest 64-bit prime
  EXPECT_TRUE(gaussorder::is_prime(pow2(89) - 1));
  EXPECT_TRUE(gaussorder::is_prime(pow2(127) - 1));
  EXPECT_FALSE(gaussorder::is_prime(pow2(128) + 1));
  EXPECT_FALSE(gaussorder::is_prime((pow2(61) - 1) * (pow2(89) - 1)));
}

TEST(Factorize, SmallExamples) {
  auto f15 = gaussorder::factorize(15);
  ASSERT_EQ(f15.size(), 2u);
  EXPECT_EQ(f15.factors()[0], (gaussorder::PrimePower{3, 1}));
  EXPECT_EQ(f15.factors()[1], (gaussorder::PrimePower{5, 1}));

  EXPECT_EQ(gaussorder::factorize(1023).to_string(), "3 * 11 * 31");
  EXPECT_TRUE(gaussorder::factorize(1).empty());
}

TEST(Factorize, GuardRejectsLargeGroupOrder) {
  // 11^1008 - 1 has 3488 bits.
  const Natural n = boost::multiprecision::pow(Natural(11), 1008) - 1;
  try {
    (void)gaussorder::factorize(n, 128);
    FAIL() << "expected GuardExceeded";
  } catch (const gaussorder::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GuardExceeded);
  }
}

TEST(Factorize, ZeroIsRejected) {
  EXPECT_THROW((void)gaussorder::factorize(0), gaussorder::Error);
}

TEST(Factorize, MatchesTrialDivisionOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = rng() % 4'000'000'000ull + 1;
    const auto expected = oracle::trial_factor(n);
    const Factorization got = gaussorder::factorize(n);
    ASSERT_EQ(got.size(), expected.size()) << n;
    std::size_t k = 0;
    for (const auto& [prime, exp] : expected) {
      EXPECT_EQ(got.factors()[k].prime, prime);
      EXPECT_EQ(got.factors()[k].exponent, exp);
      ++k;
    }
  }
}

TEST(Factorize, ReconstructsLargeProducts) {
  // Products of primes well above the trial-division range force the rho path.
  const std::vector<Natural> cases = {
      Natural("1000000007") * Natural("998244353"),
      Natural("4294967291") * Natural("4294967279") * 3,
      (pow2(31) - 1) * (pow2(61) - 1),
      Natural("18446744073709551557") * Natural("1000003"),
      boost::multiprecision::pow(Natural(13), 18) - 1,
      boost::multiprecision::pow(Natural(2), 96) - 1,
  };
  for (const auto& n : cases) {
    const Factorization f = gaussorder::factorize(n, 200);
    EXPECT_EQ(f.value(), n) << n;
    Natural prev = 0;
    for (const auto& pp : f) {
      EXPECT_TRUE(gaussorder::is_prime(pp.prime)) << pp.prime;
      EXPECT_GT(pp.prime, prev);
      EXPECT_GE(pp.exponent, 1u);
      prev = pp.prime;
    }
  }
}

TEST(Factorize, IsReproducible) {
  const Natural n = Natural("1000000007") * Natural("998244353") * Natural("1000003");
  EXPECT_EQ(gaussorder::factorize(n), gaussorder::factorize(n));
}

TEST(Rho2, Examples) {
  EXPECT_EQ(gaussorder::rho2(12), 4);
  EXPECT_EQ(gaussorder::rho2(7), 1);
  EXPECT_EQ(gaussorder::rho2(10), 2);
  EXPECT_THROW((void)gaussorder::rho2(0), gaussorder::Error);
}

TEST(Rho2, Properties) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Natural n = Natural(rng() % 1'000'000'000) + 1;
    const Natural r = gaussorder::rho2(n);
    EXPECT_EQ(n % r, 0);
    EXPECT_EQ((n / r) % 2, 1);
    EXPECT_EQ(gaussorder::rho2(2 * n + 1), 1);
  }
}

TEST(Rho2, ExactlyOneOfConsecutiveEvensIsTwoModFour) {
  for (unsigned q : {3u, 5u, 7u, 11u, 13u, 107u}) {
    for (unsigned m = 1; m <= 40; ++m) {
      const Natural qm = boost::multiprecision::pow(Natural(q), m);
      const bool minus = gaussorder::rho2(qm - 1) == 2;
      const bool plus = gaussorder::rho2(qm + 1) == 2;
      EXPECT_NE(minus, plus) << q << "^" << m;
    }
  }
}

TEST(MultOrderMod, Examples) {
  EXPECT_EQ(gaussorder::mult_order_mod(5, 257), 256);
  EXPECT_EQ(gaussorder::mult_order_mod(1, 257), 1);
  EXPECT_EQ(gaussorder::mult_order_mod(2, 11), 10);
}

TEST(MultOrderMod, MatchesBruteForceAndDividesGroupOrder) {
  for (std::uint64_t m = 2; m < 400; ++m) {
    std::uint64_t phi = 0;
    for (std::uint64_t g = 1; g < m; ++g) phi += std::gcd(g, m) == 1 ? 1 : 0;
    for (std::uint64_t g = 1; g < m; ++g) {
      if (std::gcd(g, m) != 1) continue;
      const Natural k = gaussorder::mult_order_mod(g, m);
      ASSERT_EQ(k, oracle::order_mod(g, m)) << g << " mod " << m;
      ASSERT_EQ(phi % k.convert_to<std::uint64_t>(), 0u);
    }
  }
}

TEST(MultOrderMod, RejectsNonCoprime) {
  EXPECT_THROW((void)gaussorder::mult_order_mod(6, 9), gaussorder::Error);
  EXPECT_THROW((void)gaussorder::mult_order_mod(3, 1), gaussorder::Error);
}

TEST(IsPrimitiveRoot, Examples) {
  EXPECT_TRUE(gaussorder::is_primitive_root(107, 97));
  EXPECT_FALSE(gaussorder::is_primitive_root(1, 5));
  EXPECT_TRUE(gaussorder::is_primitive_root(2, 5));
  EXPECT_TRUE(gaussorder::is_primitive_root(5, 257));
  EXPECT_TRUE(gaussorder::is_primitive_root(3, 401));
  EXPECT_TRUE(gaussorder::is_primitive_root(11, 1009));
  EXPECT_FALSE(gaussorder::is_primitive_root(2, 7));
}

TEST(Lcm, Basics) {
  EXPECT_EQ(gaussorder::lcm(3, 15), 15);
  EXPECT_EQ(gaussorder::lcm(4, 6), 12);
  EXPECT_EQ(gaussorder::lcm(7, 1), 7);
}

TEST(Log2Natural, LargeValues) {
  EXPECT_DOUBLE_EQ(gaussorder::log2_natural(pow2(500)), 500.0);
  EXPECT_NEAR(gaussorder::log2_natural(boost::multiprecision::pow(Natural(5), 256)), 256 * std::log2(5.0), 1e-9);
}

}  // namespace
