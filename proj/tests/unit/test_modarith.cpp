#include <random>

#include <gtest/gtest.h>

#include "binomcong/error.hpp"
#include "binomcong/modarith.hpp"

using namespace binomcong;

TEST(Sieve, SmallLimits) {
  EXPECT_EQ(sieve_primes(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(sieve_primes(2), (std::vector<std::uint64_t>{2}));
  const auto thirty = sieve_primes(30);
  ASSERT_EQ(thirty.size(), 10u);
  EXPECT_EQ(thirty.back(), 29u);
}

TEST(Sieve, MatchesTrialDivision) {
  const PrimeSieve sieve(5000);
  for (std::uint64_t n = 0; n <= 5000; ++n) EXPECT_EQ(sieve.is_prime(n), is_prime_trial(n)) << n;
}

TEST(PrimeModulus, RejectsNonOddPrimes) {
  EXPECT_THROW(PrimeModulus(2), Error);
  EXPECT_THROW(PrimeModulus(15), Error);
  EXPECT_THROW(PrimeModulus(1), Error);
  EXPECT_NO_THROW(PrimeModulus(4294967291ULL));
  EXPECT_THROW(PrimeModulus(4294967311ULL), Error);
}

TEST(ModPow, Examples) {
  const PrimeModulus p7(7), p19(19);
  EXPECT_EQ(mod_pow(Residue(2, p7), 3), 1);
  EXPECT_EQ(mod_pow(Residue(5, p19), 5), 9);
  EXPECT_EQ(mod_pow(Residue(0, p19), 0), 1);
  EXPECT_EQ(mod_pow_signed(Residue(2, p7), -1), 4);
  EXPECT_THROW(mod_pow_signed(Residue(0, p7), -2), Error);
}

TEST(ModInv, Examples) {
  EXPECT_EQ(mod_inv(Residue(10, PrimeModulus(31))), 28);
  EXPECT_EQ(mod_inv(Residue(1, PrimeModulus(101))), 1);
  EXPECT_EQ(mod_inv(Residue(12, PrimeModulus(13))), 12);
  try {
    mod_inv(Residue(13, PrimeModulus(13)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
  }
}

TEST(ModInv, Involution) {
  for (std::uint64_t p : {3, 5, 101, 997}) {
    const PrimeModulus m(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      const Residue r(static_cast<std::int64_t>(a), m);
      EXPECT_EQ(mod_inv(mod_inv(r)), r);
    }
  }
}

TEST(RationalResidue, Examples) {
  const PrimeModulus p7(7);
  EXPECT_EQ(rational_residue(Rational(1, 27), p7), 6);
  EXPECT_EQ(rational_residue(Rational(0, 5), p7), 0);
  EXPECT_EQ(rational_residue(Rational(-1, 27), p7), 1);
  try {
    rational_residue(Rational(1, 14), p7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DenominatorDivisible);
  }
}

TEST(RationalParse, Forms) {
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("4"), Rational(4));
  EXPECT_EQ(Rational(3, -9), Rational(-1, 3));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Jacobi, Examples) {
  EXPECT_EQ(jacobi(1, 15), 1);
  EXPECT_EQ(jacobi(2, 7), 1);
  EXPECT_EQ(jacobi(17, 13), 1);
  EXPECT_EQ(jacobi(-5, 17), -1);
  EXPECT_EQ(jacobi(6, 9), 0);
  EXPECT_THROW(jacobi(3, 8), Error);
}

TEST(Jacobi, EulerCriterion) {
  for (const auto p : sieve_primes(500)) {
    if (p == 2) continue;
    const PrimeModulus m(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      const Residue r(static_cast<std::int64_t>(a), m);
      EXPECT_EQ(mod_pow(r, (p - 1) / 2), jacobi(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p)));
      EXPECT_EQ(legendre(r), jacobi(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p)));
    }
  }
}

TEST(Jacobi, SupplementaryLaws) {
  for (std::int64_t n = 1; n <= 10000; n += 2) {
    EXPECT_EQ(jacobi(-1, n), minus_one_pow((n - 1) / 2)) << n;
    EXPECT_EQ(jacobi(2, n), minus_one_pow((n * n - 1) / 8)) << n;
  }
}

TEST(Jacobi, MultiplicativeProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> val(-5000, 5000), mod(0, 2000);
  int checked = 0;
  while (checked < 1000) {
    const std::int64_t a = val(rng), b = val(rng), n = 2 * mod(rng) + 1;
    if (std::gcd(a * b, n) != 1) continue;
    EXPECT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n)) << a << ' ' << b << ' ' << n;
    ++checked;
  }
}

TEST(SqrtMod, RoundTrip) {
  for (std::uint64_t p : {3, 5, 13, 17, 97, 241, 7919}) {
    const PrimeModulus m(p);
    for (std::uint64_t a = 0; a < std::min<std::uint64_t>(p, 300); ++a) {
      const Residue r(static_cast<std::int64_t>(a), m);
      const auto s = sqrt_mod(r);
      EXPECT_EQ(s.has_value(), legendre(r) != -1);
      if (s) EXPECT_EQ(*s * *s, r);
    }
  }
}
