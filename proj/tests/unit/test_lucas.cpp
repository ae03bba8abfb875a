#include <gtest/gtest.h>

#include "binomcong/error.hpp"
#include "binomcong/lucas.hpp"

using namespace binomcong;

namespace {

// Plain recurrence, the oracle for fast doubling.
std::pair<Residue, Residue> iterate(Residue P, Residue Q, std::uint64_t n) {
  const PrimeModulus p = P.modulus();
  Residue u0 = Residue::zero(p), u1 = Residue::one(p), v0(2, p), v1 = P;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Residue u2 = P * u1 - Q * u0, v2 = P * v1 - Q * v0;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  return {u0, v0};
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(LucasMod, Examples) {
  const auto z = lucas_uv_mod(LucasParams{3, 5}, 0, PrimeModulus(7));
  EXPECT_EQ(z.u, 0);
  EXPECT_EQ(z.v, 2);
  EXPECT_EQ(lucas_uv_mod(LucasParams{2, 1}, 9, PrimeModulus(11)).u, 9);
  const auto f = lucas_uv_mod(LucasParams{1, -1}, 10, PrimeModulus(101));
  EXPECT_EQ(f.u, 55);
  EXPECT_EQ(f.v, 22);
  EXPECT_EQ(lucas_uv_mod(LucasParams{1, 1}, 8, PrimeModulus(97)).u, 1);
}

TEST(LucasMod, RationalParameters) {
  const PrimeModulus p(13);
  const auto r = lucas_uv_mod(LucasParams{Rational(1, 2), Rational(-3, 4)}, 6, p);
  const auto it = iterate(rational_residue(Rational(1, 2), p), rational_residue(Rational(-3, 4), p), 6);
  EXPECT_EQ(r.u, it.first);
  EXPECT_EQ(r.v, it.second);
  EXPECT_THROW(lucas_uv_mod(LucasParams{Rational(1, 13), 1}, 3, p), Error);
}

TEST(LucasMod, FastDoublingMatchesRecurrence) {
  for (std::uint64_t pv : {5, 7, 11, 13, 101}) {
    const PrimeModulus p(pv);
    for (std::int64_t P = -3; P <= 3; ++P) {
      for (std::int64_t Q = -3; Q <= 3; ++Q) {
        if (Q == 0) continue;
        const PrimeModulus m = p;
        Residue u0 = Residue::zero(m), u1 = Residue::one(m), v0(2, m), v1(P, m);
        for (std::uint64_t n = 0; n <= 1000; ++n) {
          const auto r = lucas_uv_mod(Residue(P, m), Residue(Q, m), n);
          ASSERT_EQ(r.u, u0) << pv << ' ' << P << ' ' << Q << ' ' << n;
          ASSERT_EQ(r.v, v0) << pv << ' ' << P << ' ' << Q << ' ' << n;
          const Residue u2 = u1 * P - u0 * Q, v2 = v1 * P - v0 * Q;
          u0 = u1;
          u1 = u2;
          v0 = v1;
          v1 = v2;
        }
      }
    }
  }
}

TEST(LucasExact, Examples) {
  EXPECT_EQ(lucas_uv_exact(1, -1, 10).u, 55);
  const auto one = lucas_uv_exact(7, -4, 1);
  EXPECT_EQ(one.u, 1);
  EXPECT_EQ(one.v, 7);
  EXPECT_EQ(lucas_uv_exact(3, 1, 5).u, 55);
  EXPECT_THROW(lucas_uv_exact(1, 1, kExactLucasMaxIndex + 1), Error);
}

TEST(LucasExact, OddIndexBinomialExpansion) {
  for (std::int64_t P = -4; P <= 4; ++P) {
    for (std::int64_t Q = -4; Q <= 4; ++Q) {
      for (std::int64_t n = 0; n <= 50; ++n) {
        BigInt s = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
          s += binom(n + k, n - k) * big_pow(-Q, static_cast<unsigned>(n - k)) * big_pow(P, static_cast<unsigned>(2 * k));
        }
        ASSERT_EQ(lucas_uv_exact(P, Q, 2 * n + 1).u, s) << P << ' ' << Q << ' ' << n;
      }
    }
  }
}

TEST(LucasExact, PowerDifferences) {
  for (std::int64_t n = 0; n <= 60; ++n) EXPECT_EQ(lucas_uv_exact(2, 1, n).u, n);
  for (std::int64_t a = -5; a <= 5; ++a) {
    for (std::int64_t b = -5; b <= 5; ++b) {
      if (a == b) continue;
      for (unsigned n = 0; n <= 60; ++n) {
        EXPECT_EQ(lucas_uv_exact(a + b, a * b, n).u * (a - b), big_pow(a, n) - big_pow(b, n));
      }
    }
  }
}

TEST(LucasExact, UnitParametersClosedForm) {
  BigInt u0 = 0, u1 = 1;
  for (std::int64_t n = 0; n <= 10000; ++n) {
    const int expected = n == 0 ? 0 : minus_one_pow(n - 1) * jacobi(n, 3);
    ASSERT_EQ(u0, expected) << n;
    BigInt u2 = u1 - u0;
    u0 = u1;
    u1 = u2;
  }
}

TEST(FibonacciLucas, Examples) {
  const auto z = fibonacci_lucas_mod(0, PrimeModulus(17));
  EXPECT_EQ(z.u, 0);
  EXPECT_EQ(z.v, 2);
  const auto five = fibonacci_lucas_mod(5, PrimeModulus(11));
  EXPECT_EQ(five.u, 5);
  EXPECT_EQ(five.v, 0);
  EXPECT_EQ(fibonacci_lucas_mod(15, PrimeModulus(31)).v, 0);
}

TEST(HalfIndexShift, Neighbours) {
  const PrimeModulus p(101);
  const LucasParams params{5, 3};
  for (std::uint64_t n = 1; n < 40; ++n) {
    const auto at = lucas_uv_mod(params, n, p);
    const auto s = half_index_shift(at, params);
    EXPECT_EQ(s.next, lucas_uv_mod(params, n + 1, p).u);
    EXPECT_EQ(s.previous, lucas_uv_mod(params, n - 1, p).u);
    EXPECT_EQ(lucas_u_next(at, Residue(5, p)), s.next);
  }
  EXPECT_EQ(half_index_shift(lucas_uv_mod(params, 1, p), params).previous, 0);
  EXPECT_THROW(half_index_shift(lucas_uv_mod(LucasParams{5, 101}, 3, p), LucasParams{5, 101}), Error);
}

TEST(LucasMod, SquareQHalfIndexFamily) {
  for (const auto pv : sieve_primes(2000)) {
    if (pv < 3) continue;
    const PrimeModulus p(pv);
    for (std::int64_t P = -4; P <= 4; ++P) {
      for (std::int64_t c = 1; c <= 4; ++c) {
        const Residue rP(P, p), rc(c, p), Q = rc * rc;
        const int d = legendre(rP * rP - Q * 4);
        if (rc.is_zero() || d == 0) continue;
        const int s = legendre(rP - rc * 2);
        const Residue up = lucas_uv_mod(rP, Q, (pv + 1) / 2).u, um = lucas_uv_mod(rP, Q, (pv - 1) / 2).u;
        if (d == 1) {
          ASSERT_EQ(up, s) << pv << ' ' << P << ' ' << c;
          ASSERT_TRUE(um.is_zero()) << pv << ' ' << P << ' ' << c;
        } else {
          ASSERT_TRUE(up.is_zero()) << pv << ' ' << P << ' ' << c;
          ASSERT_EQ(um, Residue(s, p) / rc) << pv << ' ' << P << ' ' << c;
        }
      }
    }
  }
}
