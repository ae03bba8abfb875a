#include <gtest/gtest.h>

#include "binomcong/combsum.hpp"
#include "binomcong/error.hpp"
#include "binomcong/modarith.hpp"

using namespace binomcong;

TEST(TSum, Examples) {
  EXPECT_EQ(t_sum_exact({4, 3, 0}), 5);
  EXPECT_EQ(t_sum_exact({0, 7, 0}), 1);
  EXPECT_EQ(t_sum_exact({5, 10, 0}), 1);
  EXPECT_EQ(t_sum_exact({6, 4, -2}), t_sum_exact({6, 4, 2}));
  EXPECT_THROW(t_sum_exact({kExactTSumMaxIndex + 1, 3, 0}), Error);
}

TEST(TSum, ResiduesPartitionTheRow) {
  for (std::uint64_t n = 0; n <= 200; n += 7) {
    for (std::uint64_t m = 1; m <= 12; ++m) {
      BigInt total = 0;
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(m); ++r) total += t_sum_exact({n, m, r});
      EXPECT_EQ(total, big_pow(2, static_cast<unsigned>(n)));
    }
  }
}

TEST(TZeroClosed, Examples) {
  EXPECT_EQ(t0_closed(3, 4), 5);
  EXPECT_EQ(t0_closed(4, 6), 16);
  EXPECT_EQ(t0_closed(6, 6), 2);
  EXPECT_THROW(t0_closed(5, 4), Error);
}

TEST(TZeroClosed, MatchesExactSums) {
  for (std::uint64_t m : {3, 4, 6}) {
    for (std::uint64_t n = 0; n <= 1000; ++n) ASSERT_EQ(t0_closed(m, n), t_sum_exact({n, m, 0})) << m << ' ' << n;
  }
}

TEST(TRecurrences, Hold) {
  EXPECT_TRUE(t_recurrences_check(4, 3));
  EXPECT_TRUE(t_recurrences_check(0, 5));
  EXPECT_TRUE(t_recurrences_check(100, 12));
  for (std::uint64_t m : {3, 4, 5, 6, 10, 12}) {
    for (std::uint64_t n = 0; n <= 500; n += 13) EXPECT_TRUE(t_recurrences_check(n, m)) << n << ' ' << m;
  }
}

TEST(Delta5, Examples) {
  EXPECT_EQ(delta5(0, 2), 6);
  EXPECT_EQ(delta5(0, 4), 14);
  EXPECT_EQ(delta5(0, 1), 3);
}

TEST(Delta5, QuotedFormsHoldForEvenIndexOnly) {
  for (std::uint64_t n = 2; n <= 60; n += 2) {
    for (std::int64_t r = -2; r <= 2; ++r) EXPECT_EQ(delta5(r, n), delta5_quoted(r, n)) << r << ' ' << n;
  }
  EXPECT_NE(delta5(0, 1), delta5_quoted(0, 1));
}

TEST(FibonacciExact, Values) {
  EXPECT_EQ(fibonacci_exact(10), 55);
  EXPECT_EQ(lucas_number_exact(10), 123);
  EXPECT_EQ(lucas_number_exact(0), 2);
}

TEST(TenfoldIdentity, ElevenModTwenty) {
  for (const auto p : sieve_primes(600)) {
    if (p % 20 != 11) continue;
    const std::uint64_t n = (p - 1) / 2;
    EXPECT_EQ(10 * t_sum_exact({n, 10, 0}) - big_pow(2, static_cast<unsigned>(n)), -2 * lucas_number_exact(n)) << p;
  }
}
