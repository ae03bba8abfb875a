#include <set>

#include <gtest/gtest.h>

#include "binomcong/binomsum.hpp"
#include "binomcong/combsum.hpp"
#include "binomcong/error.hpp"
#include "binomcong/registry.hpp"

using namespace binomcong;

namespace {

const PartResult& only_part(const Verdict& v) {
  EXPECT_EQ(v.parts.size(), 1u);
  return v.parts.front();
}

}  // namespace

TEST(Registry, IdsAreUnique) {
  std::set<std::string> seen;
  for (const auto& s : statements()) EXPECT_TRUE(seen.insert(s.id).second) << s.id;
  EXPECT_GE(seen.size(), 50u);
  for (const char* id : {"cor-2.1", "cor-2.2-8k7", "cor-2.2-mod15", "cor-2.7", "thm-3.8", "thm-4.6", "lem-3.3"}) {
    EXPECT_TRUE(seen.count(id)) << id;
  }
}

TEST(Registry, UnknownId) {
  try {
    find_statement("no-such-id");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownId);
  }
  EXPECT_THROW(verify_range("no-such-id", 100), Error);
}

TEST(CheckStatement, FourTwoSumAtSeven) {
  const auto v = check_statement("thm-2.6", 7);
  EXPECT_EQ(v.outcome, Outcome::Pass);
  const auto& part = only_part(v);
  EXPECT_EQ(part.lhs, "2");
  EXPECT_EQ(part.rhs, "2");
  EXPECT_NE(part.row.find("+-6,+-7 (mod 17)"), std::string::npos);
}

TEST(CheckStatement, TwentyTenSumAtThirtyOne) {
  const auto v = check_statement("thm-4.5", 31);
  EXPECT_EQ(v.outcome, Outcome::Pass);
  EXPECT_EQ(v.parts.front().lhs, "28");
  EXPECT_EQ(v.parts.front().rhs, "28");
}

TEST(CheckStatement, CubicRootAtFive) {
  const auto v = check_statement("thm-3.10", 5, {{"a", Rational(1)}});
  EXPECT_EQ(v.outcome, Outcome::Pass);
  EXPECT_EQ(only_part(v).lhs, "4");
  EXPECT_EQ(cubic_roots(23, 3, 1, PrimeModulus(5)), (std::vector<std::uint64_t>{4}));
}

TEST(CheckStatement, FifteenFormAtNineteen) {
  const auto v = check_statement("thm-3.4", 19);
  EXPECT_EQ(v.outcome, Outcome::Pass);
  for (const auto& part : v.parts) EXPECT_EQ(part.rhs, part.lhs);
  EXPECT_EQ(v.parts.back().lhs, "5");
  ASSERT_FALSE(v.witnesses.empty());
  EXPECT_NE(v.witnesses.front().find("(-2,1)"), std::string::npos);
}

TEST(CheckStatement, NotApplicableAndBadInput) {
  EXPECT_EQ(check_statement("thm-4.5", 29).outcome, Outcome::NotApplicable);
  EXPECT_THROW(check_statement("thm-4.5", 33), Error);
}

TEST(CubicRoots, Examples) {
  EXPECT_EQ(cubic_roots(1, 0, 0, PrimeModulus(11)), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(cubic_roots(1, 0, -1, PrimeModulus(7)), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_THROW(cubic_roots(1, 0, -1, PrimeModulus(3)), Error);
}

TEST(DeltaP, DerivationsAgree) {
  for (const auto& [b, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {3, 1}, {8, 1}}) {
    int compared = 0;
    for (const auto p : sieve_primes(2000)) {
      const auto ip = static_cast<std::int64_t>(p);
      if (p == 2 || b % ip == 0 || m % ip == 0 || (b * b + 4 * m * m) % ip == 0) continue;
      const auto d = delta_p(b, m, PrimeModulus(p));
      if (d.congruence && d.quartic) {
        ASSERT_EQ(d.congruence->sign, d.quartic->sign) << b << ' ' << m << ' ' << p;
        ++compared;
      }
    }
    EXPECT_GT(compared, 50) << b << ' ' << m;
    EXPECT_TRUE(delta_periodicity_check(b, m, 2000).violations.empty());
  }
  try {
    delta_p(1, 1, PrimeModulus(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
}

TEST(VerifyRange, CleanStatements) {
  for (const char* id : {"cor-2.1", "thm-3.2", "thm-3.8", "thm-2.1", "lem-3.3", "intro-1.3"}) {
    const auto r = verify_range(id, 1000);
    EXPECT_EQ(r.failed, 0u) << id;
    EXPECT_GT(r.passed, 0u) << id;
    EXPECT_EQ(r.status, "verified");
  }
}

TEST(VerifyRange, DisputedTwelveSixRow) {
  const auto r = verify_range("thm-4.3", 2000);
  EXPECT_EQ(r.status, "disputed");
  ASSERT_GT(r.failed, 0u);
  for (const auto& f : r.failures) {
    EXPECT_EQ(f.prime % 24, 7u) << f.prime;
    EXPECT_EQ(f.lhs, std::to_string(f.prime - 1));
  }
}

TEST(VerifyRange, DisputedTenFiveTable) {
  const auto r = verify_range("thm-4.4", 100);
  EXPECT_EQ(r.status, "disputed");
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.front().prime, 11u);
  EXPECT_EQ(r.failures.front().lhs, "0");
  for (const auto& f : r.failures) {
    const std::uint64_t n = (f.prime - 1) / 2;
    const BigInt oracle = 5 * t_sum_exact({n, 5, 0}) - big_pow(2, static_cast<unsigned>(n));
    EXPECT_EQ(std::to_string(big_mod(oracle, f.prime)), f.lhs) << f.prime;
    EXPECT_NE(f.lhs, f.rhs);
    EXPECT_FALSE(f.witnesses.empty());
  }
}

TEST(VerifyRange, DeterministicAcrossJobs) {
  for (const char* id : {"thm-2.10", "thm-3.7", "intro-1.2"}) {
    const auto one = verify_range(id, 1500, {1, 9, false});
    const auto four = verify_range(id, 1500, {4, 9, false});
    EXPECT_EQ(one, four) << id;
  }
}

TEST(VerifyRange, FailFastStopsAtLowestFailure) {
  const auto full = verify_range("thm-4.4", 200);
  for (std::size_t jobs : {1, 3}) {
    const auto r = verify_range("thm-4.4", 200, {jobs, 1, true});
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures.front(), full.failures.front());
  }
}

TEST(VerifyRange, SeedChangesSamples) {
  const auto a = verify_range("thm-2.1", 200, {1, 1, false});
  const auto b = verify_range("thm-2.1", 200, {1, 2, false});
  EXPECT_EQ(a.failed, 0u);
  EXPECT_EQ(b.failed, 0u);
  EXPECT_NE(check_statement("thm-2.1", 101, {}, 1).params, check_statement("thm-2.1", 101, {}, 2).params);
}

TEST(VerifyRange, Preconditions) {
  EXPECT_THROW(verify_range("thm-2.6", 4), Error);
  EXPECT_THROW(verify_range("thm-2.6", 100, {0, 1, false}), Error);
}

TEST(VerifyRange, RowTotalityAcrossRegistry) {
  for (const auto& s : statements()) {
    const auto r = verify_range(s.id, 300);
    for (const auto& f : r.failures) {
      EXPECT_EQ(f.row.find("RowDispatchViolation"), std::string::npos) << s.id << " p=" << f.prime;
    }
    if (s.status == Status::Verified) EXPECT_EQ(r.failed, 0u) << s.id;
  }
}
