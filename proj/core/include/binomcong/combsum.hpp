#pragma once

// Exact sums T_{r(m)}^n = sum of C(n,k) over 0 <= k <= n with k = r (mod m),
// their closed forms for m = 3, 4, 6, and the Delta_5 combination.

#include <cstdint>
#include <vector>

#include "binomcong/bigint.hpp"

namespace binomcong {

struct TSumKey {
  std::uint64_t n;
  std::uint64_t m;
  std::int64_t r;  // any integer; reduced mod m
};

inline constexpr std::uint64_t kExactTSumMaxIndex = 2000;

/// Row n of Pascal's triangle. IndexTooLarge above kExactTSumMaxIndex.
std::vector<BigInt> binomial_row(std::uint64_t n);

/// T-sum over a precomputed row.
BigInt t_sum(const std::vector<BigInt>& row, std::uint64_t m, std::int64_t r);

BigInt t_sum_exact(const TSumKey& key);

/// T_{0(m)}^n from the closed forms; UnsupportedModulus unless m is 3, 4 or 6.
BigInt t0_closed(std::uint64_t m, std::uint64_t n);

/// Both recurrences T_r^n = T_{n-r}^n and T_r^{n+1} = T_r^n + T_{r-1}^n for
/// every r mod m. Needs n <= 500.
bool t_recurrences_check(std::uint64_t n, std::uint64_t m);

/// 5 T^n_{c+r(5)} - 2^n with c = (n-1)/2 for odd n and n/2 for even n.
BigInt delta5(std::int64_t r, std::uint64_t n);

/// The closed forms quoted for Delta_5: 2(-1)^n L_n for r = 0,
/// (-1)^n L_{n-1} for r = +-1, (-1)^{n+1} L_{n+1} for r = +-2.
BigInt delta5_quoted(std::int64_t r, std::uint64_t n);

BigInt fibonacci_exact(std::uint64_t n);
BigInt lucas_number_exact(std::uint64_t n);

}  // namespace binomcong
