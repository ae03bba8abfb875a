#include "binomcong/combsum.hpp"

#include "binomcong/error.hpp"
#include "binomcong/modarith.hpp"

namespace binomcong {

std::vector<BigInt> binomial_row(std::uint64_t n) {
  if (n > kExactTSumMaxIndex) {
    throw Error(ErrorCode::IndexTooLarge, "exact T-sum index " + std::to_string(n) +
                                              " exceeds " + std::to_string(kExactTSumMaxIndex));
  }
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

BigInt t_sum(const std::vector<BigInt>& row, std::uint64_t m, std::int64_t r) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "T-sum modulus must be positive");
  const auto mm = static_cast<std::int64_t>(m);
  BigInt sum = 0;
  for (std::size_t k = static_cast<std::size_t>(floor_mod(r, mm)); k < row.size(); k += m) sum += row[k];
  return sum;
}

BigInt t_sum_exact(const TSumKey& key) { return t_sum(binomial_row(key.n), key.m, key.r); }

namespace {

BigInt pow2(std::uint64_t e) { return BigInt(1) << static_cast<unsigned>(e); }
BigInt pow3(std::uint64_t e) { return big_pow(3, static_cast<unsigned>(e)); }

}  // namespace

BigInt t0_closed(std::uint64_t m, std::uint64_t n) {
  if (m != 3 && m != 4 && m != 6) {
    throw Error(ErrorCode::UnsupportedModulus,
                "closed form known only for m in {3,4,6}, got " + std::to_string(m));
  }
  // The closed forms are stated for n >= 1; T^0 is the single term C(0,0).
  if (n == 0) return 1;
  const int sign = minus_one_pow(static_cast<std::int64_t>(n));
  switch (m) {
    case 3:
      return n % 3 == 0 ? (pow2(n) + 2 * sign) / 3 : (pow2(n) - sign) / 3;
    case 4: {
      const int s = minus_one_pow(static_cast<std::int64_t>(n / 4));
      switch (n % 4) {
        case 0:
        case 1: return (pow2(n - 1) + s * pow2(n / 2)) / 2;
        case 2: return pow2(n - 2);
        default: return (pow2(n - 1) - s * pow2(n / 2)) / 2;
      }
    }
    default: {
      BigInt combo;  // 6 T - 2^n
      switch (n % 12) {
        case 1: case 11: combo = pow3((n + 1) / 2) + 1; break;
        case 3: case 9: combo = -2; break;
        case 5: case 7: combo = -pow3((n + 1) / 2) + 1; break;
        case 0: combo = 2 * (pow3(n / 2) + 1); break;
        case 2: case 10: combo = pow3(n / 2) - 1; break;
        case 4: case 8: combo = -pow3(n / 2) - 1; break;
        default: combo = 2 * (1 - pow3(n / 2)); break;
      }
      return (combo + pow2(n)) / 6;
    }
  }
}

bool t_recurrences_check(std::uint64_t n, std::uint64_t m) {
  if (n > 500) throw Error(ErrorCode::IndexTooLarge, "recurrence check needs n <= 500");
  const auto row = binomial_row(n);
  const auto next = binomial_row(n + 1);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(m); ++r) {
    if (t_sum(row, m, r) != t_sum(row, m, nn - r)) return false;
    if (t_sum(next, m, r) != t_sum(row, m, r) + t_sum(row, m, r - 1)) return false;
  }
  return true;
}

BigInt delta5(std::int64_t r, std::uint64_t n) {
  const auto centre = static_cast<std::int64_t>(n % 2 == 1 ? (n - 1) / 2 : n / 2);
  return 5 * t_sum(binomial_row(n), 5, centre + r) - pow2(n);
}

BigInt delta5_quoted(std::int64_t r, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "quoted Delta_5 forms need n >= 1");
  const int sign = minus_one_pow(static_cast<std::int64_t>(n));
  switch (r) {
    case 0: return 2 * sign * lucas_number_exact(n);
    case 1: case -1: return sign * lucas_number_exact(n - 1);
    case 2: case -2: return -sign * lucas_number_exact(n + 1);
    default:
      throw Error(ErrorCode::OutOfRange, "Delta_5 closed forms cover r in {0,+-1,+-2}");
  }
}

BigInt fibonacci_exact(std::uint64_t n) {
  BigInt a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

BigInt lucas_number_exact(std::uint64_t n) {
  BigInt a = 2, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

}  // namespace binomcong
