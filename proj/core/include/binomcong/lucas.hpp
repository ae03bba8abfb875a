#pragma once

// Lucas sequences U_n(P,Q), V_n(P,Q):
//   U_0 = 0, U_1 = 1, V_0 = 2, V_1 = P, X_{n+1} = P X_n - Q X_{n-1}.

#include <cstdint>

#include "binomcong/bigint.hpp"
#include "binomcong/modarith.hpp"

namespace binomcong {

struct LucasParams {
  Rational P;
  Rational Q;
};

struct LucasPair {
  Residue u;
  Residue v;
  std::uint64_t n;
};

struct ExactLucasPair {
  BigInt u;
  BigInt v;
};

inline constexpr std::uint64_t kExactLucasMaxIndex = 500;

/// (U_n, V_n) mod p by fast doubling, O(log n). Throws DenominatorDivisible.
LucasPair lucas_uv_mod(const LucasParams& params, std::uint64_t n, PrimeModulus p);
/// Same, with P and Q already reduced.
LucasPair lucas_uv_mod(Residue P, Residue Q, std::uint64_t n);

/// Exact values by iterating the recurrence; n <= 500 or IndexTooLarge.
ExactLucasPair lucas_uv_exact(std::int64_t P, std::int64_t Q, std::uint64_t n);

/// F_n and L_n mod p.
LucasPair fibonacci_lucas_mod(std::uint64_t n, PrimeModulus p);

struct HalfIndexShift {
  Residue next;      // U_{n+1} = (P U_n + V_n) / 2
  Residue previous;  // U_{n-1} = (P U_n - V_n) / (2Q)
};

/// Neighbouring U values from (U_n, V_n). Throws DivisionByZero when p | Q.
HalfIndexShift half_index_shift(const LucasPair& pair, const LucasParams& params);

/// U_{n+1} alone; defined for every Q.
Residue lucas_u_next(const LucasPair& pair, Residue P);

}  // namespace binomcong
