#include "binomcong/lucas.hpp"

#include <bit>

#include "binomcong/error.hpp"

namespace binomcong {

LucasPair lucas_uv_mod(Residue P, Residue Q, std::uint64_t n) {
  const PrimeModulus pm = P.modulus();
  const Residue half = mod_inv(Residue(2, pm));
  const Residue disc = P * P - 4 * Q;

  // Invariant: (u, v, qn) = (U_k, V_k, Q^k), k = bits of n consumed so far.
  Residue u = Residue::zero(pm);
  Residue v = Residue(2, pm);
  Residue qn = Residue::one(pm);
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    u = u * v;
    v = v * v - 2 * qn;
    qn = qn * qn;
    if ((n >> bit) & 1U) {
      const Residue u1 = (P * u + v) * half;
      const Residue v1 = (disc * u + P * v) * half;
      u = u1;
      v = v1;
      qn = qn * Q;
    }
  }
  return LucasPair{u, v, n};
}

LucasPair lucas_uv_mod(const LucasParams& params, std::uint64_t n, PrimeModulus p) {
  return lucas_uv_mod(rational_residue(params.P, p), rational_residue(params.Q, p), n);
}

ExactLucasPair lucas_uv_exact(std::int64_t P, std::int64_t Q, std::uint64_t n) {
  if (n > kExactLucasMaxIndex) {
    throw Error(ErrorCode::IndexTooLarge,
                "exact Lucas index " + std::to_string(n) + " exceeds " +
                    std::to_string(kExactLucasMaxIndex));
  }
  BigInt u0 = 0, u1 = 1, v0 = 2, v1 = P;
  if (n == 0) return {u0, v0};
  for (std::uint64_t k = 1; k < n; ++k) {
    BigInt u2 = P * u1 - Q * u0;
    BigInt v2 = P * v1 - Q * v0;
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {u1, v1};
}

LucasPair fibonacci_lucas_mod(std::uint64_t n, PrimeModulus p) {
  return lucas_uv_mod(Residue(1, p), Residue(-1, p), n);
}

Residue lucas_u_next(const LucasPair& pair, Residue P) {
  return (P * pair.u + pair.v) / 2;
}

HalfIndexShift half_index_shift(const LucasPair& pair, const LucasParams& params) {
  const PrimeModulus pm = pair.u.modulus();
  const Residue P = rational_residue(params.P, pm);
  const Residue Q = rational_residue(params.Q, pm);
  if (Q.is_zero()) {
    throw Error(ErrorCode::DivisionByZero,
                "U_{n-1} needs p not dividing 2Q (p = " + std::to_string(pm.value()) + ")");
  }
  return HalfIndexShift{lucas_u_next(pair, P), (P * pair.u - pair.v) / (2 * Q)};
}

}  // namespace binomcong
