#pragma once

/// Binomial coefficients modulo a prime and truncated sums
/// sum_{k=0}^{upper} C(a k, b k) m^k (mod p).

#include <cstdint>
#include <vector>

#include "binomcong/modarith.hpp"

namespace binomcong {

struct BinomSumSpec {
  std::uint64_t a;  // row multiplier
  std::uint64_t b;  // column multiplier, b <= a
  Rational m;       // geometric ratio
  std::uint64_t upper;
};

/// C(n, k) mod p for 0 <= k <= n < p; OutOfRange otherwise.
Residue binom_mod(std::uint64_t n, std::uint64_t k, PrimeModulus p);

/// C(n, k) mod p for any n, via the base-p digit product. Zero when k > n.
Residue binom_mod_general(std::uint64_t n, std::uint64_t k, PrimeModulus p);

/// C(a k, b k) mod p for k = 0..upper, built incrementally with one batched
/// inversion. Requires b <= a and a * upper < p.
std::vector<Residue> binom_coefficients(std::uint64_t a, std::uint64_t b, std::uint64_t upper,
                                        PrimeModulus p);

/// sum_k coeffs[k] * ratio^k.
Residue weighted_sum(const std::vector<Residue>& coeffs, Residue ratio);

Residue sum_binom_pow(const BinomSumSpec& spec, PrimeModulus p);
/// Variant with the ratio already reduced mod p.
Residue sum_binom_pow(std::uint64_t a, std::uint64_t b, Residue ratio, std::uint64_t upper);

enum class ShiftLemma {
  QuarterShift,  // C([p/4]+k, [p/4]-k) = C(4k,2k) / (-64)^k, 1 <= k <= [p/4]
  HalfBinomial,  // C((p-1)/2, k) = C(2k,k) / (-4)^k, 1 <= k <= (p-1)/2
  ThirdShift,    // C([p/3]+k, [p/3]-k) = C(3k,k) / (-27)^k, 1 <= k <= [p/3]
};

struct ShiftLemmaVerdict {
  bool pass = true;
  std::uint64_t first_bad_k = 0;  // meaningful only when !pass
};

/// Checks the congruence for every k in range by evaluating both sides from a
/// factorial table. ThirdShift needs p > 3.
ShiftLemmaVerdict binom_shift_lemma_check(ShiftLemma which, PrimeModulus p);

}  // namespace binomcong
