#pragma once

// Gaussian integers a+bi, Eisenstein integers a+bw (w^2+w+1 = 0), cubic and
// quartic residue symbols with rational moduli, and the k(u,v,d) factor.
//
// At a split prime q the symbol is the product of the characters at both
// conjugate prime ideals above q; at an inert prime it is the Euler power in
// the residue field of order q^2. cubic_character / quartic_character give a
// single ideal's character instead.

#include <cstdint>
#include <string>

#include "binomcong/modarith.hpp"

namespace binomcong {

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  std::int64_t norm() const noexcept { return re * re + im * im; }
  friend GaussianInt operator*(GaussianInt x, GaussianInt y) noexcept {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

struct EisensteinInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t norm() const noexcept { return a * a - a * b + b * b; }
  friend EisensteinInt operator*(EisensteinInt x, EisensteinInt y) noexcept {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

/// w^exponent, exponent in 0..2.
struct UnityRoot3 {
  int exponent = 0;

  friend UnityRoot3 operator*(UnityRoot3 x, UnityRoot3 y) noexcept { return {(x.exponent + y.exponent) % 3}; }
  friend bool operator==(UnityRoot3, UnityRoot3) = default;
  std::string to_string() const { return "w^" + std::to_string(exponent); }
};

/// i^exponent, exponent in 0..3.
struct UnityRoot4 {
  int exponent = 0;

  friend UnityRoot4 operator*(UnityRoot4 x, UnityRoot4 y) noexcept { return {(x.exponent + y.exponent) % 4}; }
  friend bool operator==(UnityRoot4, UnityRoot4) = default;
  std::string to_string() const { return "i^" + std::to_string(exponent); }
};

/// Cubic Jacobi symbol (alpha/m)_3 for m >= 1. ModulusDivisibleBy3 when 3 | m,
/// NotCoprime when gcd(N(alpha), m) > 1.
UnityRoot3 cubic_symbol(EisensteinInt alpha, std::int64_t m);

/// Character at the ideal (q, w - t), t the least root of t^2+t+1 mod q, for a
/// prime q = 1 (mod 3). For q = 2 (mod 3) this equals cubic_symbol.
UnityRoot3 cubic_character(EisensteinInt alpha, std::int64_t q);

/// Quartic symbol (alpha/p)_4 for an odd prime p. NotCoprime when p | N(alpha).
UnityRoot4 quartic_symbol(GaussianInt alpha, PrimeModulus p);

/// Character at the ideal (p, i - t), t the least square root of -1 mod p, for
/// p = 1 (mod 4). For p = 3 (mod 4) this equals quartic_symbol.
UnityRoot4 quartic_character(GaussianInt alpha, PrimeModulus p);

struct KFactor {
  std::int64_t value;
  bool absolute_value_used;  // u^2 - d v^2 was negative
};

/// k(u,v,d) = k2 k3 w / gcd(u,w), factoring |u^2 - d v^2| = 2^alpha 3^r W.
/// DegenerateInput unless d v (u^2 - d v^2) != 0 and gcd(u,v) = 1.
KFactor k_factor(std::int64_t u, std::int64_t v, std::int64_t d);

}  // namespace binomcong
