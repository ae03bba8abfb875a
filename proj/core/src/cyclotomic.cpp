#include "binomcong/cyclotomic.hpp"

#include <numeric>
#include <utility>
#include <vector>

#include "binomcong/error.hpp"

namespace binomcong {

namespace {

using u64 = std::uint64_t;

// Residue pairs modulo q with x^2 = tr * x - nm, i.e. x a root of
// X^2 - tr X + nm. Works for q = 2 as well, unlike Residue.
struct QuadRing {
  u64 q;
  u64 tr;
  u64 nm;

  using Elem = std::pair<u64, u64>;

  u64 red(std::int64_t v) const { return static_cast<u64>(floor_mod(v, static_cast<std::int64_t>(q))); }

  Elem mul(Elem x, Elem y) const {
    // (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2
    const u64 bd = x.second * y.second % q;
    const u64 c0 = (x.first * y.first + (q - bd) * nm) % q;
    const u64 c1 = (x.first * y.second + x.second * y.first + bd * tr) % q;
    return {c0, c1};
  }

  Elem pow(Elem x, u64 e) const {
    Elem r{1 % q, 0};
    while (e != 0) {
      if (e & 1U) r = mul(r, x);
      x = mul(x, x);
      e >>= 1U;
    }
    return r;
  }
};

u64 pow_mod(u64 b, u64 e, u64 q) {
  u64 r = 1 % q;
  b %= q;
  while (e != 0) {
    if (e & 1U) r = r * b % q;
    b = b * b % q;
    e >>= 1U;
  }
  return r;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    int e = 0;
    while (m % q == 0) m /= q, ++e;
    if (e > 0) out.emplace_back(q, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

// Exponent e with root^e == value among 0..order-1.
int discrete_exponent(u64 value, u64 root, int order, u64 q) {
  u64 acc = 1 % q;
  for (int e = 0; e < order; ++e, acc = acc * root % q) {
    if (acc == value) return e;
  }
  throw Error(ErrorCode::NotCoprime, "Euler power is not a root of unity mod " + std::to_string(q));
}

u64 least_cube_root_of_unity(u64 q) {
  for (u64 t = 2; t < q; ++t) {
    if ((t * t + t + 1) % q == 0) return t;
  }
  throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not split in Z[w]");
}

int eisenstein_at_root(EisensteinInt alpha, u64 t, u64 q) {
  const auto qi = static_cast<std::int64_t>(q);
  const u64 z = (static_cast<u64>(floor_mod(alpha.a, qi)) + static_cast<u64>(floor_mod(alpha.b, qi)) * t) % q;
  return discrete_exponent(pow_mod(z, (q - 1) / 3, q), t, 3, q);
}

int cubic_inert(EisensteinInt alpha, u64 q) {
  const QuadRing ring{q, q - 1, 1};  // w^2 = -w - 1
  const auto v = ring.pow({ring.red(alpha.a), ring.red(alpha.b)}, (q * q - 1) / 3);
  const QuadRing::Elem units[] = {{1 % q, 0}, {0, 1 % q}, {(q - 1) % q, (q - 1) % q}};
  for (int e = 0; e < 3; ++e) {
    if (v == units[e]) return e;
  }
  throw Error(ErrorCode::NotCoprime, "Euler power is not a cube root of unity mod " + std::to_string(q));
}

int cubic_prime(EisensteinInt alpha, u64 q) {
  if (q % 3 == 2) return cubic_inert(alpha, q);
  const u64 t = least_cube_root_of_unity(q);
  return (eisenstein_at_root(alpha, t, q) + eisenstein_at_root(alpha, q - 1 - t, q)) % 3;
}

void check_cubic_args(EisensteinInt alpha, std::int64_t m) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, "cubic symbol modulus must be positive");
  if (m % 3 == 0) throw Error(ErrorCode::ModulusDivisibleBy3, "m = " + std::to_string(m));
  if (std::gcd(alpha.norm(), m) != 1) {
    throw Error(ErrorCode::NotCoprime, "N(alpha) = " + std::to_string(alpha.norm()) +
                                           " shares a factor with " + std::to_string(m));
  }
}

int gaussian_at_root(GaussianInt alpha, u64 t, u64 p) {
  const auto pi = static_cast<std::int64_t>(p);
  const u64 z = (static_cast<u64>(floor_mod(alpha.re, pi)) + static_cast<u64>(floor_mod(alpha.im, pi)) * t) % p;
  return discrete_exponent(pow_mod(z, (p - 1) / 4, p), t, 4, p);
}

int quartic_inert(GaussianInt alpha, u64 p) {
  const QuadRing ring{p, 0, 1};  // i^2 = -1
  const auto v = ring.pow({ring.red(alpha.re), ring.red(alpha.im)}, (p * p - 1) / 4);
  const QuadRing::Elem units[] = {{1, 0}, {0, 1}, {p - 1, 0}, {0, p - 1}};
  for (int e = 0; e < 4; ++e) {
    if (v == units[e]) return e;
  }
  throw Error(ErrorCode::NotCoprime, "Euler power is not a fourth root of unity mod " + std::to_string(p));
}

void check_quartic_args(GaussianInt alpha, PrimeModulus p) {
  if (alpha.norm() % static_cast<std::int64_t>(p.value()) == 0) {
    throw Error(ErrorCode::NotCoprime, std::to_string(p.value()) + " divides N(alpha)");
  }
}

u64 least_sqrt_minus_one(PrimeModulus p) {
  const u64 t = sqrt_mod(Residue(-1, p))->value();
  return std::min(t, p.value() - t);
}

std::int64_t ord(std::int64_t n, std::int64_t q) {
  std::int64_t e = 0;
  while (n != 0 && n % q == 0) n /= q, ++e;
  return e;
}

}  // namespace

UnityRoot3 cubic_symbol(EisensteinInt alpha, std::int64_t m) {
  check_cubic_args(alpha, m);
  int e = 0;
  for (const auto& [q, k] : factorize(m)) e += k * cubic_prime(alpha, static_cast<u64>(q));
  return {e % 3};
}

UnityRoot3 cubic_character(EisensteinInt alpha, std::int64_t q) {
  check_cubic_args(alpha, q);
  if (!is_prime_trial(static_cast<u64>(q))) throw Error(ErrorCode::NotPrime, std::to_string(q));
  if (q % 3 == 2) return {cubic_inert(alpha, static_cast<u64>(q))};
  return {eisenstein_at_root(alpha, least_cube_root_of_unity(static_cast<u64>(q)), static_cast<u64>(q))};
}

UnityRoot4 quartic_symbol(GaussianInt alpha, PrimeModulus p) {
  check_quartic_args(alpha, p);
  const u64 q = p.value();
  if (q % 4 == 3) return {quartic_inert(alpha, q)};
  const u64 t = least_sqrt_minus_one(p);
  return {(gaussian_at_root(alpha, t, q) + gaussian_at_root(alpha, q - t, q)) % 4};
}

UnityRoot4 quartic_character(GaussianInt alpha, PrimeModulus p) {
  check_quartic_args(alpha, p);
  const u64 q = p.value();
  if (q % 4 == 3) return {quartic_inert(alpha, q)};
  return {gaussian_at_root(alpha, least_sqrt_minus_one(p), q)};
}

KFactor k_factor(std::int64_t u, std::int64_t v, std::int64_t d) {
  const std::int64_t diff = u * u - d * v * v;
  if (d == 0 || v == 0 || diff == 0 || std::gcd(u, v) != 1) {
    throw Error(ErrorCode::DegenerateInput, "k(" + std::to_string(u) + "," + std::to_string(v) + "," +
                                                std::to_string(d) + ") is undefined");
  }
  std::int64_t W = diff < 0 ? -diff : diff;
  const std::int64_t alpha = ord(W, 2);
  const std::int64_t r = ord(W, 3);
  while (W % 2 == 0) W /= 2;
  while (W % 3 == 0) W /= 3;
  std::int64_t w = 1;
  for (const auto& [q, k] : factorize(W)) w *= q;

  const std::int64_t d4 = floor_mod(d, 4);
  std::int64_t k2 = 1;
  if (d4 == 2 || d4 == 3) k2 = 2;
  else if (floor_mod(d, 8) == 1 && alpha > 0 && alpha % 3 != 2) k2 = 2;

  std::int64_t k3 = 1;
  if (r % 3 == 0 && u % 3 != 0) {
    k3 = 1;
    for (std::int64_t i = 0; i <= ord(v, 3); ++i) k3 *= 3;
  } else if (r % 3 != 0 && u % 3 != 0) {
    k3 = 9;
  } else if ((r - 2) % 3 != 0 && u % 3 == 0 && u % 9 != 0) {
    k3 = 3;
  }
  return {k2 * k3 * w / std::gcd(u, w), diff < 0};
}

}  // namespace binomcong
