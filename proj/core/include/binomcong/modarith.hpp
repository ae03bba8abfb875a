#pragma once

/// Arithmetic in the prime field Z/pZ: validated prime moduli, canonical
/// residues, rationals with p-free denominators, and the Jacobi symbol.
///
/// Moduli are restricted to odd primes below 2^32 so that every product of
/// two residues fits in 64 bits. This is far beyond the desk-scale ranges the
/// verifier sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace binomcong {

/// Mathematical modulo: result in [0, m) for m > 0.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// (-1)^e.
constexpr int minus_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

bool is_prime_trial(std::uint64_t n);

/// All primes <= limit in ascending order (plain sieve of Eratosthenes).
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

class PrimeSieve;

class PrimeModulus {
 public:
  /// Validates by trial division. Throws NotPrime for 2, composites and
  /// anything >= 2^32.
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  friend class PrimeSieve;
  struct Unchecked {};
  PrimeModulus(std::uint64_t p, Unchecked) noexcept : p_(p) {}

  std::uint64_t p_;
};

/// Sieve-backed primality context. Moduli handed out by `modulus()` skip the
/// trial-division check.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  bool is_prime(std::uint64_t n) const;
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  PrimeModulus modulus(std::uint64_t p) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint64_t> primes_;
};

class Residue {
 public:
  Residue(std::int64_t v, PrimeModulus p) noexcept;

  static Residue zero(PrimeModulus p) noexcept { return Residue(0, p); }
  static Residue one(PrimeModulus p) noexcept { return Residue(1, p); }

  std::uint64_t value() const noexcept { return v_; }
  PrimeModulus modulus() const noexcept { return p_; }
  std::uint64_t p() const noexcept { return p_.value(); }
  bool is_zero() const noexcept { return v_ == 0; }

  /// Representative in (-p/2, p/2], handy for reading off +-1.
  std::int64_t signed_value() const noexcept;

  Residue operator-() const noexcept;
  Residue& operator+=(Residue rhs);
  Residue& operator-=(Residue rhs);
  Residue& operator*=(Residue rhs);
  Residue& operator/=(Residue rhs);

  friend Residue operator+(Residue a, Residue b) { return a += b; }
  friend Residue operator-(Residue a, Residue b) { return a -= b; }
  friend Residue operator*(Residue a, Residue b) { return a *= b; }
  friend Residue operator/(Residue a, Residue b) { return a /= b; }
  friend Residue operator+(Residue a, std::int64_t b) { return a += Residue(b, a.p_); }
  friend Residue operator-(Residue a, std::int64_t b) { return a -= Residue(b, a.p_); }
  friend Residue operator*(Residue a, std::int64_t b) { return a *= Residue(b, a.p_); }
  friend Residue operator*(std::int64_t a, Residue b) { return b *= Residue(a, b.p_); }
  friend Residue operator/(Residue a, std::int64_t b) { return a /= Residue(b, a.p_); }

  friend bool operator==(Residue a, Residue b) noexcept { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator==(Residue a, std::int64_t b) noexcept {
    return a.v_ == static_cast<std::uint64_t>(floor_mod(b, static_cast<std::int64_t>(a.p())));
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint64_t v_;
  PrimeModulus p_;
};

class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  /// Accepts "n" or "n/d".
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// base^exp by binary exponentiation.
Residue mod_pow(Residue base, std::uint64_t exp) noexcept;
/// Signed exponent; negative exponents invert first (ZeroInverse on 0).
Residue mod_pow_signed(Residue base, std::int64_t exp);
/// Throws ZeroInverse when a == 0.
Residue mod_inv(Residue a);
/// Throws DenominatorDivisible when p | q.den.
Residue rational_residue(const Rational& q, PrimeModulus p);

/// Jacobi symbol (a/n) for odd n >= 1; (a/1) = 1. Throws EvenModulus.
int jacobi(std::int64_t a, std::int64_t n);
/// Legendre symbol of a residue: 0, 1 or -1.
int legendre(Residue a) noexcept;

/// Some square root of a (Tonelli-Shanks), or nullopt for non-residues.
std::optional<Residue> sqrt_mod(Residue a);

}  // namespace binomcong
