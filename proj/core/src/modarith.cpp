#include "binomcong/modarith.hpp"

#include <charconv>
#include <numeric>

#include "binomcong/error.hpp"

namespace binomcong {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
  if (!(a == b)) {
    throw Error(ErrorCode::InvalidArgument,
                "residues modulo " + std::to_string(a.value()) + " and " +
                    std::to_string(b.value()) + " mixed");
  }
}

}  // namespace

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  return PrimeSieve(limit).primes();
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= kMaxModulus || !is_prime_trial(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime below 2^32");
  }
}

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
  composite_[0] = true;
  if (limit >= 1) composite_[1] = true;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite_[i]) continue;
    primes_.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) return is_prime_trial(n);
  return !composite_[n];
}

PrimeModulus PrimeSieve::modulus(std::uint64_t p) const {
  if (p > limit_ || p < 3 || p >= kMaxModulus) return PrimeModulus(p);
  if (composite_[p]) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  return PrimeModulus(p, PrimeModulus::Unchecked{});
}

Residue::Residue(std::int64_t v, PrimeModulus p) noexcept
    : v_(static_cast<std::uint64_t>(floor_mod(v, static_cast<std::int64_t>(p.value())))), p_(p) {}

std::int64_t Residue::signed_value() const noexcept {
  const auto p = static_cast<std::int64_t>(p_.value());
  const auto v = static_cast<std::int64_t>(v_);
  return v > p / 2 ? v - p : v;
}

Residue Residue::operator-() const noexcept {
  Residue r = *this;
  r.v_ = v_ == 0 ? 0 : p_.value() - v_;
  return r;
}

Residue& Residue::operator+=(Residue rhs) {
  require_same_modulus(p_, rhs.p_);
  v_ += rhs.v_;
  if (v_ >= p_.value()) v_ -= p_.value();
  return *this;
}

Residue& Residue::operator-=(Residue rhs) {
  require_same_modulus(p_, rhs.p_);
  v_ = v_ >= rhs.v_ ? v_ - rhs.v_ : v_ + p_.value() - rhs.v_;
  return *this;
}

Residue& Residue::operator*=(Residue rhs) {
  require_same_modulus(p_, rhs.p_);
  v_ = (v_ * rhs.v_) % p_.value();
  return *this;
}

Residue& Residue::operator/=(Residue rhs) { return *this *= mod_inv(rhs); }

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::InvalidArgument, "cannot parse rational '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Residue mod_pow(Residue base, std::uint64_t exp) noexcept {
  Residue result = Residue::one(base.modulus());
  while (exp != 0) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

Residue mod_pow_signed(Residue base, std::int64_t exp) {
  if (exp >= 0) return mod_pow(base, static_cast<std::uint64_t>(exp));
  return mod_pow(mod_inv(base), static_cast<std::uint64_t>(-exp));
}

Residue mod_inv(Residue a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::ZeroInverse, "0 has no inverse modulo " + std::to_string(a.p()));
  }
  // Extended Euclid on (a, p).
  std::int64_t r0 = static_cast<std::int64_t>(a.p());
  std::int64_t r1 = static_cast<std::int64_t>(a.value());
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return Residue(t0, a.modulus());
}

Residue rational_residue(const Rational& q, PrimeModulus p) {
  const Residue den(q.den(), p);
  if (den.is_zero()) {
    throw Error(ErrorCode::DenominatorDivisible,
                std::to_string(p.value()) + " divides the denominator of " + q.to_string());
  }
  return Residue(q.num(), p) / den;
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) {
    throw Error(ErrorCode::EvenModulus, "Jacobi symbol needs an odd positive modulus, got " +
                                            std::to_string(n));
  }
  std::int64_t top = floor_mod(a, n);
  std::int64_t bottom = n;
  int sign = 1;
  while (top != 0) {
    while (top % 2 == 0) {
      top /= 2;
      const std::int64_t r = bottom % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(top, bottom);
    if (top % 4 == 3 && bottom % 4 == 3) sign = -sign;
    top %= bottom;
  }
  return bottom == 1 ? sign : 0;
}

int legendre(Residue a) noexcept {
  if (a.is_zero()) return 0;
  return mod_pow(a, (a.p() - 1) / 2) == 1 ? 1 : -1;
}

std::optional<Residue> sqrt_mod(Residue a) {
  const PrimeModulus pm = a.modulus();
  const std::uint64_t p = pm.value();
  if (a.is_zero()) return a;
  if (legendre(a) != 1) return std::nullopt;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4);

  // Tonelli-Shanks with p - 1 = q * 2^s.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Residue z(2, pm);
  while (legendre(z) != -1) z += Residue::one(pm);

  Residue c = mod_pow(z, q);
  Residue x = mod_pow(a, (q + 1) / 2);
  Residue t = mod_pow(a, q);
  unsigned m = s;
  while (!(t == 1)) {
    unsigned i = 0;
    Residue t2 = t;
    while (!(t2 == 1)) {
      t2 *= t2;
      ++i;
    }
    Residue b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    x *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return x;
}

}  // namespace binomcong
