#include "binomcong/binomsum.hpp"

#include "binomcong/error.hpp"

namespace binomcong {

Residue binom_mod(std::uint64_t n, std::uint64_t k, PrimeModulus p) {
  if (k > n || n >= p.value()) {
    throw Error(ErrorCode::OutOfRange, "binom_mod needs 0 <= k <= n < p, got n=" +
                                           std::to_string(n) + " k=" + std::to_string(k) +
                                           " p=" + std::to_string(p.value()));
  }
  if (k > n - k) k = n - k;
  Residue num = Residue::one(p);
  Residue den = Residue::one(p);
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= Residue(static_cast<std::int64_t>(n - i), p);
    den *= Residue(static_cast<std::int64_t>(i + 1), p);
  }
  return num / den;
}

Residue binom_mod_general(std::uint64_t n, std::uint64_t k, PrimeModulus p) {
  const std::uint64_t base = p.value();
  Residue result = Residue::one(p);
  while (n != 0 || k != 0) {
    const std::uint64_t nd = n % base;
    const std::uint64_t kd = k % base;
    if (kd > nd) return Residue::zero(p);
    result *= binom_mod(nd, kd, p);
    n /= base;
    k /= base;
  }
  return result;
}

std::vector<Residue> binom_coefficients(std::uint64_t a, std::uint64_t b, std::uint64_t upper,
                                        PrimeModulus p) {
  if (b > a || a == 0 || a * upper >= p.value()) {
    throw Error(ErrorCode::OutOfRange, "binomial sum needs b <= a and a*upper < p (a=" +
                                           std::to_string(a) + " b=" + std::to_string(b) +
                                           " upper=" + std::to_string(upper) +
                                           " p=" + std::to_string(p.value()) + ")");
  }
  const std::uint64_t c = a - b;
  // C(ak, bk) = C(a(k-1), b(k-1)) * num_k / den_k where num_k runs over the
  // new factors of (ak)! and den_k over those of (bk)! (ck)!.
  std::vector<Residue> num_prefix(upper + 1, Residue::one(p));
  std::vector<Residue> den_step(upper + 1, Residue::one(p));
  std::vector<Residue> den_prefix(upper + 1, Residue::one(p));
  for (std::uint64_t k = 1; k <= upper; ++k) {
    Residue num = Residue::one(p);
    for (std::uint64_t j = a * (k - 1) + 1; j <= a * k; ++j) num *= Residue(static_cast<std::int64_t>(j), p);
    Residue den = Residue::one(p);
    for (std::uint64_t j = b * (k - 1) + 1; j <= b * k; ++j) den *= Residue(static_cast<std::int64_t>(j), p);
    for (std::uint64_t j = c * (k - 1) + 1; j <= c * k; ++j) den *= Residue(static_cast<std::int64_t>(j), p);
    num_prefix[k] = num_prefix[k - 1] * num;
    den_step[k] = den;
    den_prefix[k] = den_prefix[k - 1] * den;
  }
  // Single inversion, then peel the prefix products back off.
  std::vector<Residue> coeffs(upper + 1, Residue::one(p));
  Residue inv = mod_inv(den_prefix[upper]);
  for (std::uint64_t k = upper; k >= 1; --k) {
    coeffs[k] = num_prefix[k] * inv;
    inv *= den_step[k];
  }
  return coeffs;
}

Residue weighted_sum(const std::vector<Residue>& coeffs, Residue ratio) {
  Residue sum = Residue::zero(ratio.modulus());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * ratio + *it;
  return sum;
}

Residue sum_binom_pow(std::uint64_t a, std::uint64_t b, Residue ratio, std::uint64_t upper) {
  return weighted_sum(binom_coefficients(a, b, upper, ratio.modulus()), ratio);
}

Residue sum_binom_pow(const BinomSumSpec& spec, PrimeModulus p) {
  return sum_binom_pow(spec.a, spec.b, rational_residue(spec.m, p), spec.upper);
}

namespace {

class FactorialTable {
 public:
  explicit FactorialTable(PrimeModulus p) : fact_(p.value(), Residue::one(p)), inv_fact_(fact_) {
    const std::uint64_t n = p.value();
    for (std::uint64_t i = 1; i < n; ++i) fact_[i] = fact_[i - 1] * Residue(static_cast<std::int64_t>(i), p);
    inv_fact_[n - 1] = mod_inv(fact_[n - 1]);
    for (std::uint64_t i = n - 1; i >= 1; --i) inv_fact_[i - 1] = inv_fact_[i] * Residue(static_cast<std::int64_t>(i), p);
  }

  Residue binom(std::uint64_t n, std::uint64_t k) const { return fact_[n] * inv_fact_[k] * inv_fact_[n - k]; }

 private:
  std::vector<Residue> fact_;
  std::vector<Residue> inv_fact_;
};

}  // namespace

ShiftLemmaVerdict binom_shift_lemma_check(ShiftLemma which, PrimeModulus p) {
  const std::uint64_t n = p.value();
  std::uint64_t base = 0;
  std::uint64_t mult = 0;
  std::int64_t denom = 0;
  switch (which) {
    case ShiftLemma::QuarterShift:
      base = n / 4, mult = 4, denom = -64;
      break;
    case ShiftLemma::HalfBinomial:
      base = (n - 1) / 2, mult = 2, denom = -4;
      break;
    case ShiftLemma::ThirdShift:
      if (n <= 3) throw Error(ErrorCode::OutOfRange, "third-shift congruence needs p > 3");
      base = n / 3, mult = 3, denom = -27;
      break;
  }
  const FactorialTable table(p);
  const Residue inv_denom = mod_inv(Residue(denom, p));
  Residue scale = Residue::one(p);
  ShiftLemmaVerdict verdict;
  for (std::uint64_t k = 1; k <= base; ++k) {
    scale *= inv_denom;
    const Residue lhs = which == ShiftLemma::HalfBinomial ? table.binom(base, k)
                                                           : table.binom(base + k, base - k);
    const std::uint64_t top = mult * k;
    const std::uint64_t bottom = which == ShiftLemma::ThirdShift ? k : top / 2;
    const Residue rhs = table.binom(top, bottom) * scale;
    if (!(lhs == rhs)) return ShiftLemmaVerdict{false, k};
  }
  return verdict;
}

}  // namespace binomcong
