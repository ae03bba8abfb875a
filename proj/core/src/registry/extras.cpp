#include <map>

#include "binomcong/binomsum.hpp"
#include "binomcong/error.hpp"
#include "binomcong/registry.hpp"

namespace binomcong {

std::vector<std::uint64_t> cubic_roots(std::int64_t c3, std::int64_t c1, std::int64_t c0, PrimeModulus p) {
  if (p.value() <= 3) throw Error(ErrorCode::InvalidArgument, "cubic_roots needs p > 3");
  const Residue a(c3, p), b(c1, p), c(c0, p);
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < p.value(); ++x) {
    const Residue r(static_cast<std::int64_t>(x), p);
    if (((a * r * r + b) * r + c).is_zero()) roots.push_back(x);
  }
  return roots;
}

DeltaPair delta_p(std::int64_t b, std::int64_t m, PrimeModulus p) {
  const auto ip = static_cast<std::int64_t>(p.value());
  const std::int64_t D = b * b + 4 * m * m;
  if (b % ip == 0 || m % ip == 0 || D % ip == 0) {
    throw Error(ErrorCode::NotCoprime, "p divides b m (b^2+4m^2)");
  }
  const Residue rb(b, p), rm(m, p), rD(D, p);
  const std::uint64_t q4 = p.value() / 4;
  const Residue L1 = Residue(jacobi(b, ip), p) * sum_binom_pow(4, 2, -(rm * rm) / (rb * rb * 4), q4);
  const Residue L2 = Residue(jacobi(m, ip), p) * sum_binom_pow(4, 2, -(rb * rb) / (rm * rm * 64), q4);

  const int jd = jacobi(D, ip);
  const bool one_mod_4 = p.value() % 4 == 1;
  Residue c1 = Residue::zero(p), c2 = Residue::zero(p);
  if (one_mod_4 && jd == 1) {
    c1 = c2 = mod_pow(rD, (p.value() - 1) / 4);
  } else if (!one_mod_4) {
    const Residue unit = mod_pow(rD, (p.value() - 3) / 4);
    c1 = (jd == 1 ? rb : rm * 2) * unit;
    c2 = (jd == 1 ? rm * 2 : -rb) * unit;
  }

  DeltaPair out;
  out.vanishing_branch = one_mod_4 && jd == -1;
  if (!(c1.is_zero() && c2.is_zero())) {
    std::vector<int> fits;
    for (int s : {1, -1}) {
      if (L1 == c1 * s && L2 == c2 * s) fits.push_back(s);
    }
    if (fits.size() == 1) out.congruence = DeltaP{fits[0], Derivation::FromCongruence};
  }
  UnityRoot4 q = quartic_symbol(GaussianInt{b, 2 * m}, p);
  if (jd == -1) q = q * UnityRoot4{1};
  out.quartic_value = q;
  if (q.exponent % 2 == 0) out.quartic = DeltaP{q.exponent == 0 ? 1 : -1, Derivation::FromQuarticSymbol};
  return out;
}

PeriodicityReport delta_periodicity_check(std::int64_t b, std::int64_t m, std::uint64_t limit) {
  const std::int64_t D = b * b + 4 * m * m;
  const std::int64_t M = (b % 2 == 0 ? 2 : 4) * D;
  PeriodicityReport report;
  // Primes grouped by p mod M up to sign.
  std::map<std::int64_t, std::vector<std::pair<std::uint64_t, UnityRoot4>>> groups;
  for (const auto p : sieve_primes(limit)) {
    const auto ip = static_cast<std::int64_t>(p);
    if (p == 2 || b % ip == 0 || m % ip == 0 || D % ip == 0) continue;
    const std::int64_t r = floor_mod(ip, M);
    groups[std::min(r, M - r)].emplace_back(p, delta_p(b, m, PrimeModulus(p)).quartic_value);
  }
  for (const auto& [key, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++report.pairs_checked;
        if (!(members[i].second == members[j].second)) report.violations.emplace_back(members[i].first, members[j].first);
      }
    }
  }
  return report;
}

}  // namespace binomcong
