#pragma once

// Machine-checkable statements and the verification engine.
//
// A statement is a prime filter, an optional parameter sampler and a list of
// parts. Each part has its own applicability test, a left-hand side and a
// table of case rows; exactly one row must fire wherever the part applies.
// Modular parts compare both sides mod p, exact parts compare integers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "binomcong/bigint.hpp"
#include "binomcong/cyclotomic.hpp"
#include "binomcong/modarith.hpp"
#include "binomcong/qform.hpp"

namespace binomcong {

enum class Status { Verified, Disputed };
enum class Outcome { Pass, Fail, NotApplicable };

std::string_view to_string(Status s) noexcept;
std::string_view to_string(Outcome o) noexcept;

using Params = std::vector<std::pair<std::string, Rational>>;

/// "a=1/2 b=3"; empty string for no parameters.
std::string to_string(const Params& params);

/// Per-prime memo shared by every parameter tuple checked at that prime.
class PrimeCache {
 public:
  explicit PrimeCache(PrimeModulus p) : p_(p) {}

  const std::vector<Residue>& binom_table(std::uint64_t a, std::uint64_t b, std::uint64_t upper);
  const std::vector<Representation>& reps(const QuadForm& f);

 private:
  PrimeModulus p_;
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::vector<Residue>> tables_;
  std::map<QuadForm, std::vector<Representation>> reps_;
};

/// Evaluation context for one (prime, parameter tuple).
class Env {
 public:
  Env(PrimeModulus p, const Params& params, PrimeCache& cache) : p_(p), params_(params), cache_(cache) {}

  PrimeModulus modulus() const noexcept { return p_; }
  std::uint64_t p() const noexcept { return p_.value(); }
  std::int64_t ip() const noexcept { return static_cast<std::int64_t>(p_.value()); }
  const Params& params() const noexcept { return params_; }

  Rational param(std::string_view name) const;
  std::int64_t int_param(std::string_view name) const;
  /// Parameter reduced mod p.
  Residue res(std::string_view name) const;
  Residue r(std::int64_t v) const { return Residue(v, p_); }
  Residue r(const Rational& q) const { return rational_residue(q, p_); }

  /// sum_{k=0}^{upper} C(ak, bk) ratio^k.
  Residue sum(std::uint64_t a, std::uint64_t b, Residue ratio, std::uint64_t upper);
  const std::vector<Representation>& reps(const QuadForm& f) { return cache_.reps(f); }

  void witness(std::string text) {
    if (std::find(witnesses_.begin(), witnesses_.end(), text) == witnesses_.end()) witnesses_.push_back(std::move(text));
  }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  PrimeModulus p_;
  const Params& params_;
  PrimeCache& cache_;
  std::vector<std::string> witnesses_;
};

struct Row {
  std::string label;
  std::function<bool(Env&)> fires;
  std::function<BigInt(Env&)> value;
};

struct Part {
  std::string label;
  bool exact = false;
  std::function<bool(Env&)> applies;  // empty: always
  std::function<BigInt(Env&)> lhs;
  std::vector<Row> rows;
};

using Rng = std::mt19937_64;

struct Sampler {
  std::size_t tuples = 20;
  /// Draws tuple number `index` at prime p. Rejected draws are retried.
  std::function<Params(Rng&, std::uint64_t p, std::size_t index)> draw;
};

struct Statement {
  std::string id;
  std::string title;
  Status status = Status::Verified;
  std::string notes;
  std::function<bool(std::uint64_t p)> applies;
  std::optional<Sampler> sampler;
  /// Tuple-level hypotheses, checked after every denominator is known to be
  /// prime to p.
  std::function<bool(Env&)> tuple_ok;
  std::vector<Part> parts;
};

struct PartResult {
  std::string part;
  std::string lhs;
  std::string row;
  std::string rhs;
  bool ok = false;
};

struct Verdict {
  std::string id;
  std::uint64_t prime = 0;
  Params params;
  Outcome outcome = Outcome::NotApplicable;
  std::vector<PartResult> parts;
  std::vector<std::string> witnesses;
};

struct FailureRecord {
  std::uint64_t prime = 0;
  std::string params;
  std::string lhs;
  std::string row;
  std::string rhs;
  std::vector<std::string> witnesses;

  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct Report {
  std::string id;
  std::uint64_t prime_limit = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t not_applicable = 0;
  std::vector<FailureRecord> failures;
  std::string status;  // "verified" or "disputed"

  friend bool operator==(const Report&, const Report&) = default;
};

struct VerifyOptions {
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  bool fail_fast = false;
};

/// Every registered statement, in document order.
const std::vector<Statement>& statements();

/// UnknownId if absent.
const Statement& find_statement(std::string_view id);

/// One prime. With empty `params` a parameterized statement uses its first
/// seeded tuple.
Verdict check_statement(std::string_view id, std::uint64_t p, const Params& params = {},
                        std::uint64_t seed = VerifyOptions{}.seed);

/// All odd primes p <= prime_limit (prime_limit >= 5). The report is sorted by
/// prime and independent of opts.jobs.
Report verify_range(std::string_view id, std::uint64_t prime_limit, const VerifyOptions& opts = {});

/// Roots of c3 x^3 + c1 x + c0 mod p by exhaustive scan, ascending. p > 3.
std::vector<std::uint64_t> cubic_roots(std::int64_t c3, std::int64_t c1, std::int64_t c0, PrimeModulus p);

enum class Derivation { FromCongruence, FromQuarticSymbol };

struct DeltaP {
  int sign;  // +1 or -1
  Derivation derivation;
};

struct DeltaPair {
  std::optional<DeltaP> congruence;  // empty when both sides vanish or no sign fits
  std::optional<DeltaP> quartic;     // empty when the formula is not real
  UnityRoot4 quartic_value;          // the formula's value before reading off a sign
  bool vanishing_branch = false;     // p = 1 (mod 4) and ((b^2+4m^2)/p) = -1
};

/// The sign attached to p in the two sums over C(4k,2k) with ratios
/// -m^2/(4b^2) and -b^2/(64m^2). NotCoprime when p | bm(b^2+4m^2).
DeltaPair delta_p(std::int64_t b, std::int64_t m, PrimeModulus p);

struct PeriodicityReport {
  std::uint64_t pairs_checked = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;
};

/// delta_p = delta_p' whenever p' = +-p mod (3-(-1)^b)(b^2+4m^2), over all
/// admissible odd primes up to limit, using the quartic-symbol derivation.
PeriodicityReport delta_periodicity_check(std::int64_t b, std::int64_t m, std::uint64_t limit);

}  // namespace binomcong
