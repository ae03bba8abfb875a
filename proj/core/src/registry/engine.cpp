#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <thread>

#include "support.hpp"

namespace binomcong {

std::string_view to_string(Status s) noexcept { return s == Status::Verified ? "verified" : "disputed"; }

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::NotApplicable: return "n/a";
  }
  return "?";
}

std::string to_string(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ' ';
    out += name + "=" + value.to_string();
  }
  return out;
}

const std::vector<Residue>& PrimeCache::binom_table(std::uint64_t a, std::uint64_t b, std::uint64_t upper) {
  const auto key = std::make_tuple(a, b, upper);
  auto it = tables_.find(key);
  if (it == tables_.end()) it = tables_.emplace(key, binom_coefficients(a, b, upper, p_)).first;
  return it->second;
}

const std::vector<Representation>& PrimeCache::reps(const QuadForm& f) {
  auto it = reps_.find(f);
  if (it == reps_.end()) it = reps_.emplace(f, represent(f, static_cast<std::int64_t>(p_.value()))).first;
  return it->second;
}

Rational Env::param(std::string_view name) const {
  for (const auto& [n, v] : params_) {
    if (n == name) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "missing parameter " + std::string(name));
}

std::int64_t Env::int_param(std::string_view name) const {
  const Rational q = param(name);
  if (!q.is_integer()) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be an integer");
  return q.num();
}

Residue Env::res(std::string_view name) const { return rational_residue(param(name), p_); }

Residue Env::sum(std::uint64_t a, std::uint64_t b, Residue ratio, std::uint64_t upper) {
  return weighted_sum(cache_.binom_table(a, b, upper), ratio);
}

namespace detail {

std::string describe(const Representation& r) {
  return r.form.to_string() + "(" + std::to_string(r.x) + "," + std::to_string(r.y) + ")";
}

Residue agreed_value(Env& e, const std::vector<Representation>& reps,
                     const std::function<bool(const Representation&)>& keep,
                     const std::function<Residue(const Representation&)>& f) {
  std::optional<Residue> value;
  std::string used;
  for (const auto& r : reps) {
    if (!keep(r)) continue;
    const Residue v = f(r);
    used += (used.empty() ? "" : " ") + describe(r);
    if (value && !(*value == v)) {
      throw Error(ErrorCode::RowValueUndefined, "representations disagree: " + value->to_string() + " vs " +
                                                    v.to_string() + " at " + describe(r));
    }
    value = v;
  }
  if (!value) throw Error(ErrorCode::RowValueUndefined, "no admissible representation");
  e.witness("representations " + used);
  return *value;
}

std::pair<std::size_t, QuadForm> classify(Env& e, std::int64_t D, const std::vector<FormCase>& cases) {
  std::vector<QuadForm> flat;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    for (const auto& f : cases[i].forms) {
      flat.push_back(f);
      owner.push_back(i);
    }
  }
  try {
    const auto c = classify_by_class(e.ip(), D, flat);
    return {owner[c.index], flat[c.index]};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NoneRepresents || err.code() == ErrorCode::MultipleClassesRepresent) {
      throw Error(ErrorCode::RowDispatchViolation, err.what());
    }
    throw;
  }
}

std::vector<Row> form_rows(std::int64_t D, std::vector<FormCase> cases) {
  auto shared = std::make_shared<const std::vector<FormCase>>(std::move(cases));
  std::vector<Row> rows;
  for (std::size_t i = 0; i < shared->size(); ++i) {
    std::string label = (*shared)[i].label;
    rows.push_back(Row{
        std::move(label),
        [shared, D, i](Env& e) { return classify(e, D, *shared).first == i; },
        [shared, D, i](Env& e) {
          const QuadForm f = classify(e, D, *shared).second;
          const FormCase& fc = (*shared)[i];
          const auto& reps = e.reps(f);
          if (!fc.value) {
            agreed_value(e, reps, [](const Representation&) { return true; }, [&](const Representation&) {
              return e.r(fc.fixed);
            });
            return BigInt(e.r(fc.fixed).value());
          }
          const Residue v = agreed_value(
              e, reps, [&](const Representation& r) { return r.y % e.ip() != 0; },
              [&](const Representation& r) { return fc.value(e, r); });
          return BigInt(v.value());
        }});
  }
  return rows;
}

std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
  const std::int64_t n = random_int(rng, -num_bound, num_bound);
  const std::int64_t d = random_int(rng, 1, den_bound);
  return Rational(n, d);
}

Sampler rational_sampler(std::vector<std::string> names) {
  return Sampler{20, [names = std::move(names)](Rng& rng, std::uint64_t, std::size_t) {
                   Params out;
                   for (const auto& n : names) out.emplace_back(n, random_rational(rng));
                   return out;
                 }};
}

Sampler integer_sampler(std::vector<std::string> names, std::int64_t lo, std::int64_t hi) {
  return Sampler{20, [names = std::move(names), lo, hi](Rng& rng, std::uint64_t, std::size_t) {
                   Params out;
                   for (const auto& n : names) out.emplace_back(n, Rational(random_int(rng, lo, hi)));
                   return out;
                 }};
}

}  // namespace detail

namespace {

std::vector<Statement> build_statements() {
  std::vector<Statement> out;
  detail::add_intro_statements(out);
  detail::add_section2_statements(out);
  detail::add_section3_statements(out);
  detail::add_section4_statements(out);
  return out;
}

std::string render(const BigInt& v, bool exact, std::uint64_t p) {
  return exact ? to_string(v) : std::to_string(big_mod(v, p));
}

PartResult run_part(const Part& part, Env& e) {
  PartResult r{part.label, "", "", "", false};
  try {
    const BigInt lhs = part.lhs(e);
    r.lhs = render(lhs, part.exact, e.p());
    const Row* fired = nullptr;
    std::string names;
    int count = 0;
    for (const auto& row : part.rows) {
      if (row.fires(e)) {
        fired = &row;
        names += (count++ ? ", " : "") + row.label;
      }
    }
    if (count != 1) {
      throw Error(ErrorCode::RowDispatchViolation,
                  count == 0 ? "no case row fires" : std::to_string(count) + " rows fire: " + names);
    }
    r.row = fired->label;
    const BigInt rhs = fired->value(e);
    r.rhs = render(rhs, part.exact, e.p());
    r.ok = part.exact ? lhs == rhs : big_mod(lhs - rhs, e.p()) == 0;
  } catch (const Error& err) {
    if (r.row.empty()) r.row = std::string(to_string(err.code()));
    r.rhs = err.what();
    r.ok = false;
  }
  return r;
}

bool denominators_ok(const Params& params, std::uint64_t p) {
  return std::all_of(params.begin(), params.end(),
                     [p](const auto& kv) { return kv.second.den() % static_cast<std::int64_t>(p) != 0; });
}

Verdict evaluate(const Statement& s, PrimeModulus pm, const Params& params, PrimeCache& cache) {
  Verdict v{s.id, pm.value(), params, Outcome::NotApplicable, {}, {}};
  if (!s.applies(pm.value()) || !denominators_ok(params, pm.value())) return v;
  Env env(pm, params, cache);
  if (s.tuple_ok && !s.tuple_ok(env)) return v;
  bool any = false;
  bool ok = true;
  for (const auto& part : s.parts) {
    bool applies = true;
    try {
      applies = !part.applies || part.applies(env);
    } catch (const Error& err) {
      v.parts.push_back(PartResult{part.label, "", std::string(to_string(err.code())), err.what(), false});
      any = true;
      ok = false;
      continue;
    }
    if (!applies) continue;
    any = true;
    v.parts.push_back(run_part(part, env));
    ok = ok && v.parts.back().ok;
  }
  v.witnesses = env.witnesses();
  if (any) v.outcome = ok ? Outcome::Pass : Outcome::Fail;
  return v;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng prime_rng(std::string_view id, std::uint64_t p, std::uint64_t seed) {
  return Rng(splitmix64(seed ^ fnv1a(id) ^ splitmix64(p)));
}

constexpr int kDrawAttempts = 64;

// Draws tuple `index`, retrying rejected draws. Empty if none is admissible.
std::optional<Params> draw_tuple(const Statement& s, PrimeModulus pm, PrimeCache& cache, Rng& rng,
                                 std::size_t index) {
  for (int attempt = 0; attempt < kDrawAttempts; ++attempt) {
    Params params = s.sampler->draw(rng, pm.value(), index);
    if (!denominators_ok(params, pm.value())) continue;
    Env env(pm, params, cache);
    if (s.tuple_ok && !s.tuple_ok(env)) continue;
    return params;
  }
  return std::nullopt;
}

struct PrimeTally {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t not_applicable = 0;
  std::vector<FailureRecord> failures;
};

void tally(PrimeTally& t, const Verdict& v) {
  switch (v.outcome) {
    case Outcome::NotApplicable: ++t.not_applicable; return;
    case Outcome::Pass: ++t.checked, ++t.passed; return;
    case Outcome::Fail: break;
  }
  ++t.checked;
  ++t.failed;
  for (const auto& pr : v.parts) {
    if (pr.ok) continue;
    t.failures.push_back(FailureRecord{v.prime, to_string(v.params), pr.lhs, pr.part + ": " + pr.row, pr.rhs,
                                       v.witnesses});
    break;
  }
}

PrimeTally run_prime(const Statement& s, const PrimeSieve& sieve, std::uint64_t p, std::uint64_t seed) {
  PrimeTally t;
  if (!s.applies(p)) {
    ++t.not_applicable;
    return t;
  }
  const PrimeModulus pm = sieve.modulus(p);
  PrimeCache cache(pm);
  if (!s.sampler) {
    tally(t, evaluate(s, pm, {}, cache));
    return t;
  }
  Rng rng = prime_rng(s.id, p, seed);
  for (std::size_t i = 0; i < s.sampler->tuples; ++i) {
    const auto params = draw_tuple(s, pm, cache, rng, i);
    if (!params) {
      ++t.not_applicable;
      continue;
    }
    tally(t, evaluate(s, pm, *params, cache));
  }
  return t;
}

}  // namespace

const std::vector<Statement>& statements() {
  static const std::vector<Statement> all = build_statements();
  return all;
}

const Statement& find_statement(std::string_view id) {
  for (const auto& s : statements()) {
    if (s.id == id) return s;
  }
  throw Error(ErrorCode::UnknownId, "no statement with id '" + std::string(id) + "'");
}

Verdict check_statement(std::string_view id, std::uint64_t p, const Params& params, std::uint64_t seed) {
  const Statement& s = find_statement(id);
  const PrimeModulus pm(p);
  PrimeCache cache(pm);
  if (params.empty() && s.sampler && s.applies(p)) {
    Rng rng = prime_rng(s.id, p, seed);
    const auto drawn = draw_tuple(s, pm, cache, rng, 0);
    if (!drawn) return Verdict{s.id, p, {}, Outcome::NotApplicable, {}, {}};
    return evaluate(s, pm, *drawn, cache);
  }
  return evaluate(s, pm, params, cache);
}

Report verify_range(std::string_view id, std::uint64_t prime_limit, const VerifyOptions& opts) {
  const Statement& s = find_statement(id);
  if (prime_limit < 5) throw Error(ErrorCode::InvalidArgument, "prime limit must be at least 5");
  if (opts.jobs == 0) throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");

  const PrimeSieve sieve(prime_limit);
  std::vector<std::uint64_t> primes;
  for (const auto p : sieve.primes()) {
    if (p != 2) primes.push_back(p);
  }
  std::vector<PrimeTally> tallies(primes.size());
  std::atomic<std::uint64_t> first_failure{std::numeric_limits<std::uint64_t>::max()};

  auto worker = [&](std::size_t start) {
    for (std::size_t i = start; i < primes.size(); i += opts.jobs) {
      if (opts.fail_fast && primes[i] > first_failure.load()) continue;
      tallies[i] = run_prime(s, sieve, primes[i], opts.seed);
      if (opts.fail_fast && tallies[i].failed > 0) {
        std::uint64_t cur = first_failure.load();
        while (primes[i] < cur && !first_failure.compare_exchange_weak(cur, primes[i])) {
        }
      }
    }
  };
  if (opts.jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < opts.jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  Report report;
  report.id = s.id;
  report.prime_limit = prime_limit;
  report.status = std::string(to_string(s.status));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (opts.fail_fast && primes[i] > first_failure.load()) break;
    const auto& t = tallies[i];
    report.checked += t.checked;
    report.passed += t.passed;
    report.failed += t.failed;
    report.not_applicable += t.not_applicable;
    report.failures.insert(report.failures.end(), t.failures.begin(), t.failures.end());
  }
  return report;
}

}  // namespace binomcong
