// Usage: acceptance [N]. Prints one PASS/FAIL line per criterion; with N only
// that criterion runs. Exit status is nonzero when any printed line is FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "binomcong/binomsum.hpp"
#include "binomcong/combsum.hpp"
#include "binomcong/cyclotomic.hpp"
#include "binomcong/registry.hpp"
#include "binomcong_cli/cli.hpp"

using namespace binomcong;

namespace {

struct Outcome_ {
  bool pass;
  std::string detail;
};

std::string failing_summary(const Report& r) {
  std::ostringstream s;
  s << r.id << " failed " << r.failed << "/" << r.checked;
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    s << " (first p=" << f.prime << " row \"" << f.row << "\" lhs=" << f.lhs << " rhs=" << f.rhs << ")";
  }
  return s.str();
}

Outcome_ zero_failures(const std::vector<std::string>& ids, std::uint64_t limit, double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> bad;
  std::uint64_t checked = 0;
  for (const auto& id : ids) {
    const Report r = verify_range(id, limit);
    checked += r.checked;
    if (r.failed > 0 || r.passed == 0) bad.push_back(failing_summary(r));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream s;
  s << ids.size() << " ids, " << checked << " checks, " << secs << "s";
  bool pass = bad.empty();
  if (budget_seconds > 0 && secs > budget_seconds) {
    pass = false;
    s << " (over " << budget_seconds << "s budget)";
  }
  for (const auto& b : bad) s << "; " << b;
  return {pass, s.str()};
}

Outcome_ c1() {
  return zero_failures({"cor-2.1", "thm-3.2", "thm-2.4", "thm-2.5", "thm-2.6", "thm-2.7", "thm-2.8", "thm-2.9",
                        "cor-2.2-mod15", "cor-2.3", "cor-2.4", "thm-4.1", "thm-4.2", "thm-4.3", "thm-4.5", "thm-4.6"},
                       10000, 60.0);
}

Outcome_ c2() {
  for (const char* id : {"thm-2.1", "thm-3.1", "thm-3.3"}) {
    if (find_statement(id).sampler->tuples != 20) return {false, std::string(id) + " samples fewer than 20 tuples"};
  }
  return zero_failures({"thm-2.1", "thm-3.1", "thm-3.3"}, 2000, 0);
}

Outcome_ c3() {
  return zero_failures({"thm-2.10", "thm-2.12", "cor-2.5", "cor-2.7", "thm-3.4", "thm-3.5", "thm-3.6", "thm-3.7",
                        "thm-3.8", "thm-3.9"},
                       10000, 0);
}

Outcome_ c4() {
  std::uint64_t cases = 0;
  for (const auto pv : sieve_primes(2000)) {
    if (pv < 5) continue;
    const PrimeModulus p(pv);
    const auto ip = static_cast<std::int64_t>(pv);
    for (std::int64_t a = 1; a <= 20; ++a) {
      if (jacobi(a * (4 - 27 * a), ip) != -1) continue;
      ++cases;
      const auto roots = cubic_roots(27 * a - 4, 3, 1, p);
      const Residue s = sum_binom_pow(3, 1, Residue(a, p), pv / 3);
      if (roots.size() != 1 || !(s == static_cast<std::int64_t>(roots[0]))) {
        return {false, "p=" + std::to_string(pv) + " a=" + std::to_string(a)};
      }
      if (check_statement("thm-3.10", pv, {{"a", Rational(a)}}).outcome != Outcome::Pass) {
        return {false, "registry disagrees at p=" + std::to_string(pv) + " a=" + std::to_string(a)};
      }
    }
  }
  return {cases > 0, std::to_string(cases) + " (p, a) cases"};
}

Outcome_ c5() {
  std::uint64_t compared = 0, pairs = 0;
  for (const auto& [b, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {1, 2}, {3, 1}, {8, 1}}) {
    const std::int64_t D = b * b + 4 * m * m;
    for (const auto pv : sieve_primes(2000)) {
      const auto ip = static_cast<std::int64_t>(pv);
      if (pv == 2 || b % ip == 0 || m % ip == 0 || D % ip == 0) continue;
      const auto d = delta_p(b, m, PrimeModulus(pv));
      if (d.congruence && d.quartic) {
        ++compared;
        if (d.congruence->sign != d.quartic->sign) {
          return {false, "derivations differ at (b,m)=(" + std::to_string(b) + "," + std::to_string(m) +
                             ") p=" + std::to_string(pv)};
        }
      } else if (d.congruence.has_value() != d.quartic.has_value() && !d.vanishing_branch) {
        return {false, "one derivation missing at p=" + std::to_string(pv)};
      }
    }
    const auto per = delta_periodicity_check(b, m, 2000);
    pairs += per.pairs_checked;
    if (!per.violations.empty()) {
      return {false, "periodicity fails for p=" + std::to_string(per.violations[0].first) +
                         ", p'=" + std::to_string(per.violations[0].second)};
    }
  }
  const Report r = verify_range("thm-2.11", 2000);
  if (r.failed > 0) return {false, failing_summary(r)};
  return {true, std::to_string(compared) + " sign comparisons, " + std::to_string(pairs) + " periodicity pairs"};
}

Outcome_ c6() {
  std::vector<std::string> bad;
  if (!(sum_binom_pow(4, 2, Residue(-1, PrimeModulus(7)), 1) == 2)) bad.push_back("p=7");
  if (!(sum_binom_pow(4, 2, Residue(1, PrimeModulus(11)), 2) == 0)) bad.push_back("p=11");
  const PrimeModulus p19(19);
  const auto v19 = check_statement("thm-3.4", 19);
  const bool witness = !v19.witnesses.empty() && v19.witnesses[0].find("[1,0,15](-2,1)") != std::string::npos;
  if (!(sum_binom_pow(3, 1, rational_residue(Rational(-1, 27), p19), 6) == 5) || v19.outcome != Outcome::Pass ||
      v19.parts.back().rhs != "5" || !witness) {
    bad.push_back("p=19");
  }
  const auto v31 = check_statement("thm-4.5", 31);
  if (v31.outcome != Outcome::Pass || v31.parts[0].lhs != "28" || v31.parts[0].rhs != "28") bad.push_back("p=31");
  const auto v13 = check_statement("thm-4.6", 13);
  if (v13.outcome != Outcome::Pass || v13.parts.size() < 2) bad.push_back("p=13");
  return {bad.empty(), bad.empty() ? "5 spot values" : "mismatch at " + bad.front()};
}

Outcome_ c7() {
  for (std::uint64_t m : {3, 4, 6}) {
    for (std::uint64_t n = 0; n <= 1000; ++n) {
      if (t0_closed(m, n) != t_sum_exact({n, m, 0})) {
        return {false, "t0_closed m=" + std::to_string(m) + " n=" + std::to_string(n)};
      }
    }
  }
  for (std::uint64_t m : {3, 4, 5, 6, 10, 12}) {
    for (std::uint64_t n = 0; n <= 500; ++n) {
      if (!t_recurrences_check(n, m)) return {false, "recurrence n=" + std::to_string(n) + " m=" + std::to_string(m)};
    }
  }
  int primes = 0;
  for (const auto p : sieve_primes(600)) {
    if (p % 20 != 11) continue;
    ++primes;
    const std::uint64_t n = (p - 1) / 2;
    if (10 * t_sum_exact({n, 10, 0}) - big_pow(2, static_cast<unsigned>(n)) != -2 * lucas_number_exact(n)) {
      return {false, "tenfold identity p=" + std::to_string(p)};
    }
  }
  return {true, "closed forms, recurrences and " + std::to_string(primes) + " tenfold identities"};
}

Outcome_ c8() {
  if (!(cubic_symbol({1, 2}, 23) == UnityRoot3{0}) || !(cubic_symbol({-8, -18}, 13) == UnityRoot3{1}) ||
      !(cubic_symbol({-4, -18}, 29) == UnityRoot3{2})) {
    return {false, "calibration values"};
  }
  std::uint64_t checks = 0;
  for (const auto q : sieve_primes(200)) {
    if (q == 2) continue;
    std::set<std::uint64_t> cubes, fourth;
    for (std::uint64_t x = 1; x < q; ++x) {
      cubes.insert(x * x * x % q);
      fourth.insert(x * x % q * x % q * x % q);
    }
    const PrimeModulus pm(q);
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(q); ++a) {
      const bool cube = cubes.count(static_cast<std::uint64_t>(a)) > 0;
      const bool quart = fourth.count(static_cast<std::uint64_t>(a)) > 0;
      if (q % 3 == 1 && q > 3) {
        ++checks;
        if ((cubic_character({a, 0}, static_cast<std::int64_t>(q)) == UnityRoot3{0}) != cube) {
          return {false, "cube test q=" + std::to_string(q) + " a=" + std::to_string(a)};
        }
      }
      if (q % 4 == 1) {
        ++checks;
        const UnityRoot4 chi = quartic_character({a, 0}, pm);
        const UnityRoot4 sq = chi * chi;
        if ((chi == UnityRoot4{0}) != quart || (sq.exponent == 0 ? 1 : -1) != jacobi(a, static_cast<std::int64_t>(q))) {
          return {false, "fourth-power test p=" + std::to_string(q) + " a=" + std::to_string(a)};
        }
      }
    }
  }
  return {true, "3 calibration values, " + std::to_string(checks) + " residuacity checks"};
}

Outcome_ c9() {
  std::ostringstream out, err;
  const int code = cli::run_cli({"verify", "--id", "thm-4.4", "--max-prime", "100", "--format", "json"}, out, err);
  if (code != 0) return {false, "exit code " + std::to_string(code)};
  const auto report = cli::report_from_json(nlohmann::json::parse(out.str()).at(0));
  if (report.status != "disputed" || report.failures.empty()) return {false, "no structured counterexample"};
  for (const auto& f : report.failures) {
    const std::uint64_t n = (f.prime - 1) / 2;
    const BigInt oracle = 5 * t_sum_exact({n, 5, 0}) - big_pow(2, static_cast<unsigned>(n));
    if (f.witnesses.empty() || f.row.empty() || std::to_string(big_mod(oracle, f.prime)) != f.lhs || f.lhs == f.rhs) {
      return {false, "counterexample p=" + std::to_string(f.prime) + " not confirmed by the exact oracle"};
    }
  }
  std::ostringstream o2, e2;
  if (cli::run_cli({"verify", "--id", "thm-4.4", "--max-prime", "100", "--strict"}, o2, e2) != 1) {
    return {false, "--strict does not flag the disputed id"};
  }
  return {true, std::to_string(report.failures.size()) + " counterexamples, each confirmed by exact T-sums"};
}

Outcome_ c10() {
  std::ostringstream a, b, e;
  cli::run_cli({"verify", "--all", "--max-prime", "1000", "--format", "json", "--jobs", "1"}, a, e);
  cli::run_cli({"verify", "--all", "--max-prime", "1000", "--format", "json", "--jobs", "4"}, b, e);
  const bool same = a.str() == b.str() && !a.str().empty();
  return {same, std::to_string(a.str().size()) + " bytes" + (same ? ", identical" : ", differ")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome_()>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  std::size_t only = 0;
  if (argc > 1) only = std::stoul(argv[1]);
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != i + 1) continue;
    Outcome_ o{false, ""};
    try {
      o = criteria[i]();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
