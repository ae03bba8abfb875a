#include "binomcong_cli/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "binomcong/binomsum.hpp"
#include "binomcong/combsum.hpp"
#include "binomcong/cyclotomic.hpp"
#include "binomcong/error.hpp"
#include "binomcong/lucas.hpp"
#include "binomcong/qform.hpp"

namespace binomcong::cli {

using nlohmann::json;

json to_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"prime", f.prime},
                        {"params", f.params},
                        {"lhs", f.lhs},
                        {"row", f.row},
                        {"rhs", f.rhs},
                        {"witnesses", f.witnesses}});
  }
  return {{"id", r.id},           {"prime_limit", r.prime_limit},
          {"checked", r.checked}, {"passed", r.passed},
          {"failed", r.failed},   {"not_applicable", r.not_applicable},
          {"failures", failures}, {"status", r.status}};
}

Report report_from_json(const json& j) {
  Report r;
  j.at("id").get_to(r.id);
  j.at("prime_limit").get_to(r.prime_limit);
  j.at("checked").get_to(r.checked);
  j.at("passed").get_to(r.passed);
  j.at("failed").get_to(r.failed);
  j.at("not_applicable").get_to(r.not_applicable);
  j.at("status").get_to(r.status);
  for (const auto& f : j.at("failures")) {
    FailureRecord rec;
    f.at("prime").get_to(rec.prime);
    f.at("params").get_to(rec.params);
    f.at("lhs").get_to(rec.lhs);
    f.at("row").get_to(rec.row);
    f.at("rhs").get_to(rec.rhs);
    f.at("witnesses").get_to(rec.witnesses);
    r.failures.push_back(std::move(rec));
  }
  return r;
}

namespace {

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t count) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoll(item, &used));
    if (used != item.size()) throw Error(ErrorCode::InvalidArgument, "bad integer '" + item + "'");
  }
  if (out.size() != count) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(count) + " comma-separated integers");
  }
  return out;
}

void print_text(const Report& r, std::ostream& out) {
  out << r.id << ' ' << r.status << " limit=" << r.prime_limit << " checked=" << r.checked << " passed=" << r.passed
      << " failed=" << r.failed << " not_applicable=" << r.not_applicable << '\n';
  for (const auto& f : r.failures) {
    out << "  p=" << f.prime;
    if (!f.params.empty()) out << " [" << f.params << ']';
    out << " lhs=" << f.lhs << " row=\"" << f.row << "\" rhs=" << f.rhs << '\n';
    for (const auto& w : f.witnesses) out << "    " << w << '\n';
  }
}

struct VerifyArgs {
  std::string id;
  bool all = false;
  std::uint64_t max_prime = 10000;
  std::size_t jobs = 1;
  std::string format = "text";
  std::uint64_t seed = VerifyOptions{}.seed;
  bool fail_fast = false;
  bool strict = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max_prime < 5) throw Error(ErrorCode::InvalidArgument, "--max-prime must be at least 5");
  if (a.jobs < 1) throw Error(ErrorCode::InvalidArgument, "--jobs must be at least 1");
  if (a.all == !a.id.empty()) throw Error(ErrorCode::InvalidArgument, "give exactly one of --id or --all");

  std::vector<std::string> ids;
  if (a.all) {
    for (const auto& s : statements()) ids.push_back(s.id);
  } else {
    find_statement(a.id);
    ids.push_back(a.id);
  }
  const VerifyOptions opts{a.jobs, a.seed, a.fail_fast};
  int code = 0;
  json reports = json::array();
  for (const auto& id : ids) {
    const Report r = verify_range(id, a.max_prime, opts);
    if (r.failed > 0 && (a.strict || r.status != "disputed")) code = 1;
    if (a.format == "json") {
      reports.push_back(to_json(r));
    } else {
      print_text(r, out);
    }
  }
  if (a.format == "json") out << reports.dump(2) << '\n';
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomial-sum congruences: compute and verify"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check registered statements over a prime range");
  verify->add_option("--id", va.id, "Statement id");
  verify->add_flag("--all", va.all, "Every registered statement");
  verify->add_option("--max-prime", va.max_prime, "Largest prime checked")->capture_default_str();
  verify->add_option("--jobs", va.jobs, "Worker threads")->capture_default_str();
  verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--seed", va.seed, "Parameter sampling seed")->capture_default_str();
  verify->add_flag("--fail-fast", va.fail_fast, "Stop at the lowest failing prime");
  verify->add_flag("--strict", va.strict, "Disputed statements also set the exit code");

  auto* compute = app.add_subcommand("compute", "Evaluate one quantity");
  compute->require_subcommand(1);

  std::uint64_t sa = 0, sb = 0, sp = 0;
  std::int64_t snum = 1, sden = 1;
  std::optional<std::uint64_t> supper;
  auto* sum = compute->add_subcommand("sum", "sum_{k=0}^{upper} C(ak,bk) (num/den)^k mod p");
  sum->add_option("--a", sa)->required();
  sum->add_option("--b", sb)->required();
  sum->add_option("--num", snum)->capture_default_str();
  sum->add_option("--den", sden)->capture_default_str();
  sum->add_option("--prime", sp)->required();
  sum->add_option("--upper", supper, "Default [p/a]");

  std::string kind = "jacobi", alpha;
  std::int64_t top = 0, bottom = 0;
  auto* symbol = compute->add_subcommand("symbol", "Jacobi, cubic or quartic residue symbol");
  symbol->add_option("--kind", kind)->check(CLI::IsMember({"jacobi", "cubic", "quartic"}))->capture_default_str();
  symbol->add_option("--top", top, "Jacobi numerator");
  symbol->add_option("--alpha", alpha, "x,y for x+y*w or x+y*i");
  symbol->add_option("--bottom", bottom)->required();

  std::string lp = "1", lq = "-1";
  std::uint64_t ln = 0;
  std::optional<std::uint64_t> lprime;
  auto* lucas = compute->add_subcommand("lucas", "U_n(P,Q) and V_n(P,Q), exact or mod p");
  lucas->add_option("--P", lp)->capture_default_str();
  lucas->add_option("--Q", lq)->capture_default_str();
  lucas->add_option("--n", ln)->required();
  lucas->add_option("--prime", lprime);

  std::uint64_t tn = 0, tm = 0;
  std::int64_t tr = 0;
  auto* tsum = compute->add_subcommand("tsum", "sum of C(n,k) over k = r (mod m)");
  tsum->add_option("--n", tn)->required();
  tsum->add_option("--m", tm)->required();
  tsum->add_option("--r", tr)->capture_default_str();

  std::string form_text;
  std::uint64_t rp = 0;
  auto* represent_cmd = app.add_subcommand("represent", "All (x,y) with ax^2+bxy+cy^2 = p");
  represent_cmd->add_option("--form", form_text, "a,b,c")->required();
  represent_cmd->add_option("--prime", rp)->required();

  std::int64_t disc = 0;
  auto* classgroup = app.add_subcommand("classgroup", "Reduced primitive forms of a negative discriminant");
  classgroup->add_option("--disc", disc)->required();

  std::uint64_t plimit = 0;
  auto* primes = app.add_subcommand("primes", "Primes up to a limit");
  primes->add_option("--limit", plimit)->required();

  auto* list = app.add_subcommand("list", "Registered statement ids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    if (e.get_exit_code() == 0) return 0;
    err << "run with --help for usage\n";
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, out);

    if (sum->parsed()) {
      const PrimeModulus p(sp);
      const std::uint64_t upper = supper.value_or(sa == 0 ? 0 : sp / sa);
      out << sum_binom_pow(BinomSumSpec{sa, sb, Rational(snum, sden), upper}, p).value() << '\n';
    } else if (symbol->parsed()) {
      if (kind == "jacobi") {
        out << jacobi(top, bottom) << '\n';
      } else if (kind == "cubic") {
        const auto xy = parse_ints(alpha, 2);
        out << cubic_symbol(EisensteinInt{xy[0], xy[1]}, bottom).to_string() << '\n';
      } else {
        const auto xy = parse_ints(alpha, 2);
        if (bottom < 3) throw Error(ErrorCode::InvalidArgument, "--bottom must be an odd prime");
        out << quartic_symbol(GaussianInt{xy[0], xy[1]}, PrimeModulus(static_cast<std::uint64_t>(bottom))).to_string()
            << '\n';
      }
    } else if (lucas->parsed()) {
      const Rational P = Rational::parse(lp), Q = Rational::parse(lq);
      if (lprime) {
        const auto r = lucas_uv_mod(LucasParams{P, Q}, ln, PrimeModulus(*lprime));
        out << "U=" << r.u.value() << " V=" << r.v.value() << '\n';
      } else {
        if (!P.is_integer() || !Q.is_integer()) {
          throw Error(ErrorCode::InvalidArgument, "exact Lucas values need integer P and Q");
        }
        const auto r = lucas_uv_exact(P.num(), Q.num(), ln);
        out << "U=" << r.u << " V=" << r.v << '\n';
      }
    } else if (tsum->parsed()) {
      out << t_sum_exact(TSumKey{tn, tm, tr}) << '\n';
    } else if (represent_cmd->parsed()) {
      const auto abc = parse_ints(form_text, 3);
      const QuadForm f{abc[0], abc[1], abc[2]};
      if (f.discriminant() >= 0) throw Error(ErrorCode::NonNegativeDiscriminant, "form must be positive definite");
      if (rp == 0) throw Error(ErrorCode::InvalidArgument, "--prime must be positive");
      const auto reps = represent(f, static_cast<std::int64_t>(rp));
      for (std::size_t i = 0; i < reps.size(); ++i) {
        out << (i ? " " : "") << '(' << reps[i].x << ',' << reps[i].y << ')';
      }
      out << '\n';
    } else if (classgroup->parsed()) {
      for (const auto& f : class_group(disc)) out << f.to_string() << '\n';
    } else if (primes->parsed()) {
      const auto ps = sieve_primes(plimit);
      for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? " " : "") << ps[i];
      out << '\n';
    } else if (list->parsed()) {
      for (const auto& s : statements()) {
        out << s.id << '\t' << to_string(s.status) << '\t' << s.title << '\n';
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace binomcong::cli
