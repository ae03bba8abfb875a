#include "support.hpp"

namespace binomcong::detail {

namespace {

bool above3(std::uint64_t p) { return p > 3; }

BigInt pow2(std::uint64_t e) { return BigInt(1) << static_cast<unsigned>(e); }

std::uint64_t half(Env& e) { return (e.p() - 1) / 2; }

/// Exact parts need the binomial row of (p-1)/2.
Pred exact_range() {
  return [](Env& e) { return half(e) <= kExactTSumMaxIndex; };
}

BigInt v_41(std::uint64_t n) {
  BigInt a = 2, b = 4;
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt c = 4 * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

BigInt combo(std::uint64_t n, std::uint64_t m, std::int64_t r) {
  return BigInt(m) * t_sum_exact({n, m, r}) - pow2(n);
}

Statement thm_41() {
  auto base = [](Env& e) { return sgn_pow((e.p() + 1) / 4); };
  return statement(
      "thm-4.1", "sum C(6k,3k) / (-64)^k", above3,
      {part("sum", always(), [](Env& e) { return e.sum(6, 3, e.r(Rational(-1, 64)), (e.p() - 1) / 6); },
            {class_row("p = 1 (mod 3)", 3, {1},
                       [=](Env& e) { return e.r(base(e) + 2 * sgn_pow(half(e))) / 3; }),
             class_row("p = 2 (mod 3)", 3, {2}, [=](Env& e) { return e.r(base(e) - sgn_pow(half(e))) / 3; })})});
}

Statement thm_42() {
  return statement(
      "thm-4.2", "sum C(8k,4k) / 4^{4k-1}", [](std::uint64_t) { return true; },
      {part("sum", always(), [](Env& e) { return e.sum(8, 4, e.r(Rational(1, 256)), (e.p() - 1) / 8) * 4; },
            {class_row("p = 1 (mod 8)", 8, {1},
                       [](Env& e) { return pw(e, 2, (e.p() + 3) / 4) * sgn_pow((e.p() - 1) / 8) + 1; }),
             class_row("p = 3 (mod 8)", 8, {3},
                       [](Env& e) { return pw(e, 2, (e.p() + 1) / 4) * sgn_pow((e.p() - 3) / 8) - 1; }),
             class_row("p = 5 (mod 8)", 8, {5}, constant(-1)),
             class_row("p = 7 (mod 8)", 8, {7},
                       [](Env& e) { return e.r(1) - pw(e, 2, (e.p() + 1) / 4) * sgn_pow((e.p() - 7) / 8); })})});
}

Statement thm_43() {
  auto q1 = [](Env& e) { return pw(e, 3, (e.p() - 1) / 4); };
  auto q3 = [](Env& e) { return pw(e, 3, (e.p() + 1) / 4); };
  auto s = statement(
      "thm-4.3", "6 sum C(12k,6k) / 4^{6k}", above3,
      {part("6 sum", always(), [](Env& e) { return e.sum(12, 6, e.r(Rational(1, 4096)), (e.p() - 1) / 12) * 6; },
            {class_row("p = 1 (mod 24)", 24, {1}, [=](Env& e) { return q1(e) * 2 + 3; }),
             class_row("p = 5 (mod 24)", 24, {5}, [=](Env& e) { return q1(e) - 2; }),
             class_row("p = 7 (mod 24)", 24, {7}, constant(-2)),
             class_row("p = 11 (mod 24)", 24, {11}, [=](Env& e) { return -q3(e); }),
             class_row("p = 13 (mod 24)", 24, {13}, [=](Env& e) { return e.r(1) - q1(e) * 2; }),
             class_row("p = 17 (mod 24)", 24, {17}, [=](Env& e) { return -q1(e); }),
             class_row("p = 19 (mod 24)", 24, {19}, constant(-3)),
             class_row("p = 23 (mod 24)", 24, {23}, [=](Env& e) { return q3(e) + 2; })})});
  s.status = Status::Disputed;
  s.notes = "The p = 7 (mod 24) row fails at every such prime: the sum gives -1, not -2. Every other row holds.";
  return s;
}

Statement thm_44() {
  auto q1 = [](Env& e) { return pw(e, 5, (e.p() - 1) / 4); };
  auto q3 = [](Env& e) { return pw(e, 5, (e.p() + 1) / 4); };
  auto s = statement(
      "thm-4.4", "5 sum C(10k,5k) / (-4)^{5k} - (-1)^{[(p+1)/4]}", [](std::uint64_t p) { return p > 5; },
      {part("5 sum - (-1)^{[(p+1)/4]}", always(),
            [](Env& e) {
              const Residue lhs = e.sum(10, 5, e.r(Rational(-1, 1024)), (e.p() - 1) / 10) * 5 - sgn_pow((e.p() + 1) / 4);
              if (half(e) <= kExactTSumMaxIndex) {
                const BigInt c = combo(half(e), 5, 0);
                e.witness("5 T_{0(5)}^{(p-1)/2} - 2^{(p-1)/2} = " + to_string(c) + " = " +
                          std::to_string(big_mod(c, e.p())) + " (mod p)");
              }
              return lhs;
            },
            {class_row("p = 1 (mod 20)", 20, {1}, [=](Env& e) { return q1(e) * 4; }),
             class_row("p = 3 (mod 20)", 20, {3}, [=](Env& e) { return q3(e) * 2; }),
             class_row("p = 7 (mod 20)", 20, {7}, q3), class_row("p = 9 (mod 20)", 20, {9}, q1),
             class_row("p = 11 (mod 20)", 20, {11}, [=](Env& e) { return -q3(e); }),
             class_row("p = 13 (mod 20)", 20, {13}, [=](Env& e) { return q1(e) * -2; }),
             class_row("p = 17 (mod 20)", 20, {17}, [=](Env& e) { return q1(e) * 3; }),
             class_row("p = 19 (mod 20)", 20, {19}, [=](Env& e) { return -q3(e); })})});
  s.status = Status::Disputed;
  s.notes =
      "Exact T-sum computation contradicts several rows (first at p = 11, 17, 19, 23); the (4.5) "
      "table it rests on already fails.";
  return s;
}

Statement thm_45() {
  return statement(
      "thm-4.5", "sum C(20k,10k) / 4^{10k}, p = 11 (mod 20)", [](std::uint64_t p) { return p % 20 == 11; },
      {part("sum", always(),
            [](Env& e) { return e.sum(20, 10, e.r(Rational(1, 1048576)), (e.p() - 11) / 20); },
            {row("p = 11 (mod 20)", always(), [](Env& e) { return e.r(sgn_pow((e.p() + 1) / 4)) / 10; })}),
       exact_part("10 T_{0(10)}^{(p-1)/2} - 2^{(p-1)/2}", exact_range(),
                  [](Env& e) { return combo(half(e), 10, 0); },
                  {exact_row("-2 L_{(p-1)/2}", always(), [](Env& e) { return -2 * lucas_number_exact(half(e)); })})});
}

Statement thm_46() {
  auto q = [](Env& e) { return big_pow(3, static_cast<unsigned>((e.p() - 1) / 4)); };
  auto s_term = [](Env& e) {
    const auto p = e.p();
    return minus_one_pow(static_cast<std::int64_t>((p - 5) / 8)) * (pow2((p - 1) / 4) - v_41((p - 5) / 4));
  };
  return statement(
      "thm-4.6", "sums of C(24k,12k) / 4^{12k} and C(12k,6k) (-1)^k / 4^{6k}, p = 13 (mod 24)",
      [](std::uint64_t p) { return p % 24 == 13; },
      {part("sum C(24k,12k)/4^{12k}", always(),
            [](Env& e) { return e.sum(24, 12, mod_pow(e.r(Rational(1, 4)), 12), (e.p() - 13) / 24); },
            {row("p = 13 (mod 24)", always(),
                 [](Env& e) { return (e.r(1) - pw(e, 3, (e.p() - 1) / 4) * 2) / 12; })}),
       part("sum C(12k,6k)(-1)^k/4^{6k}", always(),
            [](Env& e) { return e.sum(12, 6, e.r(Rational(-1, 4096)), (e.p() - 1) / 12); },
            {row("p = 13 (mod 24)", always(), constant(0))}),
       exact_part("12 T_{0(12)}^{(p-1)/2} - 2^{(p-1)/2}", exact_range(),
                  [](Env& e) { return combo(half(e), 12, 0); },
                  {exact_row("2(1-3^{(p-1)/4})", always(), [=](Env& e) { return 2 * (1 - q(e)); })}),
       exact_part("12 T_{0(12)}^{(p-3)/2} - 2^{(p-3)/2}", exact_range(),
                  [](Env& e) { return combo(half(e) - 1, 12, 0); },
                  {exact_row("1-3^{(p-1)/4}+s", always(), [=](Env& e) { return 1 - q(e) + s_term(e); })}),
       exact_part("12 T_{-1(12)}^{(p-3)/2} - 2^{(p-3)/2}", exact_range(),
                  [](Env& e) { return combo(half(e) - 1, 12, -1); },
                  {exact_row("1-3^{(p-1)/4}-s", always(), [=](Env& e) { return 1 - q(e) - s_term(e); })})});
}

Statement eq_41() {
  std::vector<Part> parts;
  for (std::uint64_t m : {3, 4, 5, 6, 10, 12}) {
    parts.push_back(exact_part("m = " + std::to_string(m) + ", [identities fail]",
                               [](Env& e) { return half(e) <= 500; },
                               [m](Env& e) { return BigInt(t_recurrences_check(half(e), m) ? 0 : 1); },
                               {exact_row("symmetry and Pascal step hold", always(), [](Env&) { return BigInt(0); })}));
  }
  return statement("eq-4.1", "T_{r(m)}^n = T_{n-r(m)}^n and T_{r(m)}^{n+1} = T_{r(m)}^n + T_{r-1(m)}^n at n = (p-1)/2",
                   [](std::uint64_t) { return true; }, std::move(parts));
}

Statement closed_t0(std::string id, std::uint64_t m) {
  return statement(std::move(id), "T_{0(" + std::to_string(m) + ")}^n closed form at n = (p-1)/2",
                   [](std::uint64_t) { return true; },
                   {exact_part("T_{0(" + std::to_string(m) + ")}^{(p-1)/2}", exact_range(),
                               [m](Env& e) { return t_sum_exact({half(e), m, 0}); },
                               {exact_row("closed form", always(), [m](Env& e) { return t0_closed(m, half(e)); })})});
}

Statement delta5_family() {
  std::vector<Part> parts;
  for (std::int64_t r : {0, 1, -1, 2, -2}) {
    parts.push_back(exact_part("Delta_5(" + std::to_string(r) + ", (p-1)/2)", exact_range(),
                               [r](Env& e) { return delta5(r, half(e)); },
                               {exact_row("quoted closed form", always(),
                                          [r](Env& e) { return delta5_quoted(r, half(e)); })}));
  }
  auto s = statement("delta5-family", "Delta_5(r,n) against its quoted closed forms at n = (p-1)/2",
                     [](std::uint64_t) { return true; }, std::move(parts));
  s.status = Status::Disputed;
  s.notes = "The quoted forms hold for even n only; for odd n they fail.";
  return s;
}

Statement eq_45() {
  auto L = [](std::int64_t shift) {
    return [shift](Env& e) { return lucas_number_exact(static_cast<std::uint64_t>(e.ip() + shift) / 2); };
  };
  auto row20 = [](std::string label, std::initializer_list<std::int64_t> classes, std::function<BigInt(Env&)> v) {
    return exact_row(std::move(label), mod_class(20, classes), std::move(v));
  };
  auto s = statement(
      "eq-4.5", "5 T_{0(5)}^{(p-1)/2} - 2^{(p-1)/2} by p mod 20", [](std::uint64_t p) { return p > 5; },
      {exact_part("5 T_{0(5)}^{(p-1)/2} - 2^{(p-1)/2}", exact_range(), [](Env& e) { return combo(half(e), 5, 0); },
                  {row20("p = 1 (mod 20)", {1}, [=](Env& e) { return 2 * L(-1)(e); }),
                   row20("p = 3 (mod 20)", {3}, [=](Env& e) { return -2 * L(-1)(e); }),
                   row20("p = 7,19 (mod 20)", {7, 19}, [=](Env& e) { return -L(-3)(e); }),
                   row20("p = 9,13 (mod 20)", {9, 13}, [=](Env& e) { return -L(1)(e); }),
                   row20("p = 11 (mod 20)", {11}, L(1)), row20("p = 17 (mod 20)", {17}, L(-3))})});
  s.status = Status::Disputed;
  s.notes = "Exact computation contradicts the table (first at p = 11, 19, 23, 31, 43).";
  return s;
}

}  // namespace

void add_section4_statements(std::vector<Statement>& out) {
  out.push_back(eq_41());
  out.push_back(closed_t0("eq-4.2", 3));
  out.push_back(thm_41());
  out.push_back(thm_42());
  out.push_back(closed_t0("eq-4.3", 4));
  out.push_back(thm_43());
  out.push_back(closed_t0("eq-4.4", 6));
  out.push_back(delta5_family());
  out.push_back(eq_45());
  out.push_back(thm_44());
  out.push_back(thm_45());
  out.push_back(thm_46());
}

}  // namespace binomcong::detail
