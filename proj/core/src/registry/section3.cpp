#include "support.hpp"

namespace binomcong::detail {

namespace {

Residue s3(Env& e, Residue ratio) { return e.sum(3, 1, ratio, e.p() / 3); }

bool above3(std::uint64_t p) { return p > 3; }

bool nonzero(Env& e, std::initializer_list<const char*> names) {
  for (const auto* n : names) {
    if (e.res(n).is_zero()) return false;
  }
  return true;
}

Statement thm_31() {
  auto s = statement("thm-3.1", "sum C(3k,k) b^{2k}/a^k against U_{2[p/3]+1}(9b,3a)", above3,
                     {part("sum", always(), [](Env& e) { return s3(e, e.res("b") * e.res("b") / e.res("a")); },
                           {row("all p > 3", always(), [](Env& e) {
                             const Residue a = e.res("a"), b = e.res("b");
                             const auto t = static_cast<std::int64_t>(e.p() / 3);
                             return mod_pow_signed(a * -3, -t) *
                                    lucas_u(b * 9, a * 3, 2 * static_cast<std::uint64_t>(t) + 1);
                           })})});
  s.sampler = rational_sampler({"a", "b"});
  s.tuple_ok = [](Env& e) { return nonzero(e, {"a", "b"}); };
  return s;
}

ResidueFn nine_class_value() {
  return [](Env& e) {
    if (in_pm_classes(e.p(), 9, {1})) return e.r(1);
    if (in_pm_classes(e.p(), 9, {2})) return e.r(-1);
    return e.r(0);
  };
}

Statement thm_32() {
  return statement("thm-3.2", "sum C(3k,k) / 27^k", above3,
                   {part("sum", always(), [](Env& e) { return s3(e, e.r(Rational(1, 27))); },
                         {pm_class_row("p = +-1 (mod 9)", 9, {1}, constant(1)),
                          pm_class_row("p = +-2 (mod 9)", 9, {2}, constant(-1)),
                          pm_class_row("p = +-4 (mod 9)", 9, {4}, constant(0))})});
}

Statement lem_32() {
  auto jd = [](Env& e) {
    const Residue P = e.res("P"), Q = e.res("Q");
    return legendre(P * P - Q * 4);
  };
  auto s = statement(
      "lem-3.2", "U_{2[p/3]+1}(P,Q) reduction", above3,
      {part("U_{2[p/3]+1}", always(),
            [](Env& e) { return lucas_u(e.res("P"), e.res("Q"), 2 * (e.p() / 3) + 1); },
            {row("((P^2-4Q)/p) = 1", [=](Env& e) { return jd(e) == 1; },
                 [](Env& e) {
                   const auto t = static_cast<std::int64_t>(third_index(e.p()));
                   const Residue Q = e.res("Q");
                   return -mod_pow_signed(Q, 1 - t) * lucas_u(e.res("P"), Q, static_cast<std::uint64_t>(t - 1));
                 }),
             row("((P^2-4Q)/p) = -1", [=](Env& e) { return jd(e) == -1; },
                 [](Env& e) {
                   const auto t = static_cast<std::int64_t>(third_index(e.p()));
                   const Residue Q = e.res("Q");
                   return -mod_pow_signed(Q, -t) * lucas_u(e.res("P"), Q, static_cast<std::uint64_t>(t + 1));
                 })})});
  s.sampler = rational_sampler({"P", "Q"});
  s.tuple_ok = [=](Env& e) { return nonzero(e, {"P", "Q"}) && jd(e) != 0; };
  return s;
}

Statement thm_33() {
  auto jd = [](Env& e) {
    const Residue a = e.res("a"), b = e.res("b");
    return legendre(b * b * 81 - a * 12);
  };
  auto s = statement(
      "thm-3.3", "sum C(3k,k) b^{2k}/a^k via U_{(p-(p/3))/3 +- 1}(9b,3a)", above3,
      {part("sum", always(), [](Env& e) { return s3(e, e.res("b") * e.res("b") / e.res("a")); },
            {row("((81b^2-12a)/p) = 1", [=](Env& e) { return jd(e) == 1; },
                 [](Env& e) {
                   const Residue a = e.res("a"), b = e.res("b");
                   return mod_pow(a * -3, e.p() / 3 + 1) * lucas_u(b * 9, a * 3, third_index(e.p()) - 1);
                 }),
             row("((81b^2-12a)/p) = -1", [=](Env& e) { return jd(e) == -1; },
                 [](Env& e) {
                   const Residue a = e.res("a"), b = e.res("b");
                   return -mod_pow(a * -3, e.p() / 3) * lucas_u(b * 9, a * 3, third_index(e.p()) + 1);
                 })})});
  s.sampler = rational_sampler({"a", "b"});
  s.tuple_ok = [=](Env& e) { return nonzero(e, {"a", "b"}) && jd(e) != 0; };
  return s;
}

Statement cor_31() {
  return statement(
      "cor-3.1", "sum C(3k,k) / (-27)^k", [](std::uint64_t p) { return p > 5; },
      {part("sum", always(), [](Env& e) { return s3(e, e.r(Rational(-1, 27))); },
            {row("(p/5) = 1", [](Env& e) { return jacobi(e.ip(), 5) == 1; },
                 [](Env& e) { return fibonacci_lucas_mod(third_index(e.p()) - 1, e.modulus()).u; }),
             row("(p/5) = -1", [](Env& e) { return jacobi(e.ip(), 5) == -1; },
                 [](Env& e) { return -fibonacci_lucas_mod(third_index(e.p()) + 1, e.modulus()).u; })})});
}

/// Rows for a sum keyed by p = x^2 + 15y^2 or 5x^2 + 3y^2 with the 3 | y,
/// 3 | y - x alternatives; any admissible representation may be used.
std::vector<Row> fifteen_rows(std::function<Residue(Env&, const Representation&)> first,
                              std::function<Residue(Env&, const Representation&)> second) {
  auto value = [](QuadForm f, std::function<Residue(Env&, const Representation&)> ratio) {
    return [=](Env& e) {
      return agreed_value(
          e, e.reps(f), [](const Representation& r) { return r.y % 3 == 0 || (r.y - r.x) % 3 == 0; },
          [&](const Representation& r) { return r.y % 3 == 0 ? e.r(1) : ratio(e, r); });
    };
  };
  return {row("p = x^2+15y^2", mod_class(15, {1, 4}), value(QuadForm{1, 0, 15}, std::move(first))),
          row("p = 5x^2+3y^2", mod_class(15, {2, 8}), value(QuadForm{5, 0, 3}, std::move(second)))};
}

Statement thm_34() {
  auto rows = fifteen_rows(ratio_xy(1, -5, 10), ratio_xy(-1, -1, 2));
  return statement(
      "thm-3.4", "sum C(3k,k) / (-27)^k and 2 sum C(6k,2k) / 27^{2k}",
      [](std::uint64_t p) { return p > 5 && in_classes(p, 15, {1, 2, 4, 8}); },
      {part("2 sum C(6k,2k)/729^k - eps_p", always(),
            [](Env& e) { return e.sum(6, 2, e.r(Rational(1, 729)), e.p() / 6) * 2 - nine_class_value()(e); }, rows),
       part("sum C(3k,k)/(-27)^k", always(), [](Env& e) { return s3(e, e.r(Rational(-1, 27))); }, rows)});
}

Statement thm_35() {
  return statement("thm-3.5", "sum C(3k,k) / 3^k", [](std::uint64_t p) { return in_classes(p, 15, {1, 2, 4, 8}); },
                   {part("sum", always(), [](Env& e) { return s3(e, e.r(Rational(1, 3))); },
                         fifteen_rows(ratio_xy(-3, -5, 10), ratio_xy(3, -1, 2)))});
}

FormCase ones(std::vector<QuadForm> forms) {
  std::string label;
  for (const auto& f : forms) label += (label.empty() ? "p = " : ", ") + f.to_string();
  return FormCase{label, std::move(forms), nullptr, 1};
}

FormCase ratio_case(QuadForm f, std::int64_t u, std::int64_t v, std::int64_t w) {
  return FormCase{"p = " + f.to_string(), {f}, ratio_xy(u, v, w), 0};
}

bool excluded(std::uint64_t p, std::initializer_list<std::uint64_t> list) {
  for (auto q : list) {
    if (p == q) return true;
  }
  return false;
}

Statement thm_36() {
  return statement(
      "thm-3.6", "sum C(3k,k) / (-3)^k",
      [](std::uint64_t p) {
        const auto ip = static_cast<std::int64_t>(p);
        return jacobi(ip, 13) == jacobi(ip, 3) && !excluded(p, {43, 5, 47});
      },
      {part("sum", always(), [](Env& e) { return s3(e, e.r(Rational(-1, 3))); },
            form_rows(-351, {ones({{1, 1, 88}, {10, 7, 10}, {11, 1, 8}}),
                             ratio_case({25, 7, 4}, -25, -10, 13), ratio_case({43, 37, 10}, 43, 12, 13),
                             ratio_case({5, 3, 18}, -5, -8, 13), ratio_case({47, 5, 2}, -47, -9, 13)}))});
}

Statement thm_37() {
  auto s = statement(
      "thm-3.7", "sum C(3k,k) (-3)^k",
      [](std::uint64_t p) {
        const auto ip = static_cast<std::int64_t>(p);
        return jacobi(ip, 3) * jacobi(ip, 5) * jacobi(ip, 17) == 1 && !excluded(p, {19, 7, 11});
      },
      {part("sum", always(), [](Env& e) { return s3(e, e.r(-3)); },
            form_rows(-255, {ones({{1, 1, 64}, {3, 3, 22}, {8, 1, 8}, {5, 5, 14}}),
                             ratio_case({19, 7, 4}, -171, -74, 85), ratio_case({7, 5, 10}, -63, -65, 85),
                             ratio_case({35, 5, 2}, -63, -13, 17), ratio_case({11, 3, 6}, 99, -29, 17)}))});
  s.status = Status::Disputed;
  s.notes =
      "The [11,3,6] row fails: computed sums fit (99x-29y)/(85y), not the printed denominator 17y. "
      "Every other row holds.";
  return s;
}

Statement thm_38() {
  return statement(
      "thm-3.8", "sum C(3k,k)",
      [](std::uint64_t p) { return p > 3 && jacobi(static_cast<std::int64_t>(p), 23) == 1 && !excluded(p, {13, 29}); },
      {part("sum", always(), [](Env& e) { return s3(e, e.r(1)); }, d207_rows())});
}

Statement thm_39() {
  return statement(
      "thm-3.9", "sum C(3k,k) (-1)^k",
      [](std::uint64_t p) {
        return p > 3 && jacobi(static_cast<std::int64_t>(p), 31) == 1 && !excluded(p, {5, 7, 19});
      },
      {part("sum", always(), [](Env& e) { return s3(e, e.r(-1)); },
            form_rows(-279, {ones({{1, 1, 70}, {9, 9, 10}, {8, 3, 9}}), ratio_case({5, 1, 14}, 15, -14, 31),
                             ratio_case({7, 1, 10}, 21, -14, 31), ratio_case({19, 5, 4}, 57, -8, 31),
                             ratio_case({35, 1, 2}, -105, -17, 31)}))});
}

Statement thm_310() {
  auto a = [](Env& e) { return e.res("a"); };
  auto s = statement("thm-3.10", "sum C(3k,k) a^k as the root of a cubic", above3,
                     {part("sum", always(), [=](Env& e) { return s3(e, a(e)); }, {unique_cubic_root_row(a)})});
  s.sampler = Sampler{20, [](Rng&, std::uint64_t, std::size_t index) {
                        return Params{{"a", Rational(static_cast<std::int64_t>(index) + 1)}};
                      }};
  s.tuple_ok = [](Env& e) {
    const Residue a = e.res("a");
    return legendre(a * (e.r(4) - a * 27)) == -1;
  };
  return s;
}

struct LucasInstance {
  std::string name;
  std::int64_t P, Q, d, D;
  std::vector<QuadForm> forms;
};

/// Index of the instance form representing p, with its representations.
QuadForm instance_form(Env& e, const LucasInstance& inst) {
  std::vector<FormCase> cases;
  for (const auto& f : inst.forms) cases.push_back(FormCase{f.to_string(), {f}, nullptr, 0});
  return classify(e, inst.D, cases).second;
}

UnityRoot3 instance_symbol(Env& e, const LucasInstance& inst) {
  const QuadForm f = instance_form(e, inst);
  const UnityRoot3 s = cubic_symbol(EisensteinInt{f.b - inst.P, -2 * inst.P}, f.a);
  e.witness("p represented by " + f.to_string() + ", (" + std::to_string(f.b - inst.P) + std::to_string(-2 * inst.P) +
            "w/" + std::to_string(f.a) + ")_3 = " + s.to_string());
  return s;
}

std::vector<Part> lemma_parts(const LucasInstance& inst) {
  auto applies = [D = inst.D](Env& e) { return jacobi(D, e.ip()) == 1; };
  auto index = [](Env& e) { return third_index(e.p()); };
  auto unit = [=](Env& e) {
    const Residue negQ = e.r(-inst.Q);
    return leg(e, negQ) * mod_pow(negQ, index(e) / 2);
  };
  auto at_a = [=](Env& e) { return static_cast<std::int64_t>(e.p()) == instance_form(e, inst).a; };
  auto sym_is = [=](int exponent) {
    return [=](Env& e) { return instance_symbol(e, inst).exponent == exponent; };
  };
  auto u_value = [=](int sign) {
    return [=](Env& e) {
      if (at_a(e)) return e.r(1);
      const QuadForm f = instance_form(e, inst);
      return agreed_value(
          e, e.reps(f), [&](const Representation& r) { return r.y % e.ip() != 0; },
          [&](const Representation& r) {
            return ratio_xy(2 * f.a, f.b, inst.d)(e, r) * unit(e) * sign;
          });
    };
  };
  const std::string u_label = inst.name + ": U_{(p-(p/3))/3}(" + std::to_string(inst.P) + "," +
                              std::to_string(inst.Q) + "), or [U != 0] when p = a";
  const std::string v_label =
      inst.name + ": V_{(p-(p/3))/3}(" + std::to_string(inst.P) + "," + std::to_string(inst.Q) + ")";
  return {
      part(u_label, applies,
           [=](Env& e) {
             const Residue u = lucas_u(e.r(inst.P), e.r(inst.Q), index(e));
             if (at_a(e)) return e.r(u.is_zero() ? 0 : 1);
             return u;
           },
           {row("symbol = w^0", sym_is(0), constant(0)), row("symbol = w^1", sym_is(1), u_value(-1)),
            row("symbol = w^2", sym_is(2), u_value(1))}),
      part(v_label, applies, [=](Env& e) { return lucas_v(e.r(inst.P), e.r(inst.Q), index(e)); },
           {row("symbol = w^0", sym_is(0), [=](Env& e) { return unit(e) * (2 * jacobi(e.ip(), 3)); }),
            row("symbol != w^0", [=](Env& e) { return !sym_is(0)(e); },
                [=](Env& e) { return unit(e) * -jacobi(e.ip(), 3); })}),
  };
}

Statement lem_33() {
  const LucasInstance one{"(9,3), d = 69", 9, 3, 69, -207, {{1, 1, 52}, {23, -23, 8}, {13, 1, 4}, {29, 5, 2}}};
  const LucasInstance two{"(9,-3), d = 93",
                          9,
                          -3,
                          93,
                          -279,
                          {{1, 1, 70}, {31, -31, 10}, {35, 29, 8}, {5, 1, 14}, {7, 1, 10}, {19, 5, 4}, {35, 1, 2}}};
  auto parts = lemma_parts(one);
  for (auto& p : lemma_parts(two)) parts.push_back(std::move(p));
  auto s = statement("lem-3.3", "U and V at (p-(p/3))/3 by form class and cubic symbol", above3, std::move(parts));
  s.notes = "Checked at the instances (P,Q,d,f,k) = (9,3,69,1,1) and (9,-3,93,1,1).";
  return s;
}

}  // namespace

std::vector<Row> d207_rows() {
  return form_rows(-207, {ones({{1, 1, 52}, {8, 7, 8}}), ratio_case({13, 1, 4}, 39, -10, 23),
                          ratio_case({29, 5, 2}, -87, -19, 23)});
}

Row unique_cubic_root_row(std::function<Residue(Env&)> a) {
  return row("unique root of (27a-4)x^3+3x+1", always(), [a = std::move(a)](Env& e) {
    const Residue av = a(e);
    const auto roots = cubic_roots((av * 27 - 4).signed_value(), 3, 1, e.modulus());
    std::string list;
    for (auto r : roots) list += (list.empty() ? "" : ",") + std::to_string(r);
    e.witness("roots {" + list + "}");
    if (roots.size() != 1) {
      throw Error(ErrorCode::RowValueUndefined, std::to_string(roots.size()) + " roots: {" + list + "}");
    }
    return e.r(static_cast<std::int64_t>(roots[0]));
  });
}

void add_section3_statements(std::vector<Statement>& out) {
  out.push_back(shift_lemma("lem-3.1", "C([p/3]+k,[p/3]-k) = C(3k,k)/(-27)^k", ShiftLemma::ThirdShift, 5));
  out.push_back(thm_31());
  out.push_back(thm_32());
  out.push_back(lem_32());
  out.push_back(thm_33());
  out.push_back(cor_31());
  out.push_back(thm_34());
  out.push_back(thm_35());
  out.push_back(thm_36());
  out.push_back(thm_37());
  out.push_back(lem_33());
  out.push_back(thm_38());
  out.push_back(thm_39());
  out.push_back(thm_310());
}

}  // namespace binomcong::detail
