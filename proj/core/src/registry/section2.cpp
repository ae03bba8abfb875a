#include <numeric>

#include "support.hpp"

namespace binomcong::detail {

namespace {

Residue s4(Env& e, Residue ratio) { return e.sum(4, 2, ratio, e.p() / 4); }
Residue s4(Env& e, const Rational& ratio) { return s4(e, e.r(ratio)); }

bool odd_prime(std::uint64_t) { return true; }

Row all_p(ResidueFn v) { return row("all p", always(), std::move(v)); }

Statement cor_21() {
  return statement(
      "cor-2.1", "sums of C(4k,2k) / 16^k, 4^k, 64^k", odd_prime,
      {part("1/16^k", always(), [](Env& e) { return s4(e, Rational(1, 16)); },
            {all_p([](Env& e) { return e.r(Rational(1, 2)) * jacobi(2, e.ip()); })}),
       part("1/4^k", [](Env& e) { return e.p() > 3; }, [](Env& e) { return s4(e, Rational(1, 4)); },
            {class_row("p = 1 (mod 3)", 3, {1}, [](Env& e) { return e.r(sgn_pow((e.p() - 1) / 2)); }),
             class_row("p = 2 (mod 3)", 3, {2}, constant(0))}),
       part("1/64^k", [](Env& e) { return e.p() > 3; }, [](Env& e) { return s4(e, Rational(1, 64)); },
            {class_row("p = 5,7,17,19 (mod 24)", 24, {5, 7, 17, 19}, constant(0)),
             class_row("p = 1,23 (mod 24)", 24, {1, 23}, constant(1)),
             class_row("p = 11,13 (mod 24)", 24, {11, 13}, constant(-1))})});
}

Statement thm_21() {
  auto s = statement(
      "thm-2.1", "C(4k,2k) sums against U_n(P,Q)", odd_prime,
      {part("P^2/(64Q)", always(), [](Env& e) { return s4(e, e.res("P") * e.res("P") / (e.res("Q") * 64)); },
            {all_p([](Env& e) {
              const Residue P = e.res("P"), Q = e.res("Q");
              const auto n = static_cast<std::uint64_t>((e.ip() + jacobi(-1, e.ip())) / 2);
              return mod_pow_signed(-Q, -static_cast<std::int64_t>(e.p() / 4)) * lucas_u(P, Q, n);
            })}),
       part("Q/(4P^2)", always(), [](Env& e) { return s4(e, e.res("Q") / (e.res("P") * e.res("P") * 4)); },
            {all_p([](Env& e) {
              const Residue P = e.res("P"), Q = e.res("Q");
              return leg(e, P) * lucas_u(P, Q, (e.p() + 1) / 2);
            })})});
  s.sampler = rational_sampler({"P", "Q"});
  s.tuple_ok = [](Env& e) { return !e.res("P").is_zero() && !e.res("Q").is_zero(); };
  return s;
}

bool x_admissible(Env& e) {
  const Residue x = e.res("x");
  return !x.is_zero() && !(x - 1).is_zero();
}

Statement thm_22_i() {
  auto s = statement("thm-2.2-i", "x/16 against 1/(16x), p = 1 (mod 4)", [](std::uint64_t p) { return p % 4 == 1; },
                     {part("x/16", always(), [](Env& e) { return s4(e, e.res("x") / 16); },
                           {row("p = 1 (mod 4)", always(), [](Env& e) {
                             const Residue x = e.res("x");
                             return mod_pow(x, (e.p() - 1) / 4) * s4(e, e.r(1) / (x * 16));
                           })})});
  s.sampler = rational_sampler({"x"});
  s.tuple_ok = x_admissible;
  return s;
}

Statement thm_22_ii() {
  auto s = statement("thm-2.2-ii", "1/(16x) against 1/(16(1-x)), p = 3 (mod 4)",
                     [](std::uint64_t p) { return p % 4 == 3; },
                     {part("1/(16x)", always(), [](Env& e) { return s4(e, e.r(1) / (e.res("x") * 16)); },
                           {row("p = 3 (mod 4)", always(), [](Env& e) {
                             const Residue x = e.res("x");
                             return mod_pow(e.r(1) - e.r(1) / x, (e.p() - 3) / 4) *
                                    s4(e, e.r(1) / ((e.r(1) - x) * 16));
                           })})});
  s.sampler = rational_sampler({"x"});
  s.tuple_ok = x_admissible;
  return s;
}

Statement cor_22_8k7() {
  return statement("cor-2.2-8k7", "sum_{k<=(p-3)/4} C(4k,2k) / 8^k, p = 7 (mod 8)",
                   [](std::uint64_t p) { return p % 8 == 7; },
                   {part("sum", always(), [](Env& e) { return e.sum(4, 2, e.r(Rational(1, 8)), (e.p() - 3) / 4); },
                         {row("p = 7 (mod 8)", always(), constant(0))})});
}

Statement thm_23() {
  auto disc = [](Env& e) {
    const Residue P = e.res("P"), Q = e.res("Q");
    return P * P - Q * 4;
  };
  auto s = statement(
      "thm-2.3", "vanishing C(4k,2k) sums when (Q/p) = 1", odd_prime,
      {part("(4Q-P^2)/p = -1", [=](Env& e) { return legendre(-disc(e)) == -1; },
            [](Env& e) { return s4(e, e.res("P") * e.res("P") / (e.res("Q") * 64)); },
            {row("((4Q-P^2)/p) = -1", always(), constant(0))}),
       part("(P^2-4Q)/p = -1", [=](Env& e) { return legendre(disc(e)) == -1; },
            [](Env& e) { return s4(e, e.res("Q") / (e.res("P") * e.res("P") * 4)); },
            {row("((P^2-4Q)/p) = -1", always(), constant(0))})});
  s.sampler = rational_sampler({"P", "Q"});
  s.tuple_ok = [=](Env& e) {
    const Residue P = e.res("P"), Q = e.res("Q");
    return !P.is_zero() && !Q.is_zero() && !disc(e).is_zero() && legendre(Q) == 1;
  };
  return s;
}

Statement thm_24() {
  return statement(
      "thm-2.4", "sum C(4k,2k) / (-16)^k", [](std::uint64_t p) { return p > 5; },
      {part("sum", always(), [](Env& e) { return s4(e, Rational(-1, 16)); },
            {class_row("p = 1 (mod 8)", 8, {1},
                       [](Env& e) { return pw(e, 2, (e.p() - 1) / 4) * sgn_pow((e.p() - 1) / 8); }),
             class_row("p = 3 (mod 8)", 8, {3},
                       [](Env& e) { return pw(e, 2, (e.p() - 3) / 4) * sgn_pow((e.p() - 3) / 8); }),
             class_row("p = 5 (mod 8)", 8, {5}, constant(0)),
             class_row("p = 7 (mod 8)", 8, {7},
                       [](Env& e) { return pw(e, 2, (e.p() - 3) / 4) * sgn_pow((e.p() + 1) / 8); })})});
}

Statement thm_25() {
  auto s = [](Env& e) { return sgn_pow((e.p() + 5) / 10); };
  auto main = [=](Env& e) { return pw(e, 5, e.p() / 4) * s(e); };
  auto twice = [=](Env& e) { return pw(e, 5, (e.p() - 3) / 4) * (2 * s(e)); };
  return statement(
      "thm-2.5", "sums of C(4k,2k) / (-64)^k and (-4)^k", [](std::uint64_t p) { return p > 5; },
      {part("1/(-64)^k", always(), [](Env& e) { return s4(e, Rational(-1, 64)); },
            {class_row("p = 1,3,7,9 (mod 20)", 20, {1, 3, 7, 9}, main),
             class_row("p = 11,19 (mod 20)", 20, {11, 19}, twice),
             class_row("p = 13,17 (mod 20)", 20, {13, 17}, constant(0))}),
       part("1/(-4)^k", always(), [](Env& e) { return s4(e, Rational(-1, 4)); },
            {class_row("p = 1,9,11,19 (mod 20)", 20, {1, 9, 11, 19}, main),
             class_row("p = 3,7 (mod 20)", 20, {3, 7}, [=](Env& e) { return -twice(e); }),
             class_row("p = 13,17 (mod 20)", 20, {13, 17}, constant(0))})});
}

Pred and_mod4(std::uint64_t r, Pred pred) {
  return [r, pred = std::move(pred)](Env& e) { return e.p() % 4 == r && pred(e); };
}

Statement thm_26() {
  auto q1 = [](Env& e) { return pw(e, 17, (e.p() - 1) / 4); };
  auto q3 = [](Env& e) { return pw(e, 17, (e.p() - 3) / 4); };
  return statement(
      "thm-2.6", "sum C(4k,2k) (-1)^k", [](std::uint64_t p) { return p != 17; },
      {part("sum", always(), [](Env& e) { return s4(e, e.r(-1)); },
            {row("p = 1 (mod 4), p = +-3,+-5,+-6,+-7 (mod 17)", and_mod4(1, pm_mod_class(17, {3, 5, 6, 7})),
                 constant(0)),
             row("p = 1 (mod 4), p = +-1,+-4 (mod 17)", and_mod4(1, pm_mod_class(17, {1, 4})), q1),
             row("p = 1 (mod 4), p = +-2,+-8 (mod 17)", and_mod4(1, pm_mod_class(17, {2, 8})),
                 [=](Env& e) { return -q1(e); }),
             row("p = 3 (mod 4), p = +-1,+-4 (mod 17)", and_mod4(3, pm_mod_class(17, {1, 4})), q3),
             row("p = 3 (mod 4), p = +-2,+-8 (mod 17)", and_mod4(3, pm_mod_class(17, {2, 8})),
                 [=](Env& e) { return -q3(e); }),
             row("p = 3 (mod 4), p = +-3,+-5 (mod 17)", and_mod4(3, pm_mod_class(17, {3, 5})),
                 [=](Env& e) { return q3(e) * 4; }),
             row("p = 3 (mod 4), p = +-6,+-7 (mod 17)", and_mod4(3, pm_mod_class(17, {6, 7})),
                 [=](Env& e) { return q3(e) * -4; })})});
}

Statement thm_27() {
  auto q1 = [](Env& e) { return pw(e, 13, (e.p() - 1) / 4); };
  auto q3 = [](Env& e) { return pw(e, 13, (e.p() - 3) / 4); };
  return statement(
      "thm-2.7", "(3/p) sum C(4k,2k) / (-36)^k", [](std::uint64_t p) { return p != 3 && p != 13; },
      {part("(3/p) sum", always(), [](Env& e) { return leg(e, 3) * s4(e, Rational(-1, 36)); },
            {class_row("p = 1,9,-23 (mod 52)", 52, {1, 9, -23}, q1),
             class_row("p = -3,17,25 (mod 52)", 52, {-3, 17, 25}, [=](Env& e) { return -q1(e); }),
             class_row("p = -1,-9,23 (mod 52)", 52, {-1, -9, 23}, [=](Env& e) { return q3(e) * 3; }),
             class_row("p = 3,-17,-25 (mod 52)", 52, {3, -17, -25}, [=](Env& e) { return q3(e) * -3; }),
             class_row("p = 5,-7,-11,-15,-19,21 (mod 52)", 52, {5, -7, -11, -15, -19, 21}, constant(0)),
             class_row("p = -5,7,11 (mod 52)", 52, {-5, 7, 11}, [=](Env& e) { return q3(e) * 2; }),
             class_row("p = 15,19,-21 (mod 52)", 52, {15, 19, -21}, [=](Env& e) { return q3(e) * -2; })})});
}

Statement thm_28() {
  auto t = [](Env& e) { return sgn_pow(e.p() / 3); };
  auto half_y = [=](const QuadForm& f) {
    return [=](Env& e) {
      return agreed_value(
          e, e.reps(f), [](const Representation&) { return true; },
          [&](const Representation& r) { return e.r(t(e) * minus_one_pow(r.y / 2)); });
    };
  };
  return statement(
      "thm-2.8", "sum C(4k,2k) / (-144)^k",
      [](std::uint64_t p) { return in_classes(p, 40, {1, 9, 11, 13, 19, 37}); },
      {part("sum", always(), [](Env& e) { return s4(e, Rational(-1, 144)); },
            {class_row("p = x^2+10y^2 = 1,9 (mod 40)", 40, {1, 9}, half_y(QuadForm{1, 0, 10})),
             class_row("p = x^2+10y^2 = 11,19 (mod 40), 4 | x-y", 40, {11, 19},
                       [=](Env& e) {
                         return agreed_value(
                             e, e.reps(QuadForm{1, 0, 10}),
                             [](const Representation& r) { return floor_mod(r.x - r.y, 4) == 0; },
                             [&](const Representation& r) { return e.r(r.y) / e.r(r.x) * t(e); });
                       }),
             class_row("p = 5x^2+2y^2 = 13,37 (mod 40)", 40, {13, 37}, half_y(QuadForm{5, 0, 2}))})});
}

Statement thm_29() {
  auto a2 = [](Env& e) { return e.res("a") * e.res("a"); };
  auto s = statement("thm-2.9", "sum C(4k,2k) a^{2k}", odd_prime,
                     {part("sum", always(), [=](Env& e) { return s4(e, a2(e)); },
                           {row("((1-16a^2)/p) = -1", [=](Env& e) { return legendre(e.r(1) - a2(e) * 16) == -1; },
                                constant(0)),
                            row("((1-16a^2)/p) = 1", [=](Env& e) { return legendre(e.r(1) - a2(e) * 16) == 1; },
                                [](Env& e) { return leg(e, e.r(1) - e.res("a") * 4); })})});
  s.sampler = rational_sampler({"a"});
  s.tuple_ok = [=](Env& e) { return !(a2(e) * 16 - 1).is_zero(); };
  return s;
}

Statement cor_22_mod15() {
  return statement("cor-2.2-mod15", "sum C(4k,2k)", [](std::uint64_t p) { return p > 5; },
                   {part("sum", always(), [](Env& e) { return s4(e, e.r(1)); },
                         {class_row("p = 7,11,13,14 (mod 15)", 15, {7, 11, 13, 14}, constant(0)),
                          class_row("p = 1,4 (mod 15)", 15, {1, 4}, constant(1)),
                          class_row("p = 2,8 (mod 15)", 15, {2, 8}, constant(-1))})});
}

Statement cor_23() {
  return statement("cor-2.3", "sum C(4k,2k) 4^k", [](std::uint64_t p) { return p > 7; },
                   {part("sum", always(), [](Env& e) { return s4(e, e.r(4)); },
                         {class_row("p = 1,2,4 (mod 7)", 7, {1, 2, 4}, constant(1)),
                          class_row("p = 3,5,6 (mod 7)", 7, {3, 5, 6}, constant(0))})});
}

Statement cor_24() {
  return statement("cor-2.4", "sum C(4k,2k) / 4^k", [](std::uint64_t p) { return p > 3; },
                   {part("sum", always(), [](Env& e) { return s4(e, Rational(1, 4)); },
                         {class_row("p = 1 (mod 3)", 3, {1}, [](Env& e) { return e.r(sgn_pow((e.p() - 1) / 2)); }),
                          class_row("p = 2 (mod 3)", 3, {2}, constant(0))})});
}

std::int64_t bm_disc(Env& e) {
  const std::int64_t b = e.int_param("b"), m = e.int_param("m");
  return b * b + 4 * m * m;
}

Statement thm_210() {
  auto residue_disc = [](Env& e) { return jacobi(bm_disc(e), e.ip()) == 1; };
  std::vector<Row> rows{
      row("2 does not divide b, ((b^2+4m^2)/p) = 1",
          [=](Env& e) { return e.int_param("b") % 2 != 0 && residue_disc(e); },
          [](Env& e) {
            const std::int64_t b = e.int_param("b"), m = e.int_param("m"), D = bm_disc(e);
            return sign_invariant(e, [=](std::int64_t c, std::int64_t d) {
              return static_cast<std::int64_t>(jacobi(b * c + 2 * m * d, D));
            });
          }),
      row("2 || b, ((b^2+4m^2)/p) = 1", [=](Env& e) { return floor_mod(e.int_param("b"), 4) == 2 && residue_disc(e); },
          [](Env& e) {
            const std::int64_t h = e.int_param("b") / 2, m = e.int_param("m");
            const std::int64_t M = (h * h + m * m) / 2;
            return sign_invariant(e, [=](std::int64_t c, std::int64_t d) {
              const std::int64_t t = h * c + m * d;
              return static_cast<std::int64_t>(minus_one_pow((t * t - 1) / 8 + d / 2) * jacobi(t, M));
            });
          }),
      row("4 | b, ((b^2+4m^2)/p) = 1", [=](Env& e) { return floor_mod(e.int_param("b"), 4) == 0 && residue_disc(e); },
          [](Env& e) {
            const std::int64_t h = e.int_param("b") / 2, m = e.int_param("m");
            return sign_invariant(e, [=](std::int64_t c, std::int64_t d) {
              return static_cast<std::int64_t>(jacobi(m * c - h * d, h * h + m * m));
            });
          }),
      row("((b^2+4m^2)/p) = -1", [](Env& e) { return jacobi(bm_disc(e), e.ip()) == -1; }, constant(0)),
  };
  auto s = statement(
      "thm-2.10", "C(4k,2k) sums with ratios -b^2/(64m^2) and -m^2/(4b^2), p = 1 (mod 4)",
      [](std::uint64_t p) { return p % 4 == 1; },
      {part("(m/p) sum (-b^2/(64m^2))^k", always(),
            [](Env& e) {
              const Residue b = e.res("b"), m = e.res("m");
              return leg(e, m) * s4(e, -(b * b) / (m * m * 64));
            },
            rows),
       part("(b/p) sum (-m^2/(4b^2))^k", always(),
            [](Env& e) {
              const Residue b = e.res("b"), m = e.res("m");
              return leg(e, b) * s4(e, -(m * m) / (b * b * 4));
            },
            rows)});
  s.sampler = Sampler{20, [](Rng& rng, std::uint64_t, std::size_t) {
                        std::int64_t b = 0, m = 0;
                        do {
                          b = random_int(rng, -30, 30);
                          m = random_int(rng, -30, 30);
                        } while (b == 0 || m == 0 || std::gcd(b, m) != 1);
                        return Params{{"b", Rational(b)}, {"m", Rational(m)}};
                      }};
  s.tuple_ok = [](Env& e) {
    return !e.res("b").is_zero() && !e.res("m").is_zero() && bm_disc(e) % e.ip() != 0;
  };
  return s;
}

Statement cor_25() {
  return statement(
      "cor-2.5", "sum C(4k,2k) (-1)^k, p = 1 (mod 4), p = +-1,+-2,+-4,+-8 (mod 17)",
      [](std::uint64_t p) { return p % 4 == 1 && in_pm_classes(p, 17, {1, 2, 4, 8}); },
      {part("sum", always(), [](Env& e) { return s4(e, e.r(-1)); },
            {row("p = c^2+d^2, 2 | d", always(), [](Env& e) {
              return sign_invariant(e, [](std::int64_t c, std::int64_t d) {
                return static_cast<std::int64_t>(jacobi(c - 4 * d, 17));
              });
            })})});
}

/// The sign attached to b + 2mi at p as used in the delta rows.
Residue delta_sign(Env& e) {
  const std::int64_t b = e.int_param("b"), m = e.int_param("m");
  UnityRoot4 q = quartic_symbol(GaussianInt{b, 2 * m}, e.modulus());
  if (jacobi(bm_disc(e), e.ip()) == -1) q = q * UnityRoot4{1};
  e.witness("(b+2mi/p)_4 formula gives " + q.to_string());
  if (q.exponent % 2 != 0) throw Error(ErrorCode::RowValueUndefined, "quartic formula is not real: " + q.to_string());
  return e.r(q.exponent == 0 ? 1 : -1);
}

Statement thm_211() {
  auto unit = [](Env& e, std::uint64_t shift) { return mod_pow(e.r(bm_disc(e)), (e.p() - shift) / 4); };
  auto table = [=](std::function<Residue(Env&)> c3_res, std::function<Residue(Env&)> c3_non) {
    auto res = [](Env& e) { return jacobi(bm_disc(e), e.ip()) == 1; };
    return std::vector<Row>{
        row("p = 1 (mod 4), ((b^2+4m^2)/p) = 1", and_mod4(1, res),
            [=](Env& e) { return delta_sign(e) * unit(e, 1); }),
        row("p = 3 (mod 4), ((b^2+4m^2)/p) = 1", and_mod4(3, res),
            [=](Env& e) { return delta_sign(e) * c3_res(e) * unit(e, 3); }),
        row("p = 1 (mod 4), ((b^2+4m^2)/p) = -1", and_mod4(1, [=](Env& e) { return !res(e); }), constant(0)),
        row("p = 3 (mod 4), ((b^2+4m^2)/p) = -1", and_mod4(3, [=](Env& e) { return !res(e); }),
            [=](Env& e) { return delta_sign(e) * c3_non(e) * unit(e, 3); }),
    };
  };
  auto b = [](Env& e) { return e.res("b"); };
  auto two_m = [](Env& e) { return e.res("m") * 2; };
  auto s = statement(
      "thm-2.11", "delta_p sign for C(4k,2k) sums", odd_prime,
      {part("(b/p) sum (-m^2/(4b^2))^k", always(),
            [](Env& e) {
              const Residue bb = e.res("b"), m = e.res("m");
              return leg(e, bb) * s4(e, -(m * m) / (bb * bb * 4));
            },
            table(b, two_m)),
       part("(m/p) sum (-b^2/(64m^2))^k", always(),
            [](Env& e) {
              const Residue bb = e.res("b"), m = e.res("m");
              return leg(e, m) * s4(e, -(bb * bb) / (m * m * 64));
            },
            table(two_m, [=](Env& e) { return -b(e); }))});
  s.sampler = Sampler{20, [](Rng& rng, std::uint64_t, std::size_t index) {
                        static constexpr std::pair<std::int64_t, std::int64_t> fixed[] = {
                            {1, 1}, {1, 2}, {3, 1}, {8, 1}};
                        if (index < std::size(fixed)) {
                          return Params{{"b", Rational(fixed[index].first)}, {"m", Rational(fixed[index].second)}};
                        }
                        std::int64_t bb = 0, m = 0;
                        while (bb == 0 || m == 0) {
                          bb = random_int(rng, -30, 30);
                          m = random_int(rng, -30, 30);
                        }
                        return Params{{"b", Rational(bb)}, {"m", Rational(m)}};
                      }};
  s.tuple_ok = [](Env& e) {
    return !e.res("b").is_zero() && !e.res("m").is_zero() && bm_disc(e) % e.ip() != 0;
  };
  return s;
}

Statement thm_212() {
  auto sq = [](Env& e) { return e.res("a") * e.res("a") * 16; };
  auto j_minus = [=](Env& e) { return legendre(e.r(1) - sq(e)); };
  auto j_plus = [=](Env& e) { return legendre(e.r(1) + sq(e)); };
  auto A = [](Env& e) { return leg(e, e.r(1) - e.res("a") * 4); };
  auto B = [](Env& e) {
    const std::int64_t a = e.int_param("a");
    return sign_invariant(e, [a](std::int64_t c, std::int64_t d) {
      return static_cast<std::int64_t>(jacobi(c - 4 * a * d, 16 * a * a + 1));
    });
  };
  auto when = [=](int jm, int jp) { return [=](Env& e) { return j_minus(e) == jm && j_plus(e) == jp; }; };
  auto s = statement("thm-2.12", "2 sum C(8k,4k) a^{4k}, p = 1 (mod 4)", [](std::uint64_t p) { return p % 4 == 1; },
                     {part("2 sum", always(),
                           [](Env& e) {
                             const Residue a = e.res("a");
                             return e.sum(8, 4, mod_pow(a, 4), e.p() / 8) * 2;
                           },
                           {row("((1-16a^2)/p) = ((1+16a^2)/p) = 1", when(1, 1), [=](Env& e) { return A(e) + B(e); }),
                            row("((1-16a^2)/p) = 1, ((1+16a^2)/p) = -1", when(1, -1), A),
                            row("((1-16a^2)/p) = -1, ((1+16a^2)/p) = 1", when(-1, 1), B),
                            row("((1-16a^2)/p) = ((1+16a^2)/p) = -1", when(-1, -1), constant(0))})});
  s.sampler = integer_sampler({"a"}, -30, 30);
  s.tuple_ok = [=](Env& e) { return j_minus(e) != 0 && j_plus(e) != 0; };
  return s;
}

Statement cor_27() {
  auto B = [](Env& e) {
    return sign_invariant(e, [](std::int64_t c, std::int64_t d) {
      return static_cast<std::int64_t>(jacobi(c - 4 * d, 17));
    });
  };
  auto when = [](int j15, int j17) {
    return [=](Env& e) { return jacobi(e.ip(), 15) == j15 && jacobi(e.ip(), 17) == j17; };
  };
  auto A = [](Env& e) { return e.r(jacobi(e.ip(), 3)); };
  return statement("cor-2.7", "2 sum C(8k,4k), p = 1 (mod 4)",
                   [](std::uint64_t p) { return p % 4 == 1 && p != 5 && p != 17; },
                   {part("2 sum", always(), [](Env& e) { return e.sum(8, 4, e.r(1), e.p() / 8) * 2; },
                         {row("(p/15) = (p/17) = 1", when(1, 1), [=](Env& e) { return A(e) + B(e); }),
                          row("(p/15) = 1, (p/17) = -1", when(1, -1), A),
                          row("(p/15) = -1, (p/17) = 1", when(-1, 1), B),
                          row("(p/15) = (p/17) = -1", when(-1, -1), constant(0))})});
}

Statement lem_21() {
  auto at = [](std::string label, std::uint64_t (*index)(std::uint64_t)) {
    return part(
        std::move(label), always(),
        [=](Env& e) { return lucas_u(e.res("P"), e.res("Q"), 2 * index(e.p()) + 1); },
        {row("binomial expansion", always(), [=](Env& e) {
          const std::uint64_t n = index(e.p());
          const Residue P2 = e.res("P") * e.res("P"), negQ = -e.res("Q");
          std::vector<Residue> fact{e.r(1)};
          for (std::uint64_t i = 1; i <= 2 * n; ++i) fact.push_back(fact.back() * static_cast<std::int64_t>(i));
          Residue s = e.r(0);
          for (std::uint64_t k = 0; k <= n; ++k) {
            s += fact[n + k] / (fact[n - k] * fact[2 * k]) * mod_pow(negQ, n - k) * mod_pow(P2, k);
          }
          return s;
        })});
  };
  auto s = statement("lem-2.1", "U_{2n+1}(P,Q) as a binomial sum", odd_prime,
                     {at("n = [p/4]", [](std::uint64_t p) { return p / 4; }),
                      at("n = [p/3]", [](std::uint64_t p) { return p / 3; })});
  s.sampler = rational_sampler({"P", "Q"});
  return s;
}

Statement lem_24() {
  auto at = [](std::string label, std::int64_t shift) {
    return part(
        std::move(label), always(),
        [=](Env& e) { return lucas_u(e.r(1), e.r(1), static_cast<std::uint64_t>(e.ip() + shift)); },
        {row("(-1)^{n-1} (n/3)", always(), [=](Env& e) {
          const std::int64_t n = e.ip() + shift;
          return e.r(minus_one_pow(n - 1) * jacobi(n, 3));
        })});
  };
  return statement("lem-2.4", "U_n(1,1) = (-1)^{n-1} (n/3)", odd_prime,
                   {at("n = p-1", -1), at("n = p", 0), at("n = p+1", 1)});
}

Statement lem_25() {
  auto jd = [](Env& e) {
    const Residue P = e.res("P"), c = e.res("c");
    return legendre(P * P - c * c * 4);
  };
  auto sym = [](Env& e) { return leg(e, e.res("P") - e.res("c") * 2); };
  auto s = statement(
      "lem-2.5", "U_{(p+-1)/2}(P,c^2)", odd_prime,
      {part("U_{(p+1)/2}", always(),
            [](Env& e) { return lucas_u(e.res("P"), e.res("c") * e.res("c"), (e.p() + 1) / 2); },
            {row("((P^2-4Q)/p) = 1", [=](Env& e) { return jd(e) == 1; }, sym),
             row("((P^2-4Q)/p) = -1", [=](Env& e) { return jd(e) == -1; }, constant(0))}),
       part("U_{(p-1)/2}", always(),
            [](Env& e) { return lucas_u(e.res("P"), e.res("c") * e.res("c"), (e.p() - 1) / 2); },
            {row("((P^2-4Q)/p) = 1", [=](Env& e) { return jd(e) == 1; }, constant(0)),
             row("((P^2-4Q)/p) = -1", [=](Env& e) { return jd(e) == -1; },
                 [=](Env& e) { return sym(e) / e.res("c"); })})});
  s.sampler = rational_sampler({"P", "c"});
  s.tuple_ok = [=](Env& e) { return !e.res("c").is_zero() && jd(e) != 0; };
  return s;
}

}  // namespace

Statement shift_lemma(std::string id, std::string title, ShiftLemma which, std::uint64_t min_p) {
  return statement(std::move(id), title, [min_p](std::uint64_t p) { return p >= min_p; },
                   {exact_part("first failing k (0 if none)", always(),
                               [which](Env& e) {
                                 const auto v = binom_shift_lemma_check(which, e.modulus());
                                 return BigInt(v.pass ? 0 : v.first_bad_k);
                               },
                               {exact_row("every k in range", always(), [](Env&) { return BigInt(0); })})});
}

void add_section2_statements(std::vector<Statement>& out) {
  out.push_back(lem_21());
  out.push_back(shift_lemma("lem-2.2", "C([p/4]+k,[p/4]-k) = C(4k,2k)/(-64)^k", ShiftLemma::QuarterShift, 3));
  out.push_back(shift_lemma("lem-2.3", "C((p-1)/2,k) = C(2k,k)/(-4)^k", ShiftLemma::HalfBinomial, 3));
  out.push_back(thm_21());
  out.push_back(lem_24());
  out.push_back(cor_21());
  out.push_back(thm_22_i());
  out.push_back(thm_22_ii());
  out.push_back(cor_22_8k7());
  out.push_back(thm_23());
  out.push_back(thm_24());
  out.push_back(thm_25());
  out.push_back(thm_26());
  out.push_back(thm_27());
  out.push_back(thm_28());
  out.push_back(lem_25());
  out.push_back(thm_29());
  out.push_back(cor_22_mod15());
  out.push_back(cor_23());
  out.push_back(cor_24());
  out.push_back(thm_210());
  out.push_back(cor_25());
  out.push_back(thm_211());
  out.push_back(thm_212());
  out.push_back(cor_27());
}

}  // namespace binomcong::detail
