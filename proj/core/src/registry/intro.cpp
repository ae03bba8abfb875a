#include "support.hpp"

namespace binomcong::detail {

namespace {

Statement zps() {
  auto lhs = [](Env& e) {
    Residue s = e.r(0);
    Residue pow2 = e.r(1);
    for (std::uint64_t k = 1; k < e.p(); ++k) {
      pow2 = pow2 * 2;
      s += pow2 * binom_mod_general(3 * k, k, e.modulus());
    }
    return s;
  };
  return statement("intro-zps", "sum_{k=1}^{p-1} 2^k C(3k,k)", [](std::uint64_t p) { return p > 5; },
                   {part("sum", always(), lhs, {row("p > 5", always(), [](Env& e) {
                                               return e.r(Rational(6, 5)) * (e.r(sgn_pow((e.p() - 1) / 2)) - 1);
                                             })})});
}

Statement intro_11() {
  auto lhs = [](Env& e) { return e.sum(4, 2, e.r(-1), (e.p() - 3) / 4); };
  auto unit = [](Env& e) { return pw(e, 17, (e.p() - 3) / 4); };
  return statement("intro-1.1", "sum_{k<=(p-3)/4} (-1)^k C(4k,2k), p = 3 (mod 4)",
                   [](std::uint64_t p) { return p % 4 == 3; },
                   {part("sum", always(), lhs,
                         {pm_class_row("p = +-1,+-4 (mod 17)", 17, {1, 4}, unit),
                          pm_class_row("p = +-2,+-8 (mod 17)", 17, {2, 8}, [=](Env& e) { return -unit(e); }),
                          pm_class_row("p = +-3,+-5 (mod 17)", 17, {3, 5}, [=](Env& e) { return unit(e) * 4; }),
                          pm_class_row("p = +-6,+-7 (mod 17)", 17, {6, 7},
                                       [=](Env& e) { return unit(e) * -4; })})});
}

Statement intro_12() {
  auto s = statement(
      "intro-1.2", "sum_{k<=(p-1)/4} C(4k,2k) (-a^2)^k, p = 1 (mod 4)", [](std::uint64_t p) { return p % 4 == 1; },
      {part("sum", always(),
            [](Env& e) {
              const Residue a = e.res("a");
              return e.sum(4, 2, -(a * a), (e.p() - 1) / 4);
            },
            {row("((16a^2+1)/p) = 1", [](Env& e) { return legendre(e.res("a") * e.res("a") * 16 + 1) == 1; },
                 [](Env& e) {
                   const std::int64_t a = e.int_param("a");
                   return sign_invariant(e, [a](std::int64_t c, std::int64_t d) {
                     return static_cast<std::int64_t>(jacobi(c - 4 * a * d, 16 * a * a + 1));
                   });
                 }),
             row("((16a^2+1)/p) = -1", [](Env& e) { return legendre(e.res("a") * e.res("a") * 16 + 1) == -1; },
                 constant(0))})});
  s.sampler = integer_sampler({"a"}, -30, 30);
  s.tuple_ok = [](Env& e) {
    const Residue a = e.res("a");
    return !a.is_zero() && !(a * a * 16 + 1).is_zero();
  };
  return s;
}

Statement intro_13() {
  auto lhs = [](Env& e) { return e.sum(3, 1, e.r(1), e.p() / 3); };
  return statement("intro-1.3", "sum_{k<=[p/3]} C(3k,k)",
                   [](std::uint64_t p) { return p > 3; },
                   {part("(p/23) = -1", [](Env& e) { return jacobi(e.ip(), 23) == -1; }, lhs,
                         {unique_cubic_root_row([](Env& e) { return e.r(1); })}),
                    part("(p/23) = 1",
                         [](Env& e) { return jacobi(e.ip(), 23) == 1 && e.p() != 13 && e.p() != 29; }, lhs,
                         d207_rows())});
}

Statement intro_14() {
  return statement("intro-1.4", "sum_{k<=(p-1)/12} C(12k,6k) / (-4096)^k, p = 13 (mod 24)",
                   [](std::uint64_t p) { return p % 24 == 13; },
                   {part("sum", always(),
                         [](Env& e) { return e.sum(12, 6, e.r(Rational(-1, 4096)), (e.p() - 1) / 12); },
                         {row("p = 13 (mod 24)", always(), constant(0))})});
}

}  // namespace

void add_intro_statements(std::vector<Statement>& out) {
  out.push_back(zps());
  out.push_back(intro_11());
  out.push_back(intro_12());
  out.push_back(intro_13());
  out.push_back(intro_14());
}

}  // namespace binomcong::detail
