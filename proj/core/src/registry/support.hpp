#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "binomcong/binomsum.hpp"
#include "binomcong/combsum.hpp"
#include "binomcong/error.hpp"
#include "binomcong/lucas.hpp"
#include "binomcong/registry.hpp"

namespace binomcong::detail {

using ResidueFn = std::function<Residue(Env&)>;
using BigFn = std::function<BigInt(Env&)>;
using Pred = std::function<bool(Env&)>;

inline BigInt num(Residue r) { return BigInt(r.value()); }

inline Row row(std::string label, Pred fires, ResidueFn value) {
  return Row{std::move(label), std::move(fires), [value = std::move(value)](Env& e) { return num(value(e)); }};
}

inline Row exact_row(std::string label, Pred fires, BigFn value) {
  return Row{std::move(label), std::move(fires), std::move(value)};
}

inline Part part(std::string label, Pred applies, ResidueFn lhs, std::vector<Row> rows) {
  return Part{std::move(label), false, std::move(applies),
              [lhs = std::move(lhs)](Env& e) { return num(lhs(e)); }, std::move(rows)};
}

inline Part exact_part(std::string label, Pred applies, BigFn lhs, std::vector<Row> rows) {
  return Part{std::move(label), true, std::move(applies), std::move(lhs), std::move(rows)};
}

inline Pred always() { return [](Env&) { return true; }; }

/// p mod m is one of the listed classes (negative classes allowed).
inline bool in_classes(std::uint64_t p, std::int64_t m, std::initializer_list<std::int64_t> classes) {
  const auto r = floor_mod(static_cast<std::int64_t>(p), m);
  for (const auto c : classes) {
    if (floor_mod(c, m) == r) return true;
  }
  return false;
}

/// p = +-c mod m for some listed c.
inline bool in_pm_classes(std::uint64_t p, std::int64_t m, std::initializer_list<std::int64_t> classes) {
  for (const auto c : classes) {
    if (in_classes(p, m, {c, -c})) return true;
  }
  return false;
}

inline Pred mod_class(std::int64_t m, std::initializer_list<std::int64_t> classes) {
  std::vector<std::int64_t> cs(classes);
  return [m, cs](Env& e) {
    const auto r = floor_mod(e.ip(), m);
    for (const auto c : cs) {
      if (floor_mod(c, m) == r) return true;
    }
    return false;
  };
}

inline Pred pm_mod_class(std::int64_t m, std::initializer_list<std::int64_t> classes) {
  std::vector<std::int64_t> cs;
  for (const auto c : classes) cs.insert(cs.end(), {c, -c});
  return [m, cs](Env& e) {
    const auto r = floor_mod(e.ip(), m);
    for (const auto c : cs) {
      if (floor_mod(c, m) == r) return true;
    }
    return false;
  };
}

inline Row class_row(std::string label, std::int64_t m, std::initializer_list<std::int64_t> classes, ResidueFn v) {
  return row(std::move(label), mod_class(m, classes), std::move(v));
}

inline Row pm_class_row(std::string label, std::int64_t m, std::initializer_list<std::int64_t> classes,
                        ResidueFn v) {
  return row(std::move(label), pm_mod_class(m, classes), std::move(v));
}

inline ResidueFn constant(std::int64_t v) {
  return [v](Env& e) { return e.r(v); };
}

inline Residue pw(Env& e, std::int64_t base, std::uint64_t exp) { return mod_pow(e.r(base), exp); }

/// Legendre symbol of an integer mod p as a residue.
inline Residue leg(Env& e, std::int64_t a) { return e.r(jacobi(a, e.ip())); }
inline Residue leg(Env& e, Residue a) { return e.r(legendre(a)); }

inline int sgn_pow(std::uint64_t e) { return minus_one_pow(static_cast<std::int64_t>(e)); }

/// (p - (p/3)) / 3.
inline std::uint64_t third_index(std::uint64_t p) {
  const auto ip = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>((ip - jacobi(ip, 3)) / 3);
}

/// The c, d of p = c^2 + d^2 with d even, in every sign combination.
inline std::vector<std::pair<std::int64_t, std::int64_t>> two_square_variants(Env& e) {
  const auto [c, d] = two_squares(e.modulus());
  e.witness("p = c^2 + d^2 with (c,d) = (" + std::to_string(c) + "," + std::to_string(d) + ")");
  return {{c, d}, {c, -d}, {-c, d}, {-c, -d}};
}

/// Evaluates an integer-valued expression in c, d over all sign variants and
/// insists they agree.
template <typename F>
Residue sign_invariant(Env& e, F f) {
  const auto variants = two_square_variants(e);
  const std::int64_t first = f(variants[0].first, variants[0].second);
  for (const auto& [c, d] : variants) {
    const std::int64_t v = f(c, d);
    if (v != first) {
      throw Error(ErrorCode::RowValueUndefined,
                  "value depends on the signs of c, d: " + std::to_string(first) + " at (" +
                      std::to_string(variants[0].first) + "," + std::to_string(variants[0].second) +
                      ") but " + std::to_string(v) + " at (" + std::to_string(c) + "," + std::to_string(d) + ")");
    }
  }
  return e.r(first);
}

std::string describe(const Representation& r);

/// Values of f over the representations in `reps` accepted by `keep`; they
/// must coincide. Records the representations as witnesses.
Residue agreed_value(Env& e, const std::vector<Representation>& reps,
                     const std::function<bool(const Representation&)>& keep,
                     const std::function<Residue(const Representation&)>& f);

/// A block of rows keyed by which of a list of same-discriminant forms
/// represents p. Forms and their opposites represent the same primes; the
/// classification demands that a single class bucket represents p.
struct FormCase {
  std::string label;
  std::vector<QuadForm> forms;
  /// Value at a representation; empty means the constant `fixed`.
  std::function<Residue(Env&, const Representation&)> value;
  std::int64_t fixed = 0;
};

std::vector<Row> form_rows(std::int64_t D, std::vector<FormCase> cases);

/// Index into the flattened form list of `cases` representing p, plus the
/// form itself. Throws RowDispatchViolation when no or several classes do.
std::pair<std::size_t, QuadForm> classify(Env& e, std::int64_t D, const std::vector<FormCase>& cases);

/// (u x + v y) / (w y) at a representation.
inline std::function<Residue(Env&, const Representation&)> ratio_xy(std::int64_t u, std::int64_t v,
                                                                     std::int64_t w) {
  return [u, v, w](Env& e, const Representation& r) {
    return (e.r(u) * e.r(r.x) + e.r(v) * e.r(r.y)) / (e.r(w) * e.r(r.y));
  };
}

inline Residue lucas_u(Residue P, Residue Q, std::uint64_t n) { return lucas_uv_mod(P, Q, n).u; }
inline Residue lucas_v(Residue P, Residue Q, std::uint64_t n) { return lucas_uv_mod(P, Q, n).v; }

inline Statement statement(std::string id, std::string title, std::function<bool(std::uint64_t)> applies,
                           std::vector<Part> parts) {
  Statement s;
  s.id = std::move(id);
  s.title = std::move(title);
  s.applies = std::move(applies);
  s.parts = std::move(parts);
  return s;
}

/// Rows for sum_{k<=[p/3]} C(3k,k) by the classes of discriminant -207.
std::vector<Row> d207_rows();

/// Row requiring a unique root of (27a-4)x^3 + 3x + 1 mod p, a given by `a`.
Row unique_cubic_root_row(std::function<Residue(Env&)> a);

/// Exact part comparing the first failing k of a shift congruence with 0.
Statement shift_lemma(std::string id, std::string title, ShiftLemma which, std::uint64_t min_p);

// Samplers.
Rational random_rational(Rng& rng, std::int64_t num_bound = 40, std::int64_t den_bound = 12);
std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi);

Sampler rational_sampler(std::vector<std::string> names);
Sampler integer_sampler(std::vector<std::string> names, std::int64_t lo, std::int64_t hi);

// Statement tables by section.
void add_intro_statements(std::vector<Statement>& out);
void add_section2_statements(std::vector<Statement>& out);
void add_section3_statements(std::vector<Statement>& out);
void add_section4_statements(std::vector<Statement>& out);

}  // namespace binomcong::detail
