#pragma once

// Positive definite binary quadratic forms [a,b,c] = ax^2 + bxy + cy^2.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binomcong/modarith.hpp"

namespace binomcong {

struct QuadForm {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  std::int64_t discriminant() const noexcept { return b * b - 4 * a * c; }
  std::int64_t operator()(std::int64_t x, std::int64_t y) const noexcept {
    return a * x * x + b * x * y + c * y * y;
  }
  QuadForm opposite() const noexcept { return {a, -b, c}; }
  bool is_reduced() const noexcept;
  std::string to_string() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
  friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

struct Representation {
  std::int64_t x;
  std::int64_t y;
  QuadForm form;
  std::int64_t p;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Reduced representative via the moves [a,b,c] -> [c,-b,a] and
/// [a,b,c] -> [a, 2ak+b, ak^2+bk+c]. NonNegativeDiscriminant for D >= 0,
/// InvalidArgument for a <= 0.
QuadForm reduce(QuadForm f);

/// Reduced primitive forms of discriminant D, ordered by (a, b).
std::vector<QuadForm> class_group(std::int64_t D);

/// All (x,y) with f(x,y) = n, sorted. n > 0.
std::vector<Representation> represent(const QuadForm& f, std::int64_t n);

/// p = c^2 + d^2 with c > 0 odd, d > 0 even. NotOneModFour otherwise.
std::pair<std::int64_t, std::int64_t> two_squares(PrimeModulus p);

struct Classification {
  std::size_t index;  // into targets
  std::vector<Representation> witnesses;
};

/// The target representing n, with opposite forms and equivalent targets
/// sharing a bucket. InvalidDiscriminant if a target's discriminant is not D,
/// NoneRepresents / MultipleClassesRepresent when the answer is not unique.
Classification classify_by_class(std::int64_t n, std::int64_t D, const std::vector<QuadForm>& targets);

/// Bucket key: reduce(f) with the sign of b dropped.
QuadForm opposite_class_key(const QuadForm& f);

}  // namespace binomcong
