#include "binomcong/qform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "binomcong/error.hpp"

namespace binomcong {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_definite(const QuadForm& f) {
  if (f.discriminant() >= 0) {
    throw Error(ErrorCode::NonNegativeDiscriminant, f.to_string() + " is not definite");
  }
  if (f.a <= 0) throw Error(ErrorCode::InvalidArgument, f.to_string() + " is not positive definite");
}

}  // namespace

bool QuadForm::is_reduced() const noexcept {
  if (a <= 0 || std::abs(b) > a || a > c) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

std::string QuadForm::to_string() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
}

QuadForm reduce(QuadForm f) {
  require_definite(f);
  for (;;) {
    // Bring b into (-a, a].
    const std::int64_t k = floor_div(f.a - f.b, 2 * f.a);
    f = {f.a, 2 * f.a * k + f.b, f.a * k * k + f.b * k + f.c};
    if (f.a > f.c) {
      f = {f.c, -f.b, f.a};
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

std::vector<QuadForm> class_group(std::int64_t D) {
  if (D >= 0) throw Error(ErrorCode::NonNegativeDiscriminant, "D = " + std::to_string(D));
  if (floor_mod(D, 4) > 1) {
    throw Error(ErrorCode::InvalidDiscriminant, "D = " + std::to_string(D) + " is not 0 or 1 mod 4");
  }
  std::vector<QuadForm> forms;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const QuadForm f{a, b, num / (4 * a)};
      if (!f.is_reduced()) continue;
      if (std::gcd(std::gcd(f.a, f.b), f.c) != 1) continue;
      forms.push_back(f);
    }
  }
  return forms;
}

std::vector<Representation> represent(const QuadForm& f, std::int64_t n) {
  require_definite(f);
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "represented integer must be positive");
  const std::int64_t D = f.discriminant();
  std::vector<Representation> reps;
  // Discriminant in x of a x^2 + b y x + (c y^2 - n) is D y^2 + 4 a n.
  const std::int64_t ybound = isqrt(4 * f.a * n / -D) + 1;
  for (std::int64_t y = -ybound; y <= ybound; ++y) {
    const std::int64_t disc = D * y * y + 4 * f.a * n;
    const std::int64_t s = isqrt(disc);
    if (s < 0 || s * s != disc) continue;
    for (const std::int64_t num : {-f.b * y + s, -f.b * y - s}) {
      if (num % (2 * f.a) != 0) continue;
      const std::int64_t x = num / (2 * f.a);
      if (f(x, y) == n) reps.push_back({x, y, f, n});
      if (s == 0) break;
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& l, const auto& r) {
    return std::pair(l.x, l.y) < std::pair(r.x, r.y);
  });
  return reps;
}

std::pair<std::int64_t, std::int64_t> two_squares(PrimeModulus pm) {
  const auto p = static_cast<std::int64_t>(pm.value());
  if (p % 4 != 1) throw Error(ErrorCode::NotOneModFour, std::to_string(p) + " is not 1 mod 4");
  // Cornacchia: Euclid on (p, sqrt(-1)) until the remainder drops below sqrt(p).
  std::int64_t r0 = p;
  std::int64_t r1 = static_cast<std::int64_t>(sqrt_mod(Residue(-1, pm))->value());
  const std::int64_t limit = isqrt(p);
  while (r1 > limit) {
    const std::int64_t t = r0 % r1;
    r0 = r1;
    r1 = t;
  }
  std::int64_t c = r1;
  std::int64_t d = isqrt(p - c * c);
  if (c % 2 == 0) std::swap(c, d);
  return {c, d};
}

QuadForm opposite_class_key(const QuadForm& f) {
  QuadForm r = reduce(f);
  r.b = std::abs(r.b);
  return r;
}

Classification classify_by_class(std::int64_t n, std::int64_t D, const std::vector<QuadForm>& targets) {
  std::optional<Classification> found;
  QuadForm found_key;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].discriminant() != D) {
      throw Error(ErrorCode::InvalidDiscriminant,
                  targets[i].to_string() + " does not have discriminant " + std::to_string(D));
    }
    auto reps = represent(targets[i], n);
    if (reps.empty()) continue;
    const QuadForm key = opposite_class_key(targets[i]);
    if (!found) {
      found = Classification{i, std::move(reps)};
      found_key = key;
    } else if (key != found_key) {
      throw Error(ErrorCode::MultipleClassesRepresent,
                  std::to_string(n) + " is represented by " + targets[found->index].to_string() +
                      " and " + targets[i].to_string());
    }
  }
  if (!found) {
    throw Error(ErrorCode::NoneRepresents,
                std::to_string(n) + " is not represented by any target of discriminant " + std::to_string(D));
  }
  return *found;
}

}  // namespace binomcong
