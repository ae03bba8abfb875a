#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace binomcong {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// v mod m in [0, m).
inline std::uint64_t big_mod(const BigInt& v, std::uint64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

inline BigInt big_pow(std::int64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

}  // namespace binomcong
