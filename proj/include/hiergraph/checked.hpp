#pragma once

#include <cstdint>
#include <numeric>

#include "hiergraph/error.hpp"

// Overflow-checked 64-bit arithmetic. Wraparound is never silent.
namespace hiergraph::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

// Floor-style modulus: result in [0, m) for m > 0.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return mul(a / std::gcd(a, b), b);
}

}  // namespace hiergraph::checked
