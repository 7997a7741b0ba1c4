#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "jacobi49/errors.hpp"

namespace jacobi49 {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

// a += b * c
inline void fma_into(Int& acc, Int b, Int c) { acc = add(acc, mul(b, c)); }

}  // namespace checked

// Floor division, rounding toward negative infinity.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Least nonnegative residue.
constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Exact division; throws InvariantViolation carrying `what` when b does not divide a.
inline Int exact_div(Int a, Int b, const char* what) {
  if (b == 0 || a % b != 0)
    throw InvariantViolation(std::string("non-exact division: ") + what + " (" + std::to_string(a) +
                             " / " + std::to_string(b) + ")");
  return a / b;
}

__extension__ typedef unsigned __int128 uint128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace jacobi49
