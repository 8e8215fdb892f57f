#pragma once

#include <cstdint>
#include <string>

#include "pqech/errors.hpp"

namespace pqech {

using Int = std::int64_t;

namespace arith {

[[noreturn]] inline void overflow(const char* op) {
  throw OverflowError(std::string("integer overflow in ") + op);
}

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

template <typename... Rest>
Int add(Int a, Int b, Rest... rest) {
  return add(add(a, b), rest...);
}

template <typename... Rest>
Int mul(Int a, Int b, Rest... rest) {
  return mul(mul(a, b), rest...);
}

/// Floor of the square root, exact for every nonnegative Int.
Int isqrt(Int n);

/// Floor division (rounds toward negative infinity); b != 0.
Int floor_div(Int a, Int b);

/// Least nonnegative residue; m > 0.
Int mod(Int a, Int m);

Int gcd(Int a, Int b);

}  // namespace arith
}  // namespace pqech
