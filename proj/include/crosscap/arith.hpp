#pragma once

#include <cstdint>
#include <numeric>

#include "crosscap/error.hpp"

namespace crosscap {

using Int = std::int64_t;

// Checked 64-bit arithmetic. Overflow raises Errc::Overflow.

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer addition overflow");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer subtraction overflow");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer multiplication overflow");
  return out;
}

inline Int abs_diff_twice(Int x, Int y) {
  Int d = checked_sub(x, checked_mul(2, y));
  return d < 0 ? -d : d;
}

inline bool is_even(Int n) { return n % 2 == 0; }

/// Inverse of `a` modulo `modulus` in [0, modulus). The residue ring mod 1
/// is {0}, so the inverse there is 0.
inline Int mod_inverse(Int a, Int modulus) {
  if (modulus <= 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  if (modulus == 1) return 0;
  Int r0 = modulus, r1 = ((a % modulus) + modulus) % modulus;
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Int quot = r0 / r1;
    const Int r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    const Int s2 = s0 - quot * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw Error(Errc::NotCoprime, "no modular inverse");
  return ((s0 % modulus) + modulus) % modulus;
}

}  // namespace crosscap
