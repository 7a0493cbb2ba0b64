#pragma once

// Brute-force reference computations for the tests. Nothing here goes
// through the library's continued-fraction or modular-inverse code.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;

struct Pinch {
  Int t, h;
  Int p_minus_2t, q_minus_2h;
};

// Searches t in [0, p) with t q = -1 (mod p) and h in [0, q) with h p = 1 (mod q).
inline Pinch pinch(Int p, Int q) {
  Int t = 0;
  while ((t * q + 1) % p != 0) ++t;
  Int h = 0;
  while ((h * p - 1) % q != 0 && q != 1) ++h;
  return {t, h, p - 2 * t, q - 2 * h};
}

inline Int abs(Int x) { return x < 0 ? -x : x; }

inline std::pair<Int, Int> order(Int a, Int b) {
  if (a % 2 != b % 2) return a % 2 == 0 ? std::pair{a, b} : std::pair{b, a};
  return a >= b ? std::pair{a, b} : std::pair{b, a};
}

// Number of pinches taking (a, b) to (0, 1); a even.
inline Int steps_to_zero(Int a, Int b) {
  Int n = 0;
  while (!(a == 0 && b == 1)) {
    const Pinch pc = pinch(a, b);
    a = abs(pc.p_minus_2t);
    b = abs(pc.q_minus_2h);
    ++n;
  }
  return n;
}

// Pinches until the first unknot; returns (count, l).
inline std::pair<Int, Int> steps_to_unknot(Int p, Int q) {
  Int n = 0;
  while (p > 1 && q > 1) {
    const Pinch pc = pinch(p, q);
    std::tie(p, q) = order(abs(pc.p_minus_2t), abs(pc.q_minus_2h));
    ++n;
  }
  return {n, p};
}

inline Int gamma3(Int p, Int q) {
  if (p % 2 == 0 || q % 2 == 0) return steps_to_zero(p, q);
  Int x = 1;
  while ((x * q + 1) % p != 0) ++x;
  return x % 2 == 0 ? steps_to_zero(p * q - 1, p * p) : steps_to_zero(p * q + 1, p * p);
}

// Value of a nonnegative coefficient sequence by forward convergent products;
// returns {num, den} unreduced (they are coprime for valid input).
inline std::pair<Int, Int> evaluate(const std::vector<Int>& c) {
  Int p0 = 1, q0 = 0, p1 = c[0], q1 = 1;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const Int p2 = c[i] * p1 + p0;
    const Int q2 = c[i] * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return {p1, q1};
}

// Normalized nontrivial pairs with 2 <= p, q <= max, brute-force filter.
inline std::vector<std::pair<Int, Int>> knots(Int max) {
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 2; p <= max; ++p) {
    for (Int q = 2; q <= max; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const bool even_first = p % 2 == 0 && q % 2 == 1;
      const bool odd_larger = p % 2 == 1 && q % 2 == 1 && p > q;
      if (even_first || odd_larger) out.emplace_back(p, q);
    }
  }
  return out;
}

}  // namespace oracle

namespace oracle {

// c[i] + 1 / (c[i+1] + ...) evaluated head-first by recursion.
inline std::pair<Int, Int> nested(const std::vector<Int>& c, std::size_t i = 0) {
  if (i + 1 == c.size()) return {c[i], 1};
  const auto [n, d] = nested(c, i + 1);
  const Int num = c[i] * n + d;
  const Int g = std::gcd(num, n);
  return {num / g, n / g};
}

}  // namespace oracle
