#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "crosscap/arith.hpp"

namespace crosscap {

/// Exact nonnegative rational, always stored in lowest terms (0 is 0/1).
class Fraction {
 public:
  Fraction() = default;
  /// Reduces by gcd. Throws InvalidArgument for a negative numerator or
  /// denominator and ZeroDenominator for den == 0.
  Fraction(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& x);

/// Continued fraction [c0, ..., cm] in canonical form: c0 >= 0, interior
/// coefficients >= 1, and cm >= 2 whenever m >= 1. [0] and [1] are the
/// expansions of 0 and 1.
class ContinuedFraction {
 public:
  /// Throws NotCanonicalizable if `coeffs` is not canonical.
  explicit ContinuedFraction(std::vector<Int> coeffs);

  static bool is_canonical(std::span<const Int> coeffs) noexcept;

  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  /// Index m of the last coefficient.
  std::size_t last_index() const noexcept { return coeffs_.size() - 1; }
  bool is_integer() const noexcept { return coeffs_.size() == 1; }

  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
  friend auto operator<=>(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf);

struct Convergent {
  std::size_t index = 0;
  Fraction value;

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Canonical expansion by repeated Euclidean division.
ContinuedFraction cf_expand(const Fraction& x);

/// Evaluates a (not necessarily canonical) nonnegative coefficient sequence.
/// Throws ZeroDenominator when a nested denominator vanishes.
Fraction cf_value(std::span<const Int> coeffs);
Fraction cf_value(const ContinuedFraction& cf);

/// Rewrites a step result into canonical form using
///   [.., c_{m-2}, c_{m-1}, 0] = [.., c_{m-2}]
///   [.., c_{m-1}, 1]          = [.., c_{m-1} + 1]
/// Input must be canonical except that the last entry may be 0 or 1.
ContinuedFraction canonicalize(std::vector<Int> raw);

/// Convergents p_0/q_0, ..., p_m/q_m.
std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// [c0, ..., cm] -> canonical form of [c0, ..., cm - 2]. Undefined (throws
/// StepUndefined) when the value has denominator 2 or cf is [0] or [1].
ContinuedFraction step(const ContinuedFraction& cf);

/// N(a, b): number of steps taking a/b to 0. Requires an even numerator.
Int count_steps_to_zero(const Fraction& x);

struct IntegerReduction {
  Int count = 0;
  Int terminal = 0;

  friend bool operator==(const IntegerReduction&, const IntegerReduction&) = default;
};

/// Number of steps until the expansion first has a single entry [terminal].
IntegerReduction count_steps_to_integer(const Fraction& x);

}  // namespace crosscap
