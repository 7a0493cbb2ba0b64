#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crosscap/knot.hpp"

namespace crosscap::verify {

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckOutcome {
  static constexpr std::size_t kMaxCounterexamples = 100;

  std::string check_name;
  std::string range_description;
  std::size_t cases_checked = 0;
  /// First kMaxCounterexamples failures in enumeration order.
  std::vector<Counterexample> counterexamples;
  std::size_t total_failures = 0;

  bool passed() const noexcept { return total_failures == 0; }
  bool truncated() const noexcept { return total_failures > counterexamples.size(); }
};

struct Mismatch {
  std::string expected;
  std::string actual;
};

/// Predicate for one knot: nullopt on success. An Error thrown by the
/// predicate is recorded as a counterexample.
using CaseFn = std::function<std::optional<Mismatch>(const TorusKnot&)>;

/// Runs `fn` over every knot without stopping at failures.
CheckOutcome run_check(std::string name, std::string range, const std::vector<TorusKnot>& knots,
                       const CaseFn& fn);

/// Normalized nontrivial torus knots with both parameters in [2, max],
/// ordered by p then q.
std::vector<TorusKnot> enumerate_knots(Int max);

CheckOutcome check_pinch_equivalence(Int max);
CheckOutcome check_sign_lemma(Int max);
CheckOutcome check_magnitude(Int max);
CheckOutcome check_sign_parity_theorem(Int max);
CheckOutcome check_ell_formula(Int max);
CheckOutcome check_gamma3_odd_consistency(Int max);
CheckOutcome check_comparing_theorem(Int max);

/// All seven checks in a fixed order. Requires max >= 3.
std::vector<CheckOutcome> run_all(Int max);

}  // namespace crosscap::verify
