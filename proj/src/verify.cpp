#include "crosscap/verify.hpp"

#include <numeric>
#include <optional>

#include "crosscap/cf.hpp"
#include "crosscap/genus.hpp"

namespace crosscap::verify {

namespace {

void require_bound(Int max) {
  if (max < 3) throw Error(Errc::InvalidArgument, "verification bound must be at least 3");
}

std::string range_text(Int max) { return "2 <= p,q <= " + std::to_string(max); }

std::string pair_text(Int a, Int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::optional<Mismatch> expect_equal(const std::string& expected, const std::string& actual) {
  if (expected == actual) return std::nullopt;
  return Mismatch{expected, actual};
}

}  // namespace

CheckOutcome run_check(std::string name, std::string range, const std::vector<TorusKnot>& knots,
                       const CaseFn& fn) {
  CheckOutcome out;
  out.check_name = std::move(name);
  out.range_description = std::move(range);
  for (const TorusKnot& knot : knots) {
    ++out.cases_checked;
    std::optional<Mismatch> bad;
    try {
      bad = fn(knot);
    } catch (const Error& e) {
      bad = Mismatch{"no error", e.what()};
    }
    if (!bad) continue;
    ++out.total_failures;
    if (out.counterexamples.size() < CheckOutcome::kMaxCounterexamples) {
      out.counterexamples.push_back({knot.to_string(), std::move(bad->expected), std::move(bad->actual)});
    }
  }
  return out;
}

std::vector<TorusKnot> enumerate_knots(Int max) {
  std::vector<TorusKnot> out;
  for (Int p = 2; p <= max; ++p) {
    for (Int q = 2; q <= max; ++q) {
      if (p == q || std::gcd(p, q) != 1) continue;
      const TorusKnot knot = normalize(p, q);
      if (knot.p() == p) out.push_back(knot);
    }
  }
  return out;
}

CheckOutcome check_pinch_equivalence(Int max) {
  require_bound(max);
  return run_check("pinch_equivalence", range_text(max), enumerate_knots(max), [](const TorusKnot& k) {
    return expect_equal(pinch_lemma(k).result.to_string(), pinch_cf(k).to_string());
  });
}

CheckOutcome check_sign_lemma(Int max) {
  require_bound(max);
  return run_check("sign_lemma", range_text(max), enumerate_knots(max),
                   [](const TorusKnot& k) -> std::optional<Mismatch> {
                     const RawPinch raw = lemma_pinch(k.p(), k.q());
                     const Int product = checked_mul(raw.p_minus_2t, raw.q_minus_2h);
                     const bool equality_case = k.p() == 2;
                     if (product < 0 || (product == 0) != equality_case) {
                       return Mismatch{equality_case ? "(p-2t)(q-2h) = 0" : "(p-2t)(q-2h) > 0",
                                       "(p-2t)(q-2h) = " + std::to_string(product)};
                     }
                     return std::nullopt;
                   });
}

CheckOutcome check_magnitude(Int max) {
  require_bound(max);
  return run_check("magnitude", range_text(max), enumerate_knots(max),
                   [](const TorusKnot& k) -> std::optional<Mismatch> {
                     const RawPinch raw = lemma_pinch(k.p(), k.q());
                     const bool ok = k.p() > k.q() ? raw.r() >= raw.s() : raw.r() < raw.s();
                     if (ok) return std::nullopt;
                     return Mismatch{k.p() > k.q() ? "r >= s" : "r < s", "(r,s) = " + pair_text(raw.r(), raw.s())};
                   });
}

CheckOutcome check_sign_parity_theorem(Int max) {
  require_bound(max);
  return run_check("sign_parity_theorem", range_text(max), enumerate_knots(max), [](const TorusKnot& k) {
    return expect_equal(std::string(to_string(pinch_lemma(k).sign)), std::string(to_string(pinch_sign_by_cf(k))));
  });
}

CheckOutcome check_ell_formula(Int max) {
  require_bound(max);
  return run_check("ell_formula", range_text(max), enumerate_knots(max), [](const TorusKnot& k) {
    const auto trace = pinch_sequence(k, StopAt::FirstUnknot);
    return expect_equal("T(" + std::to_string(terminal_ell(k)) + ",1)", trace.back().result.to_string());
  });
}

CheckOutcome check_gamma3_odd_consistency(Int max) {
  require_bound(max);
  std::vector<TorusKnot> odd;
  for (const TorusKnot& k : enumerate_knots(max)) {
    if (!is_even(k.p()) && !is_even(k.q())) odd.push_back(k);
  }
  return run_check("gamma3_odd_consistency", "pq odd, 3 <= q < p <= " + std::to_string(max), odd,
                   [](const TorusKnot& k) {
                     return expect_equal(std::to_string(gamma3(k)), std::to_string(beta1_G(k)));
                   });
}

CheckOutcome check_comparing_theorem(Int max) {
  require_bound(max);
  std::vector<TorusKnot> even;
  for (const TorusKnot& k : enumerate_knots(max)) {
    if (is_even(k.p())) even.push_back(k);
  }
  return run_check("comparing_theorem", "p even, " + range_text(max), even,
                   [](const TorusKnot& k) -> std::optional<Mismatch> {
                     const Int kk = division_decomposition(k).k;
                     const Int gap = gamma3(k) - beta1_F(k);
                     const Int closed = is_even(kk) ? kk / 2 : (kk + 1) / 2;
                     if (gap != closed) {
                       return Mismatch{"gamma3 - beta1_F = " + std::to_string(closed),
                                       "gamma3 - beta1_F = " + std::to_string(gap)};
                     }
                     if (2 * gap < kk) {
                       return Mismatch{"gamma3 - beta1_F >= " + Fraction(kk, 2).to_string(),
                                       "gamma3 - beta1_F = " + std::to_string(gap)};
                     }
                     return std::nullopt;
                   });
}

std::vector<CheckOutcome> run_all(Int max) {
  require_bound(max);
  return {
      check_pinch_equivalence(max), check_sign_lemma(max),          check_magnitude(max),
      check_sign_parity_theorem(max), check_ell_formula(max), check_gamma3_odd_consistency(max),
      check_comparing_theorem(max),
  };
}

}  // namespace crosscap::verify
