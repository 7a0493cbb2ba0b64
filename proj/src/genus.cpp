#include "crosscap/genus.hpp"

#include <algorithm>

namespace crosscap {

namespace {

void require_nontrivial(const TorusKnot& knot) {
  if (knot.is_unknot()) throw Error(Errc::UnknotInput, knot.to_string() + " is an unknot");
}

Fraction ratio(const TorusKnot& knot) { return Fraction(knot.p(), knot.q()); }

// Closed form of gamma3 - beta1(F) for p even.
Int comparing_closed_form(Int k) { return is_even(k) ? k / 2 : (k + 1) / 2; }

}  // namespace

std::string_view to_string(Gamma4Provenance provenance) {
  switch (provenance) {
    case Gamma4Provenance::None: return "none";
    case Gamma4Provenance::AllPositivePinches: return "all-positive-pinches";
    case Gamma4Provenance::Batson: return "batson";
    case Gamma4Provenance::IntervalCollapse: return "interval-collapse";
  }
  return "none";
}

std::optional<Gamma4Provenance> parse_provenance(std::string_view text) {
  for (auto p : {Gamma4Provenance::None, Gamma4Provenance::AllPositivePinches,
                 Gamma4Provenance::Batson, Gamma4Provenance::IntervalCollapse}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

Division division_decomposition(const TorusKnot& knot) {
  if (knot.q() <= 1) {
    throw Error(Errc::DegenerateModulus, "p = qk + a needs q > 1, got " + knot.to_string());
  }
  return {knot.p() / knot.q(), knot.p() % knot.q()};
}

Int terminal_ell(const TorusKnot& knot) {
  const Int k = division_decomposition(knot).k;
  return is_even(knot.p()) == is_even(k) ? k : k + 1;
}

Int beta1_F(const TorusKnot& knot) {
  require_nontrivial(knot);
  return count_steps_to_integer(ratio(knot)).count;
}

Int beta1_Sigma(const TorusKnot& knot) {
  if (!is_even(knot.p())) {
    throw Error(Errc::OddParity, "Sigma needs an even parameter, got " + knot.to_string());
  }
  return count_steps_to_zero(ratio(knot));
}

OddSplit odd_split(const TorusKnot& knot) {
  if (is_even(knot.p()) || is_even(knot.q())) {
    throw Error(Errc::EvenParity, "split needs pq odd, got " + knot.to_string());
  }
  require_nontrivial(knot);
  const ContinuedFraction cf = cf_expand(ratio(knot));
  const Fraction prev = convergents(cf)[cf.last_index() - 1].value;
  OddSplit split{normalize(prev.num(), prev.den()),
                 normalize(knot.p() - prev.num(), knot.q() - prev.den())};
  if (is_even(split.t1.p()) == is_even(split.t1.q()) || is_even(split.t2.p()) == is_even(split.t2.q())) {
    throw Error(Errc::Inconsistent, "split of " + knot.to_string() + " lacks an even parameter");
  }
  return split;
}

Int beta1_G(const TorusKnot& knot) {
  const OddSplit split = odd_split(knot);
  return checked_add(beta1_Sigma(split.t1), beta1_Sigma(split.t2));
}

Int gamma3(const TorusKnot& knot) {
  require_nontrivial(knot);
  const Int p = knot.p();
  const Int q = knot.q();
  if (is_even(p) || is_even(q)) return count_steps_to_zero(Fraction(p, q));

  // x q = -1 (mod p), x in {1, ..., p - 1}.
  const Int x = p - mod_inverse(q, p);
  const Int pq = checked_mul(p, q);
  const Int numerator = is_even(x) ? pq - 1 : checked_add(pq, 1);
  const Int denominator = checked_mul(p, p);
  if (std::gcd(numerator, denominator) != 1) {
    throw Error(Errc::Inconsistent, "pq -+ 1 not coprime to p^2 for " + knot.to_string());
  }
  return count_steps_to_zero(Fraction(numerator, denominator));
}

Gamma4Bounds gamma4_bounds(const TorusKnot& knot) {
  require_nontrivial(knot);
  const auto trace = pinch_sequence(knot, StopAt::FirstUnknot);

  Gamma4Bounds out;
  out.lower = 1;
  out.upper = static_cast<Int>(trace.size());

  const bool p_even = is_even(knot.p());
  const bool all_positive =
      p_even && std::all_of(trace.begin(), trace.end(),
                            [](const PinchRecord& r) { return r.sign == PinchSign::Positive; });
  const bool batson = p_even && knot.q() == knot.p() - 1;

  if (all_positive) {
    out.exact = out.upper;
    out.provenance = Gamma4Provenance::AllPositivePinches;
  }
  if (batson) {
    const Int value = knot.p() / 2 - 1;
    if (out.exact && *out.exact != value) {
      throw Error(Errc::Inconsistent, "all-positive and Batson values disagree on " + knot.to_string());
    }
    if (!out.exact) {
      out.exact = value;
      out.provenance = Gamma4Provenance::Batson;
    }
  }
  if (!out.exact && out.lower == out.upper) {
    out.exact = out.upper;
    out.provenance = Gamma4Provenance::IntervalCollapse;
  }
  if (out.exact) {
    if (*out.exact != out.upper) {
      throw Error(Errc::Inconsistent, "exact gamma4 differs from beta1(F) on " + knot.to_string());
    }
    out.lower = *out.exact;
  }
  return out;
}

GapReport gap_report(const TorusKnot& knot) {
  if (!is_even(knot.p())) {
    throw Error(Errc::OddParity, "gap bound needs p even, got " + knot.to_string());
  }
  require_nontrivial(knot);
  const Int k = division_decomposition(knot).k;
  const Int gap = gamma3(knot) - beta1_F(knot);
  if (gap != comparing_closed_form(k)) {
    throw Error(Errc::Inconsistent, "gamma3 - beta1(F) does not match the closed form on " + knot.to_string());
  }
  return {gap, Fraction(k, 2)};
}

Int orientable_genus(const TorusKnot& knot) {
  if (knot.p() == 0) return 0;
  return checked_mul(knot.p() - 1, knot.q() - 1) / 2;
}

GenusReport make_report(const TorusKnot& knot) {
  require_nontrivial(knot);
  const Division div = division_decomposition(knot);
  GenusReport report(knot);
  report.k = div.k;
  report.a = div.a;
  report.ell = terminal_ell(knot);
  report.trace = pinch_sequence(knot, StopAt::FirstUnknot);
  report.beta1_F = static_cast<Int>(report.trace.size());
  report.gamma3 = gamma3(knot);
  report.gamma4 = gamma4_bounds(knot);
  report.orientable_genus = orientable_genus(knot);
  if (is_even(knot.p())) {
    report.gap_lower_bound = gap_report(knot).theorem1_lower_bound;
  } else {
    report.split = odd_split(knot);
  }
  return report;
}

}  // namespace crosscap
