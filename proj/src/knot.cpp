#include "crosscap/knot.hpp"

#include <numeric>
#include <ostream>

#include "crosscap/cf.hpp"

namespace crosscap {

std::string TorusKnot::to_string() const {
  return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::ostream& operator<<(std::ostream& os, const TorusKnot& knot) { return os << knot.to_string(); }

TorusKnot normalize(Int a, Int b) {
  if (a < 0 || b < 0) throw Error(Errc::InvalidArgument, "torus knot parameters must be nonnegative");
  if (std::gcd(a, b) != 1) {
    throw Error(Errc::NotCoprime,
                "(" + std::to_string(a) + "," + std::to_string(b) + ") are not coprime");
  }
  const bool a_even = is_even(a);
  const bool b_even = is_even(b);
  if (a_even != b_even) return a_even ? TorusKnot(a, b) : TorusKnot(b, a);
  // Both odd (coprime pairs cannot both be even).
  return a >= b ? TorusKnot(a, b) : TorusKnot(b, a);
}

bool is_unknot(const TorusKnot& knot) { return knot.is_unknot(); }

std::string_view to_string(PinchSign sign) {
  return sign == PinchSign::Positive ? "positive" : "negative";
}

RawPinch lemma_pinch(Int p, Int q) {
  if (p <= 0 || q <= 0 || (p == 1 && q == 1)) {
    throw Error(Errc::PinchUndefined,
                "no pinch on (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  if (std::gcd(p, q) != 1) throw Error(Errc::NotCoprime, "pinch needs coprime parameters");
  RawPinch out;
  out.p = p;
  out.q = q;
  const Int q_inv = mod_inverse(q, p);
  out.witness.t = q_inv == 0 ? 0 : p - q_inv;
  out.witness.h = mod_inverse(p, q);
  out.p_minus_2t = checked_sub(p, checked_mul(2, out.witness.t));
  out.q_minus_2h = checked_sub(q, checked_mul(2, out.witness.h));
  return out;
}

PinchRecord pinch_lemma(const TorusKnot& knot) {
  if (knot.p() == 0 || (knot.p() == 1 && knot.q() == 1)) {
    throw Error(Errc::PinchUndefined, knot.to_string() + " is terminal");
  }
  // For T(l, 1) the formula gives t = l - 1, h = 0 and hence T(l - 2, 1).
  const RawPinch raw = lemma_pinch(knot.p(), knot.q());
  const PinchSign sign = (raw.p_minus_2t >= 0 && raw.q_minus_2h >= 0) ? PinchSign::Positive
                                                                     : PinchSign::Negative;
  return PinchRecord{knot, normalize(raw.r(), raw.s()), raw.witness, sign};
}

TorusKnot pinch_cf(const TorusKnot& knot) {
  if (knot.p() == 0 || (knot.p() == 1 && knot.q() == 1)) {
    throw Error(Errc::PinchUndefined, knot.to_string() + " is terminal");
  }
  const Fraction next = cf_value(step(cf_expand(Fraction(knot.p(), knot.q()))));
  return normalize(next.num(), next.den());
}

PinchSign pinch_sign_by_cf(const TorusKnot& knot) {
  if (knot.is_unknot()) {
    throw Error(Errc::PinchUndefined, "pinch sign is defined for nontrivial knots, got " + knot.to_string());
  }
  const ContinuedFraction cf = cf_expand(Fraction(knot.p(), knot.q()));
  return cf.last_index() % 2 == 1 ? PinchSign::Positive : PinchSign::Negative;
}

std::vector<PinchRecord> pinch_sequence(const TorusKnot& knot, StopAt stop) {
  std::vector<PinchRecord> trace;
  if (stop == StopAt::FirstUnknot) {
    TorusKnot current = knot;
    while (!current.is_unknot()) {
      trace.push_back(pinch_lemma(current));
      current = trace.back().result;
    }
    return trace;
  }
  if (!is_even(knot.p())) {
    throw Error(Errc::StopUnreachable, "T(0,1) is unreachable from " + knot.to_string() + " (p odd)");
  }
  TorusKnot current = knot;
  while (current.p() != 0) {
    trace.push_back(pinch_lemma(current));
    current = trace.back().result;
  }
  return trace;
}

}  // namespace crosscap
