#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "crosscap/arith.hpp"

namespace crosscap {

/// Torus knot T(p, q) with coprime parameters ordered by convention: when pq
/// is even p is the even parameter, when pq is odd p > q. The unknots T(0,1)
/// and T(1,1) are representable.
class TorusKnot {
 public:
  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }

  bool is_unknot() const noexcept { return p_ <= 1 || q_ <= 1; }
  std::string to_string() const;

  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
  friend TorusKnot normalize(Int a, Int b);

 private:
  TorusKnot(Int p, Int q) : p_(p), q_(q) {}

  Int p_;
  Int q_;
};

/// Orders the unordered coprime pair {a, b}. Throws NotCoprime when
/// gcd(a, b) != 1 and InvalidArgument for negative input.
TorusKnot normalize(Int a, Int b);

bool is_unknot(const TorusKnot& knot);

std::ostream& operator<<(std::ostream& os, const TorusKnot& knot);

/// t = -q^{-1} mod p in [0, p), h = p^{-1} mod q in [0, q).
struct PinchWitness {
  Int t = 0;
  Int h = 0;

  friend bool operator==(const PinchWitness&, const PinchWitness&) = default;
};

enum class PinchSign { Positive, Negative };

std::string_view to_string(PinchSign sign);

/// Pinch of a raw (not necessarily normalized) coprime pair, kept signed so
/// the sign lemma and magnitude statements can be checked before the result
/// is reordered.
struct RawPinch {
  Int p = 0;
  Int q = 0;
  PinchWitness witness;
  Int p_minus_2t = 0;
  Int q_minus_2h = 0;

  Int r() const noexcept { return p_minus_2t < 0 ? -p_minus_2t : p_minus_2t; }
  Int s() const noexcept { return q_minus_2h < 0 ? -q_minus_2h : q_minus_2h; }
};

/// Pinch by modular inverses on any coprime pair with p, q >= 1 other than
/// (1, 1). Throws PinchUndefined on (1, 1) or a zero parameter.
RawPinch lemma_pinch(Int p, Int q);

struct PinchRecord {
  TorusKnot source;
  TorusKnot result;
  PinchWitness witness;
  PinchSign sign;

  Int p_minus_2t() const { return checked_sub(source.p(), checked_mul(2, witness.t)); }
  Int q_minus_2h() const { return checked_sub(source.q(), checked_mul(2, witness.h)); }
};

/// Pinch via the modular-inverse formula. The sign is Positive when
/// p - 2t >= 0 and q - 2h >= 0, Negative otherwise.
PinchRecord pinch_lemma(const TorusKnot& knot);

/// Pinch via one step on the continued fraction of p/q.
TorusKnot pinch_cf(const TorusKnot& knot);

/// Positive iff the last index m of the canonical expansion of p/q is odd.
PinchSign pinch_sign_by_cf(const TorusKnot& knot);

enum class StopAt { FirstUnknot, Zero };

/// Successive pinches. FirstUnknot stops at the first T(l, 1) (an unknot
/// input gives an empty trace); Zero continues to T(0, 1) and needs p even.
std::vector<PinchRecord> pinch_sequence(const TorusKnot& knot, StopAt stop);

}  // namespace crosscap
