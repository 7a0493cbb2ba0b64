#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "crosscap/cf.hpp"
#include "crosscap/knot.hpp"
#include "oracle.hpp"

using namespace crosscap;

namespace {

template <class Fn>
Errc error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::Inconsistent;
}

}  // namespace

TEST_CASE("normalize orders by the even-first / larger-first convention") {
  CHECK(normalize(3, 4) == normalize(4, 3));
  CHECK(normalize(3, 4).p() == 4);
  CHECK(normalize(3, 5).p() == 5);
  CHECK(normalize(1, 1).to_string() == "T(1,1)");
  CHECK(normalize(1, 0).to_string() == "T(0,1)");
  CHECK(normalize(1, 7).to_string() == "T(7,1)");
  CHECK(normalize(1, 8).to_string() == "T(8,1)");
  CHECK(normalize(7, 4).to_string() == "T(4,7)");

  CHECK(error_of([] { normalize(6, 4); }) == Errc::NotCoprime);
  CHECK(error_of([] { normalize(0, 2); }) == Errc::NotCoprime);
  CHECK(error_of([] { normalize(0, 0); }) == Errc::NotCoprime);
  CHECK(error_of([] { normalize(-3, 2); }) == Errc::InvalidArgument);
}

TEST_CASE("is_unknot") {
  CHECK(is_unknot(normalize(0, 1)));
  CHECK(is_unknot(normalize(7, 1)));
  CHECK(is_unknot(normalize(1, 1)));
  CHECK_FALSE(is_unknot(normalize(4, 3)));
}

TEST_CASE("pinch_lemma examples") {
  const auto r43 = pinch_lemma(normalize(4, 3));
  CHECK(r43.result == normalize(2, 1));
  CHECK(r43.witness == PinchWitness{1, 1});
  CHECK(r43.sign == PinchSign::Positive);

  const auto r23 = pinch_lemma(normalize(2, 3));
  CHECK(r23.result == normalize(0, 1));
  CHECK(r23.witness == PinchWitness{1, 2});
  CHECK(r23.sign == PinchSign::Negative);
  CHECK(r23.p_minus_2t() == 0);
  CHECK(r23.q_minus_2h() == -1);

  // The figure's T(7,4) taken as a raw pair: t = 5, h = 3, result (3, 2).
  const RawPinch raw = lemma_pinch(7, 4);
  CHECK(raw.witness == PinchWitness{5, 3});
  CHECK(raw.r() == 3);
  CHECK(raw.s() == 2);
  // The same knot normalized as T(4,7).
  const auto r47 = pinch_lemma(normalize(7, 4));
  CHECK(r47.witness == PinchWitness{1, 2});
  CHECK(r47.result == normalize(3, 2));
}

TEST_CASE("pinch_lemma on T(l,1) gives T(l-2,1) with t = l-1, h = 0") {
  for (Int l = 2; l <= 60; ++l) {
    const auto rec = pinch_lemma(normalize(l, 1));
    CHECK(rec.result == normalize(l - 2, 1));
    CHECK(rec.witness == PinchWitness{l - 1, 0});
  }
  CHECK(error_of([] { pinch_lemma(normalize(0, 1)); }) == Errc::PinchUndefined);
  CHECK(error_of([] { pinch_lemma(normalize(1, 1)); }) == Errc::PinchUndefined);
  CHECK(error_of([] { lemma_pinch(1, 1); }) == Errc::PinchUndefined);
  CHECK(error_of([] { lemma_pinch(4, 6); }) == Errc::NotCoprime);
}

TEST_CASE("pinch witness satisfies the congruences (brute-force search oracle)") {
  for (Int p = 1; p <= 120; ++p) {
    for (Int q = 1; q <= 120; ++q) {
      if (std::gcd(p, q) != 1 || (p == 1 && q == 1)) continue;
      const RawPinch raw = lemma_pinch(p, q);
      const auto pc = oracle::pinch(p, q);
      CHECK(raw.witness == PinchWitness{pc.t, pc.h});
      CHECK(raw.p_minus_2t == pc.p_minus_2t);
      CHECK(raw.q_minus_2h == pc.q_minus_2h);
    }
  }
}

TEST_CASE("pinch_cf") {
  CHECK(pinch_cf(normalize(4, 3)) == normalize(2, 1));
  CHECK(pinch_cf(normalize(5, 3)) == normalize(1, 1));
  CHECK(pinch_cf(normalize(4, 7)) == normalize(2, 3));
  CHECK(pinch_cf(normalize(9, 1)) == normalize(7, 1));
  CHECK(error_of([] { pinch_cf(normalize(1, 1)); }) == Errc::PinchUndefined);
}

TEST_CASE("pinch_sign_by_cf") {
  CHECK(pinch_sign_by_cf(normalize(4, 3)) == PinchSign::Positive);
  CHECK(pinch_sign_by_cf(normalize(2, 3)) == PinchSign::Negative);
  CHECK(pinch_sign_by_cf(normalize(7, 5)) == PinchSign::Negative);
  const auto r75 = pinch_lemma(normalize(7, 5));
  CHECK(r75.witness.t == 4);
  CHECK(r75.p_minus_2t() == -1);
  CHECK(error_of([] { pinch_sign_by_cf(normalize(5, 1)); }) == Errc::PinchUndefined);
}

TEST_CASE("pinch_sequence") {
  const auto zero = pinch_sequence(normalize(4, 3), StopAt::Zero);
  REQUIRE(zero.size() == 2);
  CHECK(zero[0].result == normalize(2, 1));
  CHECK(zero[1].result == normalize(0, 1));

  const auto first = pinch_sequence(normalize(4, 3), StopAt::FirstUnknot);
  REQUIRE(first.size() == 1);
  CHECK(first.back().result == normalize(2, 1));

  const auto t47 = pinch_sequence(normalize(4, 7), StopAt::FirstUnknot);
  REQUIRE(t47.size() == 2);
  CHECK(t47.back().result == normalize(0, 1));

  CHECK(pinch_sequence(normalize(7, 1), StopAt::FirstUnknot).empty());
  CHECK(pinch_sequence(normalize(0, 1), StopAt::Zero).empty());
  CHECK(pinch_sequence(normalize(6, 1), StopAt::Zero).size() == 3);
  CHECK(error_of([] { pinch_sequence(normalize(5, 3), StopAt::Zero); }) == Errc::StopUnreachable);
}

TEST_CASE("pinch properties over all normalized knots with p,q <= 300") {
  for (const auto& [p, q] : oracle::knots(300)) {
    const TorusKnot knot = normalize(p, q);
    REQUIRE(knot.p() == p);
    const PinchRecord rec = pinch_lemma(knot);
    const RawPinch raw = lemma_pinch(p, q);

    // Oracle equivalence.
    CHECK(rec.result == pinch_cf(knot));
    // Parity preservation and coprimality closure.
    CHECK(raw.r() % 2 == p % 2);
    CHECK(raw.s() % 2 == q % 2);
    CHECK(std::gcd(raw.r(), raw.s()) == 1);
    // Magnitude, before reordering.
    if (p > q) {
      CHECK(raw.r() >= raw.s());
    } else {
      CHECK(raw.r() < raw.s());
    }
    // Sign lemma with equality iff p = 2.
    const Int product = raw.p_minus_2t * raw.q_minus_2h;
    CHECK(product >= 0);
    CHECK((product == 0) == (p == 2));
    // Sign agreement.
    CHECK(rec.sign == pinch_sign_by_cf(knot));
    // Each pinch strictly decreases max(p, q).
    CHECK(std::max(rec.result.p(), rec.result.q()) < std::max(p, q));
  }
}

TEST_CASE("pinch sequences terminate and match the brute-force count") {
  for (const auto& [p, q] : oracle::knots(120)) {
    const auto trace = pinch_sequence(normalize(p, q), StopAt::FirstUnknot);
    const auto [count, ell] = oracle::steps_to_unknot(p, q);
    CHECK(static_cast<Int>(trace.size()) == count);
    CHECK(trace.back().result == normalize(ell, 1));
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i].source == trace[i - 1].result);
    if (p % 2 == 0) {
      CHECK(static_cast<Int>(pinch_sequence(normalize(p, q), StopAt::Zero).size()) ==
            oracle::steps_to_zero(p, q));
    }
  }
}
