#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crosscap/verify.hpp"
#include "oracle.hpp"

using namespace crosscap;
using namespace crosscap::verify;

TEST_CASE("enumerate_knots matches the brute-force gcd filter") {
  for (Int max : {3, 10, 57, 300}) {
    const auto knots = enumerate_knots(max);
    const auto expected = oracle::knots(max);
    REQUIRE(knots.size() == expected.size());
    for (std::size_t i = 0; i < knots.size(); ++i) {
      CHECK(knots[i].p() == expected[i].first);
      CHECK(knots[i].q() == expected[i].second);
    }
  }
  CHECK(enumerate_knots(10).size() == 22);
  REQUIRE(enumerate_knots(3).size() == 1);
  CHECK(enumerate_knots(3).front() == normalize(2, 3));
}

TEST_CASE("run_all returns seven passing outcomes in a fixed order") {
  for (Int max : {3, 50}) {
    const auto outcomes = run_all(max);
    REQUIRE(outcomes.size() == 7);
    const char* names[] = {"pinch_equivalence", "sign_lemma",         "magnitude",
                           "sign_parity_theorem", "ell_formula",      "gamma3_odd_consistency",
                           "comparing_theorem"};
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(outcomes[i].check_name == names[i]);
      CHECK(outcomes[i].passed());
      CHECK(outcomes[i].counterexamples.empty());
    }
  }
}

TEST_CASE("case counts equal the number of knots meeting each precondition") {
  const Int max = 40;
  const auto all = oracle::knots(max);
  std::size_t even = 0, odd = 0;
  for (const auto& [p, q] : all) (p % 2 == 0 ? even : odd) += 1;

  CHECK(check_pinch_equivalence(10).cases_checked == 22);
  CHECK(check_sign_lemma(max).cases_checked == all.size());
  CHECK(check_magnitude(max).cases_checked == all.size());
  CHECK(check_sign_parity_theorem(max).cases_checked == all.size());
  CHECK(check_ell_formula(max).cases_checked == all.size());
  CHECK(check_gamma3_odd_consistency(max).cases_checked == odd);
  CHECK(check_comparing_theorem(max).cases_checked == even);
  CHECK(check_pinch_equivalence(3).cases_checked == 1);
}

TEST_CASE("bound below 3 is rejected") {
  CHECK_THROWS_AS(run_all(2), Error);
  CHECK_THROWS_AS(check_magnitude(2), Error);
}

TEST_CASE("run_check collects every failure and keeps the first 100") {
  const auto knots = enumerate_knots(60);
  REQUIRE(knots.size() > 200);
  const auto outcome = run_check("always_fails", "test", knots, [](const TorusKnot& k) -> std::optional<Mismatch> {
    return Mismatch{"nothing", k.to_string()};
  });
  CHECK_FALSE(outcome.passed());
  CHECK(outcome.cases_checked == knots.size());
  CHECK(outcome.total_failures == knots.size());
  CHECK(outcome.counterexamples.size() == CheckOutcome::kMaxCounterexamples);
  CHECK(outcome.truncated());
  CHECK(outcome.counterexamples.front().input == knots.front().to_string());
  CHECK(outcome.counterexamples[99].input == knots[99].to_string());
}

TEST_CASE("run_check records thrown errors as counterexamples") {
  const auto outcome = run_check("throws", "test", enumerate_knots(5), [](const TorusKnot& k) -> std::optional<Mismatch> {
    if (k.p() == 4) throw Error(Errc::Inconsistent, "boom");
    return std::nullopt;
  });
  CHECK(outcome.total_failures == 2);  // T(4,3), T(4,5)
  CHECK(outcome.counterexamples[0].input == "T(4,3)");
  CHECK(outcome.counterexamples[0].actual.find("boom") != std::string::npos);
}

TEST_CASE("verification is deterministic") {
  const auto a = run_all(30);
  const auto b = run_all(30);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].cases_checked == b[i].cases_checked);
    CHECK(a[i].range_description == b[i].range_description);
  }
}
