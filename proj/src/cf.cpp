#include "crosscap/cf.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace crosscap {

Fraction::Fraction(Int num, Int den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "fraction with zero denominator");
  if (num < 0 || den < 0) throw Error(Errc::InvalidArgument, "fractions must be nonnegative");
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Fraction::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Fraction& x) { return os << x.to_string(); }

ContinuedFraction::ContinuedFraction(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (!is_canonical(coeffs_)) {
    throw Error(Errc::NotCanonicalizable, "sequence is not a canonical continued fraction");
  }
}

bool ContinuedFraction::is_canonical(std::span<const Int> coeffs) noexcept {
  if (coeffs.empty() || coeffs.front() < 0) return false;
  const std::size_t m = coeffs.size() - 1;
  for (std::size_t i = 1; i < m; ++i) {
    if (coeffs[i] < 1) return false;
  }
  return m == 0 || coeffs[m] >= 2;
}

std::string ContinuedFraction::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i];
  }
  out << ']';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) { return os << cf.to_string(); }

ContinuedFraction cf_expand(const Fraction& x) {
  std::vector<Int> coeffs;
  Int num = x.num();
  Int den = x.den();
  while (true) {
    coeffs.push_back(num / den);
    const Int rem = num % den;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  // Euclid already ends in a coefficient >= 2 for m >= 1; fold a trailing 1
  // anyway so the canonical invariant never depends on that argument.
  if (coeffs.size() > 1 && coeffs.back() == 1) {
    coeffs.pop_back();
    coeffs.back() += 1;
  }
  return ContinuedFraction(std::move(coeffs));
}

Fraction cf_value(std::span<const Int> coeffs) {
  if (coeffs.empty()) throw Error(Errc::InvalidArgument, "empty continued fraction");
  for (Int c : coeffs) {
    if (c < 0) throw Error(Errc::InvalidArgument, "negative continued fraction coefficient");
  }
  // Fold from the tail: value = c_i + 1 / (num / den) = (c_i * num + den) / num.
  Int num = coeffs.back();
  Int den = 1;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (num == 0) throw Error(Errc::ZeroDenominator, "continued fraction divides by zero");
    const Int next = checked_add(checked_mul(coeffs[i], num), den);
    den = num;
    num = next;
  }
  return Fraction(num, den);
}

Fraction cf_value(const ContinuedFraction& cf) { return cf_value(cf.coeffs()); }

ContinuedFraction canonicalize(std::vector<Int> raw) {
  if (raw.empty() || raw.front() < 0 || raw.back() < 0) {
    throw Error(Errc::NotCanonicalizable, "malformed step result");
  }
  for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
    if (raw[i] < 1) throw Error(Errc::NotCanonicalizable, "interior coefficient below 1");
  }

  while (!ContinuedFraction::is_canonical(raw)) {
    // Here size >= 2 and the last entry is 0 or 1.
    if (raw.back() == 0) {
      if (raw.size() < 3) throw Error(Errc::NotCanonicalizable, "[c0, 0] has no value");
      raw.resize(raw.size() - 2);
    } else {
      raw.pop_back();
      raw.back() += 1;
    }
  }
  return ContinuedFraction(std::move(raw));
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  const auto& c = cf.coeffs();
  std::vector<Convergent> out;
  out.reserve(c.size());
  // Seeds p_{-2}/q_{-2} = 0/1 and p_{-1}/q_{-1} = 1/0 make the recursion
  // produce p_0 = c0, q_0 = 1 and p_1 = c1 c0 + 1, q_1 = c1.
  Int p_prev2 = 0, q_prev2 = 1;
  Int p_prev1 = 1, q_prev1 = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Int p = checked_add(checked_mul(c[i], p_prev1), p_prev2);
    const Int q = checked_add(checked_mul(c[i], q_prev1), q_prev2);
    out.push_back({i, Fraction(p, q)});
    p_prev2 = p_prev1;
    q_prev2 = q_prev1;
    p_prev1 = p;
    q_prev1 = q;
  }
  return out;
}

ContinuedFraction step(const ContinuedFraction& cf) {
  const auto& c = cf.coeffs();
  if (cf.is_integer() && c.front() < 2) {
    throw Error(Errc::StepUndefined, "no step from " + cf.to_string());
  }
  // Denominator 2 happens exactly for [c0, 2].
  if (c.size() == 2 && c.back() == 2) {
    throw Error(Errc::StepUndefined, "step undefined for denominator 2: " + cf.to_string());
  }
  std::vector<Int> raw = c;
  raw.back() -= 2;
  return canonicalize(std::move(raw));
}

Int count_steps_to_zero(const Fraction& x) {
  if (!is_even(x.num())) {
    throw Error(Errc::InvalidParity, "N(a, b) needs an even numerator, got " + x.to_string());
  }
  ContinuedFraction cf = cf_expand(x);
  const ContinuedFraction zero({0});
  Int count = 0;
  while (cf != zero) {
    cf = step(cf);
    ++count;
  }
  return count;
}

IntegerReduction count_steps_to_integer(const Fraction& x) {
  ContinuedFraction cf = cf_expand(x);
  Int count = 0;
  while (!cf.is_integer()) {
    cf = step(cf);
    ++count;
  }
  return {count, cf.coeffs().front()};
}

}  // namespace crosscap
