#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crosscap {

enum class Errc {
  InvalidArgument,
  Overflow,
  ZeroDenominator,
  NotCanonicalizable,
  StepUndefined,
  InvalidParity,
  NotCoprime,
  PinchUndefined,
  StopUnreachable,
  DegenerateModulus,
  UnknotInput,
  OddParity,
  EvenParity,
  Inconsistent,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can report a stable name.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace crosscap
