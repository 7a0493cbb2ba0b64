#include "crosscap/error.hpp"

namespace crosscap {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NotCanonicalizable: return "NotCanonicalizable";
    case Errc::StepUndefined: return "StepUndefined";
    case Errc::InvalidParity: return "InvalidParity";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::PinchUndefined: return "PinchUndefined";
    case Errc::StopUnreachable: return "StopUnreachable";
    case Errc::DegenerateModulus: return "DegenerateModulus";
    case Errc::UnknotInput: return "UnknotInput";
    case Errc::OddParity: return "OddParity";
    case Errc::EvenParity: return "EvenParity";
    case Errc::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace crosscap
