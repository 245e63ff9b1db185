#pragma once
// Error taxonomy shared by every module.  Each failure carries a stable code
// (usable programmatically and as the "code" field in JSON error output) plus
// a human-readable message.

#include <stdexcept>
#include <string>
#include <string_view>

namespace expode {

enum class Errc {
  invalid_argument,
  division_by_zero,
  not_a_power,
  pole_proximity,
  pole_on_circle,
  pole_on_ray,
  overflow,
  tolerance_not_met,
  step_collapse,
  nonzero_constant_exponent,
  non_polynomial_exponent,
  non_rational_exponent,
  non_polynomial_coefficient,
  constant_polynomial,
  degree_mismatch,
  equal_leading_coefficients,
  p2_not_proportional,
  kappa_not_squarefree,
  zero_parameter,
  verification_failed,
  insufficient_data,
  syntax_error,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_a_power: return "NotAPower";
    case Errc::pole_proximity: return "PoleProximity";
    case Errc::pole_on_circle: return "PoleOnCircle";
    case Errc::pole_on_ray: return "PoleOnRay";
    case Errc::overflow: return "Overflow";
    case Errc::tolerance_not_met: return "ToleranceNotMet";
    case Errc::step_collapse: return "StepCollapse";
    case Errc::nonzero_constant_exponent: return "NonzeroConstantExponent";
    case Errc::non_polynomial_exponent: return "NonPolynomialExponent";
    case Errc::non_rational_exponent: return "NonRationalExponent";
    case Errc::non_polynomial_coefficient: return "NonPolynomialCoefficient";
    case Errc::constant_polynomial: return "ConstantPolynomial";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::equal_leading_coefficients: return "EqualLeadingCoefficients";
    case Errc::p2_not_proportional: return "P2NotProportional";
    case Errc::kappa_not_squarefree: return "KappaNotSquarefree";
    case Errc::zero_parameter: return "ZeroParameter";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::insufficient_data: return "InsufficientData";
    case Errc::syntax_error: return "SyntaxError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace expode
