#pragma once
// Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands of a
// real parameter.  Worst-interval bisection with a QUADPACK-style error
// model; the subdivision budget is a hard cap.

#include <complex>
#include <functional>

#include "expode/error.hpp"

namespace expode {
namespace quad {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  int max_subdivisions = 2000;
};

struct Outcome {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
  int subdivisions = 0;
};

// Integrate f over [a, b] (a > b allowed; the sign flips).  Signals
// ToleranceNotMet when the budget is exhausted before
// error <= max(abs_tol, rel_tol * |value|).
Outcome integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                  const Options& opt);

}  // namespace quad
}  // namespace expode
