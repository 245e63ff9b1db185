#pragma once
// Numerical growth measurement for entire exponential polynomials: the
// proximity function m(r,f) (= T(r,f) here, no poles), order fitting on a
// radius sweep, and the empirical growth constant of b1 e^{p1} + b2 e^{p2}
// against its angular-indicator oracle.

#include <vector>

#include "expode/expoly.hpp"
#include "expode/poly.hpp"

namespace expode {
namespace nevanlinna {

struct GrowthCurve {
  std::vector<double> radii;
  std::vector<double> T_values;  // nats
  double fitted_order = 0.0;
  double fitted_constant = 0.0;
};

// (1/2pi) * integral of log+|f(r e^{i theta})| by the periodic trapezoid
// rule with `samples` nodes; log-scale evaluation throughout.
double proximity(const ExpPoly& f, double r, int samples);

// Doubles the node count (from 2048) until the relative change drops below
// 1e-3.
double proximity_auto(const ExpPoly& f, double r);

// Fills T_values over the given radii and fits order/constant.
GrowthCurve characteristic(const ExpPoly& f, const std::vector<double>& radii);

// Least-squares slope of log T against log r over the top half of the radii;
// constant = mean of T/r^order there.  Needs >= 5 radii spanning a decade.
void order_fit(GrowthCurve& curve);

struct SteinmetzReport {
  int k = 0;
  std::vector<double> radii;
  std::vector<double> T_values;
  double C_fit = 0.0;     // least-squares slope of T against r^k
  double C_at_rmax = 0.0; // T(r_max)/r_max^k
  double C_oracle = 0.0;  // (1/2pi) * integral of max(delta1, delta2, 0)
};

// Measures T(r, b1 e^{p1} + b2 e^{p2}) = C (1 + o(1)) r^k near r_max and
// compares against the indicator oracle.  C is extracted as the regression
// slope of T on r^k, which cancels the additive O(r^{k-1} + log r) effect of
// the b's — scaling b1 by 100 shifts T by a constant, not the slope.
SteinmetzReport steinmetz_check(const Poly& b1, const Poly& b2, const Poly& p1, const Poly& p2,
                                double r_max = 50.0, int points = 8);

}  // namespace nevanlinna
}  // namespace expode
