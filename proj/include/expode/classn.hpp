#pragma once
// Ray-wise numerics for F' = R1 e^{q} F + R2: integrate u = log F along rays
// (never F itself — the interesting regime overflows any float), classify the
// growth, and report the sector dichotomy: super-exponential growth on rays
// where e^{q} grows is what rules out nonconstant q for finite-order
// solutions.

#include <array>
#include <complex>
#include <vector>

#include "expode/expoly.hpp"
#include "expode/indicator.hpp"

namespace expode {
namespace classn {

enum class RayStatus { decayed, polynomially_bounded, super_exponential, overflow_stopped };

const char* ray_status_name(RayStatus s);

struct StepControl {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double re_u_budget = 1e12;  // stop with overflow_stopped beyond this
  long max_steps = 4'000'000;
  double checkpoint_spacing = 0.05;
};

struct RayTrace {
  double theta = 0.0;
  std::complex<double> F0{1.0, 0.0};
  std::vector<double> r_values;            // uniform checkpoints
  std::vector<std::complex<double>> logF;  // u at the checkpoints
  RayStatus status = RayStatus::polynomially_bounded;
  // Fits over the top of the range (r >= max(r0, r_max/5)):
  double order_logF = 0.0;     // slope of log(Re u)+ vs log r:  log|F| ~ r^s
  double loglog_slope = 0.0;   // slope of log(Re u)+ vs r: ~1 for e^{e^r} growth
  double poly_exponent = 0.0;  // slope of Re u vs log r:        |F| ~ r^s
};

// Adaptive embedded Runge-Kutta on u(r) = log F(r e^{i theta}),
// u' = e^{i theta} (R1 e^{q} + R2 e^{-u}).  Steps are capped so |du| < pi/2
// while the e^{-u} coupling is active; once that term is negligible the
// right side no longer depends on u and the cap is moot.
RayTrace integrate_ray(const RatFunc& R1, const RatFunc& R2, const Poly& q, double theta,
                       std::complex<double> F0, double r0, double r_max,
                       const StepControl& ctl = {});

// Max over interior checkpoints of |u'_fd - rhs| / (1 + |rhs|) with u'_fd a
// 4th-order central difference on the uniform grid (re-evaluated right side).
double trace_residual(const RayTrace& trace, const RatFunc& R1, const RatFunc& R2,
                      const Poly& q);

// Roots of p by the Durand-Kerner iteration (floating, for geometry only).
std::vector<std::complex<double>> poly_roots(const Poly& p);

// 2 * (largest pole/zero modulus of R1, R2) + 1.
double default_r0(const RatFunc& R1, const RatFunc& R2);

struct RayOutcome {
  int sector = -1;      // -1 when q is constant (no sectors)
  double theta = 0.0;
  int delta_sign = 0;   // sign of delta(q, theta); 0 when q is constant
  std::array<RayTrace, 3> traces;  // initial conditions 1, 1+i, -2
  bool flagged = false;            // all three traces super-exponential
  bool decay_bound_ok = true;      // on delta<0 rays: poly_exponent <= n2+2+0.2
};

struct DichotomyReport {
  double r0 = 0.0, r_max = 0.0, epsilon = 0.0;
  int n2 = 0;  // degree of the polynomial part of R2
  std::vector<RayOutcome> rays;
  bool any_flagged = false;
};

// Central ray of every sector of e^{q} (8 evenly spaced rays when q is
// constant), three generic initial conditions each.  A flagged ray is the
// numerical shadow of "finite order forces q constant".
DichotomyReport dichotomy_report(const RatFunc& R1, const RatFunc& R2, const Poly& q,
                                 double epsilon, double r_max, const StepControl& ctl = {});

}  // namespace classn
}  // namespace expode
