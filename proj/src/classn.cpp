#include "expode/classn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expode/parallel.hpp"

namespace expode {
namespace classn {

namespace {

constexpr double kExpBudget = 700.0;   // Re q beyond this: e^{q} unrepresentable
constexpr double kDecayFloor = -700.0;
constexpr double kLogFloor = -745.0;   // log of the smallest positive double
// |F| thresholds (log scale) for switching charts.  u = log F is singular at
// zeros of F, but F itself obeys a linear ODE there: the integrator rides
// through dips of |F| in the direct chart and tracks arg F continuously so
// the log rejoins a consistent branch on exit.
constexpr double kLogEnterDirect = -15.0;
constexpr double kLogExitDirect = -10.0;

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 35.0 / 384 - 5179.0 / 57600, kE3 = 500.0 / 1113 - 7571.0 / 16695,
                 kE4 = 125.0 / 192 - 393.0 / 640, kE5 = -2187.0 / 6784 + 92097.0 / 339200,
                 kE6 = 11.0 / 84 - 187.0 / 2100, kE7 = -1.0 / 40;

struct Deriv {
  std::complex<double> dy;
  bool coupled = false;     // log chart only: the e^{-u} term is dynamically relevant
  bool q_overflow = false;  // Re q beyond float budget: cannot continue
};

struct Ray {
  const RatFunc& R1;
  const RatFunc& R2;
  const Poly& q;
  double theta;
  std::complex<double> dir;

  // u' = e^{i theta} (R1 e^{q} + R2 e^{-u})
  Deriv log_form(double r, const std::complex<double>& u) const {
    Deriv out;
    const std::complex<double> z = std::polar(r, theta);
    const std::complex<double> qz = q.eval(z);
    if (qz.real() > kExpBudget) {
      out.q_overflow = true;
      return out;
    }
    const std::complex<double> drive = R1.eval(z) * std::exp(qz);
    std::complex<double> feedback(0.0, 0.0);
    // Re u below -kExpBudget is reachable only when R2 == 0 (with R2 != 0 the
    // chart switch below kicks in long before), so skipping exp(-u) is exact.
    if (-u.real() < kExpBudget) {
      feedback = R2.eval(z) * std::exp(-u);
      out.coupled = std::abs(feedback) > 1e-10 * (1.0 + std::abs(drive));
    }
    out.dy = dir * (drive + feedback);
    return out;
  }

  // F' = e^{i theta} (R1 e^{q} F + R2): linear, regular at zeros of F.
  Deriv direct_form(double r, const std::complex<double>& F) const {
    Deriv out;
    const std::complex<double> z = std::polar(r, theta);
    const std::complex<double> qz = q.eval(z);
    if (qz.real() > kExpBudget) {
      out.q_overflow = true;
      return out;
    }
    out.dy = dir * (R1.eval(z) * std::exp(qz) * F + R2.eval(z));
    return out;
  }
};

// Adaptive stepper for one ray with chart switching.
class Integrator {
 public:
  Integrator(const Ray& ray, const StepControl& ctl, std::complex<double> u0, double r0)
      : ray_(ray), ctl_(ctl), r_(r0), u_(u0), log_mode_(u0.real() > kLogEnterDirect) {
    if (!log_mode_) {
      F_ = std::exp(u0);
      phase_ = u0.imag();
    }
    refresh();
  }

  bool stopped() const { return q_overflow_ || overflowed_ || decayed_; }
  bool overflow_stopped() const { return q_overflow_ || overflowed_; }
  bool decayed_out() const { return decayed_; }
  double r() const { return r_; }

  std::complex<double> u() const {
    if (log_mode_) return u_;
    const double mag = std::abs(F_);
    return {mag > 0 ? std::max(std::log(mag), kLogFloor) : kLogFloor, phase_};
  }

  void advance(double r_target, long& steps) {
    while (r_target - r_ > 1e-12 * (1.0 + r_target) && !stopped()) {
      if (++steps > ctl_.max_steps)
        raise(Errc::step_collapse, "step budget exhausted; the ray is too stiff");
      step_once(r_target);
    }
  }

 private:
  void refresh() {
    k1_ = log_mode_ ? ray_.log_form(r_, u_) : ray_.direct_form(r_, F_);
    if (k1_.q_overflow) q_overflow_ = true;
  }

  double tolerance(const std::complex<double>& y0, const std::complex<double>& y1) const {
    if (log_mode_) return ctl_.abs_tol + ctl_.rel_tol * std::max(std::abs(y0), std::abs(y1));
    // In the direct chart the state passes through 0; keep the tolerance
    // relative to the local scale of F with a hard absolute floor.
    return ctl_.abs_tol + ctl_.rel_tol * (std::abs(y0) + std::abs(y1) + 1e-30);
  }

  void step_once(double r_target) {
    h_ = std::min(h_, r_target - r_);
    const double h_min = 1e-13 * (1.0 + r_);
    if (h_ < h_min) raise(Errc::step_collapse, "step size collapsed below float resolution");

    const std::complex<double> y = log_mode_ ? u_ : F_;
    auto rhs = [&](double rr, const std::complex<double>& yy) {
      return log_mode_ ? ray_.log_form(rr, yy) : ray_.direct_form(rr, yy);
    };
    const Deriv k2 = rhs(r_ + 0.2 * h_, y + h_ * (kA21 * k1_.dy));
    const Deriv k3 = rhs(r_ + 0.3 * h_, y + h_ * (kA31 * k1_.dy + kA32 * k2.dy));
    const Deriv k4 = rhs(r_ + 0.8 * h_, y + h_ * (kA41 * k1_.dy + kA42 * k2.dy + kA43 * k3.dy));
    const Deriv k5 = rhs(r_ + 8.0 / 9 * h_,
                         y + h_ * (kA51 * k1_.dy + kA52 * k2.dy + kA53 * k3.dy + kA54 * k4.dy));
    const Deriv k6 = rhs(r_ + h_, y + h_ * (kA61 * k1_.dy + kA62 * k2.dy + kA63 * k3.dy +
                                            kA64 * k4.dy + kA65 * k5.dy));
    const std::complex<double> dy5 =
        h_ * (kB1 * k1_.dy + kB3 * k3.dy + kB4 * k4.dy + kB5 * k5.dy + kB6 * k6.dy);
    const Deriv k7 = rhs(r_ + h_, y + dy5);
    if (k2.q_overflow || k3.q_overflow || k4.q_overflow || k5.q_overflow || k6.q_overflow ||
        k7.q_overflow) {
      q_overflow_ = true;
      return;
    }

    const std::complex<double> err_vec =
        h_ * (kE1 * k1_.dy + kE3 * k3.dy + kE4 * k4.dy + kE5 * k5.dy + kE6 * k6.dy +
              kE7 * k7.dy);
    const double err = std::abs(err_vec);
    const double tol = tolerance(y, y + dy5);
    // Branch continuity: |du| < pi/2 per step, but only while the e^{-u}
    // coupling is active.  Decoupled, the right side no longer depends on u
    // (pure quadrature), so the unwrapping cap serves no purpose.  The direct
    // chart needs no cap: its phase lift is computed from the actual ratio.
    const bool coupled = k1_.coupled || k2.coupled || k3.coupled || k4.coupled || k5.coupled ||
                         k6.coupled || k7.coupled;
    const bool du_ok = !log_mode_ || !coupled || std::abs(dy5) < M_PI / 2;

    if (err <= tol && du_ok) {
      r_ += h_;
      if (log_mode_) {
        u_ += dy5;
        if (u_.real() > ctl_.re_u_budget) {
          overflowed_ = true;
          return;
        }
        if (u_.real() < kDecayFloor) {  // only reachable decoupled (R2 == 0)
          decayed_ = true;
          return;
        }
        if (u_.real() < kLogEnterDirect) {
          F_ = std::exp(u_);
          phase_ = u_.imag();
          log_mode_ = false;
          refresh();
        } else {
          k1_ = k7;  // FSAL
        }
      } else {
        const std::complex<double> F_new = F_ + dy5;
        if (F_new == std::complex<double>(0.0, 0.0)) {
          F_ = F_new;
          decayed_ = true;
          return;
        }
        phase_ += std::arg(F_new / F_);
        F_ = F_new;
        const double log_mag = std::log(std::abs(F_));
        if (log_mag < kDecayFloor) {
          decayed_ = true;
          return;
        }
        if (log_mag > kLogExitDirect) {
          u_ = {log_mag, phase_};
          log_mode_ = true;
          refresh();
        } else {
          k1_ = k7;  // FSAL
        }
      }
    }
    double scale = err > 0 ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
    if (!du_ok) scale = std::min(scale, 0.4);
    h_ *= std::clamp(scale, 0.2, 5.0);
    if (!std::isfinite(h_) || h_ <= 0) h_ = 1e-6;
  }

  const Ray& ray_;
  const StepControl& ctl_;
  double r_;
  std::complex<double> u_{0.0, 0.0};  // valid in the log chart
  std::complex<double> F_{0.0, 0.0};  // valid in the direct chart
  double phase_ = 0.0;                // continuous arg F lift in the direct chart
  bool log_mode_ = true;
  double h_ = 1e-3;
  Deriv k1_;
  bool q_overflow_ = false, overflowed_ = false, decayed_ = false;
};

std::pair<double, double> lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return {sxx > 0 ? sxy / sxx : 0.0, my};
}

void classify_and_fit(RayTrace& t, double r0, double r_max, bool stopped_early,
                      bool decayed_early) {
  // Fit window: the top of the range, clear of the start-up transient.
  const double r_lo = std::max(r0, r_max / 5.0);
  std::vector<double> r_fit, log_re_u, re_u, log_r;
  for (size_t i = 0; i < t.r_values.size(); ++i) {
    double r = t.r_values[i];
    if (r < r_lo) continue;
    double re = t.logF[i].real();
    r_fit.push_back(r);
    log_r.push_back(std::log(r));
    re_u.push_back(re);
    log_re_u.push_back(std::log(std::max(re, 1e-12)));
  }
  if (r_fit.size() >= 3) {
    t.order_logF = lsq_slope(log_r, log_re_u).first;
    t.loglog_slope = lsq_slope(r_fit, log_re_u).first;
    t.poly_exponent = lsq_slope(log_r, re_u).first;
  }

  if (stopped_early) {
    t.status = RayStatus::overflow_stopped;
    return;
  }
  const double re_final = t.logF.back().real();
  const double re_start = t.logF.front().real();
  if (decayed_early || (re_final < -2.0 && re_final < re_start - 1.0)) {
    t.status = RayStatus::decayed;
    return;
  }
  if (t.loglog_slope >= 0.5 && re_final > 50.0) {
    t.status = RayStatus::super_exponential;
    return;
  }
  t.status = RayStatus::polynomially_bounded;
}

}  // namespace

const char* ray_status_name(RayStatus s) {
  switch (s) {
    case RayStatus::decayed: return "decayed";
    case RayStatus::polynomially_bounded: return "polynomially_bounded";
    case RayStatus::super_exponential: return "super_exponential";
    case RayStatus::overflow_stopped: return "overflow_stopped";
  }
  return "unknown";
}

std::vector<std::complex<double>> poly_roots(const Poly& p) {
  const int n = p.degree();
  if (n <= 0) return {};
  std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) c[static_cast<size_t>(j)] = p.coeff(j).to_complex();
  for (auto& v : c) v /= c.back();

  double radius = 1.0;
  for (int j = 0; j < n; ++j) radius = std::max(radius, std::abs(c[static_cast<size_t>(j)]));
  radius = 1.0 + radius;

  std::vector<std::complex<double>> w(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    w[static_cast<size_t>(j)] = std::polar(0.7 * radius, 0.4 + 2.0 * M_PI * j / n);

  auto eval_monic = [&](std::complex<double> x) {
    std::complex<double> acc(1.0, 0.0);
    for (int j = n - 1; j >= 0; --j) acc = acc * x + c[static_cast<size_t>(j)];
    return acc;
  };
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      std::complex<double> denom(1.0, 0.0);
      for (int l = 0; l < n; ++l)
        if (l != j) denom *= w[static_cast<size_t>(j)] - w[static_cast<size_t>(l)];
      if (denom == std::complex<double>(0.0, 0.0)) denom = 1e-30;
      std::complex<double> delta = eval_monic(w[static_cast<size_t>(j)]) / denom;
      w[static_cast<size_t>(j)] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-13 * radius) break;
  }
  return w;
}

double default_r0(const RatFunc& R1, const RatFunc& R2) {
  double m = 0.0;
  for (const Poly* p : {&R1.num(), &R1.den(), &R2.num(), &R2.den()})
    for (const auto& root : poly_roots(*p)) m = std::max(m, std::abs(root));
  return 2.0 * m + 1.0;
}

RayTrace integrate_ray(const RatFunc& R1, const RatFunc& R2, const Poly& q, double theta,
                       std::complex<double> F0, double r0, double r_max,
                       const StepControl& ctl) {
  if (F0 == std::complex<double>(0.0, 0.0))
    raise(Errc::invalid_argument, "F0 must be nonzero (log F is integrated)");
  if (!(r_max > r0) || !(r0 > 0)) raise(Errc::invalid_argument, "need 0 < r0 < r_max");

  // Poles of the right side must keep clear of the ray segment.
  const std::complex<double> dir = std::polar(1.0, theta);
  for (const Poly* den : {&R1.den(), &R2.den()}) {
    for (const auto& w : poly_roots(*den)) {
      // Distance from w to {s e^{i theta} : r0 <= s <= r_max}.
      double s = std::clamp((w * std::conj(dir)).real(), r0, r_max);
      if (std::abs(w - s * dir) < 0.1)
        raise(Errc::pole_on_ray, "coefficient pole within 0.1 of the integration ray");
    }
  }

  RayTrace trace;
  trace.theta = theta;
  trace.F0 = F0;
  const int n_checkpoints =
      std::min(8000, std::max(200, static_cast<int>(std::ceil((r_max - r0) / ctl.checkpoint_spacing))));
  const double dr = (r_max - r0) / n_checkpoints;
  trace.r_values.reserve(static_cast<size_t>(n_checkpoints) + 1);
  trace.logF.reserve(static_cast<size_t>(n_checkpoints) + 1);

  const Ray ray{R1, R2, q, theta, dir};
  Integrator state(ray, ctl, std::log(F0), r0);
  trace.r_values.push_back(r0);
  trace.logF.push_back(state.u());

  long steps = 0;
  for (int cp = 1; cp <= n_checkpoints && !state.stopped(); ++cp) {
    const double r_target = r0 + cp * dr;
    state.advance(r_target, steps);
    if (state.stopped()) {
      // record the partial endpoint for diagnostics
      trace.r_values.push_back(state.r());
      trace.logF.push_back(state.u());
      break;
    }
    trace.r_values.push_back(r_target);
    trace.logF.push_back(state.u());
  }

  classify_and_fit(trace, r0, r_max, state.overflow_stopped(), state.decayed_out());
  return trace;
}

double trace_residual(const RayTrace& trace, const RatFunc& R1, const RatFunc& R2,
                      const Poly& q) {
  const size_t n = trace.r_values.size();
  if (n < 5) raise(Errc::insufficient_data, "need at least 5 checkpoints");
  const Ray ray{R1, R2, q, trace.theta, std::polar(1.0, trace.theta)};
  double worst = 0.0;
  for (size_t i = 2; i + 2 < n; ++i) {
    const double dr = trace.r_values[i + 1] - trace.r_values[i];
    const double dr2 = trace.r_values[i] - trace.r_values[i - 1];
    if (std::abs(dr - dr2) > 1e-9 * dr) continue;  // only uniform interior points
    // The stencil needs u smooth on the grid scale; near a zero of F the log
    // chart varies too fast to difference meaningfully.
    double local = 0.0;
    for (size_t j = i - 2; j < i + 2; ++j)
      local = std::max(local, std::abs(trace.logF[j + 1] - trace.logF[j]));
    if (local > 0.5) continue;
    std::complex<double> fd = (-trace.logF[i + 2] + 8.0 * trace.logF[i + 1] -
                               8.0 * trace.logF[i - 1] + trace.logF[i - 2]) /
                              (12.0 * dr);
    Deriv d = ray.log_form(trace.r_values[i], trace.logF[i]);
    if (d.q_overflow) continue;
    double rel = std::abs(fd - d.dy) / (1.0 + std::abs(d.dy));
    worst = std::max(worst, rel);
  }
  return worst;
}

DichotomyReport dichotomy_report(const RatFunc& R1, const RatFunc& R2, const Poly& q,
                                 double epsilon, double r_max, const StepControl& ctl) {
  DichotomyReport rep;
  rep.r_max = r_max;
  rep.epsilon = epsilon;
  rep.r0 = default_r0(R1, R2);
  if (!(r_max > rep.r0)) raise(Errc::invalid_argument, "r_max must exceed r0");
  Poly poly_part = divmod(R2.num(), R2.den()).first;
  rep.n2 = std::max(poly_part.degree(), 0);

  std::vector<std::pair<int, double>> rays;  // (sector, theta)
  std::vector<int> signs;
  if (q.degree() < 1) {
    for (int i = 0; i < 8; ++i) rays.push_back({-1, 2.0 * M_PI * i / 8});
    signs.assign(8, 0);
  } else {
    auto map = indicator::sector_map(q);
    for (int j = 0; j < map.size(); ++j) {
      rays.push_back({j, map.central_angle(j)});
      signs.push_back(map.sign[static_cast<size_t>(j)]);
    }
  }

  const std::array<std::complex<double>, 3> ics = {
      std::complex<double>(1.0, 0.0), std::complex<double>(1.0, 1.0),
      std::complex<double>(-2.0, 0.0)};

  rep.rays.resize(rays.size());
  parallel_for(static_cast<int>(rays.size()), [&](int idx) {
    RayOutcome& out = rep.rays[static_cast<size_t>(idx)];
    out.sector = rays[static_cast<size_t>(idx)].first;
    out.theta = rays[static_cast<size_t>(idx)].second;
    out.delta_sign = signs[static_cast<size_t>(idx)];
    bool all_super = true;
    for (size_t i = 0; i < ics.size(); ++i) {
      out.traces[i] = integrate_ray(R1, R2, q, out.theta, ics[i], rep.r0, r_max, ctl);
      all_super = all_super && out.traces[i].status == RayStatus::super_exponential;
      if (out.delta_sign < 0)
        out.decay_bound_ok =
            out.decay_bound_ok && out.traces[i].poly_exponent <= rep.n2 + 2 + 0.2;
    }
    out.flagged = all_super;
  });
  for (const auto& ray : rep.rays) rep.any_flagged = rep.any_flagged || ray.flagged;
  return rep;
}

}  // namespace classn
}  // namespace expode
