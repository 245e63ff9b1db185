#include "expode/hfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expode/quadrature.hpp"

namespace expode {
namespace hfun {

namespace {

constexpr double kExpBudget = 709.0;
constexpr double kUnderflow = -745.0;
constexpr double kTinyLog = -744.0;  // log of the smallest subnormal, for clamping

// sum_j a_j(t) exp(q_j(t) + shift - p(t)), with each term exponentiated only
// after folding.  Terms below the underflow line vanish; terms above the
// overflow line poison the panel (inf), which the adaptive driver reports as
// ToleranceNotMet.
std::complex<double> folded_integrand(const Poly& p, const ExpPoly& beta,
                                      std::complex<double> t, std::complex<double> shift) {
  std::complex<double> acc(0.0, 0.0);
  std::complex<double> base = shift - p.eval(t);
  for (const auto& term : beta.terms()) {
    std::complex<double> e = term.exponent.eval(t) + base;
    if (e.real() > kExpBudget) return {std::numeric_limits<double>::infinity(), 0.0};
    if (e.real() < kUnderflow) continue;
    acc += term.coeff.eval(t) * std::exp(e);
  }
  return acc;
}

// Largest per-term folded log-magnitude at t (log|a_j| + Re(q_j + shift_re - p)).
double folded_log_mag(const Poly& p, const ExpPoly& beta, std::complex<double> t,
                      double shift_re) {
  double m = -std::numeric_limits<double>::infinity();
  double base = shift_re - p.eval(t).real();
  for (const auto& term : beta.terms()) {
    double c = std::abs(term.coeff.eval(t));
    if (c == 0.0) continue;
    m = std::max(m, std::log(c) + term.exponent.eval(t).real() + base);
  }
  if (!beta.terms().empty()) m += std::log(static_cast<double>(beta.terms().size()));
  return m;
}

void check_endpoint(const Poly& p, const ExpPoly& beta, std::complex<double> t,
                    std::complex<double> shift) {
  std::complex<double> base = shift - p.eval(t);
  for (const auto& term : beta.terms()) {
    double re = term.exponent.eval(t).real() + base.real();
    // Only too-large is fatal; deep negatives underflow to an exact zero
    // contribution, which is the correct limit.
    if (re > kExpBudget)
      raise(Errc::overflow, "folded exponent real part " + std::to_string(re) +
                                " at an integration endpoint exceeds the float budget");
  }
}

quad::Options quad_options(const HEvalConfig& cfg) {
  return {cfg.rel_tol, std::max(cfg.abs_tol, 1e-300), cfg.max_subdivisions};
}

// Truncation radius for ray integrals of beta e^{-p + shift}: doubling search
// for the first R with folded log-magnitude below target_log and still
// falling one radius step later (decay-rate certificate).
double ray_truncation(const Poly& p, const ExpPoly& beta, double theta, double shift_re,
                      double target_log, double r_start) {
  std::complex<double> d = std::polar(1.0, theta);
  for (double r = std::max(1.0, r_start); r <= 1e8; r *= 1.5) {
    double m = folded_log_mag(p, beta, r * d, shift_re);
    if (m < target_log && folded_log_mag(p, beta, 1.5 * r * d, shift_re) < m - 1.0)
      return 1.5 * r;
  }
  raise(Errc::tolerance_not_met, "ray integrand tail would not certify below target");
}

}  // namespace

std::complex<double> eval_H(const Poly& p, const ExpPoly& beta, std::complex<double> z,
                            const HEvalConfig& cfg) {
  if (z == std::complex<double>(0.0, 0.0) || beta.is_zero()) return {0.0, 0.0};
  const std::complex<double> pz = p.eval(z);
  check_endpoint(p, beta, {0.0, 0.0}, pz);
  check_endpoint(p, beta, z, pz);

  const quad::Options opt = quad_options(cfg);
  if (cfg.path == HEvalConfig::Path::segment) {
    auto f = [&](double s) { return folded_integrand(p, beta, z * s, pz) * z; };
    return quad::integrate(f, 0.0, 1.0, opt).value;
  }

  // Real leg to |z|, then a circular arc to z.
  const double r = std::abs(z);
  const double phi = std::arg(z);
  auto leg1 = [&](double s) { return folded_integrand(p, beta, {s, 0.0}, pz); };
  std::complex<double> acc = quad::integrate(leg1, 0.0, r, opt).value;
  auto leg2 = [&](double a) {
    std::complex<double> t = std::polar(r, a);
    return folded_integrand(p, beta, t, pz) * std::complex<double>(0.0, 1.0) * t;
  };
  acc += quad::integrate(leg2, 0.0, phi, opt).value;
  return acc;
}

std::complex<double> asymptotic_constant(const Poly& p, const ExpPoly& beta,
                                         const indicator::SectorMap& map, int sector,
                                         const HEvalConfig& cfg) {
  if (!map.is_growth(sector))
    raise(Errc::invalid_argument, "asymptotic constant requires a growth sector (delta > 0)");
  if (beta.is_zero()) return {0.0, 0.0};
  const double theta = map.central_angle(sector);
  const double target = std::log(std::max(cfg.abs_tol, 1e-300));
  const double R = ray_truncation(p, beta, theta, 0.0, target, 1.0);
  const std::complex<double> d = std::polar(1.0, theta);
  auto f = [&](double s) { return folded_integrand(p, beta, s * d, {0.0, 0.0}) * d; };
  return quad::integrate(f, 0.0, R, quad_options(cfg)).value;
}

std::vector<AsymptoticReport> verify_theorem0(const Poly& p, const ExpPoly& beta,
                                              const HEvalConfig& cfg,
                                              const std::vector<double>& radii, double epsilon) {
  if (radii.empty() || !std::is_sorted(radii.begin(), radii.end()))
    raise(Errc::invalid_argument, "radii must be a nonempty increasing sequence");
  if (epsilon <= 0) raise(Errc::invalid_argument, "shrink margin must be positive");

  const auto map = indicator::sector_map(p);
  const int k = map.k;
  int rho = k - 1;
  for (const auto& t : beta.terms()) rho = std::max(rho, t.exponent.degree());
  const bool eta_meaningful = rho < k;
  constexpr std::complex<double> kDecayProbe{7.0, 0.0};

  std::vector<AsymptoticReport> reports;
  for (int j = 0; j < map.size(); ++j) {
    AsymptoticReport rep;
    rep.sector = j;
    rep.growth = map.is_growth(j);
    rep.radii = radii;
    auto band = indicator::shrunk(map, j, epsilon);
    rep.thetas = {band.theta_lo, 0.5 * (band.theta_lo + band.theta_hi), band.theta_hi};

    std::complex<double> a{0.0, 0.0};
    if (rep.growth) {
      a = asymptotic_constant(p, beta, map, j, cfg);
      rep.a = a;
    }

    for (double r : radii) {
      double worst_log_d = -std::numeric_limits<double>::infinity();
      for (double theta : rep.thetas) {
        const std::complex<double> z = std::polar(r, theta);
        const std::complex<double> pz = p.eval(z);
        double log_d;
        if (rep.growth) {
          // H - a e^p = -e^{p(z)} * integral_z^{R e^{i theta}} beta e^{-p} dt
          // (ray paths of the a_j integral and this tail are exchangeable:
          // the integrand is holomorphic across the growth sector).
          double target = std::min(std::log(std::max(cfg.abs_tol, 1e-300)),
                                   -pz.real() - 80.0);
          double R = ray_truncation(p, beta, theta, 0.0, target, r);
          const std::complex<double> d = std::polar(1.0, theta);
          auto f = [&](double s) { return folded_integrand(p, beta, s * d, pz) * d; };
          std::complex<double> tail = quad::integrate(f, r, R, quad_options(cfg)).value;
          log_d = std::log(std::max(std::abs(tail), 5e-324));
        } else {
          std::complex<double> h = eval_H(p, beta, z, cfg);
          std::complex<double> ep =
              pz.real() < kTinyLog ? std::complex<double>(0.0, 0.0) : std::exp(pz);
          log_d = std::log(std::max(std::abs(h - kDecayProbe * ep), 5e-324));
        }
        worst_log_d = std::max(worst_log_d, log_d);
      }
      rep.s_values.push_back(worst_log_d / std::pow(r, k));
      if (eta_meaningful)
        rep.eta_values.push_back(worst_log_d > 1.0 && r > 1.0
                                     ? std::log(worst_log_d) / std::log(r)
                                     : 0.0);
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

FirstOrderSolution::FirstOrderSolution(Poly kappa, ExpPoly beta, std::complex<double> c,
                                       HEvalConfig cfg)
    : kappa_(std::move(kappa)),
      p_(kappa_.antiderivative()),
      beta_(std::move(beta)),
      c_(c),
      cfg_(cfg) {}

std::complex<double> FirstOrderSolution::operator()(std::complex<double> z) const {
  std::complex<double> pz = p_.eval(z);
  std::complex<double> hom{0.0, 0.0};
  if (c_ != std::complex<double>(0.0, 0.0)) {
    if (pz.real() > kExpBudget)
      raise(Errc::overflow, "homogeneous part overflows at this z; evaluate in log scale");
    hom = pz.real() < kTinyLog ? std::complex<double>(0.0, 0.0) : c_ * std::exp(pz);
  }
  return hom + eval_H(p_, beta_, z, cfg_);
}

double FirstOrderSolution::residual(std::complex<double> z) const {
  const double h = 1e-5 * (1.0 + std::abs(z));
  const std::complex<double> fp = ((*this)(z + h) - (*this)(z - h)) / (2.0 * h);
  const std::complex<double> fz = (*this)(z);
  const std::complex<double> bz = beta_.eval(z);
  double raw = std::abs(fp - kappa_.eval(z) * fz - bz);
  return raw / (1.0 + std::abs(fz) + std::abs(bz));
}

FirstOrderSolution solve_first_order(const Poly& kappa, const ExpPoly& beta,
                                     std::complex<double> c, const HEvalConfig& cfg) {
  if (kappa.is_zero())
    raise(Errc::invalid_argument, "first-order solver requires a nonzero kappa");
  return {kappa, beta, c, cfg};
}

}  // namespace hfun
}  // namespace expode
