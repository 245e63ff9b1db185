#pragma once
// Variation-of-constants kernel H(z) = e^{p(z)} * integral_0^z beta(t) e^{-p(t)} dt,
// its sector-wise asymptotic constants a_j = integral_0^{ray infinity} beta e^{-p},
// the first-order solver f = c e^p + H, and a harness checking the asymptotic
// bound |H - a_j e^p| <= e^{o(1) r^k} on growth sectors.
//
// Everything is computed on the folded exponent q_j(t) + p(z) - p(t): e^{p(z)}
// and the integral are never formed separately, which keeps growth sectors
// representable far past the naive overflow point.

#include <complex>
#include <optional>
#include <vector>

#include "expode/expoly.hpp"
#include "expode/indicator.hpp"

namespace expode {
namespace hfun {

struct HEvalConfig {
  double abs_tol = 1e-300;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  enum class Path { segment, two_leg_via_circle } path = Path::segment;
};

// Integral along the configured path from 0 to z.  Overflow is raised only
// when the folded exponent is unrepresentable at an endpoint itself.
std::complex<double> eval_H(const Poly& p, const ExpPoly& beta, std::complex<double> z,
                            const HEvalConfig& cfg = {});

// a_j for a growth sector (delta > 0): full-ray integral of beta e^{-p} along
// the sector's central ray, truncated once the integrand magnitude drops
// below abs_tol and a decay-rate check certifies the remainder.
std::complex<double> asymptotic_constant(const Poly& p, const ExpPoly& beta,
                                         const indicator::SectorMap& map, int sector,
                                         const HEvalConfig& cfg = {});

struct AsymptoticReport {
  int sector = 0;
  bool growth = false;
  std::optional<std::complex<double>> a;  // none on decay sectors
  std::vector<double> thetas;             // rays sampled inside the shrunk sector
  std::vector<double> radii;
  // s(r) = log|H - a e^p| / r^k, maximized over the sampled rays.
  std::vector<double> s_values;
  // log log|H - a e^p| / log r (only when the residual order rho < k allows
  // an e^{r^eta} bound; empty otherwise).  Clamped to 0 when the error is O(1).
  std::vector<double> eta_values;
};

// One report per sector of e^{p}.  On growth sectors the difference
// |H - a_j e^p| is evaluated through the outward tail integral
// e^{p(z)} * integral_z^{ray infinity} beta e^{-p} dt, which is immune to the
// catastrophic cancellation a direct subtraction would suffer once
// |e^{p(z)}| dwarfs the difference.  Decay sectors use a fixed probe
// constant: any a works there, which the bounded s-values demonstrate.
std::vector<AsymptoticReport> verify_theorem0(const Poly& p, const ExpPoly& beta,
                                              const HEvalConfig& cfg,
                                              const std::vector<double>& radii, double epsilon);

// Solution of f' - kappa f = beta with f = c e^{P} + H, P = antiderivative of
// kappa with P(0) = 0.
class FirstOrderSolution {
 public:
  FirstOrderSolution(Poly kappa, ExpPoly beta, std::complex<double> c, HEvalConfig cfg);

  std::complex<double> operator()(std::complex<double> z) const;
  // |f' - kappa f - beta| / (1 + |f| + |beta|) with f' by central differences
  // at step 1e-5 * (1 + |z|).
  double residual(std::complex<double> z) const;

  const Poly& exponent() const { return p_; }

 private:
  Poly kappa_, p_;
  ExpPoly beta_;
  std::complex<double> c_;
  HEvalConfig cfg_;
};

FirstOrderSolution solve_first_order(const Poly& kappa, const ExpPoly& beta,
                                     std::complex<double> c, const HEvalConfig& cfg = {});

}  // namespace hfun
}  // namespace expode
