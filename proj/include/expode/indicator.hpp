#pragma once
// Growth-direction analysis of e^{p(z)}: the angular indicator
// delta(p, theta) = a cos(k theta) - b sin(k theta)  (a+bi the leading
// coefficient, k the degree), its sign sectors, and leading-coefficient
// normalization of a pair of polynomials.

#include <complex>
#include <optional>
#include <vector>

#include "expode/poly.hpp"

namespace expode {
namespace indicator {

struct SectorMap {
  int k = 0;                  // degree of p
  std::vector<double> theta;  // 2k boundary angles, strictly increasing in [0, 2*pi)
  std::vector<int> sign;      // sign[j] = sign of delta on (theta[j], theta[j+1]), cyclic

  int size() const { return 2 * k; }
  // Index j with angle in [theta[j], theta[j+1}) cyclically.
  int sector_of(double angle) const;
  double central_angle(int j) const;
  bool is_growth(int j) const { return sign[static_cast<size_t>(j)] > 0; }
};

struct ShrunkSector {
  double theta_lo = 0, theta_hi = 0, epsilon = 0;
};

double delta(const Poly& p, double theta);  // ConstantPolynomial when deg p < 1

SectorMap sector_map(const Poly& p);

// [theta[j]+eps, theta[j+1]-eps]; width must stay positive.
ShrunkSector shrunk(const SectorMap& map, int j, double epsilon);

struct NormalizedPair {
  Poly p1, p2;                // exact transformed pair (valid when !exactness_lost)
  GaussianRational alpha;     // ratio of leading coefficients after any swap; |alpha| <= 1
  bool swapped = false;       // inputs exchanged to enforce |alpha| <= 1
  bool exactness_lost = false;
  // Floating witness of the transformed pair when the scale alpha1^(1/k) is
  // not Gaussian rational (coefficients low-to-high).
  std::vector<std::complex<double>> p1_float, p2_float;
};

// Rescale z -> z/alpha1^(1/k) so p1 becomes monic and p2's leading
// coefficient becomes alpha = alpha2/alpha1 with |alpha| <= 1.
NormalizedPair normalize_leading(const Poly& p1, const Poly& p2);

// Smallest power-of-two radius r (up to cap) such that
// Re p(r e^{i theta}) >= (1-eps) delta(p,theta) r^k holds at r, 2r and 4r;
// nullopt when no such radius is found below the cap.
std::optional<double> growth_threshold_radius(const Poly& p, double theta, double eps,
                                              double cap = 1e4);

}  // namespace indicator
}  // namespace expode
