#include "expode/indicator.hpp"

#include <cmath>

namespace expode {
namespace indicator {

namespace {

double wrap_2pi(double a) {
  const double two_pi = 2.0 * M_PI;
  a = std::fmod(a, two_pi);
  if (a < 0) a += two_pi;
  return a;
}

void require_nonconstant(const Poly& p) {
  if (p.degree() < 1)
    raise(Errc::constant_polynomial, "indicator requires a nonconstant polynomial");
}

}  // namespace

double delta(const Poly& p, double theta) {
  require_nonconstant(p);
  const int k = p.degree();
  const GaussianRational& lead = p.leading();
  double a = to_double(lead.re), b = to_double(lead.im);
  return a * std::cos(k * theta) - b * std::sin(k * theta);
}

SectorMap sector_map(const Poly& p) {
  require_nonconstant(p);
  const int k = p.degree();
  const GaussianRational& lead = p.leading();
  double a = to_double(lead.re), b = to_double(lead.im);

  // delta = R sin(psi - k theta) with psi = atan2(a, b); zeros at
  // theta = (psi + j*pi)/k.  theta1 = smallest zero in [0, pi/k).
  double psi = std::atan2(a, b);
  double spacing = M_PI / k;
  double theta1 = std::fmod(psi / k, spacing);
  if (theta1 < 0) theta1 += spacing;
  if (spacing - theta1 < 1e-14) theta1 = 0.0;

  SectorMap map;
  map.k = k;
  map.theta.resize(static_cast<size_t>(2 * k));
  map.sign.resize(static_cast<size_t>(2 * k));
  for (int j = 0; j < 2 * k; ++j) map.theta[static_cast<size_t>(j)] = theta1 + j * spacing;
  for (int j = 0; j < 2 * k; ++j) {
    double mid = map.theta[static_cast<size_t>(j)] + spacing / 2;
    map.sign[static_cast<size_t>(j)] = delta(p, mid) > 0 ? 1 : -1;
  }
  return map;
}

int SectorMap::sector_of(double angle) const {
  double a = wrap_2pi(angle);
  if (a < theta.front()) a += 2.0 * M_PI;  // belongs to the wrap-around sector
  for (size_t j = 0; j + 1 < theta.size(); ++j)
    if (a >= theta[j] && a < theta[j + 1]) return static_cast<int>(j);
  return static_cast<int>(theta.size()) - 1;
}

double SectorMap::central_angle(int j) const {
  return wrap_2pi(theta[static_cast<size_t>(j)] + M_PI / (2 * k));
}

ShrunkSector shrunk(const SectorMap& map, int j, double epsilon) {
  double width = M_PI / map.k;
  if (2 * epsilon >= width)
    raise(Errc::invalid_argument, "shrink margin leaves an empty sector");
  double lo = map.theta[static_cast<size_t>(j)];
  return {lo + epsilon, lo + width - epsilon, epsilon};
}

NormalizedPair normalize_leading(const Poly& p1_in, const Poly& p2_in) {
  if (p1_in.degree() < 1 || p2_in.degree() < 1)
    raise(Errc::constant_polynomial, "normalization requires nonconstant polynomials");
  if (p1_in.degree() != p2_in.degree())
    raise(Errc::degree_mismatch, "degrees " + std::to_string(p1_in.degree()) + " and " +
                                     std::to_string(p2_in.degree()) + " differ");
  if (p1_in.leading() == p2_in.leading())
    raise(Errc::equal_leading_coefficients,
          "leading coefficients coincide; the ratio would be 1");

  NormalizedPair out;
  const Poly* p1 = &p1_in;
  const Poly* p2 = &p2_in;
  // Enforce |alpha| <= 1 by putting the larger leading coefficient first.
  if (p2_in.leading().norm() > p1_in.leading().norm()) {
    std::swap(p1, p2);
    out.swapped = true;
  }
  const int k = p1->degree();
  const GaussianRational a1 = p1->leading();
  out.alpha = p2->leading() / a1;

  auto scale_exact = nth_root(a1, k);
  if (scale_exact) {
    // z -> z/lambda maps coefficient c_j to c_j / lambda^j.
    auto transform = [&](const Poly& p) {
      std::vector<GaussianRational> c = p.coeffs();
      GaussianRational inv = GaussianRational(1) / *scale_exact;
      GaussianRational f(1);
      for (size_t j = 0; j < c.size(); ++j) {
        c[j] *= f;
        f *= inv;
      }
      return Poly(std::move(c));
    };
    out.p1 = transform(*p1);
    out.p2 = transform(*p2);
    return out;
  }

  out.exactness_lost = true;
  std::complex<double> a1f = a1.to_complex();
  double mod = std::pow(std::abs(a1f), 1.0 / k);
  double arg = wrap_2pi(std::arg(a1f)) / k;  // same branch as the exact root
  std::complex<double> lambda = std::polar(mod, arg);
  auto transform_f = [&](const Poly& p) {
    std::vector<std::complex<double>> c(static_cast<size_t>(p.degree()) + 1);
    std::complex<double> f(1.0, 0.0);
    for (size_t j = 0; j < c.size(); ++j) {
      c[j] = p.coeff(static_cast<int>(j)).to_complex() * f;
      f /= lambda;
    }
    return c;
  };
  out.p1_float = transform_f(*p1);
  out.p2_float = transform_f(*p2);
  return out;
}

std::optional<double> growth_threshold_radius(const Poly& p, double theta, double eps,
                                              double cap) {
  double d = delta(p, theta);
  if (d <= 0) raise(Errc::invalid_argument, "growth threshold needs delta(p,theta) > 0");
  const int k = p.degree();
  auto holds = [&](double r) {
    std::complex<double> z = std::polar(r, theta);
    return p.eval(z).real() >= (1.0 - eps) * d * std::pow(r, k);
  };
  for (double r = 1.0; r <= cap; r *= 2.0) {
    if (holds(r) && holds(2 * r) && holds(4 * r)) return r;
  }
  return std::nullopt;
}

}  // namespace indicator
}  // namespace expode
