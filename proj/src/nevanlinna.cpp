#include "expode/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "expode/indicator.hpp"
#include "expode/parallel.hpp"

namespace expode {
namespace nevanlinna {

namespace {

// Least-squares slope and intercept of y against x.
std::pair<double, double> lsq(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace

double proximity(const ExpPoly& f, double r, int samples) {
  if (r <= 0) raise(Errc::invalid_argument, "radius must be positive");
  if (samples < 4) raise(Errc::invalid_argument, "need at least 4 sample nodes");
  double acc = 0.0;
  for (int i = 0; i < samples; ++i) {
    double theta = 2.0 * M_PI * i / samples;
    double la;
    try {
      la = f.log_abs(std::polar(r, theta));
    } catch (const Error& e) {
      if (e.code() == Errc::pole_proximity)
        raise(Errc::pole_on_circle,
              "coefficient pole on |z| = " + std::to_string(r) + " near angle " +
                  std::to_string(theta));
      throw;
    }
    acc += std::max(la, 0.0);
  }
  return acc / samples;  // trapezoid on a periodic integrand = node average
}

double proximity_auto(const ExpPoly& f, double r) {
  int samples = 2048;
  double prev = proximity(f, r, samples);
  for (int round = 0; round < 6; ++round) {
    samples *= 2;
    double cur = proximity(f, r, samples);
    if (std::abs(cur - prev) <= 1e-3 * std::max(1e-12, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

GrowthCurve characteristic(const ExpPoly& f, const std::vector<double>& radii) {
  if (!std::is_sorted(radii.begin(), radii.end()))
    raise(Errc::invalid_argument, "radii must increase");
  GrowthCurve curve;
  curve.radii = radii;
  curve.T_values.resize(radii.size());
  parallel_for(static_cast<int>(radii.size()), [&](int i) {
    curve.T_values[static_cast<size_t>(i)] = proximity_auto(f, radii[static_cast<size_t>(i)]);
  });
  order_fit(curve);
  return curve;
}

void order_fit(GrowthCurve& curve) {
  const size_t n = curve.radii.size();
  if (n < 5 || curve.radii.back() < 10.0 * curve.radii.front())
    raise(Errc::insufficient_data, "order fit needs >= 5 radii spanning a decade");
  std::vector<double> lx, ly;
  for (size_t i = n / 2; i < n; ++i) {
    double t = std::max(curve.T_values[i], 1e-300);
    lx.push_back(std::log(curve.radii[i]));
    ly.push_back(std::log(t));
  }
  curve.fitted_order = lsq(lx, ly).first;
  double acc = 0.0;
  for (size_t i = n / 2; i < n; ++i)
    acc += curve.T_values[i] / std::pow(curve.radii[i], curve.fitted_order);
  curve.fitted_constant = acc / static_cast<double>(n - n / 2);
}

SteinmetzReport steinmetz_check(const Poly& b1, const Poly& b2, const Poly& p1, const Poly& p2,
                                double r_max, int points) {
  if (p1.degree() < 1 || p1.degree() != p2.degree())
    raise(Errc::degree_mismatch, "p1 and p2 must share degree k >= 1");
  if (p1.leading() == p2.leading())
    raise(Errc::equal_leading_coefficients, "the two exponents must differ at top degree");
  if (b1.is_zero() || b2.is_zero()) raise(Errc::invalid_argument, "b1, b2 must be nonzero");
  if (points < 4) raise(Errc::invalid_argument, "need at least 4 radii");

  SteinmetzReport rep;
  rep.k = p1.degree();
  const ExpPoly f = ExpPoly::term(RatFunc(b1), p1) + ExpPoly::term(RatFunc(b2), p2);
  for (int i = 0; i < points; ++i)
    rep.radii.push_back(r_max / 2.0 + (r_max / 2.0) * i / (points - 1));
  rep.T_values.resize(rep.radii.size());
  parallel_for(points, [&](int i) {
    rep.T_values[static_cast<size_t>(i)] = proximity_auto(f, rep.radii[static_cast<size_t>(i)]);
  });

  std::vector<double> rk;
  for (double r : rep.radii) rk.push_back(std::pow(r, rep.k));
  rep.C_fit = lsq(rk, rep.T_values).first;
  rep.C_at_rmax = rep.T_values.back() / rk.back();

  // Oracle: T(r) ~ r^k (1/2pi) * integral of max(delta1, delta2, 0) d theta.
  const int nodes = 4096;
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    double theta = 2.0 * M_PI * i / nodes;
    acc += std::max({indicator::delta(p1, theta), indicator::delta(p2, theta), 0.0});
  }
  rep.C_oracle = acc / nodes;
  return rep;
}

}  // namespace nevanlinna
}  // namespace expode
