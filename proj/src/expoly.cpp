#include "expode/expoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace expode {

namespace {
constexpr double kOverflowBudget = 709.0;  // log(DBL_MAX) ~ 709.78
}

double ScaledValue::log_abs() const {
  double m = std::abs(mantissa);
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  return log_scale + std::log(m);
}

std::complex<double> ScaledValue::value() const {
  if (mantissa == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
  double la = log_abs();
  if (la > kOverflowBudget)
    raise(Errc::overflow, "value magnitude exp(" + std::to_string(la) + ") exceeds double range");
  return mantissa * std::exp(log_scale);
}

ExpPoly::ExpPoly(const RatFunc& constant) {
  if (!constant.is_zero()) terms_.push_back({constant, Poly()});
}

ExpPoly ExpPoly::term(RatFunc coeff, Poly exponent) {
  if (!exponent.constant_term().is_zero())
    raise(Errc::nonzero_constant_exponent,
          "exponent polynomial must vanish at 0 (got constant term " +
              gaussian_to_string(exponent.constant_term()) + ")");
  ExpPoly e;
  if (!coeff.is_zero()) e.terms_.push_back({std::move(coeff), std::move(exponent)});
  return e;
}

ExpPoly ExpPoly::from_terms(std::vector<ExpTerm> terms) {
  for (const auto& t : terms)
    if (!t.exponent.constant_term().is_zero())
      raise(Errc::nonzero_constant_exponent, "exponent polynomial must vanish at 0");
  ExpPoly e;
  e.terms_ = std::move(terms);
  e.normalize();
  return e;
}

void ExpPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return poly_less(a.exponent, b.exponent); });
  std::vector<ExpTerm> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

RatFunc ExpPoly::coeff_of(const Poly& q) const {
  for (const auto& t : terms_)
    if (t.exponent == q) return t.coeff;
  return RatFunc();
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& t : o.terms_) terms_.push_back({-t.coeff, t.exponent});
  normalize();
  return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& o) {
  std::vector<ExpTerm> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back({a.coeff * b.coeff, a.exponent + b.exponent});
  terms_ = std::move(out);
  normalize();
  return *this;
}

ExpPoly& ExpPoly::operator*=(const RatFunc& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

ExpPoly operator-(const ExpPoly& a) {
  ExpPoly r;
  r.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) r.terms_.push_back({-t.coeff, t.exponent});
  return r;
}

ExpPoly ExpPoly::pow(unsigned e) const {
  ExpPoly acc(1);
  ExpPoly b = *this;
  while (e > 0) {
    if (e & 1U) acc *= b;
    b *= b;
    e >>= 1U;
  }
  return acc;
}

ExpPoly ExpPoly::derivative() const {
  std::vector<ExpTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    out.push_back({t.coeff.derivative() + t.coeff * RatFunc(t.exponent.derivative()), t.exponent});
  return from_terms(std::move(out));
}

std::complex<double> ExpPoly::eval(const std::complex<double>& z) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : terms_) {
    std::complex<double> q = t.exponent.eval(z);
    if (std::abs(q.real()) > kOverflowBudget)
      raise(Errc::overflow, "exponent real part " + std::to_string(q.real()) +
                                " exceeds the float budget; use a log-scale path");
    acc += t.coeff.eval(z) * std::exp(q);
  }
  return acc;
}

ScaledValue ExpPoly::eval_scaled(const std::complex<double>& z) const {
  // w_j = log coeff_j(z) + q_j(z); factor out M = max Re w_j.
  std::vector<std::complex<double>> w;
  w.reserve(terms_.size());
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) {
    std::complex<double> c = t.coeff.eval(z);
    if (c == std::complex<double>(0.0, 0.0)) continue;
    std::complex<double> wj = std::log(c) + t.exponent.eval(z);
    w.push_back(wj);
    m = std::max(m, wj.real());
  }
  if (w.empty() || !std::isfinite(m)) return {{0.0, 0.0}, 0.0};
  std::complex<double> sum(0.0, 0.0);
  for (const auto& wj : w) sum += std::exp(wj - m);
  return {sum, m};
}

}  // namespace expode
