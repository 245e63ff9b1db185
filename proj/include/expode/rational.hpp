#pragma once
// Exact scalars: rationals (GMP mpq) and Gaussian rationals a+bi with a,b
// rational.  Gaussian rationals form a field, so polynomial division, gcd and
// rational-function normalization downstream stay exact.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "expode/error.hpp"

namespace expode {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) raise(Errc::division_by_zero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Render as "num/den", or "num" when the denominator is 1.
std::string rational_to_string(const Rational& q);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}           // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussianRational conj() const { return {re, Rational(-im)}; }
  Rational norm() const { return re * re + im * im; }  // |.|^2

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) raise(Errc::division_by_zero, "division by zero scalar");
    Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {Rational(-a.re), Rational(-a.im)};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

GaussianRational pow(const GaussianRational& base, unsigned long e);

// Total order used for canonical sorting (not a field order): compare re, then im.
int compare(const GaussianRational& a, const GaussianRational& b);

// Exact n-th root in Q(i), if one exists.  Among all n-th roots the one with
// argument in [0, 2*pi/n) is preferred; if the Gaussian-rational roots all lie
// outside that window (possible for odd n), the one of smallest argument in
// [0, 2*pi) is returned.  Root search is performed over the integers via the
// norm, so the result is verified exactly before being returned.
std::optional<GaussianRational> nth_root(const GaussianRational& x, int n);

// Render in expression grammar, e.g. "3/4", "i", "(1+1/2i)".
std::string gaussian_to_string(const GaussianRational& g);

}  // namespace expode
