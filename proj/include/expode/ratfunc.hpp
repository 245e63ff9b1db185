#pragma once
// Rational functions num/den over the Gaussian rationals, kept reduced
// (gcd(num, den) == 1) with monic denominator.  Arithmetic is exact.

#include <complex>

#include "expode/poly.hpp"

namespace expode {

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long v) : num_(v), den_(1) {}                     // NOLINT
  RatFunc(const Rational& v) : num_(v), den_(1) {}          // NOLINT
  RatFunc(const GaussianRational& v) : num_(v), den_(1) {}  // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}          // NOLINT
  RatFunc(Poly num, Poly den);                              // normalizes; den != 0

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Valid only when is_polynomial().
  const Poly& as_polynomial() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(int e) const;  // negative exponents allowed for nonzero input
  RatFunc derivative() const;
  RatFunc log_derivative() const;  // f'/f, f != 0

  // Signals PoleProximity when |den(z)| < 1e-12 * (1+|z|)^deg(den).
  std::complex<double> eval(const std::complex<double>& z) const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace expode
