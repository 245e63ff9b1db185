#pragma once
// Dense univariate polynomials over the Gaussian rationals.  Coefficients are
// stored low-to-high with no trailing zeros; the zero polynomial has an empty
// coefficient vector and degree -1.

#include <complex>
#include <utility>
#include <vector>

#include "expode/rational.hpp"

namespace expode {

class Poly {
 public:
  Poly() = default;
  Poly(long v) : Poly(GaussianRational(v)) {}                // NOLINT
  Poly(const Rational& v) : Poly(GaussianRational(v)) {}     // NOLINT
  Poly(const GaussianRational& v) {                          // NOLINT
    if (!v.is_zero()) coeff_.push_back(v);
  }
  explicit Poly(std::vector<GaussianRational> coeffs) : coeff_(std::move(coeffs)) { trim(); }

  static Poly variable() { return monomial(GaussianRational(1), 1); }
  static Poly monomial(const GaussianRational& a, int power);

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.empty(); }
  bool is_constant() const { return coeff_.size() <= 1; }

  // Coefficient of z^j; zero outside the stored range.
  const GaussianRational& coeff(int j) const;
  const GaussianRational& leading() const;
  GaussianRational constant_term() const { return coeff_.empty() ? GaussianRational() : coeff_[0]; }
  const std::vector<GaussianRational>& coeffs() const { return coeff_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussianRational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
  friend Poly operator*(const GaussianRational& s, Poly a) { return a *= s; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeff_ == b.coeff_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Poly derivative() const;
  Poly antiderivative() const;  // constant of integration 0
  Poly monic() const;           // zero polynomial stays zero

  std::complex<double> eval(const std::complex<double>& z) const;  // Horner
  GaussianRational eval_exact(const GaussianRational& z) const;

 private:
  void trim();
  std::vector<GaussianRational> coeff_;
};

// Exact Euclidean division: a = q*b + r with deg r < deg b.  DivisionByZero
// when b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd (gcd(0,0) == 0).
Poly gcd(Poly a, Poly b);

// Exact n-th root; signals NotAPower when none exists.  Root chosen so its
// leading coefficient is the preferred scalar n-th root of the input's.
Poly nth_root(const Poly& p, int n);

// If q == s*p for a real rational s, return s.
std::optional<Rational> rational_multiple_of(const Poly& q, const Poly& p);

// Strict total order on polynomials used for canonical term sorting:
// by degree, then coefficients from the leading term down, each compared
// lexicographically as (re, im).
bool poly_less(const Poly& a, const Poly& b);

}  // namespace expode
