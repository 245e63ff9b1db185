#pragma once
// Exponential polynomials: canonical finite sums  sum_j a_j(z) e^{q_j(z)}
// with rational-function coefficients a_j and polynomial exponents q_j.
// Canonical form (exponents strictly increasing in the poly_less order, like
// exponents merged, zero coefficients dropped) makes the zero test exact:
// terms with pairwise distinct non-constant exponents are linearly
// independent, so a sum vanishes identically iff the canonical form is empty.
// Exponents are restricted to q(0) = 0; otherwise e^{q} would drag
// transcendental constants e^{q(0)} into the coefficient field.

#include <complex>
#include <vector>

#include "expode/ratfunc.hpp"

namespace expode {

struct ExpTerm {
  RatFunc coeff;
  Poly exponent;

  friend bool operator==(const ExpTerm& a, const ExpTerm& b) {
    return a.coeff == b.coeff && a.exponent == b.exponent;
  }
};

// value = mantissa * exp(log_scale); keeps magnitudes representable far past
// the double range.
struct ScaledValue {
  std::complex<double> mantissa{0.0, 0.0};
  double log_scale = 0.0;

  // log|value|; -infinity when the value is zero.
  double log_abs() const;
  // Signals Overflow when the value is not representable as a double.
  std::complex<double> value() const;
};

class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(long v) : ExpPoly(RatFunc(v)) {}               // NOLINT
  ExpPoly(const Poly& p) : ExpPoly(RatFunc(p)) {}        // NOLINT
  ExpPoly(const RatFunc& constant);                      // NOLINT: exponent 0

  // Single term a(z) e^{q(z)}.  Signals NonzeroConstantExponent when q(0) != 0.
  static ExpPoly term(RatFunc coeff, Poly exponent);
  static ExpPoly from_terms(std::vector<ExpTerm> terms);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient on e^{q}; zero RatFunc when absent.
  RatFunc coeff_of(const Poly& q) const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const ExpPoly& o);
  ExpPoly& operator*=(const RatFunc& s);

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const ExpPoly& b) { return a *= b; }
  friend ExpPoly operator*(ExpPoly a, const RatFunc& s) { return a *= s; }
  friend ExpPoly operator*(const RatFunc& s, ExpPoly a) { return a *= s; }
  friend ExpPoly operator-(const ExpPoly& a);
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

  ExpPoly pow(unsigned e) const;
  ExpPoly derivative() const;  // sum (a' + a q') e^q

  // Direct floating evaluation.  Signals Overflow when any |Re q_j(z)|
  // exceeds the double exponent budget; use eval_scaled for asymptotic work.
  std::complex<double> eval(const std::complex<double>& z) const;

  // Overflow-free evaluation: factors out the dominant exponential scale.
  ScaledValue eval_scaled(const std::complex<double>& z) const;

  // log|value| at z; never overflows.
  double log_abs(const std::complex<double>& z) const { return eval_scaled(z).log_abs(); }

 private:
  void normalize();
  std::vector<ExpTerm> terms_;
};

}  // namespace expode
