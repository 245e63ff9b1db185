#include "expode/banklaine.hpp"

namespace expode {
namespace banklaine {

bool verify_banklaine(const ExpPoly& A, const ExpPoly& hprime, const Poly& kappa) {
  if (kappa.is_zero()) return false;
  const Poly kp = kappa.derivative();
  const Poly kpp = kp.derivative();
  const RatFunc k2(kappa * kappa);
  ExpPoly residual = (hprime * hprime + hprime.derivative() + A) * k2 +
                     hprime * RatFunc(Poly(2) * kappa * kp) + ExpPoly(RatFunc(kappa * kpp));
  if (residual.is_zero()) return true;
  // Clearing kappa^2 must leave polynomial coefficients; a non-polynomial
  // leftover also means the identity fails.
  return false;
}

HalfCaseWitness construct_half(const Poly& p1, const Poly& kappa, const Poly& gamma,
                               const Poly& b1) {
  if (p1.degree() < 1) raise(Errc::constant_polynomial, "p1 must be nonconstant");
  if (!p1.constant_term().is_zero())
    raise(Errc::nonzero_constant_exponent, "p1(0) = 0 is required");
  if (kappa.is_zero()) raise(Errc::invalid_argument, "kappa must be nonzero");
  if (gcd(kappa, kappa.derivative()).degree() != 0)
    raise(Errc::kappa_not_squarefree, "kappa must have simple roots");

  HalfCaseWitness w;
  w.p1 = p1;
  w.kappa = kappa;
  w.gamma = gamma;
  w.b1 = b1;
  w.gamma1 = nth_root(b1, 2);
  w.p2 = p1 * GaussianRational(make_rational(1, 2));

  const RatFunc logd_kappa = RatFunc(kappa).log_derivative();
  const RatFunc g1(w.gamma1), g(gamma);
  const RatFunc half_p1p = RatFunc(p1.derivative()) * RatFunc(make_rational(1, 2));

  RatFunc b2 = RatFunc(2) * g1 * g + RatFunc(w.gamma1.derivative()) + g1 * half_p1p +
               RatFunc(2) * logd_kappa * g1;
  if (!b2.is_polynomial())
    raise(Errc::non_polynomial_coefficient,
          "derived b2 has a kappa denominator; pick gamma so those terms cancel");
  RatFunc b3 = g * g + RatFunc(gamma.derivative()) + RatFunc(2) * g * logd_kappa +
               RatFunc(kappa.derivative().derivative(), kappa);
  if (!b3.is_polynomial())
    raise(Errc::non_polynomial_coefficient,
          "derived b3 has a kappa denominator; pick gamma so those terms cancel");
  w.b2 = b2.as_polynomial();
  w.b3 = b3.as_polynomial();

  w.hprime = ExpPoly::term(RatFunc(w.gamma1), w.p2) + ExpPoly(RatFunc(gamma));
  w.A = -(ExpPoly::term(RatFunc(w.b1), p1) + ExpPoly::term(RatFunc(w.b2), w.p2) +
          ExpPoly(RatFunc(w.b3)));
  if (!verify_banklaine(w.A, w.hprime, kappa))
    raise(Errc::verification_failed, "constructed half-case witness failed its own residual");
  return w;
}

ThreeQuarterWitness three_quarter_family(const GaussianRational& c) {
  if (c.is_zero()) raise(Errc::zero_parameter, "the family is parameterized by c != 0");

  const Poly z = Poly::variable();
  const GaussianRational c2 = c * c, c3 = c2 * c, c4 = c2 * c2;

  ThreeQuarterWitness w;
  w.c = c;
  w.hprime = ExpPoly::term(RatFunc(GaussianRational(-4) * c2), z * GaussianRational(make_rational(1, 2))) +
             ExpPoly::term(RatFunc(c), z * GaussianRational(make_rational(1, 4))) +
             ExpPoly(RatFunc(make_rational(-1, 8)));
  w.A = -(w.hprime * w.hprime + w.hprime.derivative());
  w.e_z_coeff = GaussianRational(-16) * c4;
  w.e_z_coeff_c2_reading = GaussianRational(-16) * c2;

  // Structural assertions: exponents exactly {z, 3z/4, 0} with the closed-form
  // coefficients; the e^{z/2} and e^{z/4} cross terms must have cancelled.
  const Poly tq = z * GaussianRational(make_rational(3, 4));
  if (w.A.terms().size() != 3 || w.A.coeff_of(z) != RatFunc(w.e_z_coeff) ||
      w.A.coeff_of(tq) != RatFunc(GaussianRational(8) * c3) ||
      w.A.coeff_of(Poly()) != RatFunc(make_rational(-1, 64)))
    raise(Errc::verification_failed, "three-quarter family A has unexpected shape");
  if (!verify_banklaine(w.A, w.hprime, Poly(1)))
    raise(Errc::verification_failed, "three-quarter family failed its own residual");
  return w;
}

}  // namespace banklaine
}  // namespace expode
