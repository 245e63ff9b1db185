#pragma once
// Solutions with few zeros of g'' + A g = 0 for A = -(b1 e^{p1} + b2 e^{p1/2} + b3):
// forward construction of the half-exponent case (choose kappa, gamma; derive
// b2, b3), the explicit one-parameter 3/4-exponent family, and exact residual
// verification after clearing kappa^2.

#include "expode/expoly.hpp"

namespace expode {
namespace banklaine {

struct HalfCaseWitness {
  Poly p1, kappa, gamma1, gamma;
  Poly b1, b2, b3;  // b2, b3 derived from the two relations
  Poly p2;          // always p1/2 — the middle exponent is forced
  ExpPoly hprime;   // gamma1 e^{p1/2} + gamma
  ExpPoly A;        // -(b1 e^{p1} + b2 e^{p1/2} + b3)
};

// g = kappa e^{h} with h' = gamma1 e^{p1/2} + gamma; the relations
//   2 gamma1 gamma + gamma1' + gamma1 p1'/2 + 2 (kappa'/kappa) gamma1 = b2
//   gamma^2 + gamma' + 2 gamma kappa'/kappa + kappa''/kappa = b3
// determine b2, b3.  Rejects non-square b1 (NotAPower), kappa with repeated
// roots (KappaNotSquarefree), and choices whose derived b2 or b3 fails to be
// a polynomial (NonPolynomialCoefficient).
HalfCaseWitness construct_half(const Poly& p1, const Poly& kappa, const Poly& gamma,
                               const Poly& b1);

struct ThreeQuarterWitness {
  GaussianRational c;
  ExpPoly hprime;  // -4c^2 e^{z/2} + c e^{z/4} - 1/8
  ExpPoly A;       // -(16c^4 e^z - 8c^3 e^{3z/4} + 1/64), exact
  // The e^z coefficient of -A from direct expansion is 16c^4; a c^2 reading
  // of the same family circulates and agrees only at c = +-1.  Both are
  // recorded; the exact residual g'' + A g = 0 is the ground truth.
  GaussianRational e_z_coeff;            // -16c^4
  GaussianRational e_z_coeff_c2_reading; // -16c^2
};

// g = e^{h}; ZeroParameter when c = 0.
ThreeQuarterWitness three_quarter_family(const GaussianRational& c);

// true iff kappa^2 [ (h')^2 + h'' + 2(kappa'/kappa) h' + kappa''/kappa + A ]
// is identically zero — the cleared form of g''/g = -A for g = kappa e^{h}.
bool verify_banklaine(const ExpPoly& A, const ExpPoly& hprime, const Poly& kappa);

}  // namespace banklaine
}  // namespace expode
