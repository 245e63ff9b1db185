#pragma once
// Constructive solutions of  f^n + P(z,f) = b1 e^{p1} + b2 e^{p2}  where P has
// degree at most n-1: witness construction for the two solvable shapes
// (alpha = -1, and rational alpha in (0,1)), the triangular coefficient
// system, exact residual verification, and the iota/kappa/D sequences used to
// reduce the general equation to first order.

#include <optional>
#include <string>
#include <vector>

#include "expode/expoly.hpp"

namespace expode {
namespace tc {

// Normalized problem data: p1 monic, p2 with real rational leading
// coefficient alpha, |alpha| <= 1, alpha != 0, 1, both exponents vanishing
// at 0.  Use indicator::normalize_leading to bring raw pairs to this form.
struct TCProblem {
  int n = 2;
  Poly b1, b2, p1, p2;
  Rational alpha;

  TCProblem(int n, Poly b1, Poly b2, Poly p1, Poly p2);
  int k() const { return p1.degree(); }
};

enum class TCCase { alpha_minus_one, alpha_unit_interval };

struct TCWitness {
  TCCase kind = TCCase::alpha_unit_interval;
  int n = 2;
  int m = 0;                      // series length parameter (case 2)
  Poly gamma1;                    // gamma1^n = b1
  std::optional<Poly> gamma2;     // case-1 companion, gamma2^n = b2
  std::vector<GaussianRational> c;
  std::vector<Rational> t;        // case-2 exponent factors t_j = j(alpha-1) + 1/n
  ExpPoly f;
  ExpPoly residual;               // f^n - b1 e^{p1} - b2 e^{p2}, exact
};

// Minimal m >= 0 with alpha <= ((m+1)n - 1)/((m+1)n); exact rational arithmetic.
int smallest_m(int n, const Rational& alpha);

// t_j = j(alpha - 1) + 1/n.
Rational exponent_factor(int n, const Rational& alpha, int j);

// C_{k0} = sum over j_0+...+j_m = n, j_1+2j_2+...+m j_m = k0 of
// n!/(j_0!...j_m!) * c_0^{j_0}...c_m^{j_m}; exact enumeration.
GaussianRational multinomial_C(int k0, int n, const std::vector<GaussianRational>& c);

// c_0 = 1 (unity branch), c_1 = 1/n, and C_j = 0 for j = 2..m solved
// triangularly (C_j = n c_j + known terms).
std::vector<GaussianRational> solve_coefficients(int n, int m);

// alpha = -1: f = gamma1 e^{p1/n} + gamma2 e^{p2/n}; residual holds only the
// mixed cross terms e^{(j p1 + (n-j) p2)/n}.
TCWitness construct_case1(const TCProblem& prob);

// 0 < alpha < 1: f = gamma1 * sum_j c_j (b2/b1)^j e^{t_j p1}.  For m >= 1
// requires p2 = alpha p1 exactly; for m = 0 the b2 term is absorbed into the
// residual (its factor alpha <= (n-1)/n makes that admissible).
TCWitness construct_case2(const TCProblem& prob);

struct ResidualTermReport {
  Poly exponent;
  RatFunc coeff;
  std::optional<Rational> factor;  // s: top-degree coefficient ratio against p1
  std::optional<int> f_power;      // s*n when it is an integer in [0, n-1]
  std::optional<int> mixture_j;    // j when n*q = j p1 + (n-j) p2
  bool is_absorbed_b2 = false;     // the m = 0 full -b2 e^{p2} term
};

struct TCVerifyReport {
  bool matched_b1 = false;
  bool matched_b2 = false;  // false means the b2 term lives in the residual
  std::vector<ResidualTermReport> residual_terms;
  int points_checked = 0;
  double max_numeric_rel_err = 0.0;
};

// Recomputes f^n (optionally with a lower-order additive part whose exponent
// degrees are all < k), asserts the matched coefficients, checks every
// residual exponent is admissible (top-degree factor <= (n-1)/n), and
// spot-checks the defining equation numerically at 10 pole-free points by an
// independent route (complex power of f's value vs. evaluation of the
// expanded right side).  Signals VerificationFailed otherwise.
TCVerifyReport verify_tc(const TCWitness& w, const TCProblem& prob,
                         const std::optional<ExpPoly>& gamma = std::nullopt);

struct KappaIota {
  struct DTerm {
    RatFunc iota_prev;   // iota_{j-1}
    Rational b1_power;   // D_j = iota_{j-1} * b1^{b1_power}, b1_power = 1/n - j
  };
  std::vector<RatFunc> iota;   // iota_0..iota_m
  std::vector<RatFunc> kappa;  // kappa_0..kappa_m
  std::vector<DTerm> D;        // D_1..D_m
};

// iota_0 = A1/(n b1) with A1 = b1 b2 (B2 - B1), B_i = b_i'/b_i + p_i';
// iota_j = (-1)^j (A1/(n b1))^{j+1} (n-1)(2n-1)...(jn-1);
// kappa_0 = (1/n) b1'/b1 + (1/n) p1';
// kappa_j = iota_{j-1}'/iota_{j-1} - ((jn-1)/n) b1'/b1 + t_j p1'.
// The identity kappa_j = (log D_j)' + t_j p1' is re-derived through the
// closed form of iota_{j-1} and asserted exactly.
KappaIota kappa_iota(const TCProblem& prob, int m);

}  // namespace tc
}  // namespace expode
