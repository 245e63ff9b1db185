#include "expode/tc.hpp"

#include <cmath>
#include <complex>

namespace expode {
namespace tc {

namespace {

Rational case_bound(int n) { return make_rational(n - 1, n); }  // (n-1)/n

std::string poly_text_for_error(const Poly& q) {
  // Enough structure to identify the offender without a full printer.
  std::string s = "degree " + std::to_string(q.degree()) + " exponent, leading " +
                  gaussian_to_string(q.leading());
  return s;
}

}  // namespace

TCProblem::TCProblem(int n_in, Poly b1_in, Poly b2_in, Poly p1_in, Poly p2_in)
    : n(n_in),
      b1(std::move(b1_in)),
      b2(std::move(b2_in)),
      p1(std::move(p1_in)),
      p2(std::move(p2_in)),
      alpha(0) {
  if (n < 2) raise(Errc::invalid_argument, "need n >= 2");
  if (b1.is_zero() || b2.is_zero()) raise(Errc::invalid_argument, "b1, b2 must be nonzero");
  if (p1.degree() < 1 || p2.degree() < 1)
    raise(Errc::constant_polynomial, "p1, p2 must be nonconstant");
  if (p1.degree() != p2.degree())
    raise(Errc::degree_mismatch, "p1 and p2 must share their degree k");
  if (!p1.constant_term().is_zero() || !p2.constant_term().is_zero())
    raise(Errc::nonzero_constant_exponent, "p1(0) = p2(0) = 0 is required");
  if (!p1.leading().is_one())
    raise(Errc::invalid_argument, "p1 must be monic; normalize the pair first");
  const GaussianRational& lead2 = p2.leading();
  if (!lead2.is_real())
    raise(Errc::invalid_argument, "alpha must be real and rational");
  alpha = lead2.re;
  if (alpha == 1) raise(Errc::equal_leading_coefficients, "alpha = 1 is excluded");
  if (alpha > 1 || alpha < -1)
    raise(Errc::invalid_argument, "|alpha| <= 1 is required; swap p1 and p2");
}

int smallest_m(int n, const Rational& alpha) {
  if (n < 2) raise(Errc::invalid_argument, "need n >= 2");
  if (!(alpha > 0 && alpha < 1))
    raise(Errc::invalid_argument, "smallest_m needs 0 < alpha < 1");
  // alpha <= ((m+1)n-1)/((m+1)n)  <=>  m+1 >= 1/(n(1-alpha)).
  Rational bound = Rational(1) / (Rational(n) * (Rational(1) - alpha));
  BigInt m_plus_1;
  mpz_cdiv_q(m_plus_1.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
  return static_cast<int>(m_plus_1.get_si()) - 1;
}

Rational exponent_factor(int n, const Rational& alpha, int j) {
  return Rational(j) * (alpha - 1) + make_rational(1, n);
}

namespace {

BigInt factorial(int j) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j));
  return f;
}

// Sum over j_i..j_0 with sum j = count_left and weighted sum = weight_left of
// the multinomial monomials; `denom` and `monomial` carry the factors chosen
// for indices above i.
GaussianRational sum_compositions(const std::vector<GaussianRational>& c, int i, int count_left,
                                  int weight_left, const BigInt& n_fact, const BigInt& denom,
                                  const GaussianRational& monomial) {
  if (i == 0) {
    if (weight_left != 0) return GaussianRational(0);
    BigInt d = denom * factorial(count_left);
    return monomial * pow(c[0], static_cast<unsigned long>(count_left)) *
           GaussianRational(Rational(n_fact) / Rational(d));
  }
  GaussianRational total;
  const int max_j = std::min(count_left, weight_left / i);
  GaussianRational ci_pow(1);
  for (int j = 0; j <= max_j; ++j) {
    total += sum_compositions(c, i - 1, count_left - j, weight_left - i * j, n_fact,
                              denom * factorial(j), monomial * ci_pow);
    ci_pow *= c[static_cast<size_t>(i)];
  }
  return total;
}

}  // namespace

GaussianRational multinomial_C(int k0, int n, const std::vector<GaussianRational>& c) {
  if (n < 1 || k0 < 0 || c.empty()) raise(Errc::invalid_argument, "bad multinomial arguments");
  return sum_compositions(c, static_cast<int>(c.size()) - 1, n, k0, factorial(n), BigInt(1),
                          GaussianRational(1));
}

std::vector<GaussianRational> solve_coefficients(int n, int m) {
  if (n < 2 || m < 0) raise(Errc::invalid_argument, "need n >= 2, m >= 0");
  std::vector<GaussianRational> c{GaussianRational(1)};
  if (m >= 1) c.push_back(GaussianRational(make_rational(1, n)));
  const GaussianRational n_inv(make_rational(1, n));
  for (int j = 2; j <= m; ++j) {
    // C_j = n c_0^{n-1} c_j + (terms in c_0..c_{j-1}); with c_j = 0 the sum
    // yields exactly those known terms.
    c.push_back(GaussianRational(0));
    GaussianRational known = multinomial_C(j, n, c);
    c.back() = -known * n_inv;
  }
  return c;
}

TCWitness construct_case1(const TCProblem& prob) {
  if (prob.alpha != -1)
    raise(Errc::invalid_argument, "this construction needs alpha = -1");
  Poly g1 = nth_root(prob.b1, prob.n);
  Poly g2 = nth_root(prob.b2, prob.n);
  const GaussianRational n_inv(make_rational(1, prob.n));

  TCWitness w;
  w.kind = TCCase::alpha_minus_one;
  w.n = prob.n;
  w.m = 0;
  w.gamma1 = g1;
  w.gamma2 = g2;
  w.c = {GaussianRational(1)};
  w.f = ExpPoly::term(RatFunc(g1), prob.p1 * n_inv) + ExpPoly::term(RatFunc(g2), prob.p2 * n_inv);
  w.residual = w.f.pow(static_cast<unsigned>(prob.n)) -
               ExpPoly::term(RatFunc(prob.b1), prob.p1) -
               ExpPoly::term(RatFunc(prob.b2), prob.p2);
  return w;
}

TCWitness construct_case2(const TCProblem& prob) {
  if (!(prob.alpha > 0 && prob.alpha < 1))
    raise(Errc::invalid_argument, "this construction needs 0 < alpha < 1");
  const int m = smallest_m(prob.n, prob.alpha);
  if (m >= 1 && prob.p2 != prob.p1 * GaussianRational(prob.alpha))
    raise(Errc::p2_not_proportional,
          "m = " + std::to_string(m) + " >= 1 requires p2 = alpha * p1 exactly");
  Poly g1 = nth_root(prob.b1, prob.n);
  const RatFunc ratio(prob.b2, prob.b1);

  TCWitness w;
  w.kind = TCCase::alpha_unit_interval;
  w.n = prob.n;
  w.m = m;
  w.gamma1 = g1;
  w.c = solve_coefficients(prob.n, m);
  ExpPoly f;
  for (int j = 0; j <= m; ++j) {
    Rational tj = exponent_factor(prob.n, prob.alpha, j);
    w.t.push_back(tj);
    RatFunc coeff = RatFunc(g1) * RatFunc(w.c[static_cast<size_t>(j)]) * ratio.pow(j);
    f += ExpPoly::term(std::move(coeff), prob.p1 * GaussianRational(tj));
  }
  w.f = std::move(f);
  w.residual = w.f.pow(static_cast<unsigned>(prob.n)) -
               ExpPoly::term(RatFunc(prob.b1), prob.p1) -
               ExpPoly::term(RatFunc(prob.b2), prob.p2);
  return w;
}

TCVerifyReport verify_tc(const TCWitness& w, const TCProblem& prob,
                         const std::optional<ExpPoly>& gamma) {
  const int n = prob.n;
  const int k = prob.k();
  ExpPoly g = w.f;
  if (gamma) {
    for (const auto& t : gamma->terms())
      if (t.exponent.degree() >= k)
        raise(Errc::invalid_argument,
              "lower-order part must have exponent degrees < " + std::to_string(k));
    g += *gamma;
  }

  // The theorem's f is entire: every (b2/b1)-power denominator must have
  // cancelled against gamma1.
  for (const auto& t : g.terms())
    if (!t.coeff.is_polynomial())
      raise(Errc::verification_failed,
            "f has an uncancelled denominator on e^{" + poly_text_for_error(t.exponent) + "}");

  ExpPoly power = g.pow(static_cast<unsigned>(n));
  ExpPoly residual = power - ExpPoly::term(RatFunc(prob.b1), prob.p1) -
                     ExpPoly::term(RatFunc(prob.b2), prob.p2);

  TCVerifyReport rep;
  if (!residual.coeff_of(prob.p1).is_zero())
    raise(Errc::verification_failed, "coefficient on e^{p1} does not equal b1");
  rep.matched_b1 = true;

  const RatFunc b2_gap = residual.coeff_of(prob.p2);
  rep.matched_b2 = b2_gap.is_zero();
  const Rational bound = case_bound(n);
  if (!rep.matched_b2) {
    // Only the full absorption -b2 e^{p2} is admissible, and only when the
    // p2 growth factor itself clears the residual bound.
    if (b2_gap != -RatFunc(prob.b2))
      raise(Errc::verification_failed, "coefficient on e^{p2} does not equal b2");
    if (!(prob.alpha <= bound))
      raise(Errc::verification_failed,
            "b2 term left in residual but alpha > (n-1)/n; factor " +
                rational_to_string(prob.alpha));
  }

  for (const auto& term : residual.terms()) {
    ResidualTermReport r;
    r.exponent = term.exponent;
    r.coeff = term.coeff;
    if (term.exponent == prob.p2 && !rep.matched_b2) {
      r.is_absorbed_b2 = true;
      r.factor = prob.alpha;
    } else {
      if (term.exponent.degree() > k)
        raise(Errc::verification_failed,
              "residual exponent of degree above k: " + poly_text_for_error(term.exponent));
      GaussianRational top = term.exponent.coeff(k);  // p1 is monic
      if (!top.is_real())
        raise(Errc::verification_failed,
              "residual exponent with non-real growth factor: " +
                  poly_text_for_error(term.exponent));
      if (!(top.re <= bound))
        raise(Errc::verification_failed,
              "residual exponent factor " + rational_to_string(top.re) + " exceeds " +
                  rational_to_string(bound));
      r.factor = top.re;
    }
    if (r.factor) {
      Rational fp = *r.factor * n;
      if (fp.get_den() == 1 && fp >= 0 && fp <= n - 1)
        r.f_power = static_cast<int>(fp.get_num().get_si());
    }
    // Case-1 cross terms: n q = j p1 + (n-j) p2.
    Poly nq = term.exponent * GaussianRational(static_cast<long>(n));
    for (int j = 1; j <= n - 1; ++j) {
      if (nq == prob.p1 * GaussianRational(static_cast<long>(j)) +
                    prob.p2 * GaussianRational(static_cast<long>(n - j))) {
        r.mixture_j = j;
        break;
      }
    }
    rep.residual_terms.push_back(std::move(r));
  }

  // Numeric spot check by an independent route: f(z)^n as a complex power of
  // the evaluated sum vs. evaluation of the expanded identity.
  ExpPoly rhs = ExpPoly::term(RatFunc(prob.b1), prob.p1) +
                ExpPoly::term(RatFunc(prob.b2), prob.p2) + residual;
  int checked = 0;
  for (int i = 0; i < 24 && checked < 10; ++i) {
    std::complex<double> z = std::polar(0.7 + 0.05 * i, 0.1 + 2.0 * M_PI * i / 24.0);
    try {
      std::complex<double> fz = g.eval(z);
      std::complex<double> lhs = std::pow(fz, n);
      std::complex<double> rv = rhs.eval(z);
      double rel = std::abs(lhs - rv) / (1.0 + std::abs(lhs));
      rep.max_numeric_rel_err = std::max(rep.max_numeric_rel_err, rel);
      ++checked;
    } catch (const Error& e) {
      if (e.code() != Errc::pole_proximity) throw;
    }
  }
  rep.points_checked = checked;
  if (checked > 0 && rep.max_numeric_rel_err > 1e-8)
    raise(Errc::verification_failed,
          "numeric spot check off by " + std::to_string(rep.max_numeric_rel_err));
  return rep;
}

KappaIota kappa_iota(const TCProblem& prob, int m) {
  if (m < 0) raise(Errc::invalid_argument, "need m >= 0");
  const int n = prob.n;
  const RatFunc b1(prob.b1), b2(prob.b2);
  const RatFunc logd_b1 = b1.log_derivative();
  const RatFunc B1 = logd_b1 + RatFunc(prob.p1.derivative());
  const RatFunc B2 = b2.log_derivative() + RatFunc(prob.p2.derivative());
  const RatFunc A1 = b1 * b2 * (B2 - B1);
  const RatFunc base = A1 / (RatFunc(Rational(n)) * b1);  // iota_0

  KappaIota out;
  out.iota.push_back(base);
  for (int j = 1; j <= m; ++j) {
    RatFunc v = base.pow(j + 1);
    Rational prod(1);
    for (int i = 1; i <= j; ++i) prod *= Rational(i * n - 1);
    if (j % 2 == 1) prod = -prod;
    out.iota.push_back(v * RatFunc(prod));
  }

  out.kappa.push_back(RatFunc(make_rational(1, n)) * (logd_b1 + RatFunc(prob.p1.derivative())));
  for (int j = 1; j <= m; ++j) {
    Rational tj = exponent_factor(n, prob.alpha, j);
    RatFunc kj = out.iota[static_cast<size_t>(j - 1)].log_derivative() -
                 RatFunc(make_rational(j * n - 1, n)) * logd_b1 +
                 RatFunc(tj) * RatFunc(prob.p1.derivative());
    out.kappa.push_back(kj);
    out.D.push_back({out.iota[static_cast<size_t>(j - 1)],
                     make_rational(1, n) - Rational(j)});

    // Independent route through the closed form iota_{j-1} = +-(A1/(n b1))^j *
    // const: (log D_j)' = j * (log iota_0)' + (1/n - j) * b1'/b1.
    RatFunc route2 = RatFunc(Rational(j)) * base.log_derivative() +
                     RatFunc(make_rational(1, n) - Rational(j)) * logd_b1 +
                     RatFunc(tj) * RatFunc(prob.p1.derivative());
    if (route2 != kj)
      raise(Errc::verification_failed,
            "kappa/D logarithmic-derivative identity failed at j = " + std::to_string(j));
  }
  return out;
}

}  // namespace tc
}  // namespace expode
