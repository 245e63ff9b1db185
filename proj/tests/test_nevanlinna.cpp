#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"
#include "expode/nevanlinna.hpp"
#include "expode/indicator.hpp"

using namespace testsupport;
using namespace expode::nevanlinna;

namespace {
const double kPi = std::acos(-1.0);
const Poly z = Poly::variable();
Poly P(long v) { return Poly(v); }
ExpPoly E(Poly q) { return ExpPoly::term(RatFunc(P(1)), std::move(q)); }

double positive_part_average(const Poly& p1, const Poly& p2) {
  // Independent oracle used by the growth-constant tests:
  // (1/2pi) * integral of max(delta1, delta2, 0).
  const int nodes = 1 << 16;
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    double theta = 2.0 * kPi * i / nodes;
    acc += std::max({indicator::delta(p1, theta), indicator::delta(p2, theta), 0.0});
  }
  return acc / nodes;
}
}  // namespace

TEST_CASE("proximity of a single exponential") {
  // log+|e^z| averages to r/pi over the circle.
  double m = proximity(E(z), 10.0, 4096);
  CHECK(rel_err(m, 10.0 / kPi) < 0.005);

  // Doubling the nodes barely moves the value.
  double m2 = proximity(E(z), 10.0, 8192);
  CHECK(std::abs(m2 - m) / m < 1e-3);

  // A constant has no growth.
  CHECK(proximity(ExpPoly(P(5)), 7.0, 512) == doctest::Approx(std::log(5.0)));
  CHECK(proximity(ExpPoly(Poly(GaussianRational(make_rational(1, 2)))), 7.0, 512) == 0.0);

  CHECK(code_of([&] { return proximity(E(z), -1.0, 512); }) == Errc::invalid_argument);
  CHECK(code_of([&] { return proximity(E(z), 1.0, 3); }) == Errc::invalid_argument);
}

TEST_CASE("proximity of an opposed pair") {
  ExpPoly f = E(z) + E(-z);
  double m = proximity(f, 50.0, 4096);
  CHECK(rel_err(m, 100.0 / kPi) < 0.02);
  double ma = proximity_auto(f, 50.0);
  CHECK(std::abs(ma - m) / m < 2e-3);
}

TEST_CASE("characteristic sweep recovers order and type") {
  GrowthCurve c1 = characteristic(E(z), logspace(2.0, 100.0, 9));
  CHECK(std::abs(c1.fitted_order - 1.0) < 0.02);
  CHECK(rel_err(c1.fitted_constant, 1.0 / kPi) < 0.03);
  REQUIRE(c1.T_values.size() == 9);
  for (size_t i = 1; i < c1.T_values.size(); ++i)
    CHECK(c1.T_values[i] >= c1.T_values[i - 1] - 0.01 * (std::abs(c1.T_values[i - 1]) + 1.0));

  GrowthCurve c2 = characteristic(E(z * z), logspace(2.0, 30.0, 9));
  CHECK(std::abs(c2.fitted_order - 2.0) < 0.02);
  CHECK(rel_err(c2.fitted_constant, 1.0 / kPi) < 0.03);

  // Polynomials have order zero: T grows like deg * log r.
  GrowthCurve c3 = characteristic(ExpPoly(z * z * z + P(1)), logspace(1e3, 1e6, 7));
  CHECK(std::abs(c3.fitted_order) < 0.2);

  CHECK(code_of([&] { return characteristic(E(z), {1.0, 2.0, 3.0, 4.0}); }) ==
        Errc::insufficient_data);
  CHECK(code_of([&] { return characteristic(E(z), {1.0, 2.0, 4.0, 8.0, 9.0}); }) ==
        Errc::insufficient_data);  // five radii but no decade of span
  CHECK(code_of([&] { return characteristic(E(z), {2.0, 1.0, 4.0, 8.0, 20.0}); }) ==
        Errc::invalid_argument);
}

TEST_CASE("trapezoid averages inherit the pointwise bounds") {
  // With identical nodes, m(f+g) <= m(f) + m(g) + log 2 and
  // m(fg) <= m(f) + m(g) hold sample by sample.
  Rng rng(81);
  const double r = 3.0;
  const int nodes = 512;
  for (int it = 0; it < 25; ++it) {
    ExpPoly f = rand_exppoly(rng, 3, 2, /*poly_coeffs=*/true);
    ExpPoly g = rand_exppoly(rng, 3, 2, /*poly_coeffs=*/true);
    double mf = proximity(f, r, nodes);
    double mg = proximity(g, r, nodes);
    ExpPoly sum = f + g;
    ExpPoly prod = f * g;
    CHECK(proximity(sum, r, nodes) <= mf + mg + std::log(2.0) + 1e-9);
    CHECK(proximity(prod, r, nodes) <= mf + mg + 1e-9);
  }
}

TEST_CASE("growth constant of an opposed pair matches the angular oracle") {
  SteinmetzReport rep = steinmetz_check(P(1), P(1), z, -z);
  CHECK(rep.k == 1);
  double oracle = positive_part_average(z, -z);
  CHECK(rel_err(oracle, 2.0 / kPi) < 1e-6);
  CHECK(rel_err(rep.C_oracle, oracle) < 1e-6);
  CHECK(rel_err(rep.C_fit, rep.C_oracle) < 0.03);

  // Scaling a weight shifts T additively; the slope extraction cancels it.
  SteinmetzReport big = steinmetz_check(P(100), P(1), z, -z);
  CHECK(std::abs(big.C_fit - rep.C_fit) / rep.C_fit < 0.01);
}

TEST_CASE("growth constant for a half-ratio pair") {
  SteinmetzReport rep = steinmetz_check(P(1), P(1), z,
                                        Poly::monomial(GaussianRational(make_rational(1, 2)), 1));
  CHECK(rel_err(rep.C_oracle, 1.0 / kPi) < 1e-6);
  CHECK(rel_err(rep.C_fit, rep.C_oracle) < 0.03);
}

TEST_CASE("growth constant at exponent degree two") {
  SteinmetzReport rep = steinmetz_check(P(1), P(1), z * z, -(z * z), 12.0);
  CHECK(rep.k == 2);
  CHECK(rel_err(rep.C_oracle, 2.0 / kPi) < 1e-6);
  CHECK(rel_err(rep.C_fit, rep.C_oracle) < 0.03);

  // Lower-order exponent parts do not move the leading constant.
  SteinmetzReport shifted = steinmetz_check(P(1), P(1), z * z + z, -(z * z), 12.0);
  CHECK(rel_err(shifted.C_oracle, 2.0 / kPi) < 1e-6);
  CHECK(rel_err(shifted.C_fit, rep.C_fit) < 0.03);
}

TEST_CASE("input validation and pole detection") {
  CHECK(code_of([&] { return steinmetz_check(P(1), P(1), z * z, z); }) ==
        Errc::degree_mismatch);
  CHECK(code_of([&] { return steinmetz_check(P(1), P(1), z, z); }) ==
        Errc::equal_leading_coefficients);
  CHECK(code_of([&] { return steinmetz_check(Poly(), P(1), z, -z); }) ==
        Errc::invalid_argument);
  CHECK(code_of([&] { return steinmetz_check(P(1), P(1), z, -z, 50.0, 3); }) ==
        Errc::invalid_argument);

  // A coefficient pole sitting exactly on the sampled circle is refused.
  ExpPoly f = ExpPoly::term(RatFunc(P(1), z - P(2)), z);
  CHECK(code_of([&] { return proximity(f, 2.0, 512); }) == Errc::pole_on_circle);
}
