#include "expode/jsonio.hpp"

#include <ostream>

namespace expode {
namespace jsonio {

json jsonify(double v) { return v; }

json jsonify(const Rational& q) { return rational_to_string(q); }

json jsonify(const GaussianRational& g) {
  return json{{"re", jsonify(g.re)}, {"im", jsonify(g.im)}};
}

json jsonify(const std::complex<double>& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json jsonify(const Poly& p) {
  json coeffs = json::array();
  for (int j = 0; j <= p.degree(); ++j) coeffs.push_back(jsonify(p.coeff(j)));
  return json{{"coeffs", coeffs}, {"text", to_string(p)}};
}

json jsonify(const RatFunc& r) {
  if (r.is_polynomial()) return jsonify(r.as_polynomial());
  return json{{"num", jsonify(r.num())}, {"den", jsonify(r.den())}, {"text", to_string(r)}};
}

json jsonify(const ExpPoly& e) {
  json terms = json::array();
  for (const ExpTerm& t : e.terms())
    terms.push_back(json{{"coeff", jsonify(t.coeff)}, {"exponent", jsonify(t.exponent)}});
  return json{{"terms", terms}, {"text", to_string(e)}};
}

json jsonify(const indicator::SectorMap& m) {
  return json{{"k", m.k}, {"theta", m.theta}, {"sign", m.sign}};
}

json jsonify(const indicator::NormalizedPair& n) {
  json out{{"alpha", jsonify(n.alpha)},
           {"swapped", n.swapped},
           {"exactness_lost", n.exactness_lost}};
  if (!n.exactness_lost) {
    out["p1"] = jsonify(n.p1);
    out["p2"] = jsonify(n.p2);
  } else {
    out["p1_float"] = jsonify(n.p1_float);
    out["p2_float"] = jsonify(n.p2_float);
  }
  return out;
}

json jsonify(const hfun::AsymptoticReport& r) {
  json out{{"sector", r.sector},
           {"growth", r.growth},
           {"thetas", r.thetas},
           {"radii", r.radii},
           {"s_values", r.s_values},
           {"eta_values", r.eta_values}};
  if (r.a) out["a"] = jsonify(*r.a);
  return out;
}

json jsonify(const tc::TCWitness& w) {
  json out{{"case", w.kind == tc::TCCase::alpha_minus_one ? "alpha_minus_one"
                                                          : "alpha_unit_interval"},
           {"n", w.n},
           {"m", w.m},
           {"gamma1", jsonify(w.gamma1)},
           {"c", jsonify(w.c)},
           {"t", jsonify(w.t)},
           {"f", jsonify(w.f)},
           {"residual", jsonify(w.residual)}};
  if (w.gamma2) out["gamma2"] = jsonify(*w.gamma2);
  return out;
}

json jsonify(const tc::TCVerifyReport& r) {
  json terms = json::array();
  for (const auto& t : r.residual_terms) {
    json jt{{"exponent", jsonify(t.exponent)},
            {"coeff", jsonify(t.coeff)},
            {"is_absorbed_b2", t.is_absorbed_b2}};
    if (t.factor) jt["factor"] = jsonify(*t.factor);
    if (t.f_power) jt["f_power"] = *t.f_power;
    if (t.mixture_j) jt["mixture_j"] = *t.mixture_j;
    terms.push_back(jt);
  }
  return json{{"matched_b1", r.matched_b1},
              {"matched_b2", r.matched_b2},
              {"residual_terms", terms},
              {"points_checked", r.points_checked},
              {"max_numeric_rel_err", r.max_numeric_rel_err}};
}

json jsonify(const tc::KappaIota& ki) {
  json d = json::array();
  for (const auto& t : ki.D)
    d.push_back(json{{"iota_prev", jsonify(t.iota_prev)}, {"b1_power", jsonify(t.b1_power)}});
  return json{{"iota", jsonify(ki.iota)}, {"kappa", jsonify(ki.kappa)}, {"D", d}};
}

json jsonify(const banklaine::HalfCaseWitness& w) {
  return json{{"p1", jsonify(w.p1)},       {"kappa", jsonify(w.kappa)},
              {"gamma1", jsonify(w.gamma1)}, {"gamma", jsonify(w.gamma)},
              {"b1", jsonify(w.b1)},       {"b2", jsonify(w.b2)},
              {"b3", jsonify(w.b3)},       {"p2", jsonify(w.p2)},
              {"hprime", jsonify(w.hprime)}, {"A", jsonify(w.A)}};
}

json jsonify(const banklaine::ThreeQuarterWitness& w) {
  return json{{"c", jsonify(w.c)},
              {"hprime", jsonify(w.hprime)},
              {"A", jsonify(w.A)},
              {"e_z_coeff", jsonify(w.e_z_coeff)},
              {"e_z_coeff_c2_reading", jsonify(w.e_z_coeff_c2_reading)}};
}

json jsonify(const nevanlinna::GrowthCurve& c) {
  return json{{"radii", c.radii},
              {"T_values", c.T_values},
              {"fitted_order", c.fitted_order},
              {"fitted_constant", c.fitted_constant}};
}

json jsonify(const nevanlinna::SteinmetzReport& r) {
  return json{{"k", r.k},           {"radii", r.radii},
              {"T_values", r.T_values}, {"C_fit", r.C_fit},
              {"C_at_rmax", r.C_at_rmax}, {"C_oracle", r.C_oracle}};
}

json jsonify(const classn::RayTrace& t) {
  return json{{"theta", t.theta},
              {"F0", jsonify(t.F0)},
              {"status", classn::ray_status_name(t.status)},
              {"order_logF", t.order_logF},
              {"loglog_slope", t.loglog_slope},
              {"poly_exponent", t.poly_exponent},
              {"r_values", t.r_values},
              {"logF", jsonify(t.logF)}};
}

json jsonify(const classn::RayOutcome& o) {
  json traces = json::array();
  for (const auto& t : o.traces) traces.push_back(jsonify(t));
  return json{{"sector", o.sector},
              {"theta", o.theta},
              {"delta_sign", o.delta_sign},
              {"flagged", o.flagged},
              {"decay_bound_ok", o.decay_bound_ok},
              {"traces", traces}};
}

json jsonify(const classn::DichotomyReport& r) {
  return json{{"r0", r.r0},
              {"r_max", r.r_max},
              {"epsilon", r.epsilon},
              {"n2", r.n2},
              {"any_flagged", r.any_flagged},
              {"rays", jsonify(r.rays)}};
}

json document(json body) {
  body["schema"] = "expode/1";
  return body;
}

json error_json(const Error& e) {
  return json{{"error", {{"code", std::string(e.code_name())}, {"message", e.what()}}}};
}

void write_csv(std::ostream& os, const std::vector<CsvRow>& rows) {
  os << "r,theta,re,im,log_abs\n";
  os.precision(17);
  for (const CsvRow& row : rows)
    os << row.r << ',' << row.theta << ',' << row.re << ',' << row.im << ',' << row.log_abs
       << '\n';
}

}  // namespace jsonio
}  // namespace expode
