// Command-line surface: expression parsing in, JSON reports out (stdout and
// --json-out), bulk samples to CSV (--csv-out).  Exit codes: 0 success,
// 1 domain error (JSON error object on stderr), 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "expode/jsonio.hpp"

namespace {

using expode::jsonio::CsvRow;
using expode::jsonio::json;

struct Output {
  std::string json_path;
  std::string csv_path;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--json-out", json_path, "Write the JSON report to this path");
    cmd->add_option("--csv-out", csv_path, "Write sample rows (r,theta,re,im,log_abs) here");
  }

  void emit(const json& body, const std::vector<CsvRow>& rows = {}) const {
    json doc = expode::jsonio::document(body);
    std::cout << doc.dump(2) << "\n";
    if (!json_path.empty()) {
      std::ofstream f(json_path);
      f << doc.dump(2) << "\n";
    }
    if (!csv_path.empty()) {
      std::ofstream f(csv_path);
      expode::jsonio::write_csv(f, rows);
    }
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Exact exponential-polynomial algebra and growth diagnostics"};
  app.require_subcommand(1);

  // ---- sectors ----------------------------------------------------------
  auto* sectors = app.add_subcommand("sectors", "Growth/decay sectors of e^{p}");
  std::string sectors_p;
  sectors->add_option("--p", sectors_p, "Polynomial p")->required();
  Output sectors_out;
  sectors_out.add_flags(sectors);
  sectors->callback([&] {
    expode::Poly p = expode::parse_poly(sectors_p);
    auto map = expode::indicator::sector_map(p);
    std::vector<CsvRow> rows;  // unit-circle sweep of the indicator delta
    for (int i = 0; i < 720; ++i) {
      double theta = 2.0 * M_PI * i / 720;
      double d = expode::indicator::delta(p, theta);
      rows.push_back({1.0, theta, d, 0.0, d});
    }
    sectors_out.emit(expode::jsonio::jsonify(map), rows);
  });

  // ---- hfun -------------------------------------------------------------
  auto* hfun = app.add_subcommand("hfun", "Variation-of-constants kernel H");
  hfun->require_subcommand(1);

  auto* heval = hfun->add_subcommand("eval", "Evaluate H(z)");
  std::string he_p, he_beta, he_z;
  int he_samples = 64;
  heval->add_option("--p", he_p, "Polynomial p")->required();
  heval->add_option("--beta", he_beta, "Exponential polynomial beta")->required();
  heval->add_option("--z", he_z, "Evaluation point (Gaussian rational, e.g. \"2+3i\")")
      ->required();
  heval->add_option("--samples", he_samples, "CSV samples along the ray through z")
      ->check(CLI::Range(1, 100000));
  Output heval_out;
  heval_out.add_flags(heval);
  heval->callback([&] {
    expode::Poly p = expode::parse_poly(he_p);
    expode::ExpPoly beta = expode::parse_exppoly(he_beta);
    std::complex<double> z = expode::parse_gaussian_scalar(he_z).to_complex();
    std::complex<double> H = expode::hfun::eval_H(p, beta, z);
    std::vector<CsvRow> rows;
    if (!heval_out.csv_path.empty() && std::abs(z) > 0) {
      double theta = std::arg(z);
      for (int i = 1; i <= he_samples; ++i) {
        double r = std::abs(z) * i / he_samples;
        std::complex<double> h = expode::hfun::eval_H(p, beta, std::polar(r, theta));
        double mag = std::abs(h);
        rows.push_back({r, theta, h.real(), h.imag(), mag > 0 ? std::log(mag) : -1e308});
      }
    }
    heval_out.emit(json{{"H", expode::jsonio::jsonify(H)}}, rows);
  });

  auto* hverify = hfun->add_subcommand("verify", "Sector-wise asymptotic bound report");
  std::string hv_p, hv_beta;
  double hv_rmax = 20.0, hv_eps = 0.15;
  int hv_points = 8;
  hverify->add_option("--p", hv_p, "Polynomial p")->required();
  hverify->add_option("--beta", hv_beta, "Exponential polynomial beta")->required();
  hverify->add_option("--rmax", hv_rmax, "Largest radius");
  hverify->add_option("--epsilon", hv_eps, "Sector shrink angle");
  hverify->add_option("--points", hv_points, "Number of radii")->check(CLI::Range(2, 1000));
  Output hverify_out;
  hverify_out.add_flags(hverify);
  hverify->callback([&] {
    expode::Poly p = expode::parse_poly(hv_p);
    expode::ExpPoly beta = expode::parse_exppoly(hv_beta);
    std::vector<double> radii;
    for (int i = 1; i <= hv_points; ++i)
      radii.push_back(hv_rmax * (0.25 + 0.75 * i / hv_points));
    auto reports = expode::hfun::verify_theorem0(p, beta, {}, radii, hv_eps);
    const int k = p.degree();
    std::vector<CsvRow> rows;  // magnitudes only: log_abs = log|H - a e^{p}|
    json arr = json::array();
    for (const auto& rep : reports) {
      arr.push_back(expode::jsonio::jsonify(rep));
      if (rep.thetas.empty()) continue;
      double theta = rep.thetas[rep.thetas.size() / 2];
      for (size_t i = 0; i < rep.radii.size() && i < rep.s_values.size(); ++i)
        rows.push_back({rep.radii[i], theta, 0.0, 0.0,
                        rep.s_values[i] * std::pow(rep.radii[i], k)});
    }
    hverify_out.emit(json{{"sectors", arr}}, rows);
  });

  // ---- tc ---------------------------------------------------------------
  auto* tc = app.add_subcommand("tc", "Power-plus-differential-polynomial equations");
  tc->require_subcommand(1);

  auto* tcm = tc->add_subcommand("m", "Smallest series length m for alpha");
  int tcm_n = 2;
  std::string tcm_alpha;
  tcm->add_option("--n", tcm_n, "Power n")->required()->check(CLI::Range(2, 64));
  tcm->add_option("--alpha", tcm_alpha, "Leading-coefficient ratio")->required();
  Output tcm_out;
  tcm_out.add_flags(tcm);
  tcm->callback([&] {
    expode::Rational alpha = expode::parse_rational_scalar(tcm_alpha);
    tcm_out.emit(json{{"n", tcm_n},
                      {"alpha", expode::jsonio::jsonify(alpha)},
                      {"m", expode::tc::smallest_m(tcm_n, alpha)}});
  });

  auto* tcc = tc->add_subcommand("coeffs", "Triangular series coefficients c_0..c_m");
  int tcc_n = 2, tcc_m = 0;
  tcc->add_option("--n", tcc_n, "Power n")->required()->check(CLI::Range(2, 64));
  tcc->add_option("--m", tcc_m, "Series length")->required()->check(CLI::Range(0, 64));
  Output tcc_out;
  tcc_out.add_flags(tcc);
  tcc->callback([&] {
    auto c = expode::tc::solve_coefficients(tcc_n, tcc_m);
    tcc_out.emit(json{{"n", tcc_n}, {"m", tcc_m}, {"c", expode::jsonio::jsonify(c)}});
  });

  auto make_problem = [](int n, const std::string& alpha_s, const std::string& b1_s,
                         const std::string& b2_s, const std::string& p1_s,
                         const std::string& p2_s) {
    expode::Rational alpha = expode::parse_rational_scalar(alpha_s);
    expode::Poly p1 = expode::parse_poly(p1_s);
    expode::Poly p2 = p2_s.empty() ? p1 * expode::GaussianRational(alpha)
                                   : expode::parse_poly(p2_s);
    return expode::tc::TCProblem(n, expode::parse_poly(b1_s), expode::parse_poly(b2_s), p1,
                                 p2);
  };

  auto* tcon = tc->add_subcommand("construct", "Witness for a solvable equation");
  int tcon_n = 2;
  std::string tcon_alpha, tcon_b1, tcon_b2, tcon_p1, tcon_p2;
  tcon->add_option("--n", tcon_n, "Power n")->required()->check(CLI::Range(2, 64));
  tcon->add_option("--alpha", tcon_alpha, "Leading-coefficient ratio")->required();
  tcon->add_option("--b1", tcon_b1, "Coefficient b1")->required();
  tcon->add_option("--b2", tcon_b2, "Coefficient b2")->required();
  tcon->add_option("--p1", tcon_p1, "Exponent p1 (monic)")->required();
  tcon->add_option("--p2", tcon_p2, "Exponent p2 (default alpha*p1)");
  Output tcon_out;
  tcon_out.add_flags(tcon);
  tcon->callback([&] {
    auto prob = make_problem(tcon_n, tcon_alpha, tcon_b1, tcon_b2, tcon_p1, tcon_p2);
    auto w = prob.alpha == -1 ? expode::tc::construct_case1(prob)
                              : expode::tc::construct_case2(prob);
    tcon_out.emit(expode::jsonio::jsonify(w));
  });

  auto* tver = tc->add_subcommand("verify", "Construct and verify a witness");
  int tver_n = 2;
  std::string tver_alpha, tver_b1, tver_b2, tver_p1, tver_p2;
  tver->add_option("--n", tver_n, "Power n")->required()->check(CLI::Range(2, 64));
  tver->add_option("--alpha", tver_alpha, "Leading-coefficient ratio")->required();
  tver->add_option("--b1", tver_b1, "Coefficient b1")->required();
  tver->add_option("--b2", tver_b2, "Coefficient b2")->required();
  tver->add_option("--p1", tver_p1, "Exponent p1 (monic)")->required();
  tver->add_option("--p2", tver_p2, "Exponent p2 (default alpha*p1)");
  Output tver_out;
  tver_out.add_flags(tver);
  tver->callback([&] {
    auto prob = make_problem(tver_n, tver_alpha, tver_b1, tver_b2, tver_p1, tver_p2);
    auto w = prob.alpha == -1 ? expode::tc::construct_case1(prob)
                              : expode::tc::construct_case2(prob);
    auto rep = expode::tc::verify_tc(w, prob);
    tver_out.emit(json{{"witness", expode::jsonio::jsonify(w)},
                       {"verify", expode::jsonio::jsonify(rep)}});
  });

  // ---- banklaine --------------------------------------------------------
  auto* bl = app.add_subcommand("banklaine", "Second-order equations g'' + A g = 0");
  bl->require_subcommand(1);

  auto* blh = bl->add_subcommand("half", "Forward construction, middle exponent p1/2");
  std::string blh_p1, blh_kappa = "1", blh_gamma = "0", blh_b1;
  blh->add_option("--p1", blh_p1, "Top exponent p1")->required();
  blh->add_option("--kappa", blh_kappa, "Polynomial factor kappa (squarefree)");
  blh->add_option("--gamma", blh_gamma, "Additive part gamma of h'");
  blh->add_option("--b1", blh_b1, "Top coefficient b1 (a perfect square)")->required();
  Output blh_out;
  blh_out.add_flags(blh);
  blh->callback([&] {
    auto w = expode::banklaine::construct_half(
        expode::parse_poly(blh_p1), expode::parse_poly(blh_kappa),
        expode::parse_poly(blh_gamma), expode::parse_poly(blh_b1));
    blh_out.emit(expode::jsonio::jsonify(w));
  });

  auto* blt = bl->add_subcommand("threequarter", "One-parameter 3/4-exponent family");
  std::string blt_c;
  blt->add_option("--c", blt_c, "Family parameter c (nonzero Gaussian rational)")->required();
  Output blt_out;
  blt_out.add_flags(blt);
  blt->callback([&] {
    auto w = expode::banklaine::three_quarter_family(expode::parse_gaussian_scalar(blt_c));
    blt_out.emit(expode::jsonio::jsonify(w));
  });

  auto* blv = bl->add_subcommand("verify", "Exact residual check of g = kappa e^{h}");
  std::string blv_A, blv_h, blv_kappa = "1";
  blv->add_option("--A", blv_A, "Coefficient A")->required();
  blv->add_option("--hprime", blv_h, "Derivative h'")->required();
  blv->add_option("--kappa", blv_kappa, "Polynomial factor kappa");
  Output blv_out;
  blv_out.add_flags(blv);
  blv->callback([&] {
    bool ok = expode::banklaine::verify_banklaine(expode::parse_exppoly(blv_A),
                                                  expode::parse_exppoly(blv_h),
                                                  expode::parse_poly(blv_kappa));
    blv_out.emit(json{{"verified", ok}});
  });

  // ---- nev --------------------------------------------------------------
  auto* nev = app.add_subcommand("nev", "Growth measurement on circles");
  nev->require_subcommand(1);

  auto* nch = nev->add_subcommand("characteristic", "T(r, f) sweep and order fit");
  std::string nch_f;
  double nch_rmin = 2.0, nch_rmax = 50.0;
  int nch_points = 12;
  nch->add_option("--f", nch_f, "Exponential polynomial f")->required();
  nch->add_option("--rmin", nch_rmin, "Smallest radius");
  nch->add_option("--rmax", nch_rmax, "Largest radius");
  nch->add_option("--points", nch_points, "Number of radii (log-spaced)")
      ->check(CLI::Range(2, 10000));
  Output nch_out;
  nch_out.add_flags(nch);
  nch->callback([&] {
    expode::ExpPoly f = expode::parse_exppoly(nch_f);
    std::vector<double> radii;
    for (int i = 0; i < nch_points; ++i)
      radii.push_back(nch_rmin *
                      std::pow(nch_rmax / nch_rmin, i / static_cast<double>(nch_points - 1)));
    auto curve = expode::nevanlinna::characteristic(f, radii);
    std::vector<CsvRow> rows;  // T samples: re = T(r), log_abs = log T(r)
    for (size_t i = 0; i < curve.radii.size(); ++i)
      rows.push_back({curve.radii[i], 0.0, curve.T_values[i], 0.0,
                      curve.T_values[i] > 0 ? std::log(curve.T_values[i]) : -1e308});
    nch_out.emit(expode::jsonio::jsonify(curve), rows);
  });

  auto* nst = nev->add_subcommand("steinmetz", "Growth constant of b1 e^{p1} + b2 e^{p2}");
  std::string nst_b1, nst_b2, nst_p1, nst_p2;
  double nst_rmax = 50.0;
  int nst_points = 8;
  nst->add_option("--b1", nst_b1, "Coefficient b1")->required();
  nst->add_option("--b2", nst_b2, "Coefficient b2")->required();
  nst->add_option("--p1", nst_p1, "Exponent p1")->required();
  nst->add_option("--p2", nst_p2, "Exponent p2")->required();
  nst->add_option("--rmax", nst_rmax, "Largest radius");
  nst->add_option("--points", nst_points, "Number of radii")->check(CLI::Range(2, 1000));
  Output nst_out;
  nst_out.add_flags(nst);
  nst->callback([&] {
    auto rep = expode::nevanlinna::steinmetz_check(
        expode::parse_poly(nst_b1), expode::parse_poly(nst_b2), expode::parse_poly(nst_p1),
        expode::parse_poly(nst_p2), nst_rmax, nst_points);
    std::vector<CsvRow> rows;
    for (size_t i = 0; i < rep.radii.size(); ++i)
      rows.push_back({rep.radii[i], 0.0, rep.T_values[i], 0.0,
                      rep.T_values[i] > 0 ? std::log(rep.T_values[i]) : -1e308});
    nst_out.emit(expode::jsonio::jsonify(rep), rows);
  });

  // ---- classn -----------------------------------------------------------
  auto* cn = app.add_subcommand("classn", "Ray dynamics of F' = R1 e^{q} F + R2");
  cn->require_subcommand(1);

  auto* cnr = cn->add_subcommand("ray", "Integrate log F along one ray");
  std::string cnr_r1, cnr_r2, cnr_q = "0", cnr_f0 = "1";
  double cnr_theta = 0.0, cnr_r0 = 0.0, cnr_rmax = 25.0;
  cnr->add_option("--r1", cnr_r1, "Rational function R1")->required();
  cnr->add_option("--r2", cnr_r2, "Rational function R2")->required();
  cnr->add_option("--q", cnr_q, "Exponent polynomial q");
  cnr->add_option("--theta", cnr_theta, "Ray angle (radians)");
  cnr->add_option("--f0", cnr_f0, "Initial value F(r0 e^{i theta})");
  cnr->add_option("--r0", cnr_r0, "Start radius (default: clear of all poles/zeros)");
  cnr->add_option("--rmax", cnr_rmax, "End radius");
  Output cnr_out;
  cnr_out.add_flags(cnr);
  cnr->callback([&] {
    expode::RatFunc R1 = expode::parse_ratfunc(cnr_r1);
    expode::RatFunc R2 = expode::parse_ratfunc(cnr_r2);
    expode::Poly q = expode::parse_poly(cnr_q);
    double r0 = cnr_r0 > 0 ? cnr_r0 : expode::classn::default_r0(R1, R2);
    auto trace = expode::classn::integrate_ray(
        R1, R2, q, cnr_theta, expode::parse_gaussian_scalar(cnr_f0).to_complex(), r0,
        cnr_rmax);
    std::vector<CsvRow> rows;  // u = log F: log_abs column = Re u = log|F|
    for (size_t i = 0; i < trace.r_values.size(); ++i)
      rows.push_back({trace.r_values[i], trace.theta, trace.logF[i].real(),
                      trace.logF[i].imag(), trace.logF[i].real()});
    cnr_out.emit(expode::jsonio::jsonify(trace), rows);
  });

  auto* cnd = cn->add_subcommand("dichotomy", "Per-sector growth/decay report");
  std::string cnd_r1, cnd_r2, cnd_q;
  double cnd_rmax = 25.0, cnd_eps = 0.15;
  cnd->add_option("--r1", cnd_r1, "Rational function R1")->required();
  cnd->add_option("--r2", cnd_r2, "Rational function R2")->required();
  cnd->add_option("--q", cnd_q, "Exponent polynomial q")->required();
  cnd->add_option("--rmax", cnd_rmax, "End radius");
  cnd->add_option("--epsilon", cnd_eps, "Sector shrink angle");
  Output cnd_out;
  cnd_out.add_flags(cnd);
  cnd->callback([&] {
    auto rep = expode::classn::dichotomy_report(
        expode::parse_ratfunc(cnd_r1), expode::parse_ratfunc(cnd_r2),
        expode::parse_poly(cnd_q), cnd_eps, cnd_rmax);
    std::vector<CsvRow> rows;
    for (const auto& ray : rep.rays) {
      const auto& t = ray.traces[0];
      for (size_t i = 0; i < t.r_values.size(); ++i)
        rows.push_back(
            {t.r_values[i], t.theta, t.logF[i].real(), t.logF[i].imag(), t.logF[i].real()});
    }
    cnd_out.emit(expode::jsonio::jsonify(rep), rows);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the help or usage message
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const expode::Error& e) {
    std::cerr << expode::jsonio::error_json(e).dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 1;
  }
}
