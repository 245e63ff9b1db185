#pragma once
// JSON views of every report type (schema "expode/1") and the CSV sample
// writer.  Exact rationals are always emitted as "num/den" strings, never
// floats; floating measurements stay numbers.

#include <complex>
#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "expode/banklaine.hpp"
#include "expode/classn.hpp"
#include "expode/expoly.hpp"
#include "expode/hfun.hpp"
#include "expode/indicator.hpp"
#include "expode/nevanlinna.hpp"
#include "expode/parse.hpp"
#include "expode/tc.hpp"

namespace expode {
namespace jsonio {

using nlohmann::json;

json jsonify(double v);
json jsonify(const Rational& q);
json jsonify(const GaussianRational& g);
json jsonify(const std::complex<double>& z);
json jsonify(const Poly& p);
json jsonify(const RatFunc& r);
json jsonify(const ExpPoly& e);

json jsonify(const indicator::SectorMap& m);
json jsonify(const indicator::NormalizedPair& n);
json jsonify(const hfun::AsymptoticReport& r);
json jsonify(const tc::TCWitness& w);
json jsonify(const tc::TCVerifyReport& r);
json jsonify(const tc::KappaIota& ki);
json jsonify(const banklaine::HalfCaseWitness& w);
json jsonify(const banklaine::ThreeQuarterWitness& w);
json jsonify(const nevanlinna::GrowthCurve& c);
json jsonify(const nevanlinna::SteinmetzReport& r);
json jsonify(const classn::RayTrace& t);
json jsonify(const classn::RayOutcome& o);
json jsonify(const classn::DichotomyReport& r);

template <typename T>
json jsonify(const std::vector<T>& v) {
  json arr = json::array();
  for (const T& x : v) arr.push_back(jsonify(x));
  return arr;
}

// Top-level document: the report plus its schema tag.
json document(json body);

// {"error": {"code": ..., "message": ...}} for stderr on domain failures.
json error_json(const Error& e);

struct CsvRow {
  double r = 0, theta = 0, re = 0, im = 0, log_abs = 0;
};

// Header `r,theta,re,im,log_abs`, one row per sample.
void write_csv(std::ostream& os, const std::vector<CsvRow>& rows);

}  // namespace jsonio
}  // namespace expode
