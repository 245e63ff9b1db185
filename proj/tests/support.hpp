#pragma once
// Shared test scaffolding: deterministic random generators over the exact
// types, an exact Gaussian-elimination rank, and small numeric helpers.

#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "expode/expoly.hpp"
#include "expode/parse.hpp"

namespace testsupport {

using namespace expode;

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, long max_abs = 9, long max_den = 5) {
  return make_rational(rand_int(rng, -max_abs, max_abs), rand_int(rng, 1, max_den));
}

inline Rational rand_rational_nonzero(Rng& rng, long max_abs = 9, long max_den = 5) {
  for (;;) {
    Rational q = rand_rational(rng, max_abs, max_den);
    if (q != 0) return q;
  }
}

inline GaussianRational rand_gaussian(Rng& rng, long max_abs = 9, long max_den = 5) {
  return {rand_rational(rng, max_abs, max_den), rand_rational(rng, max_abs, max_den)};
}

inline GaussianRational rand_gaussian_nonzero(Rng& rng, long max_abs = 9, long max_den = 5) {
  for (;;) {
    GaussianRational g = rand_gaussian(rng, max_abs, max_den);
    if (!g.is_zero()) return g;
  }
}

inline Poly rand_poly(Rng& rng, int max_deg = 4, long max_abs = 9, long max_den = 5) {
  int deg = static_cast<int>(rand_int(rng, 0, max_deg));
  std::vector<GaussianRational> c(static_cast<size_t>(deg) + 1);
  for (auto& v : c) v = rand_gaussian(rng, max_abs, max_den);
  return Poly(std::move(c));  // leading zeros may lower the degree; fine
}

inline Poly rand_poly_nonzero(Rng& rng, int max_deg = 4, long max_abs = 9, long max_den = 5) {
  for (;;) {
    Poly p = rand_poly(rng, max_deg, max_abs, max_den);
    if (!p.is_zero()) return p;
  }
}

// Nonconstant with zero constant term: a valid exponent polynomial.
inline Poly rand_exponent(Rng& rng, int max_deg = 3, long max_abs = 4, long max_den = 3) {
  for (;;) {
    Poly p = rand_poly(rng, max_deg, max_abs, max_den);
    if (p.is_zero()) continue;
    std::vector<GaussianRational> c = p.coeffs();
    c[0] = GaussianRational();
    Poly q(std::move(c));
    if (q.degree() >= 1) return q;
  }
}

inline RatFunc rand_ratfunc(Rng& rng, int max_deg = 3, long max_abs = 6) {
  return RatFunc(rand_poly(rng, max_deg, max_abs), rand_poly_nonzero(rng, max_deg, max_abs));
}

inline RatFunc rand_ratfunc_nonzero(Rng& rng, int max_deg = 3, long max_abs = 6) {
  for (;;) {
    RatFunc f = rand_ratfunc(rng, max_deg, max_abs);
    if (!f.is_zero()) return f;
  }
}

inline ExpPoly rand_exppoly(Rng& rng, int max_terms = 3, int max_exp_deg = 2,
                            bool poly_coeffs = false) {
  ExpPoly e;
  const long n = rand_int(rng, 1, max_terms);
  for (long i = 0; i < n; ++i) {
    Poly q = rand_int(rng, 0, 3) == 0 ? Poly() : rand_exponent(rng, max_exp_deg, 3, 2);
    RatFunc a = poly_coeffs ? RatFunc(rand_poly(rng, 2, 5)) : rand_ratfunc(rng, 2, 5);
    e += ExpPoly::term(std::move(a), std::move(q));
  }
  return e;
}

// Exact rank over Q(i) by Gaussian elimination.
inline int gauss_rank(std::vector<std::vector<GaussianRational>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (size_t i = row + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      GaussianRational f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// Runs f, which must signal an expode::Error; returns its code.
template <typename F>
inline Errc code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be signaled");
  return Errc::invalid_argument;
}

inline std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i)
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

}  // namespace testsupport
