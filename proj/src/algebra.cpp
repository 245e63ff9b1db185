#include "expode/ratfunc.hpp"

#include <algorithm>
#include <cmath>

namespace expode {

std::string rational_to_string(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) {
    s += "/";
    s += q.get_den().get_str();
  }
  return s;
}

std::string gaussian_to_string(const GaussianRational& g) {
  if (g.im == 0) return rational_to_string(g.re);
  std::string imag;
  if (g.im == 1) {
    imag = "i";
  } else if (g.im == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(g.im) + "i";
  }
  if (g.re == 0) return imag;
  std::string s = "(" + rational_to_string(g.re);
  if (imag[0] != '-') s += "+";
  return s + imag + ")";
}

GaussianRational pow(const GaussianRational& base, unsigned long e) {
  GaussianRational acc(1);
  GaussianRational b = base;
  while (e > 0) {
    if (e & 1UL) acc *= b;
    b *= b;
    e >>= 1UL;
  }
  return acc;
}

int compare(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c;
  return cmp(a.im, b.im);
}

namespace {

// atan2 of a big-integer point, scaled to avoid double overflow.
double big_arg(const BigInt& re, const BigInt& im) {
  if (re == 0 && im == 0) return 0.0;
  long er = 0, ei = 0;
  double mr = mpz_get_d_2exp(&er, re.get_mpz_t());
  double mi = mpz_get_d_2exp(&ei, im.get_mpz_t());
  long e = std::max(er, ei);
  auto scaled = [&](const BigInt& v, double m, long ev) {
    if (v == 0) return 0.0;
    long shift = std::max(ev - e, -2000L);
    return std::ldexp(m, static_cast<int>(shift));
  };
  return std::atan2(scaled(im, mi, ei), scaled(re, mr, er));
}

double norm_to_2pi(double a) {
  const double two_pi = 2.0 * M_PI;
  a = std::fmod(a, two_pi);
  if (a < 0) a += two_pi;
  // Collapse values within rounding of 2*pi back to 0.
  if (two_pi - a < 1e-15) a = 0.0;
  return a;
}

GaussianRational gauss_int(const BigInt& re, const BigInt& im) {
  return {Rational(re), Rational(im)};
}

}  // namespace

std::optional<GaussianRational> nth_root(const GaussianRational& x, int n) {
  if (n < 1) raise(Errc::invalid_argument, "root index must be >= 1");
  if (n == 1) return x;
  if (x.is_zero()) return GaussianRational();

  // Write x = (A + Bi)/D with integer A, B, D.  Any n-th root in Q(i) has the
  // form u/D with u integral (u is a root of a monic integer polynomial), and
  // u^n = W := (A + Bi) * D^(n-1).
  BigInt dr = x.re.get_den(), di = x.im.get_den();
  BigInt d = lcm(dr, di);
  BigInt a = x.re.get_num() * (d / dr);
  BigInt b = x.im.get_num() * (d / di);
  BigInt dpow = 1;
  for (int i = 0; i + 1 < n; ++i) dpow *= d;
  BigInt wa = a * dpow, wb = b * dpow;

  // |u|^(2n) = norm(W); the norm must therefore be an exact n-th power.
  BigInt nrm = wa * wa + wb * wb;
  BigInt radius_pow;  // |u|^2
  int exact = mpz_root(radius_pow.get_mpz_t(), nrm.get_mpz_t(), n);
  if (!exact) return std::nullopt;

  double ru = std::sqrt(radius_pow.get_d());
  if (!std::isfinite(ru)) return std::nullopt;  // beyond float-guided search
  double base_arg = big_arg(wa, wb) / n;

  const GaussianRational w_exact = gauss_int(wa, wb);
  GaussianRational found;
  bool have = false;
  for (int k = 0; k < n && !have; ++k) {
    double phi = base_arg + 2.0 * M_PI * k / n;
    double cx = ru * std::cos(phi), cy = ru * std::sin(phi);
    if (std::abs(cx) > 9e18 || std::abs(cy) > 9e18) return std::nullopt;
    long rx = std::lround(cx), ry = std::lround(cy);
    for (long dx = -2; dx <= 2 && !have; ++dx) {
      for (long dy = -2; dy <= 2 && !have; ++dy) {
        GaussianRational u(Rational(rx + dx), Rational(ry + dy));
        if (u.is_zero()) continue;
        if (pow(u, static_cast<unsigned long>(n)) == w_exact) {
          found = u;
          have = true;
        }
      }
    }
  }
  if (!have) return std::nullopt;

  // All Gaussian-rational n-th roots are unit multiples of the one found.
  std::vector<GaussianRational> roots{found};
  if (n % 2 == 0) roots.push_back(-found);
  if (n % 4 == 0) {
    GaussianRational iu = found * GaussianRational::i();
    roots.push_back(iu);
    roots.push_back(-iu);
  }

  const double window = 2.0 * M_PI / n;
  const GaussianRational den_g{Rational(d), Rational(0)};
  const GaussianRational* best = nullptr;
  double best_arg = 0;
  for (const auto& u : roots) {
    double arg = norm_to_2pi(big_arg(u.re.get_num(), u.im.get_num()));
    bool in_window = arg < window;
    if (best == nullptr || (in_window && best_arg >= window) ||
        (in_window == (best_arg < window) && arg < best_arg)) {
      best = &u;
      best_arg = arg;
    }
  }
  return *best / den_g;
}

// ---------------------------------------------------------------------------
// Poly

void Poly::trim() {
  while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

Poly Poly::monomial(const GaussianRational& a, int power) {
  if (power < 0) raise(Errc::invalid_argument, "monomial power must be >= 0");
  Poly p;
  if (a.is_zero()) return p;
  p.coeff_.assign(static_cast<size_t>(power) + 1, GaussianRational());
  p.coeff_.back() = a;
  return p;
}

const GaussianRational& Poly::coeff(int j) const {
  static const GaussianRational zero;
  if (j < 0 || j >= static_cast<int>(coeff_.size())) return zero;
  return coeff_[static_cast<size_t>(j)];
}

const GaussianRational& Poly::leading() const {
  static const GaussianRational zero;
  return coeff_.empty() ? zero : coeff_.back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size());
  for (size_t j = 0; j < o.coeff_.size(); ++j) coeff_[j] += o.coeff_[j];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size());
  for (size_t j = 0; j < o.coeff_.size(); ++j) coeff_[j] -= o.coeff_[j];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (coeff_.empty() || o.coeff_.empty()) {
    coeff_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(coeff_.size() + o.coeff_.size() - 1);
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeff_.size(); ++j) out[i + j] += coeff_[i] * o.coeff_[j];
  }
  coeff_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    coeff_.clear();
    return *this;
  }
  for (auto& c : coeff_) c *= s;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc(1);
  Poly b = *this;
  while (e > 0) {
    if (e & 1U) acc *= b;
    b *= b;
    e >>= 1U;
  }
  return acc;
}

Poly Poly::derivative() const {
  Poly r;
  if (coeff_.size() <= 1) return r;
  r.coeff_.resize(coeff_.size() - 1);
  for (size_t j = 1; j < coeff_.size(); ++j)
    r.coeff_[j - 1] = coeff_[j] * GaussianRational(static_cast<long>(j));
  r.trim();
  return r;
}

Poly Poly::antiderivative() const {
  Poly r;
  if (coeff_.empty()) return r;
  r.coeff_.resize(coeff_.size() + 1);
  for (size_t j = 0; j < coeff_.size(); ++j)
    r.coeff_[j + 1] = coeff_[j] / GaussianRational(static_cast<long>(j + 1));
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (coeff_.empty()) return *this;
  Poly r = *this;
  GaussianRational inv = GaussianRational(1) / leading();
  for (auto& c : r.coeff_) c *= inv;
  return r;
}

std::complex<double> Poly::eval(const std::complex<double>& z) const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t j = coeff_.size(); j-- > 0;) acc = acc * z + coeff_[j].to_complex();
  return acc;
}

GaussianRational Poly::eval_exact(const GaussianRational& z) const {
  GaussianRational acc;
  for (size_t j = coeff_.size(); j-- > 0;) acc = acc * z + coeff_[j];
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(Errc::division_by_zero, "polynomial division by zero");
  Poly rem = a, quot;
  const int db = b.degree();
  const GaussianRational lead_inv = GaussianRational(1) / b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    GaussianRational f = rem.leading() * lead_inv;
    Poly t = Poly::monomial(f, shift);
    quot += t;
    rem -= t * b;
  }
  return {quot, rem};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly nth_root(const Poly& p, int n) {
  if (n < 1) raise(Errc::invalid_argument, "root index must be >= 1");
  if (n == 1 || p.is_zero()) return p;
  auto lead_root = nth_root(p.leading(), n);
  if (!lead_root)
    raise(Errc::not_a_power, "leading coefficient has no exact root of index " + std::to_string(n));
  if (p.is_constant()) return Poly(*lead_root);
  if (p.degree() % n != 0)
    raise(Errc::not_a_power, "degree " + std::to_string(p.degree()) +
                                 " is not divisible by " + std::to_string(n));

  // Monic reduction, then top-down coefficient matching: the coefficient of
  // z^((n-1)d + j) in q^n is n*q_j plus terms in already-known q_{>j}.
  const Poly m = p.monic();
  const int d = p.degree() / n;
  std::vector<GaussianRational> qc(static_cast<size_t>(d) + 1);
  qc[static_cast<size_t>(d)] = GaussianRational(1);
  const GaussianRational n_inv = GaussianRational(1) / GaussianRational(static_cast<long>(n));
  for (int j = d - 1; j >= 0; --j) {
    Poly partial{std::vector<GaussianRational>(qc)};
    Poly pn = partial.pow(static_cast<unsigned>(n));
    int idx = (n - 1) * d + j;
    qc[static_cast<size_t>(j)] = (m.coeff(idx) - pn.coeff(idx)) * n_inv;
  }
  Poly q{std::move(qc)};
  if (q.pow(static_cast<unsigned>(n)) != m)
    raise(Errc::not_a_power, "polynomial is not an exact power of index " + std::to_string(n));
  return q * (*lead_root);
}

std::optional<Rational> rational_multiple_of(const Poly& q, const Poly& p) {
  if (q.is_zero()) return Rational(0);
  if (p.is_zero() || q.degree() != p.degree()) return std::nullopt;
  GaussianRational ratio = q.leading() / p.leading();
  if (!ratio.is_real()) return std::nullopt;
  if (q != p * GaussianRational(ratio.re)) return std::nullopt;
  return ratio.re;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int j = a.degree(); j >= 0; --j) {
    int c = compare(a.coeff(j), b.coeff(j));
    if (c != 0) return c < 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) raise(Errc::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  GaussianRational inv = GaussianRational(1) / den_.leading();
  num_ *= inv;
  den_ *= inv;
}

const Poly& RatFunc::as_polynomial() const {
  if (!is_polynomial()) raise(Errc::non_polynomial_coefficient, "rational function has a nontrivial denominator");
  return num_;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) raise(Errc::division_by_zero, "division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::pow(int e) const {
  if (e == 0) return RatFunc(1);
  if (e < 0) {
    if (is_zero()) raise(Errc::division_by_zero, "negative power of zero");
    return RatFunc(den_, num_).pow(-e);
  }
  RatFunc acc(1);
  RatFunc b = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u > 0) {
    if (u & 1U) acc *= b;
    b *= b;
    u >>= 1U;
  }
  return acc;
}

RatFunc RatFunc::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RatFunc RatFunc::log_derivative() const {
  if (is_zero()) raise(Errc::division_by_zero, "logarithmic derivative of zero");
  return {num_.derivative() * den_ - num_ * den_.derivative(), num_ * den_};
}

std::complex<double> RatFunc::eval(const std::complex<double>& z) const {
  std::complex<double> d = den_.eval(z);
  double tol = 1e-12 * std::pow(1.0 + std::abs(z), den_.degree());
  if (std::abs(d) < tol)
    raise(Errc::pole_proximity, "denominator vanishes near z = (" + std::to_string(z.real()) +
                                    ", " + std::to_string(z.imag()) + ")");
  return num_.eval(z) / d;
}

}  // namespace expode
