#include "qcmod/cyclotomic.hpp"

#include "qcmod/errors.hpp"
#include "qcmod/interval.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace qcmod {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

IntPoly exact_div(IntPoly num, const IntPoly &den) {
  // den is monic; long division with zero remainder expected.
  std::size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    q[i - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t)
      num[i - dn + t] -= c * den[t];
  }
  return q;
}

void trim(RatPoly &p) {
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

// Remainder of p modulo the monic integer polynomial phi, padded to deg(phi).
RatPoly reduce(RatPoly p, const IntPoly &phi) {
  std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (sgn(p[i]) == 0)
      continue;
    Rational c = p[i];
    for (std::size_t t = 0; t <= d; ++t)
      p[i - d + t] -= c * phi[t];
  }
  p.resize(d, 0);
  return p;
}

RatPoly poly_mul(const RatPoly &a, const RatPoly &b) {
  RatPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

RatPoly poly_sub(RatPoly a, const RatPoly &b) {
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder over Q[x]; b nonzero and trimmed.
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly &b) {
  trim(a);
  if (a.size() < b.size())
    return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1, 0);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size() - 1;; --i) {
    Rational c = a[i] / b.back();
    q[i - db] = c;
    for (std::size_t t = 0; t <= db; ++t)
      a[i - db + t] -= c * b[t];
    if (i == db)
      break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

} // namespace

const std::vector<Integer> &cyclotomic_polynomial(int m) {
  if (m < 1)
    throw ParameterError("cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end())
      return it->second;
  }
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  IntPoly p(std::size_t(m) + 1, 0);
  p[0] = -1;
  p[std::size_t(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0)
      p = exact_div(std::move(p), cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(p)).first->second;
}

int totient(int m) {
  int count = 0;
  for (int k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1)
      ++count;
  return count;
}

Cyclotomic::Cyclotomic(int m) : m_(m) {
  coeffs_.assign(cyclotomic_polynomial(m).size() - 1, 0);
}

Cyclotomic::Cyclotomic(int m, std::vector<Rational> coeffs) : m_(m) {
  coeffs_ = reduce(std::move(coeffs), cyclotomic_polynomial(m));
}

Cyclotomic Cyclotomic::from_rational(int m, const Rational &c) {
  Cyclotomic x(m);
  x.coeffs_[0] = c;
  return x;
}

Cyclotomic Cyclotomic::root_power(int m, long long j) {
  if (m < 1)
    throw ParameterError("cyclotomic order must be >= 1");
  long long r = ((j % m) + m) % m;
  RatPoly p(std::size_t(r) + 1, 0);
  p[std::size_t(r)] = 1;
  return Cyclotomic(m, std::move(p));
}

Cyclotomic Cyclotomic::from_gaussian(int m, const GaussianRational &z) {
  if (m % 4 != 0)
    throw ParameterError("Q(i) embeds in Q(xi_m) only when 4 divides m");
  return from_rational(m, z.re) + root_power(m, m / 4) * z.im;
}

bool Cyclotomic::is_zero() const {
  for (const auto &c : coeffs_)
    if (sgn(c) != 0)
      return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0)
      return false;
  return true;
}

const Rational &Cyclotomic::rational_value() const {
  if (!is_rational())
    throw ParameterError("cyclotomic element " + to_string(*this) + " is not rational");
  return coeffs_[0];
}

void Cyclotomic::require_same_field(const Cyclotomic &o) const {
  if (m_ != o.m_)
    throw ParameterError("cyclotomic field mismatch: Q(xi_" + std::to_string(m_) + ") vs Q(xi_" +
                         std::to_string(o.m_) + ")");
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o) {
  require_same_field(o);
  coeffs_ = reduce(poly_mul(coeffs_, o.coeffs_), cyclotomic_polynomial(m_));
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Rational &c) {
  for (auto &x : coeffs_)
    x *= c;
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic out(m_);
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    if (sgn(coeffs_[t]) != 0)
      out += root_power(m_, -static_cast<long long>(t)) * coeffs_[t];
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero())
    throw ParameterError("inverse of zero in Q(xi_" + std::to_string(m_) + ")");
  // Extended Euclid: find s with s*x = 1 mod Phi_m.
  const IntPoly &phi = cyclotomic_polynomial(m_);
  RatPoly r0(phi.begin(), phi.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_m is irreducible.
  Rational c = r1.at(0);
  for (auto &x : s1)
    x /= c;
  return Cyclotomic(m_, std::move(s1));
}

Cyclotomic Cyclotomic::embed(int L) const {
  if (L < 1 || L % m_ != 0)
    throw ParameterError("cannot embed Q(xi_" + std::to_string(m_) + ") into Q(xi_" +
                         std::to_string(L) + ")");
  Cyclotomic out(L);
  const long long step = L / m_;
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    if (sgn(coeffs_[t]) != 0)
      out += root_power(L, step * static_cast<long long>(t)) * coeffs_[t];
  return out;
}

std::string to_string(const Cyclotomic &x) {
  std::string out;
  for (std::size_t t = 0; t < x.coeffs().size(); ++t) {
    if (sgn(x.coeffs()[t]) == 0)
      continue;
    if (!out.empty())
      out += " + ";
    out += "(" + to_string(x.coeffs()[t]) + ")";
    if (t > 0)
      out += "*z" + std::to_string(x.order()) + "^" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

namespace {

// Nearest multiple of 1/den to x (ties toward +infinity).
Rational round_to_grid(const Rational &x, const Integer &den) {
  Rational scaled = x * den + Rational(1, 2);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(fl, den);
  r.canonicalize();
  return r;
}

Rational enclosure_error(const Rational &g, const RationalInterval &iv) {
  Rational a = abs(g - iv.lo), b = abs(iv.hi - g);
  return a > b ? a : b;
}

unsigned bit_length(const Integer &x) { return unsigned(mpz_sizeinbase(x.get_mpz_t(), 2)); }

} // namespace

GaussianApprox cyclotomic_to_gaussian(const Cyclotomic &x, const Rational &eps) {
  if (sgn(eps) <= 0)
    throw ParameterError("cyclotomic_to_gaussian needs eps > 0");
  const int m = x.order();
  GaussianRational exact;
  std::vector<std::pair<long long, Rational>> inexact;
  Rational weight = 0;
  for (std::size_t t = 0; t < x.coeffs().size(); ++t) {
    const Rational &c = x.coeffs()[t];
    if (sgn(c) == 0)
      continue;
    if ((4 * static_cast<long long>(t)) % m == 0) {
      auto enc = root_of_unity_enclosure(m, static_cast<long long>(t), 1);
      exact.re += c * enc.cos.lo;
      exact.im += c * enc.sin.lo;
    } else {
      inexact.emplace_back(static_cast<long long>(t), c);
      weight += abs(c);
    }
  }
  if (inexact.empty())
    return {exact, Rational(0)};

  // Output grid 1/D with D the least power of ten such that 1/D <= eps/10.
  Integer grid = 1;
  while (Rational(1) / grid > eps / 10)
    grid *= 10;
  Rational w = weight + 1;
  Integer w_ceil;
  mpz_cdiv_q(w_ceil.get_mpz_t(), w.get_num_mpz_t(), w.get_den_mpz_t());
  unsigned bits = bit_length(grid) + bit_length(w_ceil) + 16;
  for (int attempt = 0; attempt < 8; ++attempt, bits *= 2) {
    RationalInterval re = RationalInterval::point(0), im = RationalInterval::point(0);
    for (const auto &[t, c] : inexact) {
      auto enc = root_of_unity_enclosure(m, t, bits);
      re = re + c * enc.cos;
      im = im + c * enc.sin;
    }
    Rational g_re = round_to_grid(re.midpoint(), grid);
    Rational g_im = round_to_grid(im.midpoint(), grid);
    Rational err = enclosure_error(g_re, re) + enclosure_error(g_im, im);
    if (err < eps)
      return {GaussianRational(exact.re + g_re, exact.im + g_im), err};
  }
  throw ParameterError("cyclotomic_to_gaussian failed to certify the requested precision");
}

} // namespace qcmod
