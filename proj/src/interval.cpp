#include "qcmod/interval.hpp"

#include "qcmod/errors.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace qcmod {

RationalInterval operator+(const RationalInterval &a, const RationalInterval &b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval &a, const RationalInterval &b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator-(const RationalInterval &a) { return {-a.hi, -a.lo}; }

RationalInterval operator*(const RationalInterval &a, const RationalInterval &b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  RationalInterval r{c[0], c[0]};
  for (const auto &x : c) {
    if (x < r.lo)
      r.lo = x;
    if (x > r.hi)
      r.hi = x;
  }
  return r;
}

RationalInterval operator*(const Rational &c, const RationalInterval &a) {
  if (sgn(c) >= 0)
    return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

RationalInterval round_outward(const RationalInterval &a, unsigned bits) {
  Integer scale = 1;
  scale <<= bits;
  Rational lo_scaled = a.lo * scale;
  Rational hi_scaled = a.hi * scale;
  Integer lo, hi;
  mpz_fdiv_q(lo.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
  mpz_cdiv_q(hi.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
  Rational rlo(lo, scale), rhi(hi, scale);
  rlo.canonicalize();
  rhi.canonicalize();
  return {rlo, rhi};
}

namespace {

Rational pow2_neg(unsigned bits) {
  Integer d = 1;
  d <<= bits;
  return Rational(Integer(1), d);
}

// arctan(1/x) via its alternating series; consecutive partial sums bracket it.
RationalInterval arctan_inverse(long x, const Rational &tolerance) {
  Rational sum = 0;
  Rational x2 = Rational(x) * x;
  Rational power = Rational(1) / x; // 1/x^{2k+1}
  for (long k = 0;; ++k) {
    Rational term = power / (2 * k + 1);
    Rational next = sum;
    if (k % 2 == 0)
      next += term;
    else
      next -= term;
    if (term < tolerance)
      return sum < next ? RationalInterval{sum, next} : RationalInterval{next, sum};
    sum = next;
    power /= x2;
  }
}

// Taylor enclosures at an exact point 0 <= x <= 1; the tail is bounded by
// the first omitted term.
RationalInterval cos_at(const Rational &x, const Rational &tolerance) {
  Rational sum = 0;
  Rational term = 1;
  Rational x2 = x * x;
  for (long k = 0;; ++k) {
    sum += (k % 2 == 0) ? term : Rational(-term);
    term = term * x2 / ((2 * k + 1) * (2 * k + 2));
    if (term < tolerance)
      return {sum - term, sum + term};
  }
}

RationalInterval sin_at(const Rational &x, const Rational &tolerance) {
  Rational sum = 0;
  Rational term = x;
  Rational x2 = x * x;
  for (long k = 0;; ++k) {
    sum += (k % 2 == 0) ? term : Rational(-term);
    term = term * x2 / ((2 * k + 2) * (2 * k + 3));
    if (term < tolerance)
      return {sum - term, sum + term};
  }
}

} // namespace

RationalInterval pi_enclosure(unsigned bits) {
  static std::mutex mutex;
  static std::map<unsigned, RationalInterval> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(bits); it != cache.end())
    return it->second;
  Rational tol = pow2_neg(bits + 8);
  RationalInterval a5 = arctan_inverse(5, tol);
  RationalInterval a239 = arctan_inverse(239, tol);
  RationalInterval pi = Rational(16) * a5 - Rational(4) * a239;
  pi = round_outward(pi, bits + 2);
  cache.emplace(bits, pi);
  return pi;
}

UnitRootEnclosure root_of_unity_enclosure(int m, long long t, unsigned bits) {
  if (m < 1)
    throw ParameterError("root of unity order must be >= 1");
  long long r = ((t % m) + m) % m;
  // r/m = q/4 + s with s in [0, 1/4): rotate by q quarter turns at the end.
  long long q = (4 * r) / m;
  Rational s = make_rational(long(r), m) - make_rational(long(q), 4);
  RationalInterval c, sn;
  if (sgn(s) == 0) {
    c = RationalInterval::point(1);
    sn = RationalInterval::point(0);
  } else {
    // Fold s into [0, 1/8] using cos(2 pi s) = sin(2 pi (1/4 - s)).
    bool swap = s > Rational(1, 8);
    Rational angle_turns = swap ? Rational(Rational(1, 4) - s) : s;
    RationalInterval pi = pi_enclosure(bits + 4);
    RationalInterval theta = Rational(2 * angle_turns) * pi; // within [0, pi/4]
    Rational tol = pow2_neg(bits + 4);
    // cos decreases and sin increases on [0, pi/4].
    RationalInterval cos_lo = cos_at(theta.hi, tol), cos_hi = cos_at(theta.lo, tol);
    RationalInterval sin_lo = sin_at(theta.lo, tol), sin_hi = sin_at(theta.hi, tol);
    c = round_outward({cos_lo.lo, cos_hi.hi}, bits);
    sn = round_outward({sin_lo.lo, sin_hi.hi}, bits);
    if (swap)
      std::swap(c, sn);
  }
  switch (q) {
  case 0:
    return {c, sn};
  case 1:
    return {-sn, c};
  case 2:
    return {-c, -sn};
  default:
    return {sn, -c};
  }
}

} // namespace qcmod
