#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcmod {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Height of a reduced fraction a/b: max(|a|, b).
Integer height(const Rational &q);

/// Canonical serialization "p/q" with q > 0 (integers keep the "/1").
std::string to_string(const Rational &q);
Rational parse_rational(std::string_view text);

/// Exact element re + im*i of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational &operator+=(const GaussianRational &o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational &operator-=(const GaussianRational &o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational &operator*=(const GaussianRational &o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational &a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline GaussianRational conj(const GaussianRational &z) { return {z.re, -z.im}; }
inline bool is_zero(const GaussianRational &z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

/// |z|^2 = re^2 + im^2, exact.
inline Rational norm2(const GaussianRational &z) { return z.re * z.re + z.im * z.im; }

/// |re| + |im|; a rational upper bound on |z|.
inline Rational l1_bound(const GaussianRational &z) { return abs(z.re) + abs(z.im); }

inline bool in_unit_disc(const GaussianRational &z) { return norm2(z) <= 1; }

/// Max of the heights of the two parts.
Integer height(const GaussianRational &z);

GaussianRational inverse(const GaussianRational &z);

std::string to_string(const GaussianRational &z);

} // namespace qcmod
