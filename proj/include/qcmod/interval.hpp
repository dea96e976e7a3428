#pragma once

#include "qcmod/rational.hpp"

namespace qcmod {

/// Closed interval [lo, hi] with exact rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval point(const Rational &x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational &x) const { return lo <= x && x <= hi; }
};

RationalInterval operator+(const RationalInterval &a, const RationalInterval &b);
RationalInterval operator-(const RationalInterval &a, const RationalInterval &b);
RationalInterval operator-(const RationalInterval &a);
RationalInterval operator*(const RationalInterval &a, const RationalInterval &b);
RationalInterval operator*(const Rational &c, const RationalInterval &a);

/// Widens [lo, hi] outward to the dyadic grid 2^-bits.
RationalInterval round_outward(const RationalInterval &a, unsigned bits);

/// Rational enclosure of pi with width below 2^-bits (Machin's formula).
RationalInterval pi_enclosure(unsigned bits);

/// Enclosures of cos(2 pi t / m) and sin(2 pi t / m), each of width below
/// roughly 2^-(bits-2). Exact (degenerate) whenever 4t = 0 mod m.
struct UnitRootEnclosure {
  RationalInterval cos;
  RationalInterval sin;
};

UnitRootEnclosure root_of_unity_enclosure(int m, long long t, unsigned bits);

} // namespace qcmod
