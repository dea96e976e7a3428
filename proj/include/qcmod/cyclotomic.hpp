#pragma once

#include "qcmod/rational.hpp"

#include <vector>

namespace qcmod {

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer> &cyclotomic_polynomial(int m);

/// Euler's totient, the degree of Phi_m.
int totient(int m);

/// Element of Q(xi_m), xi_m = exp(2 pi i / m), stored in the power basis
/// 1, xi, ..., xi^{phi(m)-1}, i.e. as a polynomial reduced modulo Phi_m.
class Cyclotomic {
public:
  /// Zero of Q(xi_m).
  explicit Cyclotomic(int m);
  Cyclotomic(int m, std::vector<Rational> coeffs);

  static Cyclotomic from_rational(int m, const Rational &c);
  /// xi_m^j for any integer j.
  static Cyclotomic root_power(int m, long long j);
  /// Gaussian rational as an element of Q(xi_m); requires 4 | m.
  static Cyclotomic from_gaussian(int m, const GaussianRational &z);

  int order() const { return m_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; throws ParameterError if not rational.
  const Rational &rational_value() const;

  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Rational &c);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational &c) { return a *= c; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto &c : a.coeffs_)
      c = -c;
    return a;
  }
  friend bool operator==(const Cyclotomic &, const Cyclotomic &) = default;

  /// Complex conjugation, xi -> xi^{-1}.
  Cyclotomic conj() const;
  /// Multiplicative inverse; throws ParameterError on zero.
  Cyclotomic inverse() const;
  /// Image in Q(xi_L) for a multiple L of m.
  Cyclotomic embed(int L) const;

private:
  void require_same_field(const Cyclotomic &o) const;

  int m_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic &x) { return x.is_zero(); }
inline Cyclotomic conj(const Cyclotomic &x) { return x.conj(); }

std::string to_string(const Cyclotomic &x);

/// A Gaussian rational g with a certified bound |re(x-g)| + |im(x-g)| <= error.
struct GaussianApprox {
  GaussianRational value;
  Rational error;
};

/// Approximates x by a Gaussian rational with certified error < eps, using
/// exact interval arithmetic on cos/sin(2 pi t / m). Parts of x lying in
/// Q(i) (powers xi^t with 4t = 0 mod m) are carried over exactly, so the
/// result is exact with error 0 for m in {1, 2, 4}. Throws ParameterError
/// when eps <= 0.
GaussianApprox cyclotomic_to_gaussian(const Cyclotomic &x, const Rational &eps);

} // namespace qcmod
