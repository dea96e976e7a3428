#pragma once

#include "qcmod/cyclotomic.hpp"
#include "qcmod/errors.hpp"
#include "qcmod/group.hpp"
#include "qcmod/rational.hpp"

#include <map>
#include <type_traits>

namespace qcmod {

/// Finitely supported formal sum of group elements with coefficients in
/// Q(i) (GaussianRational) or Q(xi_m) (Cyclotomic). Zero coefficients are
/// never stored; iteration follows the canonical word order.
template <class Coeff> class GroupRing {
public:
  using Terms = std::map<Word, Coeff>;

  explicit GroupRing(GroupParams params) : params_(params) { validate(params_); }

  static GroupRing monomial(GroupParams params, Word w, Coeff c) {
    GroupRing x(params);
    x.add_term(w, c);
    return x;
  }

  const GroupParams &params() const { return params_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of w; nullptr when w is outside the support.
  const Coeff *coefficient(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Word &w, const Coeff &c) {
    validate(w, params_);
    if (qcmod::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (qcmod::is_zero(it->second))
        terms_.erase(it);
    }
  }

  GroupRing &operator+=(const GroupRing &o) {
    require_same_group(o);
    for (const auto &[w, c] : o.terms_)
      add_term(w, c);
    return *this;
  }

  GroupRing &operator-=(const GroupRing &o) {
    require_same_group(o);
    for (const auto &[w, c] : o.terms_)
      add_term(w, -c);
    return *this;
  }

  friend GroupRing operator+(GroupRing a, const GroupRing &b) { return a += b; }
  friend GroupRing operator-(GroupRing a, const GroupRing &b) { return a -= b; }

  friend GroupRing operator*(const GroupRing &a, const GroupRing &b) {
    a.require_same_group(b);
    GroupRing out(a.params_);
    for (const auto &[wa, ca] : a.terms_)
      for (const auto &[wb, cb] : b.terms_)
        out.add_term(word_mul(wa, wb, a.params_), ca * cb);
    return out;
  }

  friend bool operator==(const GroupRing &, const GroupRing &) = default;

  void require_same_group(const GroupRing &o) const {
    if (!(params_ == o.params_))
      throw ParameterError("group ring elements over different F(n,m)");
  }

private:
  GroupParams params_;
  Terms terms_;
};

using GaussianElement = GroupRing<GaussianRational>;
using CyclotomicElement = GroupRing<Cyclotomic>;

template <class Coeff> GroupRing<Coeff> ring_add(const GroupRing<Coeff> &x, const GroupRing<Coeff> &y) {
  return x + y;
}

template <class Coeff> GroupRing<Coeff> ring_mul(const GroupRing<Coeff> &x, const GroupRing<Coeff> &y) {
  return x * y;
}

/// a*w -> conj(a) * w^{-1}.
template <class Coeff> GroupRing<Coeff> ring_star(const GroupRing<Coeff> &x) {
  GroupRing<Coeff> out(x.params());
  for (const auto &[w, c] : x.terms())
    out.add_term(word_inv(w, x.params()), conj(c));
  return out;
}

/// Multiplies every coefficient by a rational scalar.
template <class Coeff> GroupRing<Coeff> scale(const GroupRing<Coeff> &x, const Rational &r) {
  GroupRing<Coeff> out(x.params());
  for (const auto &[w, c] : x.terms()) {
    Coeff scaled = c;
    if constexpr (std::is_same_v<Coeff, GaussianRational>)
      scaled *= GaussianRational(r);
    else
      scaled *= r;
    out.add_term(w, scaled);
  }
  return out;
}

/// Sum over terms of |re| + |im|. Dominates the l1 norm, which dominates
/// the norm of C*(F(n,m)).
Rational ring_l1_bound(const GaussianElement &x);

/// The identity 1*e of Q(xi_m)F(n,m).
CyclotomicElement cyclotomic_one(const GroupParams &params);

/// Coefficientwise embedding of a Gaussian element into Q(xi_L)F(n,m); 4 | L.
CyclotomicElement to_cyclotomic(const GaussianElement &x, int L);

} // namespace qcmod
