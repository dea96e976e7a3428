#include "qcmod/group_ring.hpp"

namespace qcmod {

Rational ring_l1_bound(const GaussianElement &x) {
  Rational total = 0;
  for (const auto &[w, c] : x.terms())
    total += l1_bound(c);
  return total;
}

CyclotomicElement cyclotomic_one(const GroupParams &params) {
  return CyclotomicElement::monomial(params, Word{}, Cyclotomic::from_rational(params.m, 1));
}

CyclotomicElement to_cyclotomic(const GaussianElement &x, int L) {
  CyclotomicElement out(x.params());
  for (const auto &[w, c] : x.terms())
    out.add_term(w, Cyclotomic::from_gaussian(L, c));
  return out;
}

} // namespace qcmod
