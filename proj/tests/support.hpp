#pragma once

#include "oracles.hpp"

#include "qcmod/group_ring.hpp"
#include "qcmod/trace.hpp"

#include <random>

namespace testing_support {

inline oracle::OWord to_oracle(const qcmod::Word &w) {
  oracle::OWord out;
  for (const auto &s : w.syllables)
    out.emplace_back(s.generator, s.exponent);
  return out;
}

inline qcmod::Word from_oracle(const oracle::OWord &w) {
  qcmod::Word out;
  for (auto [g, e] : w)
    out.syllables.push_back({g, e});
  return out;
}

/// Power-basis coefficients padded to length m, read in Q[x]/(x^m - 1).
inline oracle::Poly to_oracle(const qcmod::Cyclotomic &c) {
  oracle::Poly p(std::size_t(c.order()), 0);
  for (std::size_t t = 0; t < c.coeffs().size(); ++t)
    p[t] = c.coeffs()[t];
  return p;
}

inline oracle::Ring to_oracle(const qcmod::CyclotomicElement &x, int field_order) {
  oracle::Ring r{x.params().n, field_order, {}};
  for (const auto &[w, c] : x.terms())
    r.add(to_oracle(w), to_oracle(c.embed(field_order)));
  return r;
}

/// Random normal-form word with at most max_len syllables.
inline qcmod::Word random_word(std::mt19937_64 &rng, const qcmod::GroupParams &p, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, p.n), ex(1, p.m - 1);
  std::vector<qcmod::RawSyllable> raw;
  int target = len(rng);
  int last = 0;
  while (int(raw.size()) < target) {
    int g = gen(rng);
    if (g == last)
      continue;
    raw.push_back({g, ex(rng)});
    last = g;
  }
  return qcmod::normalize(raw, p);
}

inline qcmod::Rational random_rational(std::mt19937_64 &rng, long span = 7) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return qcmod::make_rational(num(rng), den(rng));
}

inline qcmod::GaussianRational random_gaussian(std::mt19937_64 &rng) {
  return {random_rational(rng), random_rational(rng)};
}

inline qcmod::Cyclotomic random_cyclotomic(std::mt19937_64 &rng, int m) {
  std::vector<qcmod::Rational> c;
  for (int t = 0; t < m; ++t)
    c.push_back(random_rational(rng, 4));
  return qcmod::Cyclotomic(m, c);
}

template <class Coeff, class Make>
qcmod::GroupRing<Coeff> random_element(std::mt19937_64 &rng, const qcmod::GroupParams &p, Make make) {
  qcmod::GroupRing<Coeff> x(p);
  std::uniform_int_distribution<int> terms(0, 3);
  for (int t = terms(rng); t > 0; --t)
    x.add_term(random_word(rng, p, 3), make());
  return x;
}

} // namespace testing_support
