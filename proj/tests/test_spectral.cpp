#include "support.hpp"

#include "qcmod/errors.hpp"
#include "qcmod/spectral.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qcmod;
using namespace testing_support;

namespace {

Rational Q(long a, long b = 1) { return make_rational(a, b); }
Word U(int v, int a = 1) { return Word{{{v, a}}}; }

Cyclotomic C(int m, Rational r) { return Cyclotomic::from_rational(m, r); }

const std::vector<std::pair<int, int>> kParams = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {2, 5}, {3, 3}, {4, 4}};

} // namespace

TEST(Spectral, ProjectionExamplesForOrderTwo) {
  auto p = make_params(2, 2);
  for (int v = 1; v <= 2; ++v) {
    CyclotomicElement minus(p), plus(p);
    minus.add_term(Word{}, C(2, Q(1, 2)));
    minus.add_term(U(v), C(2, Q(-1, 2)));
    plus.add_term(Word{}, C(2, Q(1, 2)));
    plus.add_term(U(v), C(2, Q(1, 2)));
    EXPECT_EQ(projection(v, 1, p), minus);
    EXPECT_EQ(projection(v, 2, p), plus);
  }
}

TEST(Spectral, ProjectionForTrivialEigenvalueIsAverage) {
  auto p = make_params(2, 4);
  CyclotomicElement avg(p);
  avg.add_term(Word{}, C(4, Q(1, 4)));
  for (int a = 1; a < 4; ++a)
    avg.add_term(U(2, a), C(4, Q(1, 4)));
  EXPECT_EQ(projection(2, 4, p), avg);
}

TEST(Spectral, ProjectionsMatchOracleAndSatisfyIdentities) {
  for (auto [n, m] : kParams) {
    auto p = make_params(n, m);
    for (int v = 1; v <= n; ++v) {
      CyclotomicElement sum(p);
      for (int i = 1; i <= m; ++i) {
        auto e = projection(v, i, p);
        EXPECT_TRUE(oracle::ring_is_zero(oracle::ring_sub(to_oracle(e, m), oracle::projection(n, m, v, i))));
        EXPECT_EQ(ring_star(e), e);
        for (int j = 1; j <= m; ++j) {
          auto prod = e * projection(v, j, p);
          if (i == j)
            EXPECT_EQ(prod, e);
          else
            EXPECT_TRUE(prod.is_zero());
        }
        sum += e;
      }
      EXPECT_EQ(sum, cyclotomic_one(p));
      // u_v^j = sum_i xi^{ji} e_{v,i}
      for (int j = 0; j < m; ++j) {
        CyclotomicElement rebuilt(p);
        for (int i = 1; i <= m; ++i) {
          auto e = projection(v, i, p);
          for (const auto &[w, c] : e.terms())
            rebuilt.add_term(w, c * Cyclotomic::root_power(m, (long long)i * j));
        }
        EXPECT_EQ(rebuilt, CyclotomicElement::monomial(p, generator_power(v, j, p), C(m, 1)));
      }
    }
  }
  EXPECT_THROW(projection(3, 1, make_params(2, 2)), ParameterError);
  EXPECT_THROW(projection(1, 0, make_params(2, 2)), ParameterError);
}

TEST(Spectral, ProjectionProductExamples) {
  auto p = make_params(2, 2);
  CyclotomicElement expected(p);
  expected.add_term(Word{}, C(2, Q(1, 4)));
  expected.add_term(U(1), C(2, Q(-1, 4)));
  expected.add_term(U(2), C(2, Q(-1, 4)));
  expected.add_term(Word{{{1, 1}, {2, 1}}}, C(2, Q(1, 4)));
  EXPECT_EQ(projection_product(1, 1, 2, 1, p), expected);
  for (auto [n, m] : kParams) {
    auto q = make_params(n, m);
    for (int v = 1; v <= n; ++v)
      for (int w = 1; w <= n; ++w)
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= m; ++j) {
            auto prod = projection_product(v, i, w, j, q);
            auto ref = oracle::ring_mul(oracle::projection(n, m, v, i), oracle::projection(n, m, w, j));
            EXPECT_TRUE(oracle::ring_is_zero(oracle::ring_sub(to_oracle(prod, m), ref)));
            if (v == w && i != j)
              EXPECT_TRUE(prod.is_zero());
            if (v == w && i == j)
              EXPECT_EQ(prod, projection(v, i, q));
            for (const auto &[word, c] : prod.terms())
              EXPECT_LE(word.syllables.size(), 2u);
          }
  }
}

TEST(Spectral, ApproximantsAreExactForGaussianOrders) {
  for (int m : {2, 4}) {
    auto p = make_params(2, m);
    for (int k : {1, 10, 1000})
      for (int v = 1; v <= 2; ++v)
        for (int w = 1; w <= 2; ++w)
          for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
              auto s = approx_product_s(v, w, i, j, k, p);
              EXPECT_EQ(s.error_bound, 0);
              EXPECT_EQ(s.k, k);
              EXPECT_EQ(to_cyclotomic(s.value, 4), [&] {
                CyclotomicElement x(p);
                auto exact = projection_product(v, i, w, j, p);
                for (const auto &[word, c] : exact.terms())
                  x.add_term(word, c.embed(4));
                return x;
              }());
            }
  }
}

TEST(Spectral, ApproximantCertificatesHoldUnderMpfrRecheck) {
  for (auto [n, m] : kParams) {
    auto p = make_params(n, m);
    for (int k : {1, 10, 100, 1000})
      for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w)
          for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
              auto s = approx_product_s(v, w, i, j, k, p);
              ASSERT_LT(s.error_bound, Q(1, 2 * k));
              auto exact = projection_product(v, i, w, j, p);
              if (v == w && i != j) {
                EXPECT_TRUE(s.value.is_zero());
                EXPECT_EQ(s.error_bound, 0);
              }
              mpq_class lower = 0, upper = 0;
              std::set<Word> words;
              for (const auto &[word, c] : exact.terms())
                words.insert(word);
              for (const auto &[word, c] : s.value.terms())
                words.insert(word);
              for (const auto &word : words) {
                GaussianRational g = s.value.coefficient(word) ? *s.value.coefficient(word) : GaussianRational{};
                oracle::Poly x = exact.coefficient(word) ? to_oracle(*exact.coefficient(word))
                                                         : oracle::Poly(std::size_t(m), 0);
                oracle::Box b = oracle::poly_box(x, 256);
                auto dist = [](const mpq_class &v0, const mpq_class &lo, const mpq_class &hi,
                               mpq_class &lo_out, mpq_class &hi_out) {
                  hi_out = std::max(abs(hi - v0), abs(lo - v0));
                  lo_out = v0 < lo ? mpq_class(lo - v0) : v0 > hi ? mpq_class(v0 - hi) : mpq_class(0);
                };
                mpq_class rl, rh, il, ih;
                dist(g.re, b.re_lo, b.re_hi, rl, rh);
                dist(g.im, b.im_lo, b.im_hi, il, ih);
                lower += rl + il;
                upper += rh + ih;
              }
              ASSERT_LE(lower, s.error_bound);
              ASSERT_LT(upper, Q(1, k));
            }
  }
}

TEST(Spectral, RejectsBadLevel) {
  EXPECT_THROW(approx_product_s(1, 1, 1, 1, 0, make_params(2, 3)), ParameterError);
}

TEST(Spectral, EntryIndexIsRowMajor) {
  auto p = make_params(3, 4);
  std::size_t t = 0;
  for (int v = 1; v <= 3; ++v)
    for (int w = 1; w <= 3; ++w)
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
          ASSERT_EQ(entry_index(p, v, w, i, j), t);
          auto key = entry_key(p, t);
          ASSERT_EQ(key.v, v);
          ASSERT_EQ(key.w, w);
          ASSERT_EQ(key.i, i);
          ASSERT_EQ(key.j, j);
          ++t;
        }
}
