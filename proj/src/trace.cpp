#include "qcmod/trace.hpp"

#include "qcmod/errors.hpp"
#include "qcmod/grid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace qcmod {

// --- PartialTrace / CyclotomicTrace ----------------------------------------

PartialTrace::PartialTrace(GroupParams params) : params_(params) { validate(params_); }

PartialTrace::PartialTrace(GroupParams params, std::map<Word, GaussianRational> values)
    : params_(params) {
  validate(params_);
  for (auto &[w, z] : values)
    set(w, std::move(z));
}

const GaussianRational &PartialTrace::at(const Word &w) const {
  auto it = values_.find(w);
  if (it == values_.end())
    throw DomainError("trace is not defined at word " + to_string(w));
  return it->second;
}

void PartialTrace::set(const Word &w, GaussianRational value) {
  validate(w, params_);
  if (!in_unit_disc(value))
    throw ParameterError("trace value " + to_string(value) + " at " + to_string(w) +
                         " lies outside the closed unit disc");
  values_.insert_or_assign(w, std::move(value));
}

GaussianRational PartialTrace::evaluate(const GaussianElement &x) const {
  GaussianRational total;
  for (const auto &[w, c] : x.terms())
    total += c * at(w);
  return total;
}

CyclotomicTrace::CyclotomicTrace(GroupParams params, int field_order)
    : params_(params), field_order_(field_order) {
  validate(params_);
  if (field_order_ < 1 || field_order_ % params_.m != 0)
    throw ParameterError("trace field Q(xi_L) must contain Q(xi_m)");
}

const Cyclotomic &CyclotomicTrace::at(const Word &w) const {
  auto it = values_.find(w);
  if (it == values_.end())
    throw DomainError("trace is not defined at word " + to_string(w));
  return it->second;
}

void CyclotomicTrace::set(const Word &w, Cyclotomic value) {
  validate(w, params_);
  if (value.order() != field_order_)
    throw ParameterError("trace value lives in the wrong cyclotomic field");
  values_.insert_or_assign(w, std::move(value));
}

Cyclotomic CyclotomicTrace::evaluate(const CyclotomicElement &x) const {
  Cyclotomic total(field_order_);
  for (const auto &[w, c] : x.terms())
    total += c.embed(field_order_) * at(w);
  return total;
}

// --- Requirement list -------------------------------------------------------

std::vector<FormalTerm> formal_element(std::uint64_t position) {
  Integer q = static_cast<unsigned long>(position);
  for (unsigned H = 1;; ++H) {
    const auto coeffs = canonical_nonzero_gaussians(H);
    const std::size_t lower = canonical_nonzero_gaussians(H - 1).size();
    for (unsigned s = 1; s <= H; ++s) {
      // Index subsets of {0..H} of size s, lexicographic.
      std::vector<std::uint64_t> subset(s);
      std::iota(subset.begin(), subset.end(), 0);
      for (;;) {
        const bool forced = s == H || subset.back() == H;
        LayerIndexer idx(std::vector<std::size_t>(s, coeffs.size()),
                         std::vector<std::size_t>(s, lower), !forced);
        if (q < idx.count()) {
          auto digits = idx.unrank(q);
          std::vector<FormalTerm> out;
          for (std::size_t t = 0; t < s; ++t)
            out.push_back({subset[t], coeffs[digits[t]]});
          return out;
        }
        q -= idx.count();
        // next combination
        int pos = int(s) - 1;
        while (pos >= 0 && subset[std::size_t(pos)] == H - (s - 1 - unsigned(pos)))
          --pos;
        if (pos < 0)
          break;
        ++subset[std::size_t(pos)];
        for (std::size_t t = std::size_t(pos) + 1; t < s; ++t)
          subset[t] = subset[t - 1] + 1;
      }
    }
  }
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t q) {
  Integer disc = Integer(8) * static_cast<unsigned long>(q) + 1;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Integer w = (root - 1) / 2;
  Integer t = w * (w + 1) / 2;
  Integer b = Integer(static_cast<unsigned long>(q)) - t;
  Integer a = w - b;
  return {a.get_ui(), b.get_ui()};
}

Requirement requirement(std::uint64_t l) {
  if (l < 1)
    throw ParameterError("requirement indices start at 1");
  if (l % 2 == 1)
    return {l, PositivityRequirement{formal_element((l - 1) / 2)}};
  auto [a, b] = cantor_unpair(l / 2 - 1);
  return {l, ClassRequirement{a, b}};
}

Rational coefficient_weight(const PositivityRequirement &r) {
  Rational total = 0;
  for (const auto &t : r.terms)
    total += l1_bound(t.coeff);
  return total;
}

RequirementSet::RequirementSet(int k, GroupParams params) : k_(k), params_(params) {
  if (k < 1)
    throw ParameterError("k must be >= 1, got " + std::to_string(k));
  validate(params_);
  std::set<Word> words;
  for (std::uint64_t l = 1; l <= std::uint64_t(k); ++l) {
    Requirement r = requirement(l);
    Compiled c;
    if (const auto *pos = std::get_if<PositivityRequirement>(&r.kind)) {
      std::map<Word, GaussianRational> sum;
      for (const auto &lam : pos->terms) {
        Word lam_inv = word_inv(word_at(params_, lam.word_index), params_);
        for (const auto &gam : pos->terms) {
          Word w = word_mul(lam_inv, word_at(params_, gam.word_index), params_);
          sum[w] += conj(lam.coeff) * gam.coeff;
        }
      }
      for (auto &[w, z] : sum) {
        words.insert(w);
        c.sum.emplace_back(w, std::move(z));
      }
    } else {
      const auto &cls = std::get<ClassRequirement>(r.kind);
      c.positivity = false;
      c.word = word_at(params_, cls.lambda_index);
      c.conjugate = word_conj(c.word, word_at(params_, cls.gamma_index), params_);
      words.insert(c.word);
      words.insert(c.conjugate);
    }
    requirements_.push_back(std::move(r));
    compiled_.push_back(std::move(c));
  }
  words_.assign(words.begin(), words.end());
}

CheckResult RequirementSet::check(const PartialTrace &tau, std::uint64_t l, int level) const {
  if (l < 1 || l > compiled_.size())
    throw ParameterError("requirement " + std::to_string(l) + " not compiled in this set");
  if (level < 1)
    throw ParameterError("relaxation level must be >= 1");
  if (!(tau.params() == params_))
    throw ParameterError("trace and requirement set over different F(n,m)");
  const Compiled &c = compiled_[l - 1];
  const Rational level2 = Rational(level) * level;
  if (c.positivity) {
    GaussianRational z;
    for (const auto &[w, coeff] : c.sum)
      z += coeff * tau.at(w);
    // Euclidean distance from z to the ray [0, inf) below 1/level.
    bool pass = sgn(z.re) >= 0 ? level2 * z.im * z.im < 1 : level2 * norm2(z) < 1;
    if (pass)
      return {};
    return {false, "R_" + std::to_string(l) + ": Hermitian sum " + to_string(z) +
                       " is not within 1/" + std::to_string(level) + " of [0,inf)"};
  }
  GaussianRational d = tau.at(c.conjugate) - tau.at(c.word);
  if (level2 * norm2(d) < 1)
    return {};
  return {false, "R_" + std::to_string(l) + ": |tau(" + to_string(c.conjugate) + ") - tau(" +
                     to_string(c.word) + ")| >= 1/" + std::to_string(level)};
}

ApproximateReport RequirementSet::check_all(const PartialTrace &tau) const {
  ApproximateReport report;
  for (std::uint64_t l = 1; l <= compiled_.size(); ++l)
    if (!check(tau, l, k_))
      report.failures.push_back(l);
  report.pass = report.failures.empty();
  return report;
}

std::vector<Word> required_support(int k, const GroupParams &params) {
  RequirementSet reqs(k, params);
  std::set<Word> words(reqs.words().begin(), reqs.words().end());
  for (const auto &s : approx_product_table(k, params))
    for (const auto &[w, c] : s.value.terms())
      words.insert(w);
  return {words.begin(), words.end()};
}

CheckResult check_relaxed(const PartialTrace &tau, std::uint64_t l, int k) {
  if (l < 1)
    throw ParameterError("requirement indices start at 1");
  if (l > std::uint64_t(std::numeric_limits<int>::max()))
    throw ParameterError("requirement index too large");
  RequirementSet reqs(int(l), tau.params());
  return reqs.check(tau, l, k);
}

ApproximateReport is_k_approximate(const PartialTrace &tau, int k) {
  return RequirementSet(k, tau.params()).check_all(tau);
}

DeltaBound delta_for_k(int k) {
  if (k < 1)
    throw ParameterError("k must be >= 1, got " + std::to_string(k));
  Rational worst = 2;
  for (std::uint64_t l = 1; l <= std::uint64_t(k); l += 2) {
    Requirement r = requirement(l);
    Rational b = coefficient_weight(std::get<PositivityRequirement>(r.kind));
    if (b * b > worst)
      worst = b * b;
  }
  return {k, Rational(1, 2 * k) / worst};
}

// --- Fixtures ---------------------------------------------------------------

PartialTrace regular_trace(const GroupParams &params, const std::vector<Word> &support) {
  PartialTrace tau(params);
  for (const auto &w : support)
    tau.set(w, w.is_identity() ? GaussianRational(1) : GaussianRational(0));
  return tau;
}

CyclotomicTrace character_trace(const AnswerFunction &f, const GroupParams &params,
                                const std::vector<Word> &support) {
  validate(params);
  if (f.size() != std::size_t(params.n))
    throw ParameterError("character needs f defined on all of [n]");
  for (int a : f)
    if (a < 1 || a > params.m)
      throw ParameterError("character value f(v) = " + std::to_string(a) + " outside [1,m]");
  CyclotomicTrace tau(params, params.m);
  for (const auto &w : support) {
    validate(w, params);
    long long exponent = 0;
    for (const auto &s : w.syllables)
      exponent += static_cast<long long>(f[std::size_t(s.generator - 1)]) * s.exponent;
    tau.set(w, Cyclotomic::root_power(params.m, exponent));
  }
  return tau;
}

namespace {

Rational checked_entry(const Cyclotomic &value, const EntryKey &key) {
  auto where = [&] {
    return "p(" + std::to_string(key.i) + "," + std::to_string(key.j) + "|" + std::to_string(key.v) +
           "," + std::to_string(key.w) + ")";
  };
  if (!value.is_rational())
    throw NotATraceError(where() + " = " + to_string(value) + " is irrational");
  const Rational &x = value.rational_value();
  if (sgn(x) < 0 || x > 1)
    throw NotATraceError(where() + " = " + to_string(x) + " lies outside [0,1]");
  return x;
}

template <class Evaluate>
Correlation correlation_via(const GroupParams &params, Evaluate &&evaluate) {
  const std::size_t slots = std::size_t(params.n * params.n * params.m * params.m);
  std::vector<Rational> entries(slots);
  for (std::size_t e = 0; e < slots; ++e) {
    EntryKey key = entry_key(params, e);
    entries[e] = checked_entry(evaluate(projection_product(key.v, key.i, key.w, key.j, params)), key);
  }
  return Correlation(params, std::move(entries));
}

} // namespace

Correlation correlation_from_trace(const PartialTrace &tau) {
  const GroupParams &params = tau.params();
  const int L = std::lcm(params.m, 4);
  return correlation_via(params, [&](const CyclotomicElement &x) {
    Cyclotomic total(L);
    for (const auto &[w, c] : x.terms())
      total += c.embed(L) * Cyclotomic::from_gaussian(L, tau.at(w));
    return total;
  });
}

Correlation correlation_from_trace(const CyclotomicTrace &tau) {
  return correlation_via(tau.params(), [&](const CyclotomicElement &x) { return tau.evaluate(x); });
}

AdaptedReport is_k_adapted(const PartialTrace &tau, const Correlation &p, int k) {
  return is_k_adapted(tau, p, approx_product_table(k, tau.params()), k);
}

AdaptedReport is_k_adapted(const PartialTrace &tau, const Correlation &p,
                           const std::vector<CertifiedApprox> &s_table, int k) {
  if (k < 1)
    throw ParameterError("k must be >= 1, got " + std::to_string(k));
  if (!(tau.params() == p.params()))
    throw ParameterError("trace and correlation over different (n,m)");
  if (s_table.size() != p.entries().size())
    throw ParameterError("approximant table has the wrong size");
  const Rational k2 = Rational(k) * k;
  AdaptedReport report;
  for (std::size_t e = 0; e < s_table.size(); ++e) {
    GaussianRational diff = GaussianRational(p.entries()[e]) - tau.evaluate(s_table[e].value);
    if (!(k2 * norm2(diff) < 1))
      report.failures.push_back(entry_key(p.params(), e));
  }
  report.pass = report.failures.empty();
  return report;
}

RationalizedPair rationalize_pair(const CyclotomicTrace &tau_exact, const Correlation &p_exact,
                                  const Rational &eta) {
  if (sgn(eta) <= 0)
    throw ParameterError("rationalize_pair needs eta > 0");
  if (!(tau_exact.params() == p_exact.params()))
    throw ParameterError("trace and correlation over different (n,m)");
  PartialTrace rounded(tau_exact.params());
  Rational worst = 0;
  for (const auto &[w, z] : tau_exact.values()) {
    Rational eps = eta / 4;
    for (int attempt = 0;; ++attempt) {
      if (attempt == 16)
        throw ParameterError("rationalize_pair could not certify a rounding of " + to_string(w));
      GaussianApprox g = cyclotomic_to_gaussian(z, eps);
      GaussianRational value = g.value;
      Rational bound = g.error;
      Rational q = norm2(value);
      if (q > 1) {
        // Pull back into the disc: |c g| <= 1 for c = 2/(q+1) since sqrt(q) <= (q+1)/2.
        GaussianRational pulled(value.re * 2 / (q + 1), value.im * 2 / (q + 1));
        bound += l1_bound(value - pulled);
        value = std::move(pulled);
      }
      if (bound < eta) {
        if (bound > worst)
          worst = bound;
        rounded.set(w, std::move(value));
        break;
      }
      eps /= 4;
    }
  }
  return {p_exact, std::move(rounded), worst};
}

} // namespace qcmod
