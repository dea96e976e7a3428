#pragma once

#include "qcmod/correlation.hpp"
#include "qcmod/group_ring.hpp"
#include "qcmod/spectral.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qcmod {

/// Candidate trace: a finite map from words to Gaussian rationals in the
/// closed unit disc, extended to Q(i)F(n,m) by linearity.
class PartialTrace {
public:
  explicit PartialTrace(GroupParams params);
  /// Throws ParameterError for non-normal words or values outside the disc.
  PartialTrace(GroupParams params, std::map<Word, GaussianRational> values);

  const GroupParams &params() const { return params_; }
  const std::map<Word, GaussianRational> &values() const { return values_; }

  bool contains(const Word &w) const { return values_.count(w) != 0; }
  /// Throws DomainError naming the word when it is outside the domain.
  const GaussianRational &at(const Word &w) const;
  void set(const Word &w, GaussianRational value);

  GaussianRational evaluate(const GaussianElement &x) const;

  friend bool operator==(const PartialTrace &, const PartialTrace &) = default;

private:
  GroupParams params_;
  std::map<Word, GaussianRational> values_;
};

/// Exact trace values in Q(xi_L) for some L with m | L.
class CyclotomicTrace {
public:
  CyclotomicTrace(GroupParams params, int field_order);

  const GroupParams &params() const { return params_; }
  int field_order() const { return field_order_; }
  const std::map<Word, Cyclotomic> &values() const { return values_; }

  const Cyclotomic &at(const Word &w) const;
  void set(const Word &w, Cyclotomic value);

  /// Linear extension; coefficients of x are embedded into Q(xi_L).
  Cyclotomic evaluate(const CyclotomicElement &x) const;

private:
  GroupParams params_;
  int field_order_;
  std::map<Word, Cyclotomic> values_;
};

// ---------------------------------------------------------------------------
// The requirement list R_1, R_2, ...
//
// Odd l: positivity of the ((l+1)/2)-th formal Q(i)-combination of word
// indices. Formal combinations are ordered by height H = max(support size,
// largest word index, largest coefficient height), then by support size,
// then by the sorted index tuple, then lexicographically by coefficients in
// the canonical Gaussian order.
// Even l: class-function constraint for the (l/2)-th pair (lambda, gamma)
// of word indices under the inverse Cantor pairing.
// Word indices refer to enumerate_words, so the list does not depend on
// (n,m).
// ---------------------------------------------------------------------------

struct FormalTerm {
  std::uint64_t word_index = 0;
  GaussianRational coeff;
  friend bool operator==(const FormalTerm &, const FormalTerm &) = default;
};

struct PositivityRequirement {
  std::vector<FormalTerm> terms;
  friend bool operator==(const PositivityRequirement &, const PositivityRequirement &) = default;
};

struct ClassRequirement {
  std::uint64_t lambda_index = 0;
  std::uint64_t gamma_index = 0;
  friend bool operator==(const ClassRequirement &, const ClassRequirement &) = default;
};

struct Requirement {
  std::uint64_t index = 1;
  std::variant<PositivityRequirement, ClassRequirement> kind;

  bool is_positivity() const { return std::holds_alternative<PositivityRequirement>(kind); }
  friend bool operator==(const Requirement &, const Requirement &) = default;
};

/// position-th formal combination (0-based) of the canonical order.
std::vector<FormalTerm> formal_element(std::uint64_t position);

/// Inverse Cantor pairing: q -> (a, b) with q = (a+b)(a+b+1)/2 + b.
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t q);

Requirement requirement(std::uint64_t l);

/// sum |re| + |im| over the coefficients of a positivity requirement.
Rational coefficient_weight(const PositivityRequirement &r);

struct CheckResult {
  bool pass = true;
  std::string reason;
  explicit operator bool() const { return pass; }
};

struct ApproximateReport {
  bool pass = true;
  std::vector<std::uint64_t> failures;
};

/// R_1..R_k compiled for one group: the words each requirement reads and
/// the coefficients of its Hermitian or class-function sum.
class RequirementSet {
public:
  RequirementSet(int k, GroupParams params);

  int k() const { return k_; }
  const GroupParams &params() const { return params_; }
  const std::vector<Requirement> &requirements() const { return requirements_; }
  /// Every word at which R_1..R_k read tau, canonical order.
  const std::vector<Word> &words() const { return words_; }

  /// Relaxed R_l at level `level` (defaults to k). 1 <= l <= k.
  CheckResult check(const PartialTrace &tau, std::uint64_t l, int level) const;
  ApproximateReport check_all(const PartialTrace &tau) const;

private:
  struct Compiled {
    bool positivity = true;
    // positivity: z = sum coeff * tau(word)
    std::vector<std::pair<Word, GaussianRational>> sum;
    // class function: |tau(conjugate) - tau(word)|
    Word conjugate;
    Word word;
  };

  int k_;
  GroupParams params_;
  std::vector<Requirement> requirements_;
  std::vector<Compiled> compiled_;
  std::vector<Word> words_;
};

/// Words evaluated by R_1..R_k plus the supports of s_{v,w,i,j,k}.
std::vector<Word> required_support(int k, const GroupParams &params);

CheckResult check_relaxed(const PartialTrace &tau, std::uint64_t l, int k);
ApproximateReport is_k_approximate(const PartialTrace &tau, int k);

struct DeltaBound {
  int k = 1;
  Rational delta;
};

/// delta(k) = (1/(2k)) / max(2, max B_l^2) over positivity R_l, l <= k.
DeltaBound delta_for_k(int k);

/// tau(e) = 1, tau(w) = 0 otherwise.
PartialTrace regular_trace(const GroupParams &params, const std::vector<Word> &support);

/// One-dimensional character u_v -> xi_m^{f(v)}, exact in Q(xi_m).
CyclotomicTrace character_trace(const AnswerFunction &f, const GroupParams &params,
                                const std::vector<Word> &support);

/// p(i,j|v,w) = tau(e_{v,i} e_{w,j}), exact. Throws NotATraceError when an
/// entry is irrational or outside [0,1].
Correlation correlation_from_trace(const PartialTrace &tau);
Correlation correlation_from_trace(const CyclotomicTrace &tau);

struct AdaptedReport {
  bool pass = true;
  std::vector<EntryKey> failures;
};

/// |p(i,j|v,w) - tau(s_{v,w,i,j,k})| < 1/k for every entry, exactly.
AdaptedReport is_k_adapted(const PartialTrace &tau, const Correlation &p, int k);
/// Same with a precomputed approx_product_table(k, params).
AdaptedReport is_k_adapted(const PartialTrace &tau, const Correlation &p,
                           const std::vector<CertifiedApprox> &s_table, int k);

struct RationalizedPair {
  Correlation p;
  PartialTrace tau;
  /// Certified bound on sup_w |tau(w) - tau'(w)|.
  Rational trace_distance;
};

/// Rounds an exact trace into the disc over Q(i) within eta (certified);
/// p is already rational and passes through unchanged.
RationalizedPair rationalize_pair(const CyclotomicTrace &tau_exact, const Correlation &p_exact,
                                  const Rational &eta);

} // namespace qcmod
