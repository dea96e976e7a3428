#pragma once

#include "qcmod/correlation.hpp"
#include "qcmod/grid.hpp"
#include "qcmod/trace.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

namespace qcmod {

/// One point of the candidate grid: a rational correlation together with a
/// witness trace on required_support(k).
struct Candidate {
  Integer index;
  int k = 1;
  unsigned height = 1;
  Correlation p;
  PartialTrace tau;
};

/// Checks membership witnesses for X^{n,m}_k: tau is a k-approximate trace
/// and k-adapted to p. Precompiles the requirements and the approximants.
class MembershipChecker {
public:
  MembershipChecker(GroupParams params, int k);

  const GroupParams &params() const { return params_; }
  int k() const { return k_; }
  const RequirementSet &requirements() const { return requirements_; }
  const std::vector<CertifiedApprox> &approximants() const { return s_table_; }
  const std::vector<Word> &support() const { return support_; }

  /// Throws DomainError when tau misses a word of required_support(k).
  bool operator()(const Correlation &p, const PartialTrace &tau) const;

private:
  GroupParams params_;
  int k_;
  RequirementSet requirements_;
  std::vector<CertifiedApprox> s_table_;
  std::vector<Word> support_;
};

bool is_member_witnessed(const Correlation &p, const PartialTrace &tau, int k);

/// The candidate grid for (n,m,k): n^2 m^2 correlation slots (values in
/// [0,1]) followed by one trace slot per word of required_support(k)
/// (values in the closed unit disc). Candidate l is decoded by height
/// (layer h holds assignments whose largest height is exactly h) and then
/// lexicographically with slot 0 most significant, using the canonical
/// value orders of grid.hpp.
class CandidateSpace {
public:
  struct Layer {
    unsigned height;
    std::vector<Rational> p_values;          // canonical_unit_interval(height)
    std::size_t p_lower;                     // values of height < height
    std::vector<GaussianRational> t_values;  // canonical_disc(height)
    std::size_t t_lower;
    LayerIndexer indexer;
    Integer first_index;
  };

  /// Scan memo for one layer; owned by the space so repeated scans reuse it.
  class TraceTable;

  CandidateSpace(GroupParams params, int k);
  ~CandidateSpace();

  const GroupParams &params() const { return checker_.params(); }
  int k() const { return checker_.k(); }
  const MembershipChecker &checker() const { return checker_; }
  const std::vector<Word> &trace_words() const { return checker_.support(); }
  std::size_t correlation_slots() const;
  std::size_t trace_slots() const { return trace_words().size(); }

  /// Number of assignments with every value of height <= h.
  Integer grid_size(unsigned h) const;

  const Layer &layer(unsigned h) const;
  const Layer &layer_containing(const Integer &index) const;

  Candidate decode(const Integer &index) const;
  Candidate from_digits(const Layer &layer, const std::vector<std::size_t> &digits,
                        const Integer &index) const;
  /// Index of (p, tau); tau must be defined exactly on trace_words().
  Integer index_of(const Correlation &p, const PartialTrace &tau) const;

  /// Concurrent scans of one space must be serialized by the caller.
  TraceTable &trace_table(const Layer &layer) const;

private:
  MembershipChecker checker_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Layer>> layers_;
  mutable std::vector<std::unique_ptr<TraceTable>> tables_;
};

Candidate decode_candidate(const Integer &index, int k, const GroupParams &params);

struct ScanResult {
  Integer next_index;          // first index not examined
  std::uint64_t examined = 0;
  std::uint64_t emitted = 0;
  bool stopped = false;        // the sink asked to stop
};

/// Return false to stop the scan after the current candidate.
using CandidateSink = std::function<bool(const Candidate &)>;

/// Examines indices from, from+1, ..., from+budget-1 in order and passes
/// every member of X^{n,m}_k to the sink. Resumable from next_index.
ScanResult enumerate_X(const CandidateSpace &space, const Integer &from, std::uint64_t budget,
                       const CandidateSink &sink);

/// Convenience wrapper collecting the emitted candidates.
std::vector<Candidate> enumerate_X(const GroupParams &params, int k, const Integer &from,
                                   std::uint64_t budget);

} // namespace qcmod
