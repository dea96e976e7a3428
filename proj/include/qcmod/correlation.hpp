#pragma once

#include "qcmod/group.hpp"
#include "qcmod/rational.hpp"

#include <vector>

namespace qcmod {

/// A function f: [n] -> [m], stored as f[v-1].
using AnswerFunction = std::vector<int>;

/// p(i,j|v,w) for v,w in [n], i,j in [m]; entries are rationals in [0,1],
/// stored densely in row-major (v,w,i,j) order.
class Correlation {
public:
  /// All-zero correlation.
  explicit Correlation(GroupParams params);
  /// Throws ParameterError on wrong size or entries outside [0,1].
  Correlation(GroupParams params, std::vector<Rational> entries);

  const GroupParams &params() const { return params_; }
  const std::vector<Rational> &entries() const { return entries_; }

  const Rational &operator()(int v, int w, int i, int j) const;
  void set(int v, int w, int i, int j, Rational value);

  friend bool operator==(const Correlation &, const Correlation &) = default;

private:
  GroupParams params_;
  std::vector<Rational> entries_;
};

} // namespace qcmod
