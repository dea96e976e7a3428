#pragma once

#include "qcmod/rational.hpp"

#include <vector>

namespace qcmod {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// minimize objective . x  subject to  rows[r] . x (relation) rhs[r], x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Relation> relations;
  std::vector<Rational> rhs;

  void add_row(std::vector<Rational> row, Relation rel, Rational b) {
    rows.push_back(std::move(row));
    relations.push_back(rel);
    rhs.push_back(std::move(b));
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Exact two-phase simplex over the rationals with Bland's rule.
LpSolution solve_lp(const LinearProgram &lp);

} // namespace qcmod
