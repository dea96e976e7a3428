#include "qcmod/lp.hpp"

#include "qcmod/errors.hpp"

namespace qcmod {

namespace {

class Tableau {
public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols + 1, 0)), cost_(cols + 1, 0), basis_(rows, 0) {}

  std::vector<Rational> &row(std::size_t r) { return a_[r]; }
  std::vector<Rational> &cost() { return cost_; }
  std::vector<std::size_t> &basis() { return basis_; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cost_.size() - 1; }
  const Rational &rhs(std::size_t r) const { return a_[r].back(); }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = a_[r][c];
    for (auto &x : a_[r])
      x /= p;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (i != r && sgn(a_[i][c]) != 0)
        eliminate(a_[i], a_[r], c);
    if (sgn(cost_[c]) != 0)
      eliminate(cost_, a_[r], c);
    basis_[r] = c;
  }

  // Minimizes over columns with allowed[c]; false when unbounded.
  bool optimize(const std::vector<bool> &allowed) {
    for (;;) {
      std::size_t enter = cols();
      for (std::size_t c = 0; c < cols(); ++c)
        if (allowed[c] && sgn(cost_[c]) < 0) {
          enter = c;
          break;
        }
      if (enter == cols())
        return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (sgn(a_[r][enter]) <= 0)
          continue;
        Rational ratio = a_[r].back() / a_[r][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows())
        return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + std::ptrdiff_t(r));
    basis_.erase(basis_.begin() + std::ptrdiff_t(r));
  }

private:
  static void eliminate(std::vector<Rational> &target, const std::vector<Rational> &pivot_row,
                        std::size_t c) {
    Rational f = target[c];
    for (std::size_t j = 0; j < target.size(); ++j)
      if (sgn(pivot_row[j]) != 0)
        target[j] -= f * pivot_row[j];
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> cost_; // reduced costs; last entry is -objective value
  std::vector<std::size_t> basis_;
};

} // namespace

LpSolution solve_lp(const LinearProgram &lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rows.size();
  if (lp.relations.size() != m || lp.rhs.size() != m)
    throw ParameterError("linear program has inconsistent row data");
  for (const auto &row : lp.rows)
    if (row.size() != n)
      throw ParameterError("linear program row has the wrong width");

  // Columns: originals, one slack/surplus per inequality, one artificial per row.
  std::size_t inequalities = 0;
  for (auto rel : lp.relations)
    inequalities += rel != Relation::Equal;
  const std::size_t first_slack = n;
  const std::size_t first_art = n + inequalities;
  const std::size_t cols = first_art + m;
  Tableau t(m, cols);

  std::size_t slack = first_slack;
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sgn(lp.rhs[r]) < 0;
    auto &row = t.row(r);
    for (std::size_t j = 0; j < n; ++j)
      row[j] = flip ? Rational(-lp.rows[r][j]) : lp.rows[r][j];
    row.back() = flip ? Rational(-lp.rhs[r]) : lp.rhs[r];
    if (lp.relations[r] != Relation::Equal) {
      bool le = lp.relations[r] == Relation::LessEqual;
      row[slack++] = (le != flip) ? 1 : -1;
    }
    row[first_art + r] = 1;
    t.basis()[r] = first_art + r;
  }

  // Phase 1: minimize the sum of artificials.
  auto &cost = t.cost();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < first_art || j == cols)
        cost[j] -= t.row(r)[j];
  std::vector<bool> allowed(cols, true);
  t.optimize(allowed);
  if (sgn(cost.back()) != 0)
    return {LpStatus::Infeasible, 0, {}};

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t r = t.rows(); r-- > 0;) {
    if (t.basis()[r] < first_art)
      continue;
    std::size_t c = 0;
    while (c < first_art && sgn(t.row(r)[c]) == 0)
      ++c;
    if (c < first_art)
      t.pivot(r, c);
    else
      t.drop_row(r);
  }

  // Phase 2.
  for (std::size_t j = 0; j <= cols; ++j)
    cost[j] = j < n ? lp.objective[j] : Rational(0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::size_t b = t.basis()[r];
    if (sgn(cost[b]) == 0)
      continue;
    Rational f = cost[b];
    for (std::size_t j = 0; j <= cols; ++j)
      cost[j] -= f * t.row(r)[j];
  }
  for (std::size_t j = first_art; j < cols; ++j)
    allowed[j] = false;
  if (!t.optimize(allowed))
    return {LpStatus::Unbounded, 0, {}};

  LpSolution sol{LpStatus::Optimal, -cost.back(), std::vector<Rational>(n, 0)};
  for (std::size_t r = 0; r < t.rows(); ++r)
    if (t.basis()[r] < n)
      sol.x[t.basis()[r]] = t.rhs(r);
  return sol;
}

} // namespace qcmod
