#pragma once

#include "qcmod/correlation.hpp"

#include <cstdint>
#include <vector>

namespace qcmod {

/// Nonlocal game (mu, D) with n questions and m answers. mu is a rational
/// probability distribution on [n] x [n]; D is a dense 0/1 table.
class NonlocalGame {
public:
  /// Throws ParameterError unless mu >= 0, sum(mu) = 1 and sizes match.
  NonlocalGame(GroupParams params, std::vector<Rational> mu, std::vector<std::uint8_t> accept);

  const GroupParams &params() const { return params_; }
  const Rational &mu(int v, int w) const;
  bool accepts(int v, int w, int i, int j) const;

  const std::vector<Rational> &mu_table() const { return mu_; }
  const std::vector<std::uint8_t> &accept_table() const { return accept_; }

  friend bool operator==(const NonlocalGame &, const NonlocalGame &) = default;

private:
  GroupParams params_;
  std::vector<Rational> mu_;          // (v,w) row-major
  std::vector<std::uint8_t> accept_;  // (v,w,i,j) row-major
};

/// val(G, p) = sum_{v,w} mu(v,w) sum_{i,j} D(v,w,i,j) p(i,j|v,w), exact.
Rational game_value(const NonlocalGame &game, const Correlation &p);

/// p(i,j|v,v) = 0 for all v and all i != j.
bool is_synchronous(const Correlation &p);

/// p(i,j|v,w) = [f(v) = i][f(w) = j].
Correlation deterministic_correlation(const AnswerFunction &f, const GroupParams &params);

struct ClassicalValue {
  Rational value;
  AnswerFunction witness;
};

/// Maximum of game_value over deterministic synchronous strategies, with the
/// lexicographically least maximizing f. Requires m^n <= 10^6.
ClassicalValue classical_sync_value(const NonlocalGame &game);

/// mu uniform on the diagonal, D(v,v,i,j) = [i = j].
NonlocalGame mirror_game(const GroupParams &params);
/// mu uniform on the diagonal, D(v,v,i,j) = [i != j].
NonlocalGame antimirror_game(const GroupParams &params);

/// Calls visit(f) for every f: [n] -> [m] in lexicographic order. Throws
/// ParameterError if m^n exceeds `limit`.
template <class Visit>
void for_each_answer_function(const GroupParams &params, std::uint64_t limit, Visit &&visit);

std::uint64_t answer_function_count(const GroupParams &params, std::uint64_t limit);

template <class Visit>
void for_each_answer_function(const GroupParams &params, std::uint64_t limit, Visit &&visit) {
  answer_function_count(params, limit);
  AnswerFunction f(std::size_t(params.n), 1);
  for (;;) {
    visit(static_cast<const AnswerFunction &>(f));
    int pos = params.n - 1;
    while (pos >= 0 && f[std::size_t(pos)] == params.m) {
      f[std::size_t(pos)] = 1;
      --pos;
    }
    if (pos < 0)
      return;
    ++f[std::size_t(pos)];
  }
}

} // namespace qcmod
