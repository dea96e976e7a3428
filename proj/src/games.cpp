#include "qcmod/games.hpp"

#include "qcmod/errors.hpp"
#include "qcmod/spectral.hpp"

namespace qcmod {

NonlocalGame::NonlocalGame(GroupParams params, std::vector<Rational> mu,
                           std::vector<std::uint8_t> accept)
    : params_(params), mu_(std::move(mu)), accept_(std::move(accept)) {
  validate(params_);
  const std::size_t n = std::size_t(params.n), m = std::size_t(params.m);
  if (mu_.size() != n * n)
    throw ParameterError("mu needs n^2 entries");
  if (accept_.size() != n * n * m * m)
    throw ParameterError("predicate table needs n^2 m^2 entries");
  Rational total = 0;
  for (const auto &x : mu_) {
    if (sgn(x) < 0)
      throw ParameterError("mu has a negative entry " + to_string(x));
    total += x;
  }
  if (total != 1)
    throw ParameterError("mu sums to " + to_string(total) + ", not 1");
  for (auto &d : accept_)
    if (d > 1)
      throw ParameterError("predicate entries must be 0 or 1");
}

const Rational &NonlocalGame::mu(int v, int w) const {
  if (v < 1 || v > params_.n || w < 1 || w > params_.n)
    throw ParameterError("question pair out of range");
  return mu_[std::size_t(v - 1) * std::size_t(params_.n) + std::size_t(w - 1)];
}

bool NonlocalGame::accepts(int v, int w, int i, int j) const {
  return accept_[entry_index(params_, v, w, i, j)] != 0;
}

Rational game_value(const NonlocalGame &game, const Correlation &p) {
  if (!(game.params() == p.params()))
    throw ParameterError("game and correlation have different (n,m)");
  const auto &params = game.params();
  Rational total = 0;
  for (int v = 1; v <= params.n; ++v)
    for (int w = 1; w <= params.n; ++w) {
      const Rational &weight = game.mu(v, w);
      if (sgn(weight) == 0)
        continue;
      Rational inner = 0;
      for (int i = 1; i <= params.m; ++i)
        for (int j = 1; j <= params.m; ++j)
          if (game.accepts(v, w, i, j))
            inner += p(v, w, i, j);
      total += weight * inner;
    }
  return total;
}

bool is_synchronous(const Correlation &p) {
  const auto &params = p.params();
  for (int v = 1; v <= params.n; ++v)
    for (int i = 1; i <= params.m; ++i)
      for (int j = 1; j <= params.m; ++j)
        if (i != j && sgn(p(v, v, i, j)) != 0)
          return false;
  return true;
}

Correlation deterministic_correlation(const AnswerFunction &f, const GroupParams &params) {
  validate(params);
  if (f.size() != std::size_t(params.n))
    throw ParameterError("answer function must be defined on all of [n]");
  for (int a : f)
    if (a < 1 || a > params.m)
      throw ParameterError("answer function value " + std::to_string(a) + " outside [1,m]");
  Correlation p(params);
  for (int v = 1; v <= params.n; ++v)
    for (int w = 1; w <= params.n; ++w)
      p.set(v, w, f[std::size_t(v - 1)], f[std::size_t(w - 1)], 1);
  return p;
}

std::uint64_t answer_function_count(const GroupParams &params, std::uint64_t limit) {
  validate(params);
  std::uint64_t count = 1;
  for (int v = 0; v < params.n; ++v) {
    count *= std::uint64_t(params.m);
    if (count > limit)
      throw ParameterError("m^n exceeds the brute-force limit " + std::to_string(limit));
  }
  return count;
}

ClassicalValue classical_sync_value(const NonlocalGame &game) {
  ClassicalValue best{Rational(-1), {}};
  for_each_answer_function(game.params(), 1'000'000, [&](const AnswerFunction &f) {
    Rational v = game_value(game, deterministic_correlation(f, game.params()));
    if (v > best.value)
      best = {v, f};
  });
  return best;
}

namespace {

NonlocalGame diagonal_game(const GroupParams &params, bool equal_answers) {
  validate(params);
  const std::size_t n = std::size_t(params.n), m = std::size_t(params.m);
  std::vector<Rational> mu(n * n, 0);
  std::vector<std::uint8_t> accept(n * n * m * m, 0);
  for (int v = 1; v <= params.n; ++v) {
    mu[std::size_t(v - 1) * n + std::size_t(v - 1)] = Rational(1, params.n);
    for (int i = 1; i <= params.m; ++i)
      for (int j = 1; j <= params.m; ++j)
        accept[entry_index(params, v, v, i, j)] = (i == j) == equal_answers ? 1 : 0;
  }
  return NonlocalGame(params, std::move(mu), std::move(accept));
}

} // namespace

NonlocalGame mirror_game(const GroupParams &params) { return diagonal_game(params, true); }

NonlocalGame antimirror_game(const GroupParams &params) { return diagonal_game(params, false); }

} // namespace qcmod
