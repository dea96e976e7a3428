#include "qcmod/correlation.hpp"

#include "qcmod/errors.hpp"
#include "qcmod/spectral.hpp"

namespace qcmod {

namespace {

void check_entry(const Rational &x) {
  if (sgn(x) < 0 || x > 1)
    throw ParameterError("correlation entry " + to_string(x) + " outside [0,1]");
}

} // namespace

Correlation::Correlation(GroupParams params) : params_(params) {
  validate(params_);
  entries_.assign(std::size_t(params.n * params.n * params.m * params.m), 0);
}

Correlation::Correlation(GroupParams params, std::vector<Rational> entries)
    : params_(params), entries_(std::move(entries)) {
  validate(params_);
  if (entries_.size() != std::size_t(params.n * params.n * params.m * params.m))
    throw ParameterError("correlation needs n^2 m^2 = " +
                         std::to_string(params.n * params.n * params.m * params.m) + " entries, got " +
                         std::to_string(entries_.size()));
  for (const auto &x : entries_)
    check_entry(x);
}

const Rational &Correlation::operator()(int v, int w, int i, int j) const {
  return entries_[entry_index(params_, v, w, i, j)];
}

void Correlation::set(int v, int w, int i, int j, Rational value) {
  check_entry(value);
  entries_[entry_index(params_, v, w, i, j)] = std::move(value);
}

} // namespace qcmod
