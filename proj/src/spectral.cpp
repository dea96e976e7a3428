#include "qcmod/spectral.hpp"

#include "qcmod/errors.hpp"

namespace qcmod {

namespace {

void check_index(int v, int i, const GroupParams &params) {
  validate(params);
  if (v < 1 || v > params.n)
    throw ParameterError("question index " + std::to_string(v) + " outside [1," +
                         std::to_string(params.n) + "]");
  if (i < 1 || i > params.m)
    throw ParameterError("answer index " + std::to_string(i) + " outside [1," +
                         std::to_string(params.m) + "]");
}

} // namespace

CyclotomicElement projection(int v, int i, const GroupParams &params) {
  check_index(v, i, params);
  const int m = params.m;
  CyclotomicElement out(params);
  const Rational inv_m(1, m);
  for (int j = 1; j <= m; ++j) {
    Cyclotomic c = Cyclotomic::root_power(m, -static_cast<long long>(i) * j) * inv_m;
    out.add_term(generator_power(v, j, params), c);
  }
  return out;
}

CyclotomicElement projection_product(int v, int i, int w, int j, const GroupParams &params) {
  check_index(v, i, params);
  check_index(w, j, params);
  if (v == w && i != j)
    return CyclotomicElement(params);
  if (v == w)
    return projection(v, i, params);
  return projection(v, i, params) * projection(w, j, params);
}

CertifiedApprox approx_product_s(int v, int w, int i, int j, int k, const GroupParams &params) {
  if (k < 1)
    throw ParameterError("approx_product_s needs k >= 1, got " + std::to_string(k));
  CyclotomicElement exact = projection_product(v, i, w, j, params);
  CertifiedApprox out{GaussianElement(params), Rational(0), k};
  if (exact.is_zero())
    return out;
  const Rational budget(1, 2 * static_cast<long>(k) * static_cast<long>(exact.terms().size()));
  for (const auto &[word, coeff] : exact.terms()) {
    GaussianApprox g = cyclotomic_to_gaussian(coeff, budget);
    out.value.add_term(word, g.value);
    out.error_bound += g.error;
  }
  return out;
}

std::size_t entry_index(const GroupParams &params, int v, int w, int i, int j) {
  check_index(v, i, params);
  check_index(w, j, params);
  const std::size_t n = std::size_t(params.n), m = std::size_t(params.m);
  return ((std::size_t(v - 1) * n + std::size_t(w - 1)) * m + std::size_t(i - 1)) * m +
         std::size_t(j - 1);
}

EntryKey entry_key(const GroupParams &params, std::size_t index) {
  const std::size_t n = std::size_t(params.n), m = std::size_t(params.m);
  if (index >= n * n * m * m)
    throw ParameterError("correlation slot " + std::to_string(index) + " out of range");
  int j = int(index % m) + 1;
  index /= m;
  int i = int(index % m) + 1;
  index /= m;
  int w = int(index % n) + 1;
  int v = int(index / n) + 1;
  return {v, w, i, j};
}

std::vector<CertifiedApprox> approx_product_table(int k, const GroupParams &params) {
  validate(params);
  const std::size_t slots = std::size_t(params.n * params.n * params.m * params.m);
  std::vector<CertifiedApprox> table;
  table.reserve(slots);
  for (std::size_t e = 0; e < slots; ++e) {
    auto [v, w, i, j] = entry_key(params, e);
    table.push_back(approx_product_s(v, w, i, j, k, params));
  }
  return table;
}

} // namespace qcmod
