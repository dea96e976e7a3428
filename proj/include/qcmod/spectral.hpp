#pragma once

#include "qcmod/group_ring.hpp"

#include <vector>

namespace qcmod {

/// e_{v,i}: projection onto the xi_m^i eigenspace of u_v,
///   e_{v,i} = (1/m) sum_{j=1..m} xi_m^{-ij} u_v^j.
/// i = m is the eigenvalue-1 projection.
CyclotomicElement projection(int v, int i, const GroupParams &params);

/// e_{v,i} e_{w,j}, exact in Q(xi_m)F(n,m).
CyclotomicElement projection_product(int v, int i, int w, int j, const GroupParams &params);

/// Gaussian-rational approximant of e_{v,i} e_{w,j} together with a
/// certified bound on the l1-type distance to the exact product.
struct CertifiedApprox {
  GaussianElement value;
  Rational error_bound;
  int k = 1;
};

/// The computable approximant s_{v,w,i,j,k}: every coefficient of the exact
/// product is rounded into Q(i) with a budget 1/(2kN) (N nonzero terms), so
/// error_bound < 1/(2k). Deterministic.
CertifiedApprox approx_product_s(int v, int w, int i, int j, int k, const GroupParams &params);

/// Row-major position of (v,w,i,j) among the n^2 m^2 correlation slots.
std::size_t entry_index(const GroupParams &params, int v, int w, int i, int j);

struct EntryKey {
  int v, w, i, j;
  friend bool operator==(const EntryKey &, const EntryKey &) = default;
};

EntryKey entry_key(const GroupParams &params, std::size_t index);

/// approx_product_s for every (v,w,i,j), in entry_index order.
std::vector<CertifiedApprox> approx_product_table(int k, const GroupParams &params);

} // namespace qcmod
