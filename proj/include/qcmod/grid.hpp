#pragma once

#include "qcmod/rational.hpp"

#include <cstdint>
#include <vector>

namespace qcmod {

/// Rationals of height <= h ordered by (height, |x|, positive before
/// negative). 0 comes first. Values of height exactly h form the tail.
std::vector<Rational> canonical_rationals(unsigned h);

/// canonical_rationals(h) restricted to [0,1]: 0, 1, 1/2, 1/3, 2/3, ...
std::vector<Rational> canonical_unit_interval(unsigned h);

/// Gaussian rationals of height <= h ordered by (height, im, re), with the
/// parts compared in the canonical rational order. 0, 1, -1, i, -i, ...
std::vector<GaussianRational> canonical_gaussians(unsigned h);

/// canonical_gaussians(h) restricted to the closed unit disc.
std::vector<GaussianRational> canonical_disc(unsigned h);

/// canonical_gaussians(h) without 0.
std::vector<GaussianRational> canonical_nonzero_gaussians(unsigned h);

/// Ranks and unranks tuples in lexicographic order (slot 0 most
/// significant) where slot s takes values 0..sizes[s]-1. When `require_top`
/// is set, only tuples with at least one digit >= lower[s] (a "top" value)
/// are counted; these are the tuples of height exactly h when alphabets are
/// height-sorted and lower[s] counts the values of height < h.
class LayerIndexer {
public:
  LayerIndexer(std::vector<std::size_t> sizes, std::vector<std::size_t> lower, bool require_top);

  const Integer &count() const { return count_; }
  std::vector<std::size_t> unrank(Integer rank) const;
  Integer rank(const std::vector<std::size_t> &digits) const;

  std::size_t slots() const { return sizes_.size(); }
  const std::vector<std::size_t> &sizes() const { return sizes_; }
  const std::vector<std::size_t> &lower() const { return lower_; }
  bool require_top() const { return require_top_; }

private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> lower_;
  bool require_top_;
  std::vector<Integer> all_suffix_;   // prod_{t >= s} sizes[t]
  std::vector<Integer> lower_suffix_; // prod_{t >= s} lower[t]
  Integer count_;
};

} // namespace qcmod
