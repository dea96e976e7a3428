#include "qcmod/grid.hpp"

#include "qcmod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace qcmod {

namespace {

struct RationalKey {
  Integer height;
  Rational magnitude;
  bool negative;

  bool operator<(const RationalKey &o) const {
    if (height != o.height)
      return height < o.height;
    if (magnitude != o.magnitude)
      return magnitude < o.magnitude;
    return negative < o.negative;
  }
};

RationalKey key(const Rational &x) { return {height(x), abs(x), sgn(x) < 0}; }

bool gaussian_less(const GaussianRational &a, const GaussianRational &b) {
  Integer ha = height(a), hb = height(b);
  if (ha != hb)
    return ha < hb;
  RationalKey ia = key(a.im), ib = key(b.im);
  if (ia < ib)
    return true;
  if (ib < ia)
    return false;
  return key(a.re) < key(b.re);
}

} // namespace

std::vector<Rational> canonical_rationals(unsigned h) {
  std::vector<Rational> out;
  if (h == 0)
    return out;
  const long H = long(h);
  for (long den = 1; den <= H; ++den)
    for (long num = -H; num <= H; ++num) {
      if (std::gcd(num, den) != 1)
        continue;
      out.emplace_back(num, den);
    }
  std::sort(out.begin(), out.end(), [](const Rational &a, const Rational &b) { return key(a) < key(b); });
  return out;
}

std::vector<Rational> canonical_unit_interval(unsigned h) {
  auto all = canonical_rationals(h);
  std::vector<Rational> out;
  for (auto &x : all)
    if (sgn(x) >= 0 && x <= 1)
      out.push_back(std::move(x));
  return out;
}

std::vector<GaussianRational> canonical_gaussians(unsigned h) {
  auto parts = canonical_rationals(h);
  std::vector<GaussianRational> out;
  out.reserve(parts.size() * parts.size());
  for (const auto &im : parts)
    for (const auto &re : parts)
      out.emplace_back(re, im);
  std::sort(out.begin(), out.end(), gaussian_less);
  return out;
}

std::vector<GaussianRational> canonical_disc(unsigned h) {
  auto all = canonical_gaussians(h);
  std::vector<GaussianRational> out;
  for (auto &z : all)
    if (in_unit_disc(z))
      out.push_back(std::move(z));
  return out;
}

std::vector<GaussianRational> canonical_nonzero_gaussians(unsigned h) {
  auto all = canonical_gaussians(h);
  std::vector<GaussianRational> out;
  for (auto &z : all)
    if (!is_zero(z))
      out.push_back(std::move(z));
  return out;
}

LayerIndexer::LayerIndexer(std::vector<std::size_t> sizes, std::vector<std::size_t> lower,
                           bool require_top)
    : sizes_(std::move(sizes)), lower_(std::move(lower)), require_top_(require_top) {
  if (sizes_.size() != lower_.size())
    throw ParameterError("LayerIndexer: sizes and lower bounds differ in length");
  const std::size_t n = sizes_.size();
  all_suffix_.assign(n + 1, 1);
  lower_suffix_.assign(n + 1, 1);
  for (std::size_t s = n; s-- > 0;) {
    if (lower_[s] > sizes_[s])
      throw ParameterError("LayerIndexer: lower count exceeds alphabet size");
    all_suffix_[s] = all_suffix_[s + 1] * static_cast<unsigned long>(sizes_[s]);
    lower_suffix_[s] = lower_suffix_[s + 1] * static_cast<unsigned long>(lower_[s]);
  }
  count_ = require_top_ ? Integer(all_suffix_[0] - lower_suffix_[0]) : all_suffix_[0];
}

std::vector<std::size_t> LayerIndexer::unrank(Integer rank) const {
  if (rank < 0 || rank >= count_)
    throw ParameterError("LayerIndexer: rank out of range");
  std::vector<std::size_t> digits(sizes_.size());
  bool has_top = !require_top_;
  for (std::size_t s = 0; s < sizes_.size(); ++s) {
    const Integer &full = all_suffix_[s + 1];
    if (has_top) {
      Integer d = rank / full;
      digits[s] = d.get_ui();
      rank -= d * full;
      continue;
    }
    // Digits below lower[s] leave the top requirement to the suffix.
    Integer constrained = full - lower_suffix_[s + 1];
    Integer below = constrained * static_cast<unsigned long>(lower_[s]);
    if (rank < below) {
      Integer d = rank / constrained;
      digits[s] = d.get_ui();
      rank -= d * constrained;
    } else {
      rank -= below;
      Integer d = rank / full;
      digits[s] = lower_[s] + d.get_ui();
      rank -= d * full;
      has_top = true;
    }
  }
  return digits;
}

Integer LayerIndexer::rank(const std::vector<std::size_t> &digits) const {
  if (digits.size() != sizes_.size())
    throw ParameterError("LayerIndexer: wrong number of digits");
  Integer r = 0;
  bool has_top = !require_top_;
  for (std::size_t s = 0; s < sizes_.size(); ++s) {
    const std::size_t d = digits[s];
    if (d >= sizes_[s])
      throw ParameterError("LayerIndexer: digit out of range");
    const Integer &full = all_suffix_[s + 1];
    if (has_top) {
      r += full * static_cast<unsigned long>(d);
      continue;
    }
    Integer constrained = full - lower_suffix_[s + 1];
    if (d < lower_[s]) {
      r += constrained * static_cast<unsigned long>(d);
    } else {
      r += constrained * static_cast<unsigned long>(lower_[s]);
      r += full * static_cast<unsigned long>(d - lower_[s]);
      has_top = true;
    }
  }
  if (!has_top)
    throw ParameterError("LayerIndexer: tuple has no top-height value");
  return r;
}

} // namespace qcmod
