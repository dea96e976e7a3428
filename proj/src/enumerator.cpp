#include "qcmod/enumerator.hpp"

#include "qcmod/errors.hpp"

#include <algorithm>
#include <set>
#include <span>

namespace qcmod {

// --- Membership --------------------------------------------------------------

MembershipChecker::MembershipChecker(GroupParams params, int k)
    : params_(params), k_(k), requirements_(k, params), s_table_(approx_product_table(k, params)) {
  std::set<Word> words(requirements_.words().begin(), requirements_.words().end());
  for (const auto &s : s_table_)
    for (const auto &[w, c] : s.value.terms())
      words.insert(w);
  support_.assign(words.begin(), words.end());
}

bool MembershipChecker::operator()(const Correlation &p, const PartialTrace &tau) const {
  if (!(p.params() == params_) || !(tau.params() == params_))
    throw ParameterError("membership check over a different F(n,m)");
  for (const auto &w : support_)
    if (!tau.contains(w))
      throw DomainError("witness trace is not defined at required word " + to_string(w));
  return requirements_.check_all(tau).pass && is_k_adapted(tau, p, s_table_, k_).pass;
}

bool is_member_witnessed(const Correlation &p, const PartialTrace &tau, int k) {
  return MembershipChecker(p.params(), k)(p, tau);
}

// --- Candidate grid ----------------------------------------------------------

CandidateSpace::CandidateSpace(GroupParams params, int k) : checker_(params, k) {}

std::size_t CandidateSpace::correlation_slots() const {
  const auto &p = params();
  return std::size_t(p.n * p.n * p.m * p.m);
}

Integer CandidateSpace::grid_size(unsigned h) const {
  Integer a = static_cast<unsigned long>(canonical_unit_interval(h).size());
  Integer b = static_cast<unsigned long>(canonical_disc(h).size());
  Integer out = 1;
  for (std::size_t s = 0; s < correlation_slots(); ++s)
    out *= a;
  for (std::size_t s = 0; s < trace_slots(); ++s)
    out *= b;
  return out;
}

const CandidateSpace::Layer &CandidateSpace::layer(unsigned h) const {
  if (h < 1)
    throw ParameterError("candidate heights start at 1");
  std::lock_guard lock(mutex_);
  while (layers_.size() < h) {
    const unsigned height = unsigned(layers_.size()) + 1;
    auto p_values = canonical_unit_interval(height);
    auto t_values = canonical_disc(height);
    const std::size_t p_lower = canonical_unit_interval(height - 1).size();
    const std::size_t t_lower = canonical_disc(height - 1).size();
    std::vector<std::size_t> sizes, lower;
    for (std::size_t s = 0; s < correlation_slots(); ++s) {
      sizes.push_back(p_values.size());
      lower.push_back(p_lower);
    }
    for (std::size_t s = 0; s < trace_slots(); ++s) {
      sizes.push_back(t_values.size());
      lower.push_back(t_lower);
    }
    Integer first = 0;
    if (!layers_.empty())
      first = layers_.back()->first_index + layers_.back()->indexer.count();
    layers_.push_back(std::make_unique<Layer>(Layer{
        height, std::move(p_values), p_lower, std::move(t_values), t_lower,
        LayerIndexer(std::move(sizes), std::move(lower), true), first}));
  }
  return *layers_[h - 1];
}

const CandidateSpace::Layer &CandidateSpace::layer_containing(const Integer &index) const {
  if (index < 0)
    throw ParameterError("candidate indices are nonnegative");
  for (unsigned h = 1;; ++h) {
    const Layer &L = layer(h);
    if (index < L.first_index + L.indexer.count())
      return L;
  }
}

Candidate CandidateSpace::from_digits(const Layer &L, const std::vector<std::size_t> &digits,
                                      const Integer &index) const {
  const std::size_t P = correlation_slots();
  std::vector<Rational> entries(P);
  for (std::size_t s = 0; s < P; ++s)
    entries[s] = L.p_values[digits[s]];
  PartialTrace tau(params());
  for (std::size_t s = 0; s < trace_slots(); ++s)
    tau.set(trace_words()[s], L.t_values[digits[P + s]]);
  return {index, k(), L.height, Correlation(params(), std::move(entries)), std::move(tau)};
}

Candidate CandidateSpace::decode(const Integer &index) const {
  const Layer &L = layer_containing(index);
  return from_digits(L, L.indexer.unrank(index - L.first_index), index);
}

Integer CandidateSpace::index_of(const Correlation &p, const PartialTrace &tau) const {
  if (!(p.params() == params()) || !(tau.params() == params()))
    throw ParameterError("candidate over a different F(n,m)");
  if (tau.values().size() != trace_slots())
    throw ParameterError("witness domain differs from required_support(k)");
  Integer h = 1;
  for (const auto &x : p.entries())
    h = std::max(h, height(x));
  for (const auto &w : trace_words())
    h = std::max(h, height(tau.at(w)));
  if (!h.fits_uint_p())
    throw ParameterError("candidate height out of range");
  const Layer &L = layer(unsigned(h.get_ui()));
  std::vector<std::size_t> digits;
  for (const auto &x : p.entries())
    digits.push_back(std::size_t(std::find(L.p_values.begin(), L.p_values.end(), x) - L.p_values.begin()));
  for (const auto &w : trace_words()) {
    const auto &z = tau.at(w);
    digits.push_back(std::size_t(std::find(L.t_values.begin(), L.t_values.end(), z) - L.t_values.begin()));
  }
  return L.first_index + L.indexer.rank(digits);
}

Candidate decode_candidate(const Integer &index, int k, const GroupParams &params) {
  return CandidateSpace(params, k).decode(index);
}

// --- Scanning ------------------------------------------------------------------

// Per-layer memo of everything that depends on the trace digits alone:
// whether R_1..R_k hold, and for each correlation slot the set of
// correlation values (as a bitmask over p_values) within 1/k of tau(s).
class CandidateSpace::TraceTable {
public:
  static constexpr std::uint64_t kMaxCached = std::uint64_t(1) << 22;

  TraceTable(const CandidateSpace &space, const CandidateSpace::Layer &layer)
      : space_(space), layer_(layer), slots_(space.correlation_slots()),
        words_per_mask_((layer.p_values.size() + 63) / 64) {
    Integer size = 1;
    for (std::size_t s = 0; s < space.trace_slots(); ++s)
      size *= static_cast<unsigned long>(layer.t_values.size());
    cached_ = size <= static_cast<unsigned long>(kMaxCached);
    if (cached_)
      slot_of_.assign(size.get_ui(), 0);
    else
      scratch_.resize(slots_ * words_per_mask_);
  }

  std::size_t words_per_mask() const { return words_per_mask_; }

  // Masks for the trace digits, or nullptr when tau fails R_1..R_k.
  const std::uint64_t *lookup(std::span<const std::size_t> t_digits) {
    if (!cached_)
      return compute(t_digits, scratch_.data()) ? scratch_.data() : nullptr;
    std::uint64_t key = 0;
    for (std::size_t d : t_digits)
      key = key * layer_.t_values.size() + d;
    const std::size_t stride = slots_ * words_per_mask_;
    std::uint32_t &slot = slot_of_[key];
    if (slot == 0) {
      std::size_t offset = pool_.size();
      pool_.resize(offset + stride);
      if (compute(t_digits, pool_.data() + offset)) {
        slot = std::uint32_t(offset / stride) + 2;
      } else {
        pool_.resize(offset);
        slot = 1;
      }
    }
    return slot == 1 ? nullptr : pool_.data() + std::size_t(slot - 2) * stride;
  }

private:
  bool compute(std::span<const std::size_t> t_digits, std::uint64_t *out) const {
    const auto &words = space_.trace_words();
    PartialTrace tau(space_.params());
    for (std::size_t s = 0; s < words.size(); ++s)
      tau.set(words[s], layer_.t_values[t_digits[s]]);
    if (!space_.checker().requirements().check_all(tau).pass)
      return false;
    const Rational k2 = Rational(space_.k()) * space_.k();
    const auto &s_table = space_.checker().approximants();
    std::fill(out, out + slots_ * words_per_mask_, 0);
    for (std::size_t e = 0; e < slots_; ++e) {
      GaussianRational t = tau.evaluate(s_table[e].value);
      Rational im2 = t.im * t.im;
      for (std::size_t x = 0; x < layer_.p_values.size(); ++x) {
        Rational d = layer_.p_values[x] - t.re;
        if (k2 * (d * d + im2) < 1)
          out[e * words_per_mask_ + x / 64] |= std::uint64_t(1) << (x % 64);
      }
    }
    return true;
  }

  const CandidateSpace &space_;
  const CandidateSpace::Layer &layer_;
  std::size_t slots_;
  std::size_t words_per_mask_;
  bool cached_ = false;
  std::vector<std::uint32_t> slot_of_; // 0 unknown, 1 fails R, else pool block + 2
  std::vector<std::uint64_t> pool_;
  std::vector<std::uint64_t> scratch_;
};

CandidateSpace::~CandidateSpace() = default;

CandidateSpace::TraceTable &CandidateSpace::trace_table(const Layer &layer) const {
  std::lock_guard lock(mutex_);
  if (tables_.size() < layer.height)
    tables_.resize(layer.height);
  auto &slot = tables_[layer.height - 1];
  if (!slot)
    slot = std::make_unique<TraceTable>(*this, layer);
  return *slot;
}

ScanResult enumerate_X(const CandidateSpace &space, const Integer &from, std::uint64_t budget,
                       const CandidateSink &sink) {
  if (from < 0)
    throw ParameterError("scan start must be nonnegative");
  ScanResult result{from, 0, 0, false};
  const std::size_t P = space.correlation_slots();
  const std::size_t S = P + space.trace_slots();
  while (result.examined < budget && !result.stopped) {
    const auto &L = space.layer_containing(result.next_index);
    Integer left_in_layer = L.first_index + L.indexer.count() - result.next_index;
    std::uint64_t steps = budget - result.examined;
    if (left_in_layer < static_cast<unsigned long>(steps) && left_in_layer.fits_ulong_p())
      steps = left_in_layer.get_ui();

    std::vector<std::size_t> digits = L.indexer.unrank(result.next_index - L.first_index);
    auto lower = [&](std::size_t s) { return s < P ? L.p_lower : L.t_lower; };
    auto size = [&](std::size_t s) { return s < P ? L.p_values.size() : L.t_values.size(); };
    std::size_t top = 0;
    for (std::size_t s = 0; s < S; ++s)
      top += digits[s] >= lower(s);

    auto &table = space.trace_table(L);
    const std::size_t wpm = table.words_per_mask();
    for (std::uint64_t step = 0;;) {
      const std::uint64_t *masks = table.lookup(std::span(digits).subspan(P));
      bool member = masks != nullptr;
      for (std::size_t e = 0; member && e < P; ++e)
        member = (masks[e * wpm + digits[e] / 64] >> (digits[e] % 64)) & 1;
      ++result.examined;
      if (member) {
        ++result.emitted;
        if (!sink(space.from_digits(L, digits, result.next_index)))
          result.stopped = true;
      }
      result.next_index += 1;
      if (++step == steps || result.stopped)
        break;
      // Advance the odometer to the next tuple of height exactly L.height.
      do {
        std::size_t s = S;
        while (s-- > 0) {
          bool was_top = digits[s] >= lower(s);
          if (++digits[s] == size(s)) {
            digits[s] = 0;
            top -= was_top;
            top += lower(s) == 0;
            continue;
          }
          top += (digits[s] >= lower(s)) - was_top;
          break;
        }
      } while (top == 0);
    }
  }
  return result;
}

std::vector<Candidate> enumerate_X(const GroupParams &params, int k, const Integer &from,
                                   std::uint64_t budget) {
  CandidateSpace space(params, k);
  std::vector<Candidate> out;
  enumerate_X(space, from, budget, [&](const Candidate &c) {
    out.push_back(c);
    return true;
  });
  return out;
}

} // namespace qcmod
