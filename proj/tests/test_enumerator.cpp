#include "support.hpp"

#include "qcmod/enumerator.hpp"
#include "qcmod/errors.hpp"
#include "qcmod/grid.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qcmod;

namespace {

Rational Q(long a, long b = 1) { return make_rational(a, b); }

std::string fingerprint(const Candidate &c) {
  std::string s;
  for (const auto &e : c.p.entries())
    s += to_string(e) + ",";
  s += "|";
  for (const auto &[w, z] : c.tau.values())
    s += to_string(w) + ":" + to_string(z) + ",";
  return s;
}

} // namespace

TEST(Grid, CanonicalOrders) {
  auto r = canonical_rationals(2);
  EXPECT_EQ(r, (std::vector<Rational>{0, 1, -1, Q(1, 2), Q(-1, 2), 2, -2}));
  EXPECT_EQ(canonical_unit_interval(3), (std::vector<Rational>{0, 1, Q(1, 2), Q(1, 3), Q(2, 3)}));
  auto g = canonical_gaussians(1);
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g[0], GaussianRational(0, 0));
  EXPECT_EQ(g[1], GaussianRational(1, 0));
  EXPECT_EQ(g[2], GaussianRational(-1, 0));
  EXPECT_EQ(g[3], GaussianRational(0, 1));
  EXPECT_EQ(canonical_disc(1).size(), 5u);
  EXPECT_EQ(canonical_disc(2).size(), 13u);
  EXPECT_EQ(canonical_nonzero_gaussians(1).size(), 8u);
  // height-h values form the tail of each alphabet
  for (unsigned h = 1; h <= 5; ++h) {
    auto lower = canonical_disc(h), upper = canonical_disc(h + 1);
    ASSERT_TRUE(std::equal(lower.begin(), lower.end(), upper.begin()));
    for (std::size_t t = lower.size(); t < upper.size(); ++t)
      ASSERT_EQ(height(upper[t]), h + 1);
  }
  EXPECT_EQ(oracle::unit_values(4).size(), canonical_unit_interval(4).size());
  EXPECT_EQ(oracle::disc_values(4).size(), canonical_disc(4).size());
}

TEST(Grid, LayerIndexerRoundTrip) {
  LayerIndexer idx({3, 4, 2}, {1, 2, 1}, true);
  // tuples with at least one digit at or above the lower count
  EXPECT_EQ(idx.count(), 3 * 4 * 2 - 1 * 2 * 1);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> prev;
  for (long r = 0; r < 22; ++r) {
    auto d = idx.unrank(r);
    EXPECT_EQ(idx.rank(d), r);
    EXPECT_TRUE(d[0] >= 1 || d[1] >= 2 || d[2] >= 1);
    if (!prev.empty())
      EXPECT_LT(prev, d);
    prev = d;
    seen.insert(d);
  }
  EXPECT_EQ(seen.size(), 22u);
  EXPECT_THROW(idx.unrank(22), ParameterError);
  EXPECT_THROW(idx.rank({0, 0, 0}), ParameterError);
}

TEST(Enumerator, GridSizes) {
  CandidateSpace space(make_params(2, 2), 1);
  EXPECT_EQ(space.correlation_slots(), 16u);
  EXPECT_EQ(space.trace_slots(), 5u);
  EXPECT_EQ(space.grid_size(1), Integer("204800000"));
  EXPECT_EQ(space.grid_size(2), Integer("15982946180253"));
  auto counted = oracle::count_members_22_k1(1);
  EXPECT_EQ(counted.grid, space.grid_size(1));
}

TEST(Enumerator, FirstCandidateIsAllZero) {
  auto c = decode_candidate(0, 1, make_params(2, 2));
  EXPECT_EQ(c.height, 1u);
  for (const auto &e : c.p.entries())
    EXPECT_EQ(e, 0);
  for (const auto &[w, z] : c.tau.values())
    EXPECT_TRUE(is_zero(z));
  EXPECT_TRUE(is_member_witnessed(c.p, c.tau, 1));
}

TEST(Enumerator, DecodeIsInjectiveAndRanksBack) {
  for (auto [n, m, k] : {std::tuple{2, 2, 1}, {2, 3, 2}}) {
    CandidateSpace space(make_params(n, m), k);
    std::set<std::string> seen;
    for (long l = 0; l <= 10000; ++l) {
      auto c = space.decode(l);
      ASSERT_TRUE(seen.insert(fingerprint(c)).second) << l;
      ASSERT_EQ(space.index_of(c.p, c.tau), l);
    }
    // spot checks deep in later layers
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
      Integer l = Integer(static_cast<unsigned long>(rng() >> 8)) * Integer(static_cast<unsigned long>(rng() >> 20));
      auto c = space.decode(l);
      ASSERT_EQ(space.index_of(c.p, c.tau), l);
      for (const auto &e : c.p.entries())
        ASSERT_LE(height(e), c.height);
      for (const auto &[w, z] : c.tau.values()) {
        ASSERT_LE(height(z), c.height);
        ASSERT_TRUE(in_unit_disc(z));
      }
      ASSERT_LT(l, space.grid_size(c.height));
      if (c.height > 1)
        ASSERT_GE(l, space.grid_size(c.height - 1));
    }
  }
}

TEST(Enumerator, HeightTwoAssignmentsFitBelowGridSize) {
  CandidateSpace space(make_params(2, 2), 1);
  std::mt19937_64 rng(21);
  auto unit = canonical_unit_interval(2);
  auto disc = canonical_disc(2);
  for (int t = 0; t < 500; ++t) {
    std::vector<Rational> e;
    for (int s = 0; s < 16; ++s)
      e.push_back(unit[rng() % unit.size()]);
    PartialTrace tau(space.params());
    for (const auto &w : space.trace_words())
      tau.set(w, disc[rng() % disc.size()]);
    Integer l = space.index_of(Correlation(space.params(), e), tau);
    ASSERT_LT(l, space.grid_size(2));
    auto back = space.decode(l);
    ASSERT_EQ(back.p.entries(), e);
    ASSERT_EQ(back.tau, tau);
  }
}

TEST(Enumerator, MembershipExamples) {
  auto p = make_params(2, 2);
  auto sup = required_support(10, p);
  auto reg = regular_trace(p, sup);
  auto uniform = correlation_from_trace(reg);
  EXPECT_TRUE(is_member_witnessed(uniform, reg, 10));
  auto neg = reg;
  neg.set(Word{}, GaussianRational(-1, 0));
  for (int k : {1, 3, 10})
    EXPECT_FALSE(is_member_witnessed(uniform, neg, k));
  Correlation ones(p, std::vector<Rational>(16, Rational(1)));
  EXPECT_FALSE(is_member_witnessed(ones, reg, 10));
  PartialTrace tiny(p);
  tiny.set(Word{}, GaussianRational(1, 0));
  EXPECT_THROW(is_member_witnessed(uniform, tiny, 1), DomainError);
}

TEST(Enumerator, EmitsOnlyMembersInIncreasingOrder) {
  auto p = make_params(2, 2);
  auto found = enumerate_X(p, 1, 0, 200000);
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(found.front().index, 0);
  CandidateSpace space(p, 1);
  Integer prev = -1;
  std::set<Integer> emitted;
  for (const auto &c : found) {
    ASSERT_GT(c.index, prev);
    prev = c.index;
    ASSERT_TRUE(is_member_witnessed(c.p, c.tau, 1));
    auto again = space.decode(c.index);
    ASSERT_EQ(again.p, c.p);
    ASSERT_EQ(again.tau, c.tau);
    emitted.insert(c.index);
  }
  // brute force over the same window: decode and filter every index
  for (long l = 0; l < 200000; l += 7) {
    auto c = space.decode(l);
    ASSERT_EQ(is_member_witnessed(c.p, c.tau, 1), emitted.count(l) == 1) << l;
  }
}

TEST(Enumerator, ScanIsResumable) {
  CandidateSpace space(make_params(2, 3), 2);
  auto collect = [&](Integer from, std::uint64_t budget) {
    std::vector<Integer> out;
    auto r = enumerate_X(space, from, budget, [&](const Candidate &c) {
      out.push_back(c.index);
      return true;
    });
    EXPECT_EQ(r.next_index, from + Integer(static_cast<unsigned long>(budget)));
    EXPECT_EQ(r.examined, budget);
    return out;
  };
  auto whole = collect(0, 60000);
  auto first = collect(0, 30000);
  auto second = collect(30000, 30000);
  first.insert(first.end(), second.begin(), second.end());
  EXPECT_EQ(whole, first);
  auto none = collect(12345, 0);
  EXPECT_TRUE(none.empty());
}

TEST(Enumerator, ScanCrossesLayerBoundaries) {
  CandidateSpace space(make_params(2, 2), 1);
  Integer edge = space.grid_size(1);
  std::vector<Integer> got;
  auto r = enumerate_X(space, edge - 5000, 10000, [&](const Candidate &c) {
    got.push_back(c.index);
    return true;
  });
  EXPECT_EQ(r.next_index, edge + 5000);
  for (long l = -5000; l < 5000; ++l) {
    Integer idx = edge + l;
    auto c = space.decode(idx);
    bool member = is_member_witnessed(c.p, c.tau, 1);
    ASSERT_EQ(member, std::binary_search(got.begin(), got.end(), idx)) << l;
  }
}

TEST(Enumerator, UniformPairAppearsAtItsIndex) {
  auto p = make_params(2, 2);
  for (int k : {1, 3}) {
    CandidateSpace space(p, k);
    auto reg = regular_trace(p, space.trace_words());
    auto uniform = correlation_from_trace(reg);
    Integer l = space.index_of(uniform, reg);
    auto c = space.decode(l);
    EXPECT_EQ(c.p, uniform);
    EXPECT_EQ(c.tau, reg);
    EXPECT_EQ(c.height, 4u);
    std::vector<Candidate> got;
    enumerate_X(space, l, 1, [&](const Candidate &x) {
      got.push_back(x);
      return true;
    });
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].index, l);
  }
}

TEST(Enumerator, SinkCanStopEarly) {
  CandidateSpace space(make_params(2, 2), 1);
  int calls = 0;
  auto r = enumerate_X(space, 0, 1000, [&](const Candidate &) { return ++calls < 3; });
  EXPECT_TRUE(r.stopped);
  EXPECT_EQ(calls, 3);
  EXPECT_EQ(r.emitted, 3u);
}
