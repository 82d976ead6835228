#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "tsq/pivot.hpp"
#include "tsq/rng.hpp"
#include "tsq/verify.hpp"

namespace {

using tsq::counted_span;
using tsq::index_t;
using tsq::OrderFlag;
using tsq::PivotDecision;
using tsq::SortStats;
using Cmp = std::compare_three_way;

struct Probe {
  std::vector<int> v;
  SortStats stats;
  Cmp cmp;
  counted_span<int, Cmp> ar{v, cmp, stats};
  explicit Probe(std::vector<int> values) : v(std::move(values)) {}
};

int true_median(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  return s[s.size() / 2];
}

TEST(MedianOf3, SortedSamples) {
  Probe p({0, 1, 2});
  const PivotDecision d = tsq::median_of_3(p.ar, 0, 1, 2);
  EXPECT_EQ(d.order_flag, OrderFlag::Sorted);
  EXPECT_EQ(p.v[static_cast<std::size_t>(d.pi)], 1);
  EXPECT_EQ(p.stats.element_writes, 0u);
}

TEST(MedianOf3, ReversedSamplesAreSwapped) {
  Probe p({2, 1, 0});
  const PivotDecision d = tsq::median_of_3(p.ar, 0, 1, 2);
  EXPECT_EQ(d.order_flag, OrderFlag::Reversed);
  EXPECT_EQ(p.v, (std::vector<int>{0, 1, 2}));
}

TEST(MedianOf3, MixedSamples) {
  Probe p({1, 0, 2});
  const PivotDecision d = tsq::median_of_3(p.ar, 0, 1, 2);
  EXPECT_EQ(d.order_flag, OrderFlag::Unknown);
  EXPECT_EQ(p.v[static_cast<std::size_t>(d.pi)], 1);
}

TEST(MedianOf3, AllOrderingsSortSamplesWithinBounds) {
  std::array<int, 3> s{0, 1, 2};
  std::uint64_t max_writes = 0;
  do {
    Probe p({s[0], s[1], s[2]});
    const PivotDecision d = tsq::median_of_3(p.ar, 0, 1, 2);
    EXPECT_EQ(p.v, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(d.pi, 1);
    EXPECT_LE(p.stats.comparisons, 3u);
    max_writes = std::max(max_writes, p.stats.element_writes);
  } while (std::next_permutation(s.begin(), s.end()));
  EXPECT_EQ(max_writes, 4u);
}

TEST(MedianOf5, SortedSamples) {
  Probe p({1, 2, 3, 4, 5});
  const PivotDecision d = tsq::median_of_5(p.ar, {0, 1, 2, 3, 4});
  EXPECT_EQ(p.v[static_cast<std::size_t>(d.pi)], 3);
  EXPECT_EQ(d.order_flag, OrderFlag::Sorted);
  EXPECT_EQ(p.stats.element_writes, 0u);
}

TEST(MedianOf5, ReversedSamples) {
  Probe p({5, 4, 3, 2, 1});
  const PivotDecision d = tsq::median_of_5(p.ar, {0, 1, 2, 3, 4});
  EXPECT_EQ(p.v[static_cast<std::size_t>(d.pi)], 3);
  EXPECT_EQ(d.order_flag, OrderFlag::Reversed);
}

TEST(MedianOf5, AllEqualSamplesReportSorted) {
  Probe p({2, 2, 2, 2, 2});
  const PivotDecision d = tsq::median_of_5(p.ar, {0, 1, 2, 3, 4});
  EXPECT_EQ(p.v[static_cast<std::size_t>(d.pi)], 2);
  EXPECT_EQ(d.order_flag, OrderFlag::Sorted);
}

TEST(MedianOf5, CertificateOverAllPermutations) {
  const auto rep = tsq::verify::median5_report();
  EXPECT_TRUE(rep.all_correct);
  EXPECT_LE(rep.max_comparisons, 8u);
  EXPECT_LE(rep.max_writes, 6u);
}

TEST(MedianOf5, FlagSoundOnMultisets) {
  // Every sequence over {0,1,2}: +1 only for nondecreasing input, -1 only
  // for strictly decreasing input; median always exact.
  for (int code = 0; code < 243; ++code) {
    std::vector<int> s(5);
    int c = code;
    for (int& x : s) {
      x = c % 3;
      c /= 3;
    }
    Probe p(s);
    const PivotDecision d = tsq::median_of_5(p.ar, {0, 1, 2, 3, 4});
    EXPECT_EQ(p.v[2], true_median(s));
    EXPECT_EQ(d.pi, 2);
    EXPECT_TRUE(p.v[0] <= p.v[2] && p.v[1] <= p.v[2] && p.v[3] >= p.v[2] && p.v[4] >= p.v[2]);
    if (d.order_flag == OrderFlag::Sorted) {
      EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    }
    if (d.order_flag == OrderFlag::Reversed) {
      EXPECT_TRUE(std::is_sorted(s.rbegin(), s.rend()));
    }
  }
}

TEST(Ninther, GroupMedians) {
  Probe p({0, 1, 2, 4, 5, 6, 8, 9, 10});
  std::array<index_t, 9> idx{};
  std::iota(idx.begin(), idx.end(), 0);
  const PivotDecision d = tsq::ninther(p.ar, idx);
  EXPECT_EQ(p.v[static_cast<std::size_t>(d.pi)], 5);
  EXPECT_EQ(d.order_flag, OrderFlag::Sorted);
}

TEST(Ninther, MatchesMedianOfGroupMedians) {
  tsq::gen::ParkMillerGen g(17);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> s(9);
    for (int& x : s) x = static_cast<int>(g.gen_random2(0, 20));
    const int expect = true_median(
        {true_median({s[0], s[1], s[2]}), true_median({s[3], s[4], s[5]}),
         true_median({s[6], s[7], s[8]})});
    Probe p(s);
    std::array<index_t, 9> idx{};
    std::iota(idx.begin(), idx.end(), 0);
    const PivotDecision d = tsq::ninther(p.ar, idx);
    ASSERT_EQ(p.v[static_cast<std::size_t>(d.pi)], expect);
    if (d.order_flag == OrderFlag::Sorted) {
      ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
    }
    if (d.order_flag == OrderFlag::Reversed) {
      ASSERT_TRUE(std::is_sorted(s.rbegin(), s.rend()));
    }
  }
}

TEST(Fifteenth, GroupMedians) {
  Probe p({0, 1, 2, 1, 2, 3, 2, 3, 4, 3, 4, 5, 4, 5, 6});
  std::array<index_t, 15> idx{};
  std::iota(idx.begin(), idx.end(), 0);
  const PivotDecision d = tsq::fifteenth(p.ar, idx);
  EXPECT_EQ(p.v[static_cast<std::size_t>(d.pi)], 3);
}

TEST(Fifteenth, ReversedSamples) {
  std::vector<int> s(15);
  std::iota(s.rbegin(), s.rend(), 0);
  Probe p(s);
  std::array<index_t, 15> idx{};
  std::iota(idx.begin(), idx.end(), 0);
  const PivotDecision d = tsq::fifteenth(p.ar, idx);
  EXPECT_EQ(d.order_flag, OrderFlag::Reversed);
  EXPECT_EQ(p.v[static_cast<std::size_t>(d.pi)], 7);
}

TEST(Fifteenth, MatchesMedianOfFiveGroupMedians) {
  tsq::gen::ParkMillerGen g(23);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> s(15);
    for (int& x : s) x = static_cast<int>(g.gen_random2(0, 30));
    std::vector<int> medians;
    for (int k = 0; k < 5; ++k) medians.push_back(true_median({s[3 * k], s[3 * k + 1], s[3 * k + 2]}));
    Probe p(s);
    std::array<index_t, 15> idx{};
    std::iota(idx.begin(), idx.end(), 0);
    const PivotDecision d = tsq::fifteenth(p.ar, idx);
    ASSERT_EQ(p.v[static_cast<std::size_t>(d.pi)], true_median(medians));
  }
}

TEST(SelectPivot, LadderBySize) {
  const tsq::SortConfig cfg;
  EXPECT_EQ(tsq::plan_samples(0, 49, cfg, 1.0).method, tsq::PivotMethod::MedianOf3);
  EXPECT_EQ(tsq::plan_samples(0, 399, cfg, 1.0).method, tsq::PivotMethod::MedianOf5);
  EXPECT_EQ(tsq::plan_samples(0, 9999, cfg, 1.0).method, tsq::PivotMethod::Ninther);
  EXPECT_EQ(tsq::plan_samples(0, 99999, cfg, 1.0).method, tsq::PivotMethod::Fifteenth);
}

TEST(SelectPivot, MedianOf3UsesEndsAndMiddle) {
  const auto plan = tsq::plan_samples(10, 59, tsq::SortConfig{}, 1.3);
  ASSERT_EQ(plan.count, 3u);
  EXPECT_EQ(plan.idx[0], 10);
  EXPECT_EQ(plan.idx[1], 10 + 49 / 2);
  EXPECT_EQ(plan.idx[2], 59);
}

TEST(SelectPivot, MedianOf5GapScalesWithJitter) {
  const tsq::SortConfig cfg;
  const auto p1 = tsq::plan_samples(0, 399, cfg, 1.0);
  ASSERT_EQ(p1.count, 5u);
  EXPECT_EQ(p1.idx[0], 0);
  EXPECT_EQ(p1.idx[1], 100);
  EXPECT_EQ(p1.idx[2], 199);
  EXPECT_EQ(p1.idx[3], 299);
  EXPECT_EQ(p1.idx[4], 399);
  const auto p2 = tsq::plan_samples(0, 399, cfg, 1.375);
  EXPECT_EQ(p2.idx[1], 137);
  EXPECT_EQ(p2.idx[3], 262);
  EXPECT_GT(p2.idx[1], p2.idx[0]);
  EXPECT_LT(p2.idx[1], p2.idx[2]);
  EXPECT_LT(p2.idx[3], p2.idx[4]);
}

TEST(SelectPivot, SamplesDistinctIncreasingAndInRange) {
  const tsq::SortConfig cfg;
  tsq::MitigationRng rng(5);
  for (index_t n = 4; n < 200000; n = n * 5 / 4 + 1) {
    for (int k = 0; k < 20; ++k) {
      rng.next();
      const index_t a = 7;
      const index_t b = a + n - 1;
      const auto plan = tsq::plan_samples(a, b, cfg, rng.dran());
      ASSERT_GE(plan.idx[0], a);
      ASSERT_LE(plan.idx[plan.count - 1], b);
      for (std::size_t i = 1; i < plan.count; ++i) ASSERT_LT(plan.idx[i - 1], plan.idx[i]) << n;
      EXPECT_EQ(plan.idx[0], a);
      EXPECT_EQ(plan.idx[plan.count / 2], a + (b - a) / 2);
      EXPECT_EQ(plan.idx[plan.count - 1], b);
    }
  }
}

TEST(SelectPivot, PivotIsMedianOfSamples) {
  tsq::gen::ParkMillerGen g(3);
  const tsq::SortConfig cfg;
  for (int n : {50, 400, 5000}) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int& x : v) x = static_cast<int>(g.gen_random2(0, 1000));
    const auto plan = tsq::plan_samples(0, n - 1, cfg, 1.0);
    Probe p(v);
    const PivotDecision d = tsq::select_pivot(p.ar, 0, n - 1, cfg, 1.0);
    std::vector<int> sampled_after;
    for (std::size_t i = 0; i < plan.count; ++i) {
      sampled_after.push_back(p.v[static_cast<std::size_t>(plan.idx[i])]);
    }
    std::vector<int> sampled_before;
    for (std::size_t i = 0; i < plan.count; ++i) {
      sampled_before.push_back(v[static_cast<std::size_t>(plan.idx[i])]);
    }
    std::multiset<int> ms1(sampled_before.begin(), sampled_before.end());
    std::multiset<int> ms2(sampled_after.begin(), sampled_after.end());
    EXPECT_EQ(ms1, ms2);
    EXPECT_EQ(d.method, plan.method);
  }
}

TEST(MitigationRng, ParkMillerSteps) {
  EXPECT_EQ(tsq::park_miller::step(1), 16807u);
  EXPECT_EQ(tsq::park_miller::step(16807), 282475249u);
  tsq::MitigationRng rng(1);
  rng.next();
  EXPECT_EQ(rng.state(), 16807u);
  EXPECT_DOUBLE_EQ(rng.dran(), 0.5 + 16807.0 / 2147483648.0);
  EXPECT_DOUBLE_EQ(rng.dran2(), 1.0 + rng.dran());
}

TEST(MitigationRng, DranStaysInRange) {
  tsq::MitigationRng rng(123456);
  for (int i = 0; i < 100000; ++i) {
    rng.next();
    ASSERT_GE(rng.dran(), 0.5);
    ASSERT_LT(rng.dran(), 1.5);
  }
}

TEST(MitigationRng, ZeroStateIsReseeded) {
  tsq::MitigationRng rng(0);
  rng.next();
  EXPECT_NE(rng.state(), 0u);
}

TEST(MitigationRng, MatchesInputGeneratorArithmetic) {
  tsq::MitigationRng rng(4242);
  tsq::gen::ParkMillerGen g(4242);
  for (int i = 0; i < 1000; ++i) {
    rng.next();
    g.gen_rand();
    ASSERT_EQ(rng.state(), g.state());
  }
}

}  // namespace
