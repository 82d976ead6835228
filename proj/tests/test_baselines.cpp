#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "support.hpp"
#include "tsq/baselines.hpp"
#include "tsq/datagen.hpp"

namespace {

using tsq::gen::Key;
using Cmp = std::compare_three_way;

TEST(Baselines, TwoOneIsOneSwap) {
  for (auto name : tsq::kAlgorithmNames) {
    std::vector<Key> v{2, 1};
    const auto st = tsq::find_algorithm<Key>(name)(std::span<Key>(v), Cmp{}, {});
    EXPECT_EQ(v, (std::vector<Key>{1, 2})) << name;
    EXPECT_LE(st.element_writes, 3u) << name;
  }
}

TEST(Baselines, SortBatteryCorrectly) {
  for (auto name : tsq::kAlgorithmNames) {
    const auto fn = tsq::find_algorithm<Key>(name);
    for (auto d : tsq::gen::kDistributions) {
      for (auto r : tsq::gen::kReorders) {
        for (std::size_t n : {0u, 1u, 2u, 5u, 40u, 1000u}) {
          tsq::gen::GenSpec s;
          s.distribution = d;
          s.reorder = r;
          s.n = n;
          s.arange = 37;
          auto v = tsq::gen::generate(s);
          const auto expect = tsq::testing::reference_sort(v);
          fn(std::span<Key>(v), Cmp{}, {});
          ASSERT_EQ(v, expect) << name << " " << tsq::gen::to_string(d) << "/"
                               << tsq::gen::to_string(r) << " n=" << n;
        }
      }
    }
  }
}

TEST(Baselines, NaiveSortsSmallInputs) {
  std::vector<Key> v{5, 1, 4, 1, 5, 9, 2, 6};
  tsq::baseline::naive_qsort(std::span<Key>(v));
  EXPECT_EQ(v, (std::vector<Key>{1, 1, 2, 4, 5, 5, 6, 9}));
}

TEST(Baselines, CustomComparator) {
  std::vector<std::string> v{"pear", "fig", "apple", "kiwi"};
  auto longer_first = [](const std::string& a, const std::string& b) {
    return b.size() <=> a.size();
  };
  tsq::baseline::dual_pivot_qsort(std::span<std::string>(v), longer_first);
  EXPECT_EQ(v.front(), "apple");
  EXPECT_EQ(v.back(), "fig");
}

TEST(Baselines, SortedInputDoesNotWrite) {
  std::vector<Key> v(5000);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  EXPECT_EQ(tsq::baseline::classic_qsort(std::span<Key>(w)).element_writes % 3, 0u);
  EXPECT_EQ(w, v);
}

TEST(Registry, NamesAndUnknown) {
  for (auto name : tsq::kAlgorithmNames) EXPECT_TRUE(tsq::find_algorithm<Key>(name)) << name;
  EXPECT_FALSE(tsq::find_algorithm<Key>("bogosort"));
  EXPECT_EQ(tsq::algorithm_list(), "tristate, classic, threeway, dualpivot");
}

TEST(Registry, SeedMakesTristateDeterministic) {
  const auto fn = tsq::find_algorithm<Key>("tristate");
  auto a = tsq::gen::distinct_keys(5000, 4);
  auto b = a;
  const auto sa = fn(std::span<Key>(a), Cmp{}, {{}, 17});
  const auto sb = fn(std::span<Key>(b), Cmp{}, {{}, 17});
  EXPECT_EQ(sa, sb);
}

TEST(Baselines, ThreeWayGroupsDuplicatesCheaply) {
  std::vector<Key> v(10000, 7);
  const auto st = tsq::baseline::three_way_qsort(std::span<Key>(v));
  EXPECT_LE(st.comparisons, 3u * v.size());
}

}  // namespace
