#include <gtest/gtest.h>

#include <cmath>

#include "tsq/analysis.hpp"
#include "tsq/verify.hpp"

namespace {

using namespace tsq::analysis;

TEST(Harmonic, SmallValues) {
  EXPECT_DOUBLE_EQ(harmonic(1), 1.0);
  EXPECT_DOUBLE_EQ(harmonic(4), 1.0 + 0.5 + 1.0 / 3 + 0.25);
  const double big = static_cast<double>(kHarmonicExactLimit) * 4;
  EXPECT_NEAR(harmonic(kHarmonicExactLimit * 4), std::log(big) + kEulerGamma + 1 / (2 * big), 1e-9);
}

TEST(Predictors, Examples) {
  EXPECT_DOUBLE_EQ(predict_swaps_tsq_exact(2), 0.5);
  EXPECT_NEAR(predict_swaps_tsq_exact(1000), 1498.268, 1e-3);
  EXPECT_NEAR(predict_swaps_tsq_approx(1000), 1495.52, 1e-2);
  EXPECT_NEAR(predict_comparisons(1000), 10969.91, 1e-2);
  EXPECT_NEAR(predict_swaps_classic(1000), 1699.56, 1e-2);
}

TEST(Predictors, ExactMatchesRecurrence) {
  for (std::uint64_t n : {2u, 3u, 10u, 100u, 5000u}) {
    EXPECT_NEAR(predict_swaps_tsq_exact(n), recurrence_oracle(n),
                1e-9 * std::max(1.0, recurrence_oracle(n)));
  }
  EXPECT_LT(tsq::verify::predictor_max_gap(10000), 1e-9);
}

TEST(Predictors, StageSwapFormsAgree) {
  for (double n : {3.0, 10.0, 1000.0}) EXPECT_NEAR(stage_swaps(n), stage_swaps_from_copies(n), 1e-12);
}

TEST(Predictors, ApproxTracksExactForLargeN) {
  for (std::uint64_t n : {100'000u, 1'000'000u}) {
    const double e = predict_swaps_tsq_exact(n);
    EXPECT_NEAR(predict_swaps_tsq_approx(static_cast<double>(n)) / e, 1.0, 0.01);
  }
}

TEST(Crossover, ComputedValues) {
  EXPECT_EQ(tsq_approx_crossover(), 152u);
  const auto exact = crossover(2, 5'000, [](std::uint64_t n) {
    return predict_swaps_tsq_exact(n) < predict_swaps_classic(static_cast<double>(n));
  });
  EXPECT_EQ(exact, 164u);
}

TEST(Crossover, NoneWhenNeverBelow) {
  EXPECT_FALSE(crossover(2, 100, [](std::uint64_t) { return false; }));
  EXPECT_EQ(crossover(2, 100, [](std::uint64_t) { return true; }), 2u);
}

TEST(Predict, BundlesAllColumns) {
  const Prediction p = predict(1000);
  EXPECT_EQ(p.n, 1000u);
  EXPECT_DOUBLE_EQ(p.swaps_tsq_exact, predict_swaps_tsq_exact(1000));
  EXPECT_DOUBLE_EQ(p.comparisons_classic, predict_comparisons(1000));
}

}  // namespace
