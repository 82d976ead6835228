#ifndef TSQ_ANALYSIS_HPP
#define TSQ_ANALYSIS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>

namespace tsq::analysis {

inline constexpr double kEulerGamma = 0.5772156649;

/// Largest n for which H_n is summed term by term.
inline constexpr std::uint64_t kHarmonicExactLimit = 1'000'000;

/// n-th harmonic number; exact summation up to kHarmonicExactLimit, then
/// ln(n) + gamma + 1/(2n).
inline double harmonic(std::uint64_t n) {
  if (n > kHarmonicExactLimit) {
    const double x = static_cast<double>(n);
    return std::log(x) + kEulerGamma + 1.0 / (2.0 * x);
  }
  double h = 0.0;
  for (std::uint64_t k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);
  return h;
}

/// Average comparisons of classic quicksort: 2n ln n - 2.8456n.
inline double predict_comparisons(double n) { return 2.0 * n * std::log(n) - 2.8456 * n; }

/// Average swaps of classic quicksort: 0.33n ln n - 0.58n.
inline double predict_swaps_classic(double n) { return 0.33 * n * std::log(n) - 0.58 * n; }

/// Average Triple State virtual swaps: (2/9)(n+1)H_n - (1/6)(n+1).
inline double predict_swaps_tsq_exact(std::uint64_t n) {
  const double m = static_cast<double>(n) + 1.0;
  return (2.0 / 9.0) * m * harmonic(n) - m / 6.0;
}

/// Asymptotic form: 0.222n ln n - 0.038n.
inline double predict_swaps_tsq_approx(double n) { return 0.222 * n * std::log(n) - 0.038 * n; }

/// Iterates S_n = (1 + 1/n)(2/9 + S_{n-1}) from S_2 = 0.5.
inline double recurrence_oracle(std::uint64_t n) {
  double s = 0.5;
  for (std::uint64_t k = 3; k <= n; ++k) {
    s = (1.0 + 1.0 / static_cast<double>(k)) * (2.0 / 9.0 + s);
  }
  return s;
}

/// Swaps spent in one partitioning stage of size n, in its two equivalent
/// forms.
inline double stage_swaps(double n) { return n / 9.0 + 5.0 / (9.0 * n) + 1.0 / 3.0; }
inline double stage_swaps_from_copies(double n) {
  return (2.0 * (n / 6.0 + 5.0 / (6.0 * n)) + 1.0) / 3.0;
}

struct Prediction {
  std::uint64_t n = 0;
  double comparisons_classic = 0;
  double swaps_classic = 0;
  double swaps_tsq_exact = 0;
  double swaps_tsq_approx = 0;
};

inline Prediction predict(std::uint64_t n) {
  const double x = static_cast<double>(n);
  return {n, predict_comparisons(x), predict_swaps_classic(x), predict_swaps_tsq_exact(n),
          predict_swaps_tsq_approx(x)};
}

/// Smallest n in [lo, hi] from which `below(m)` holds for every m up to hi,
/// or nothing if below(hi) is false.
inline std::optional<std::uint64_t> crossover(std::uint64_t lo, std::uint64_t hi,
                                              const std::function<bool(std::uint64_t)>& below) {
  if (!below(hi)) return std::nullopt;
  std::uint64_t n = hi;
  while (n > lo && below(n - 1)) --n;
  return n;
}

/// First n from which the asymptotic Triple State swap prediction stays
/// strictly below the classic one, searching [2, hi].
inline std::optional<std::uint64_t> tsq_approx_crossover(std::uint64_t hi = 1'000'000) {
  return crossover(2, hi, [](std::uint64_t n) {
    const double x = static_cast<double>(n);
    return predict_swaps_tsq_approx(x) < predict_swaps_classic(x);
  });
}

}  // namespace tsq::analysis

#endif  // TSQ_ANALYSIS_HPP
