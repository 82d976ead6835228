#ifndef TSQ_VERIFY_HPP
#define TSQ_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "tsq/analysis.hpp"
#include "tsq/baselines.hpp"
#include "tsq/core.hpp"
#include "tsq/datagen.hpp"
#include "tsq/pivot.hpp"

namespace tsq::verify {

using gen::Key;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline bool sorts_correctly(const SortFn<Key, std::compare_three_way>& fn, std::vector<Key> v,
                            const AlgoOptions& opt) {
  std::vector<Key> expect = v;
  std::sort(expect.begin(), expect.end());
  fn(std::span<Key>(v), std::compare_three_way{}, opt);
  return v == expect;
}

}  // namespace detail

/// Every permutation of 1..n through every registered algorithm.
inline CheckResult check_exhaustive_permutations(std::size_t n, const SortConfig& cfg = {}) {
  CheckResult r{"exhaustive permutations n=" + std::to_string(n), true, {}};
  std::uint64_t cases = 0;
  for (auto name : kAlgorithmNames) {
    const auto fn = find_algorithm<Key>(name);
    std::vector<Key> v(n);
    std::iota(v.begin(), v.end(), Key{1});
    std::uint32_t seed = 1;
    do {
      ++cases;
      if (!detail::sorts_correctly(fn, v, {cfg, seed++})) {
        r.passed = false;
        r.detail = std::string(name) + " failed";
        return r;
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  r.detail = std::to_string(cases) + " cases";
  return r;
}

/// Every sequence of length n over a k-letter alphabet through every
/// registered algorithm.
inline CheckResult check_exhaustive_multisets(std::size_t n, std::size_t k,
                                              const SortConfig& cfg = {}) {
  CheckResult r{"exhaustive multisets " + std::to_string(k) + "^" + std::to_string(n), true, {}};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;
  for (auto name : kAlgorithmNames) {
    const auto fn = find_algorithm<Key>(name);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Key> v(n);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= k) v[i] = static_cast<Key>(c % k);
      if (!detail::sorts_correctly(fn, v, {cfg, static_cast<std::uint32_t>(code + 1)})) {
        r.passed = false;
        r.detail = std::string(name) + " failed";
        return r;
      }
    }
  }
  r.detail = std::to_string(total * kAlgorithmNames.size()) + " cases";
  return r;
}

struct Median5Report {
  bool all_correct = true;
  std::uint64_t max_comparisons = 0;
  std::uint64_t max_writes = 0;
};

/// Runs median-of-5 over all 120 orderings of five distinct values.
inline Median5Report median5_report() {
  Median5Report rep;
  std::array<Key, 5> p{1, 2, 3, 4, 5};
  do {
    std::vector<Key> v(p.begin(), p.end());
    SortStats st;
    std::compare_three_way cmp;
    counted_span<Key, std::compare_three_way> ar(v, cmp, st);
    const PivotDecision d = median_of_5(ar, {0, 1, 2, 3, 4});
    const bool ok = v[static_cast<std::size_t>(d.pi)] == 3 && v[0] < 3 && v[1] < 3 && v[3] > 3 &&
                    v[4] > 3;
    rep.all_correct = rep.all_correct && ok;
    rep.max_comparisons = std::max(rep.max_comparisons, st.comparisons);
    rep.max_writes = std::max(rep.max_writes, st.element_writes);
  } while (std::next_permutation(p.begin(), p.end()));
  return rep;
}

inline CheckResult check_median5_certificate() {
  const Median5Report rep = median5_report();
  CheckResult r{"median-of-5 certificate", rep.all_correct && rep.max_comparisons <= 8 &&
                                               rep.max_writes <= 6,
                {}};
  r.detail = "max comparisons " + std::to_string(rep.max_comparisons) + ", max writes " +
             std::to_string(rep.max_writes);
  return r;
}

/// Largest relative gap between the recurrence and its closed form over
/// [2, max_n].
inline double predictor_max_gap(std::uint64_t max_n) {
  double s = 0.5;
  double h = 1.5;
  double worst = 0;
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    if (n > 2) {
      s = (1.0 + 1.0 / static_cast<double>(n)) * (2.0 / 9.0 + s);
      h += 1.0 / static_cast<double>(n);
    }
    const double m = static_cast<double>(n) + 1.0;
    const double closed = (2.0 / 9.0) * m * h - m / 6.0;
    worst = std::max(worst, std::abs(s - closed) / std::abs(closed));
  }
  return worst;
}

inline CheckResult check_predictor_agreement(std::uint64_t max_n = 10'000) {
  const double gap = predictor_max_gap(max_n);
  std::ostringstream os;
  os << "max relative gap " << gap << " over [2, " << max_n << "]";
  return {"recurrence vs closed form", gap < 1e-9, os.str()};
}

struct KillerReport {
  std::size_t n = 0;
  std::uint64_t fixed_pivot = 0;
  std::uint64_t tsq_max = 0;
  double tsq_bound = 0;
};

/// Cooks a killer input against a first-element-pivot quicksort and replays
/// it; then cooks one against Triple State (seeded with `cook_seed`) and
/// replays it under `seeds` other seeds.
inline KillerReport run_killer(std::size_t n, unsigned seeds, const SortConfig& cfg,
                               std::uint32_t cook_seed = 1) {
  KillerReport rep;
  rep.n = n;
  rep.tsq_bound = 64.0 * static_cast<double>(n) * std::log2(static_cast<double>(n));

  std::vector<Key> v = gen::cook_killer(n, [](std::vector<Key>& items, auto cmp) {
    baseline::naive_qsort(std::span<Key>(items), cmp);
  });
  rep.fixed_pivot = baseline::naive_qsort(std::span<Key>(v)).comparisons;

  const std::vector<Key> cooked = gen::cook_killer(n, [&](std::vector<Key>& items, auto cmp) {
    TripleStateSorter<Key, decltype(cmp)> s(cfg, cmp, cook_seed);
    s.sort(items);
  });
  for (unsigned i = 1; i <= seeds; ++i) {
    v = cooked;
    const std::uint32_t seed = cfg.mitigation_enabled ? cook_seed + 7919u * i : cook_seed;
    const SortStats st = sort_with_stats<Key>(v, std::compare_three_way{}, cfg, seed);
    rep.tsq_max = std::max(rep.tsq_max, st.comparisons);
  }
  return rep;
}

/// Passes when the fixed-pivot sort goes quadratic (at least n^2/8) and
/// Triple State stays within 64 n log2 n and below n^2/16 on every replay.
inline CheckResult check_killer(std::size_t n = 4096, unsigned seeds = 20,
                                const SortConfig& cfg = {}) {
  const KillerReport rep = run_killer(n, seeds, cfg);
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  const bool fixed_ok = static_cast<double>(rep.fixed_pivot) >= nn / 8;
  const bool quadratic = static_cast<double>(rep.tsq_max) >= nn / 16;
  const bool tsq_ok = static_cast<double>(rep.tsq_max) <= rep.tsq_bound && !quadratic;
  std::ostringstream os;
  os << "fixed pivot " << rep.fixed_pivot << " (" << static_cast<double>(rep.fixed_pivot) / nn
     << " n^2), tristate max " << rep.tsq_max << " (" << static_cast<double>(rep.tsq_max) / nn
     << " n^2, bound " << static_cast<std::uint64_t>(rep.tsq_bound) << ")";
  if (quadratic) os << ", quadratic blowup";
  return {"killer adversary n=" + std::to_string(n), fixed_ok && tsq_ok, os.str()};
}

/// The whole suite. A config that fails validation yields a single failed
/// check.
inline std::vector<CheckResult> verify_all(const SortConfig& cfg = {}) {
  try {
    cfg.validate();
  } catch (const config_error& e) {
    return {{"config validation", false, e.what()}};
  }
  return {check_exhaustive_permutations(8, cfg), check_exhaustive_multisets(8, 3, cfg),
          check_median5_certificate(), check_predictor_agreement(), check_killer(4096, 20, cfg)};
}

}  // namespace tsq::verify

#endif  // TSQ_VERIFY_HPP
