#ifndef TSQ_PIVOT_HPP
#define TSQ_PIVOT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "tsq/access.hpp"
#include "tsq/config.hpp"

namespace tsq {

/// Side channel from pivot selection: whether every sampled element was
/// already in nondecreasing (Sorted) or strictly decreasing (Reversed) order.
enum class OrderFlag : std::int8_t { Reversed = -1, Unknown = 0, Sorted = 1 };

enum class PivotMethod : std::uint8_t { MedianOf3, MedianOf5, Ninther, Fifteenth };

/// Where the chosen pivot sits after selection, plus the order guess.
struct PivotDecision {
  index_t pi = 0;
  OrderFlag order_flag = OrderFlag::Unknown;
  PivotMethod method = PivotMethod::MedianOf3;
};

/// Median of three samples; sorts the samples in place as a side effect.
/// At most 3 comparisons and 4 element writes.
template <class T, class C>
PivotDecision median_of_3(const counted_span<T, C>& ar, index_t i0, index_t i1, index_t i2) {
  if (ar.compare_at(i1, i0) >= 0) {
    if (ar.compare_at(i2, i0) >= 0) {
      if (ar.compare_at(i2, i1) >= 0) {
        return {i1, OrderFlag::Sorted, PivotMethod::MedianOf3};  // 0 1 2
      }
      ar.swap(i1, i2);  // 0 2 1
    } else {
      // 2 0 1
      T tmp(std::move(ar[i0]));
      ar.note_write();
      ar.move(i0, i2);
      ar.move(i2, i1);
      ar.store(i1, tmp);
    }
  } else {
    if (ar.compare_at(i2, i1) >= 0) {
      if (ar.compare_at(i2, i0) >= 0) {
        ar.swap(i0, i1);  // 1 0 2
      } else {
        // 1 2 0
        T tmp(std::move(ar[i0]));
        ar.note_write();
        ar.move(i0, i1);
        ar.move(i1, i2);
        ar.store(i2, tmp);
      }
    } else {
      ar.swap(i0, i2);  // 2 1 0
      return {i1, OrderFlag::Reversed, PivotMethod::MedianOf3};
    }
  }
  return {i1, OrderFlag::Unknown, PivotMethod::MedianOf3};
}

namespace detail {

// Writes needed to realise `target` (target[slot] = slot whose element ends
// there) with one spare element: each nontrivial cycle of length k costs k+1.
inline int arrangement_cost(const std::array<int, 5>& target) noexcept {
  std::array<bool, 5> seen{};
  int cost = 0;
  for (int i = 0; i < 5; ++i) {
    if (seen[i] || target[i] == i) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = target[j]) {
      seen[j] = true;
      ++len;
    }
    cost += len + 1;
  }
  return cost;
}

template <class T, class C>
void apply_arrangement(const counted_span<T, C>& ar, const std::array<index_t, 5>& idx,
                       const std::array<int, 5>& target) {
  std::array<bool, 5> done{};
  for (int start = 0; start < 5; ++start) {
    if (done[start] || target[start] == start) continue;
    T tmp(std::move(ar[idx[start]]));
    ar.note_write();
    int cur = start;
    for (;;) {
      done[cur] = true;
      const int src = target[cur];
      if (src == start) {
        ar.store(idx[cur], tmp);
        break;
      }
      ar.move(idx[cur], idx[src]);
      cur = src;
    }
  }
}

}  // namespace detail

/// Median of five samples at increasing indices.
///
/// Leaves the median at idx[2], the two smaller samples at idx[0..1] and the
/// two larger at idx[3..4], using as few writes as that layout allows (at
/// most 6). A knockout tournament finds the median in at most 6 comparisons;
/// ties are broken by position, which also makes the order flag exact:
/// Sorted iff the samples were nondecreasing, Reversed iff strictly
/// decreasing.
template <class T, class C>
PivotDecision median_of_5(const counted_span<T, C>& ar, const std::array<index_t, 5>& idx) {
  unsigned path = 0;
  int steps = 0;
  auto before = [&](int p, int q) {
    const int c = ar.compare_at(idx[p], idx[q]);
    const bool r = p < q ? c <= 0 : c < 0;
    path = (path << 1) | (r ? 1u : 0u);
    ++steps;
    return r;
  };

  // Order two pairs, then knock out the smaller of the two pair minima.
  int lo1 = 0, hi1 = 1;
  if (!before(0, 1)) std::swap(lo1, hi1);
  int lo2 = 3, hi2 = 4;
  if (!before(3, 4)) std::swap(lo2, hi2);

  int low_a, pair_lo, pair_hi, single;
  if (before(lo1, lo2)) {
    low_a = lo1;
    pair_lo = lo2;
    pair_hi = hi2;
    single = hi1;
  } else {
    low_a = lo2;
    pair_lo = lo1;
    pair_hi = hi1;
    single = hi2;
  }
  // The median is now the second smallest of {single, 2, pair_lo, pair_hi}.
  int x = single, y = 2;
  if (!before(single, 2)) std::swap(x, y);

  int low_b, med, up_a, up_b;
  if (before(x, pair_lo)) {
    low_b = x;
    if (before(y, pair_lo)) {
      med = y;
      up_a = pair_lo;
    } else {
      med = pair_lo;
      up_a = y;
    }
    up_b = pair_hi;
  } else {
    low_b = pair_lo;
    if (before(x, pair_hi)) {
      med = x;
      up_a = y;
      up_b = pair_hi;
    } else {
      med = pair_hi;
      up_a = x;
      up_b = y;
    }
  }

  // Comparison paths taken by strictly increasing and strictly decreasing
  // samples; no other input follows either.
  constexpr unsigned kAscendingPath = 0b111111u;
  constexpr unsigned kDescendingPath = 0b000111u;
  OrderFlag flag = OrderFlag::Unknown;
  if (steps == 6 && path == kAscendingPath) flag = OrderFlag::Sorted;
  if (steps == 6 && path == kDescendingPath) flag = OrderFlag::Reversed;

  std::array<int, 5> best{};
  int best_cost = 1 << 30;
  for (int lo_order = 0; lo_order < 2; ++lo_order) {
    for (int up_order = 0; up_order < 2; ++up_order) {
      std::array<int, 5> t{lo_order ? low_b : low_a, lo_order ? low_a : low_b, med,
                           up_order ? up_b : up_a, up_order ? up_a : up_b};
      const int cost = detail::arrangement_cost(t);
      if (cost < best_cost) {
        best_cost = cost;
        best = t;
      }
    }
  }
  if (best_cost > 0) detail::apply_arrangement(ar, idx, best);
  return {idx[2], flag, PivotMethod::MedianOf5};
}

namespace detail {

// Boundary checks that upgrade per-group order flags to a statement about
// the whole sample sequence. Groups flagged Reversed had their end samples
// swapped, so the original group ends are read from the opposite slots.
template <class T, class C, std::size_t N>
OrderFlag combine_group_flags(const counted_span<T, C>& ar, const std::array<index_t, N>& idx,
                              const std::array<OrderFlag, N / 3>& flags) {
  const OrderFlag first = flags[0];
  if (first == OrderFlag::Unknown) return OrderFlag::Unknown;
  for (auto f : flags) {
    if (f != first) return OrderFlag::Unknown;
  }
  for (std::size_t g = 0; g + 1 < N / 3; ++g) {
    if (first == OrderFlag::Sorted) {
      if (ar.compare_at(idx[3 * g + 2], idx[3 * g + 3]) > 0) return OrderFlag::Unknown;
    } else {
      if (ar.compare_at(idx[3 * g], idx[3 * g + 5]) <= 0) return OrderFlag::Unknown;
    }
  }
  return first;
}

}  // namespace detail

/// Tukey's ninther: median of the medians of three groups of three.
template <class T, class C>
PivotDecision ninther(const counted_span<T, C>& ar, const std::array<index_t, 9>& idx) {
  std::array<OrderFlag, 3> flags{};
  for (std::size_t g = 0; g < 3; ++g) {
    flags[g] = median_of_3(ar, idx[3 * g], idx[3 * g + 1], idx[3 * g + 2]).order_flag;
  }
  const OrderFlag groups = detail::combine_group_flags(ar, idx, flags);
  const PivotDecision fin = median_of_3(ar, idx[1], idx[4], idx[7]);
  return {idx[4], fin.order_flag == groups ? groups : OrderFlag::Unknown, PivotMethod::Ninther};
}

/// Median of five of the medians of five groups of three.
template <class T, class C>
PivotDecision fifteenth(const counted_span<T, C>& ar, const std::array<index_t, 15>& idx) {
  std::array<OrderFlag, 5> flags{};
  for (std::size_t g = 0; g < 5; ++g) {
    flags[g] = median_of_3(ar, idx[3 * g], idx[3 * g + 1], idx[3 * g + 2]).order_flag;
  }
  const OrderFlag groups = detail::combine_group_flags(ar, idx, flags);
  const PivotDecision fin = median_of_5(ar, {idx[1], idx[4], idx[7], idx[10], idx[13]});
  return {idx[7], fin.order_flag == groups ? groups : OrderFlag::Unknown, PivotMethod::Fifteenth};
}

/// Sample positions for one stage over [a, b]. `dran` scales the interior
/// offsets (1.0 means no jitter); the first, middle and last samples never
/// move, and interior samples are clamped so all positions stay distinct.
struct SamplePlan {
  PivotMethod method = PivotMethod::MedianOf3;
  std::array<index_t, 15> idx{};
  std::size_t count = 3;
};

inline SamplePlan plan_samples(index_t a, index_t b, const SortConfig& cfg, double dran) {
  const index_t n = b - a + 1;
  const index_t mid = a + (b - a) / 2;
  const index_t half = mid - a;
  const auto un = static_cast<std::size_t>(n);
  auto scaled = [dran](index_t base) {
    return static_cast<index_t>(static_cast<double>(base) * dran);
  };

  SamplePlan plan;
  PivotMethod method;
  if (un < cfg.medof3_max_n && cfg.medof3_small_enabled) {
    method = PivotMethod::MedianOf3;
  } else if (un < cfg.medof5_max_n) {
    method = PivotMethod::MedianOf5;
  } else if (un < cfg.ninther_max_n) {
    method = PivotMethod::Ninther;
  } else {
    method = PivotMethod::Fifteenth;
  }
  // Fall back down the ladder when the range is too short for distinct
  // samples.
  if (method == PivotMethod::Fifteenth && half < 8) method = PivotMethod::Ninther;
  if (method == PivotMethod::Ninther && half < 4) method = PivotMethod::MedianOf5;
  if (method == PivotMethod::MedianOf5 && half < 2) method = PivotMethod::MedianOf3;

  plan.method = method;
  switch (method) {
    case PivotMethod::MedianOf3:
      plan.count = 3;
      plan.idx[0] = a;
      plan.idx[1] = mid;
      plan.idx[2] = b;
      break;
    case PivotMethod::MedianOf5: {
      const index_t gap = std::clamp<index_t>(scaled(n / 4), 1, half - 1);
      plan.count = 5;
      plan.idx[0] = a;
      plan.idx[1] = a + gap;
      plan.idx[2] = mid;
      plan.idx[3] = b - gap;
      plan.idx[4] = b;
      break;
    }
    case PivotMethod::Ninther: {
      const index_t d = std::clamp<index_t>(scaled(n / 8), 1, (half - 1) / 3);
      plan.count = 9;
      const index_t centers[3] = {a + d, mid, b - d};
      for (int g = 0; g < 3; ++g) {
        plan.idx[3 * g] = centers[g] - d;
        plan.idx[3 * g + 1] = centers[g];
        plan.idx[3 * g + 2] = centers[g] + d;
      }
      break;
    }
    case PivotMethod::Fifteenth: {
      const index_t q = std::clamp<index_t>(scaled(n / 4), 4, half - 4);
      const index_t d = std::min(q, half - q) / 4;
      plan.count = 15;
      const index_t centers[5] = {a + d, a + q, mid, b - q, b - d};
      for (int g = 0; g < 5; ++g) {
        plan.idx[3 * g] = centers[g] - d;
        plan.idx[3 * g + 1] = centers[g];
        plan.idx[3 * g + 2] = centers[g] + d;
      }
      break;
    }
  }
  return plan;
}

/// Chooses the pivot for the stage [a, b] (b - a + 1 >= 3). The pivot ends
/// at the middle sample, which is always mid.
template <class T, class C>
PivotDecision select_pivot(const counted_span<T, C>& ar, index_t a, index_t b,
                           const SortConfig& cfg, double dran) {
  const SamplePlan plan = plan_samples(a, b, cfg, dran);
  const auto& s = plan.idx;
  switch (plan.method) {
    case PivotMethod::MedianOf3:
      return median_of_3(ar, s[0], s[1], s[2]);
    case PivotMethod::MedianOf5:
      return median_of_5(ar, {s[0], s[1], s[2], s[3], s[4]});
    case PivotMethod::Ninther:
      return ninther(ar, {s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]});
    case PivotMethod::Fifteenth:
      return fifteenth(ar, s);
  }
  return median_of_3(ar, s[0], s[1], s[2]);
}

}  // namespace tsq

#endif  // TSQ_PIVOT_HPP
