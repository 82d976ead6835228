#ifndef TSQ_BASELINES_HPP
#define TSQ_BASELINES_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsq/access.hpp"
#include "tsq/core.hpp"
#include "tsq/stats.hpp"

namespace tsq {

/// Reference quicksorts for count experiments. All of them exchange
/// elements with 3-write swaps, so element_writes / 3 is their swap count.
namespace baseline {

inline constexpr std::size_t kDefaultCutoff = SortConfig{}.insertion_threshold;

namespace detail {

// Straight insertion by adjacent exchanges: one swap per inversion.
template <class T, class C>
void exchange_insertion(const counted_span<T, C>& ar, index_t a, index_t b) {
  for (index_t i = a + 1; i <= b; ++i) {
    for (index_t j = i; j > a && ar.compare_at(j, j - 1) < 0; --j) ar.swap(j, j - 1);
  }
}

template <class T, class C>
void compare_exchange(const counted_span<T, C>& ar, index_t i, index_t j) {
  if (ar.compare_at(j, i) < 0) ar.swap(i, j);
}

template <class T, class C>
void classic_range(const counted_span<T, C>& ar, index_t a, index_t b, std::size_t cutoff,
                   std::uint64_t depth) {
  for (;;) {
    const index_t n = b - a + 1;
    if (n < 2) return;
    ar.stats().note_depth(depth);
    if (n <= static_cast<index_t>(std::max<std::size_t>(cutoff, 2))) {
      exchange_insertion(ar, a, b);
      return;
    }
    // Median of three; a and b become sentinels.
    const index_t mid = a + (b - a) / 2;
    compare_exchange(ar, a, mid);
    compare_exchange(ar, a, b);
    compare_exchange(ar, mid, b);
    if (n == 3) return;
    ar.swap(mid, b - 1);
    const index_t pv = b - 1;
    index_t i = a;
    index_t j = b - 1;
    for (;;) {
      while (ar.compare_at(++i, pv) < 0) {
      }
      while (ar.compare_at(pv, --j) < 0) {
      }
      if (i >= j) break;
      ar.swap(i, j);
    }
    ar.swap(i, pv);
    ++ar.stats().stages;
    if (i - a < b - i) {
      classic_range(ar, a, i - 1, cutoff, depth + 1);
      a = i + 1;
    } else {
      classic_range(ar, i + 1, b, cutoff, depth + 1);
      b = i - 1;
    }
    ++depth;
  }
}

template <class T, class C>
index_t med3_index(const counted_span<T, C>& ar, index_t x, index_t y, index_t z) {
  if (ar.compare_at(x, y) < 0) {
    if (ar.compare_at(y, z) < 0) return y;
    return ar.compare_at(x, z) < 0 ? z : x;
  }
  if (ar.compare_at(y, z) > 0) return y;
  return ar.compare_at(x, z) > 0 ? z : x;
}

template <class T, class C>
void vecswap(const counted_span<T, C>& ar, index_t i, index_t j, index_t count) {
  for (index_t k = 0; k < count; ++k) ar.swap(i + k, j + k);
}

// Bentley and McIlroy's split-end partition: equals are swapped to both
// ends during the scan and back to the middle afterwards.
template <class T, class C>
void threeway_range(const counted_span<T, C>& ar, index_t a, index_t b, std::size_t cutoff,
                    std::uint64_t depth) {
  for (;;) {
    const index_t n = b - a + 1;
    if (n < 2) return;
    ar.stats().note_depth(depth);
    if (n <= static_cast<index_t>(std::max<std::size_t>(cutoff, 2))) {
      exchange_insertion(ar, a, b);
      return;
    }
    index_t pm = a + n / 2;
    if (n > 7) {
      index_t pl = a;
      index_t pn = b;
      if (n > 40) {
        const index_t s = n / 8;
        pl = med3_index(ar, pl, pl + s, pl + 2 * s);
        pm = med3_index(ar, pm - s, pm, pm + s);
        pn = med3_index(ar, pn - 2 * s, pn - s, pn);
      }
      pm = med3_index(ar, pl, pm, pn);
    }
    if (pm != a) ar.swap(a, pm);
    index_t pa = a + 1;
    index_t pb = pa;
    index_t pc = b;
    index_t pd = b;
    for (;;) {
      int r;
      while (pb <= pc && (r = ar.compare_at(pb, a)) <= 0) {
        if (r == 0) {
          if (pa != pb) ar.swap(pa, pb);
          ++pa;
        }
        ++pb;
      }
      while (pb <= pc && (r = ar.compare_at(pc, a)) >= 0) {
        if (r == 0) {
          if (pc != pd) ar.swap(pc, pd);
          --pd;
        }
        --pc;
      }
      if (pb > pc) break;
      ar.swap(pb, pc);
      ++pb;
      --pc;
    }
    index_t s = std::min(pa - a, pb - pa);
    vecswap(ar, a, pb - s, s);
    s = std::min(pd - pc, b - pd);
    vecswap(ar, pb, b - s + 1, s);
    ++ar.stats().stages;

    const index_t left_n = pb - pa;
    const index_t right_n = pd - pc;
    const index_t l_lo = a;
    const index_t l_hi = a + left_n - 1;
    const index_t r_lo = b - right_n + 1;
    const index_t r_hi = b;
    if (left_n < right_n) {
      threeway_range(ar, l_lo, l_hi, cutoff, depth + 1);
      a = r_lo;
      b = r_hi;
    } else {
      threeway_range(ar, r_lo, r_hi, cutoff, depth + 1);
      a = l_lo;
      b = l_hi;
    }
    ++depth;
  }
}

// Yaroslavskiy's dual-pivot partition (2009 text, Java 7 tie handling).
template <class T, class C>
void dualpivot_range(const counted_span<T, C>& ar, index_t left, index_t right,
                     std::size_t cutoff, std::uint64_t depth) {
  const index_t len = right - left + 1;
  if (len < 2) return;
  ar.stats().note_depth(depth);
  if (len <= static_cast<index_t>(std::max<std::size_t>(cutoff, 5))) {
    exchange_insertion(ar, left, right);
    return;
  }
  const index_t sixth = len / 6;
  const index_t e1 = left + sixth;
  const index_t e2 = e1 + sixth;
  const index_t e3 = e2 + sixth;
  const index_t e4 = e3 + sixth;
  const index_t e5 = e4 + sixth;
  // 5-element sorting network, 9 compare-exchanges.
  compare_exchange(ar, e1, e2);
  compare_exchange(ar, e4, e5);
  compare_exchange(ar, e1, e3);
  compare_exchange(ar, e2, e3);
  compare_exchange(ar, e1, e4);
  compare_exchange(ar, e3, e4);
  compare_exchange(ar, e2, e5);
  compare_exchange(ar, e2, e3);
  compare_exchange(ar, e4, e5);

  ar.swap(e2, left);
  ar.swap(e4, right);
  const bool distinct = ar.compare_at(left, right) != 0;
  index_t less = left + 1;
  index_t great = right - 1;
  if (distinct) {
    for (index_t k = less; k <= great; ++k) {
      if (ar.compare_at(k, left) < 0) {
        if (k != less) ar.swap(k, less);
        ++less;
      } else if (ar.compare_at(k, right) > 0) {
        while (k < great && ar.compare_at(great, right) > 0) --great;
        ar.swap(k, great);
        --great;
        if (ar.compare_at(k, left) < 0) {
          if (k != less) ar.swap(k, less);
          ++less;
        }
      }
    }
  } else {
    for (index_t k = less; k <= great; ++k) {
      const int c = ar.compare_at(k, left);
      if (c == 0) continue;
      if (c < 0) {
        if (k != less) ar.swap(k, less);
        ++less;
      } else {
        while (k < great && ar.compare_at(great, right) > 0) --great;
        ar.swap(k, great);
        --great;
        if (ar.compare_at(k, left) < 0) {
          if (k != less) ar.swap(k, less);
          ++less;
        }
      }
    }
  }
  if (less - 1 != left) ar.swap(left, less - 1);
  if (great + 1 != right) ar.swap(right, great + 1);
  ++ar.stats().stages;

  dualpivot_range(ar, left, less - 2, cutoff, depth + 1);
  dualpivot_range(ar, great + 2, right, cutoff, depth + 1);
  if (!distinct) return;

  // A wide middle part likely holds many copies of the pivots: move them
  // out of the way first.
  if (less < e1 && great > e5) {
    for (index_t k = less; k <= great; ++k) {
      if (ar.compare_at(k, less - 1) == 0) {
        if (k != less) ar.swap(k, less);
        ++less;
      } else if (ar.compare_at(k, great + 1) == 0) {
        while (k < great && ar.compare_at(great, great + 1) == 0) --great;
        ar.swap(k, great);
        --great;
        if (ar.compare_at(k, less - 1) == 0) {
          if (k != less) ar.swap(k, less);
          ++less;
        }
      }
    }
  }
  dualpivot_range(ar, less, great, cutoff, depth + 1);
}

// Textbook quicksort that always partitions around the first element.
template <class T, class C>
void naive_range(const counted_span<T, C>& ar, index_t a, index_t b, std::uint64_t depth) {
  while (a < b) {
    ar.stats().note_depth(depth);
    index_t i = a;
    for (index_t k = a + 1; k <= b; ++k) {
      if (ar.compare_at(k, a) < 0) {
        ++i;
        if (i != k) ar.swap(i, k);
      }
    }
    if (i != a) ar.swap(a, i);
    ++ar.stats().stages;
    if (i - a < b - i) {
      naive_range(ar, a, i - 1, depth + 1);
      a = i + 1;
    } else {
      naive_range(ar, i + 1, b, depth + 1);
      b = i - 1;
    }
    ++depth;
  }
}

}  // namespace detail

/// Median-of-3 quicksort with Hoare partitioning and an insertion-sort
/// cutoff.
template <class T, class C = std::compare_three_way>
SortStats classic_qsort(std::span<T> data, C cmp = C{}, std::size_t cutoff = kDefaultCutoff) {
  SortStats stats;
  counted_span<T, C> ar(data, cmp, stats);
  detail::classic_range(ar, 0, ar.size() - 1, cutoff, 1);
  return stats;
}

/// Bentley and McIlroy three-way quicksort (ninther above 40 elements).
template <class T, class C = std::compare_three_way>
SortStats three_way_qsort(std::span<T> data, C cmp = C{}, std::size_t cutoff = kDefaultCutoff) {
  SortStats stats;
  counted_span<T, C> ar(data, cmp, stats);
  detail::threeway_range(ar, 0, ar.size() - 1, cutoff, 1);
  return stats;
}

/// Yaroslavskiy dual-pivot quicksort; pivots are the 2nd and 4th of five
/// samples sorted by a 9-comparator network.
template <class T, class C = std::compare_three_way>
SortStats dual_pivot_qsort(std::span<T> data, C cmp = C{}, std::size_t cutoff = kDefaultCutoff) {
  SortStats stats;
  counted_span<T, C> ar(data, cmp, stats);
  detail::dualpivot_range(ar, 0, ar.size() - 1, cutoff, 1);
  return stats;
}

/// First-element pivot, no sampling, no cutoff. Quadratic on sorted input;
/// the target for the killer adversary.
template <class T, class C = std::compare_three_way>
SortStats naive_qsort(std::span<T> data, C cmp = C{}) {
  SortStats stats;
  counted_span<T, C> ar(data, cmp, stats);
  detail::naive_range(ar, 0, ar.size() - 1, 1);
  return stats;
}

}  // namespace baseline

/// Options shared by every registered algorithm.
struct AlgoOptions {
  SortConfig config;
  std::uint32_t seed = 1;
};

/// A sort entry point with a caller-supplied comparator.
template <class T, class C>
using SortFn = std::function<SortStats(std::span<T>, const C&, const AlgoOptions&)>;

/// Names accepted by the registry, in display order.
inline constexpr std::array<std::string_view, 4> kAlgorithmNames = {"tristate", "classic",
                                                                    "threeway", "dualpivot"};

/// Looks up a registered algorithm by name; returns an empty function for
/// unknown names.
template <class T, class C = std::compare_three_way>
SortFn<T, C> find_algorithm(std::string_view name) {
  if (name == "tristate") {
    return [](std::span<T> d, const C& c, const AlgoOptions& o) {
      TripleStateSorter<T, C> s(o.config, c, o.seed);
      return s.sort(d);
    };
  }
  if (name == "classic") {
    return [](std::span<T> d, const C& c, const AlgoOptions& o) {
      return baseline::classic_qsort(d, c, o.config.insertion_threshold);
    };
  }
  if (name == "threeway") {
    return [](std::span<T> d, const C& c, const AlgoOptions& o) {
      return baseline::three_way_qsort(d, c, o.config.insertion_threshold);
    };
  }
  if (name == "dualpivot") {
    return [](std::span<T> d, const C& c, const AlgoOptions& o) {
      return baseline::dual_pivot_qsort(d, c, o.config.insertion_threshold);
    };
  }
  return {};
}

inline std::string algorithm_list() {
  std::string s;
  for (auto n : kAlgorithmNames) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

}  // namespace tsq

#endif  // TSQ_BASELINES_HPP
