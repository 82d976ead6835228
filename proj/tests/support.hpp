#ifndef TSQ_TESTS_SUPPORT_HPP
#define TSQ_TESTS_SUPPORT_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsq/access.hpp"
#include "tsq/stage.hpp"
#include "tsq/stats.hpp"

namespace tsq::testing {

/// Merge sort kept separate from everything under test.
template <class T>
std::vector<T> reference_sort(std::vector<T> v) {
  std::vector<T> tmp(v.size());
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) tmp[k++] = v[j] < v[i] ? v[j++] : v[i++];
      while (i < mid) tmp[k++] = v[i++];
      while (j < hi) tmp[k++] = v[j++];
    }
    v.swap(tmp);
  }
  return v;
}

/// Three-way layout of [a, b] around p with boundaries left_end and
/// right_begin: below, equal, above.
template <class T>
bool three_way_layout(std::span<const T> v, std::ptrdiff_t a, std::ptrdiff_t b,
                      std::ptrdiff_t left_end, std::ptrdiff_t right_begin, const T& p) {
  if (!(a - 1 <= left_end && left_end < right_begin && right_begin <= b + 1)) return false;
  if (right_begin - left_end < 2) return false;
  for (std::ptrdiff_t i = a; i <= b; ++i) {
    const T& x = v[static_cast<std::size_t>(i)];
    if (i <= left_end && !(x < p)) return false;
    if (i >= right_begin && !(p < x)) return false;
    if (i > left_end && i < right_begin && (x < p || p < x)) return false;
  }
  return true;
}

/// Runs a single partition stage over all of `v` with the pivot taken from
/// index `pi`, through the general state machine.
template <class T>
struct StageRun {
  StageResult result;
  T pivot;
  SortStats stats;
};

template <class T>
StageRun<T> run_stage(std::vector<T>& v, std::ptrdiff_t pi, const Tracer* tracer = nullptr) {
  StageRun<T> out{{0, 0}, v[static_cast<std::size_t>(pi)], {}};
  std::compare_three_way cmp;
  counted_span<T, std::compare_three_way> ar(v, cmp, out.stats, tracer);
  std::vector<T> tar;
  tar.reserve(v.size() / 2 + 1);
  Stage<T, std::compare_three_way, std::vector<T>> st(ar, tar, 0,
                                                      static_cast<std::ptrdiff_t>(v.size()) - 1, pi);
  out.result = st.run(st.settle());
  return out;
}

}  // namespace tsq::testing

#endif  // TSQ_TESTS_SUPPORT_HPP
