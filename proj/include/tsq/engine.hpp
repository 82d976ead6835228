#ifndef TSQ_ENGINE_HPP
#define TSQ_ENGINE_HPP

#include <cstdint>

#include "tsq/access.hpp"
#include "tsq/config.hpp"
#include "tsq/handlers.hpp"
#include "tsq/pivot.hpp"
#include "tsq/smallsort.hpp"
#include "tsq/stage.hpp"

namespace tsq::detail {

template <class T, class C, class Buffer>
StageResult partition_stage(const counted_span<T, C>& ar, Buffer& tar, const SortConfig& cfg,
                            double dran, index_t a, index_t b) {
  const PivotDecision d = select_pivot(ar, a, b, cfg, dran);
  Stage<T, C, Buffer> st(ar, tar, a, b, d.pi);
  auto& handlers = ar.stats().handler_activations;

  HandlerOutcome out;
  if (d.order_flag == OrderFlag::Unknown) {
    out = {st.settle()};
    return st.run(out.resume);
  }
  if (ar.tracer() != nullptr) {
    TraceEvent e{TraceKind::HandlerEnter};
    e.value = static_cast<int>(d.order_flag);
    ar.tracer()->emit(e);
  }
  if (d.order_flag == OrderFlag::Sorted) {
    ++handlers.sorted;
    out = handle_possibly_sorted(st);
  } else {
    ++handlers.reversed;
    out = handle_possibly_reversed(st, cfg.reverse_tolerance);
  }
  if (out.bypass()) {
    ++handlers.bypasses;
  } else {
    ++handlers.fallbacks;
    if (ar.tracer() != nullptr) {
      TraceEvent e{TraceKind::HandlerFallback};
      e.value = static_cast<int>(out.resume);
      ar.tracer()->emit(e);
    }
  }
  return st.run(out.resume);
}

/// Sorts ar[a..b]. Recurses into the smaller substage and loops on the
/// larger one, so the call stack stays O(log n) deep. `depth` is the
/// logical recursion depth of [a, b].
template <class T, class C, class Buffer>
void sort_range(const counted_span<T, C>& ar, Buffer& tar, const SortConfig& cfg, double dran,
                index_t a, index_t b, std::uint64_t depth) {
  for (;;) {
    const index_t n = b - a + 1;
    if (n < 2) return;
    ar.stats().note_depth(depth);
    if (n <= static_cast<index_t>(cfg.insertion_threshold)) {
      insertion_sort(ar, a, b);
      return;
    }
    const StageResult s = partition_stage(ar, tar, cfg, dran, a, b);
    if (s.left_end - a < b - s.right_begin) {
      sort_range(ar, tar, cfg, dran, a, s.left_end, depth + 1);
      a = s.right_begin;
    } else {
      sort_range(ar, tar, cfg, dran, s.right_begin, b, depth + 1);
      b = s.left_end;
    }
    ++depth;
  }
}

/// Temp buffer size needed to sort n elements: ceil(n / 2).
constexpr std::size_t temp_capacity_for(std::size_t n) noexcept { return n / 2 + n % 2; }

}  // namespace tsq::detail

#endif  // TSQ_ENGINE_HPP
