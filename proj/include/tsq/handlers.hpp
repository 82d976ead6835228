#ifndef TSQ_HANDLERS_HPP
#define TSQ_HANDLERS_HPP

#include <cstddef>

#include "tsq/stage.hpp"

namespace tsq {

/// Result of a fast-path handler: either the stage is already partitioned
/// (Bypass) or the core resumes at `resume` with the scanned prefix and
/// suffix kept.
struct HandlerOutcome {
  ResumePoint resume = ResumePoint::LScan;
  bool bypass() const noexcept { return resume == ResumePoint::Bypass; }
};

/// Possibly sorted stage: check that the left part is below the pivot and
/// the right part above it, without moving anything. The first mismatch
/// hands the frame to the core.
template <class Stage>
HandlerOutcome handle_possibly_sorted(Stage& st) {
  auto& f = st.f;
  int c = -1;
  while (f.l < f.mid && (c = st.cmp(f.l)) < 0) ++f.l;
  return {st.settle(c, f.l < f.mid)};
}

/// Possibly reversed stage: swap ar[l] > p with ar[r] < p pairwise from the
/// outside in. Elements already on their own side are skipped, but only
/// `tolerance` times per side before the core takes over.
template <class Stage>
HandlerOutcome handle_possibly_reversed(Stage& st, std::size_t tolerance) {
  auto& f = st.f;
  std::size_t cl = 0;
  std::size_t cr = 0;
  for (;;) {
    if (f.l == f.mid || f.r == f.mid) return {st.settle()};
    const int c = st.cmp(f.l);
    if (c < 0) {
      ++f.l;
      if (++cl > tolerance) return {st.settle()};
      continue;
    }
    if (c == 0) return {st.settle(0, true)};
    for (;;) {
      const int d = st.cmp(f.r);
      if (d < 0) {
        st.swap_ends();
        ++f.l;
        --f.r;
        break;
      }
      if (d == 0) {
        st.take_holdover(f.l, c);
        f.lc = 0;
        return {ResumePoint::RScanKnown};
      }
      --f.r;
      if (f.r == f.mid) {
        st.take_holdover(f.l, c);
        return {ResumePoint::CloseRight};
      }
      if (++cr > tolerance) {
        st.take_holdover(f.l, c);
        return {ResumePoint::RScan};
      }
    }
  }
}

}  // namespace tsq

#endif  // TSQ_HANDLERS_HPP
