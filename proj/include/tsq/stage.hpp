#ifndef TSQ_STAGE_HPP
#define TSQ_STAGE_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>

#include "tsq/access.hpp"

namespace tsq {

/// Index set of one partition stage over [a, b].
struct PartitionFrame {
  index_t a = 0;
  index_t b = 0;
  index_t l = 0;
  index_t r = 0;
  index_t ml = 0;
  index_t mr = 0;
  index_t m = 0;
  index_t mid = 0;
  index_t pi = 0;
  int lc = 0;
};

/// Where a stage continues once the holdover is taken. Every point except
/// Bypass assumes [a, l) < p, (r, b] > p and one empty slot at mid.
///
///   LScan       holdover taken from r; scan from l
///   LScanKnown  as LScan, cmp(ar[l], p) >= 0 already known in lc
///   RScan       holdover taken from l; scan from r
///   RScanKnown  as RScan, cmp(ar[r], p) <= 0 already known in lc
///   CloseLeft   l == mid, holdover from r; left side closed
///   CloseRight  r == mid, holdover from l; right side closed
///   Bypass      l == r == mid; the stage is already partitioned
enum class ResumePoint : std::uint8_t {
  LScan,
  LScanKnown,
  RScan,
  RScanKnown,
  CloseLeft,
  CloseRight,
  Bypass
};

/// The two substages left by a finished stage: [a, left_end] and
/// [right_begin, b]. Everything strictly between compares equal to the
/// pivot.
struct StageResult {
  index_t left_end;
  index_t right_begin;
};

enum class ClosedSide : std::uint8_t { Left, Right };

/// State after state 1 closes one side. With few equals to the pivot
/// (at most a quarter of the open gap) they go to the temp buffer (3L/3R);
/// otherwise they are rolled in place (2L/2R).
constexpr StateId choose_next_state(ClosedSide closed, index_t l, index_t ml, index_t mr,
                                    index_t r) noexcept {
  if (closed == ClosedSide::Right) {
    return mr - ml <= (ml - l) / 4 ? StateId::S3L : StateId::S2L;
  }
  return mr - ml <= (r - mr) / 4 ? StateId::S3R : StateId::S2R;
}

/// One recursive stage of the triple state partition.
///
/// The pivot and the holdover live outside the array, so two slots are
/// always empty and every element move is a single write. Elements equal to
/// the pivot are gathered around mid (state 1), then either rolled along in
/// the array (states 2L/2R) or parked in `tar` (states 3L/3R) once one side
/// of the equals block has closed.
template <class T, class C, class Buffer>
class Stage {
 public:
  /// Extracts the pivot from ar[pi] and leaves the empty slot at mid.
  Stage(const counted_span<T, C>& ar, Buffer& tar, index_t a, index_t b, index_t pi)
      : ar_(ar), tar_(tar), p_(std::move(ar[pi])) {
    ar_.note_write();
    ++ar_.stats().pivot_writes;
    f.a = a;
    f.b = b;
    f.mid = a + (b - a) / 2;
    f.pi = pi;
    f.l = a;
    f.r = b;
    if (pi != f.mid) {
      ar_.move(pi, f.mid);
      ++ar_.stats().pivot_writes;
    }
    f.m = f.ml = f.mr = f.mid;
  }

  const T& pivot() const noexcept { return p_; }
  int cmp(index_t i) const { return ar_.compare_to(i, p_); }

  void take_holdover(index_t i, int known_cmp) {
    hold_.emplace(std::move(ar_[i]));
    ar_.note_write();
    hold_cmp_ = known_cmp;
  }

  void swap_ends() { ar_.swap(f.l, f.r); }

  /// Common entry from a partially scanned frame: [a, l) < p, (r, b] > p,
  /// nothing held yet. Scans r down to the first element <= p and picks the
  /// resume point. `lc_l` is cmp(ar[l], p) when `l_known`.
  ResumePoint settle(int lc_l = 0, bool l_known = false) {
    int c = 1;
    while (f.r > f.mid && (c = cmp(f.r)) > 0) --f.r;
    if (f.r == f.mid) {
      if (!l_known) {
        while (f.l < f.mid && (lc_l = cmp(f.l)) < 0) ++f.l;
      }
      if (f.l == f.mid) return ResumePoint::Bypass;
      take_holdover(f.l, lc_l);
      return ResumePoint::CloseRight;
    }
    take_holdover(f.r, c);
    if (f.l == f.mid) return ResumePoint::CloseLeft;
    f.lc = lc_l;
    return l_known ? ResumePoint::LScanKnown : ResumePoint::LScan;
  }

  /// Runs the state machine from `rp` to the end of the stage and puts the
  /// pivot and holdover back.
  StageResult run(ResumePoint rp) {
    const counted_span<T, C>& ar = ar_;
    index_t l = f.l, r = f.r, m = f.mid, ml = f.mid, mr = f.mid;
    int lc = f.lc;
    index_t k = 0, k2 = 0;

    if (rp == ResumePoint::Bypass) {
      ar.store(f.mid, p_);
      ++ar.stats().pivot_writes;
      return end_stage(f.mid - 1, f.mid + 1);
    }
    enter(StateId::S1);
    switch (rp) {
      case ResumePoint::LScan: goto l_scan1;
      case ResumePoint::LScanKnown: goto l_scan1_4;
      case ResumePoint::RScan: goto r_scan1;
      case ResumePoint::RScanKnown: goto r_scan1_2;
      case ResumePoint::CloseLeft: goto mright;
      case ResumePoint::CloseRight: goto mleft;
      case ResumePoint::Bypass: break;
    }

    // ---- State 1. Empty slots: l_scan1 {m, r}, r_scan1 {m, l},
    // mr_scan1 / ml_scan1 {l, r}.
  l_scan1:
    while ((lc = cmp(l)) < 0) {
      ++l;
      if (l == ml) goto mright_checkm;
    }
  l_scan1_4:
    if (lc == 0) {
      ar.move(m, l);
      if (r - mr > ml - l) {
        ++mr;
        goto mr_scan1;
      }
      --ml;
      if (ml == l) goto mright;
      goto ml_scan1;
    }
    ar.move(r, l);
    --r;
    if (mr == r) goto mleft_checkm;
    goto r_scan1;

  mr_scan1:
    while ((lc = cmp(mr)) == 0) {
      ++mr;
      if (mr == r) goto mleft;
    }
    if (lc < 0) {
      ar.move(l, mr);
      ++l;
      if (ml == l) {
        ar.move(mr, ml);
        goto mright;
      }
      m = mr;
      goto l_scan1;
    }
    ar.move(r, mr);
    --r;
    if (mr == r) goto mleft;
    m = mr;
    goto r_scan1;

  ml_scan1:
    while ((lc = cmp(ml)) == 0) {
      --ml;
      if (ml == l) goto mright;
    }
    if (lc < 0) {
      ar.move(l, ml);
      ++l;
      if (l == ml) goto mright;
      m = ml;
      goto l_scan1;
    }
    ar.move(r, ml);
    --r;
    if (mr == r) {
      ar.move(ml, mr);
      goto mleft;
    }
    m = ml;
    goto r_scan1;

  r_scan1:
    while ((lc = cmp(r)) > 0) {
      --r;
      if (mr == r) goto mleft_checkm;
    }
  r_scan1_2:
    if (lc == 0) {
      ar.move(m, r);
      if (r - mr > ml - l) {
        ++mr;
        goto mr_scan1;
      }
      --ml;
      if (ml == l) goto mright;
      goto ml_scan1;
    }
    ar.move(l, r);
    ++l;
    if (ml == l) goto mright_checkm;
    goto l_scan1;

    // The left edge closed while the empty slot sat at mr: move the slot
    // to l first.
  mright_checkm:
    if (m != ml) ar.move(mr, ml);
    goto mright;

  mleft_checkm:
    if (m != mr) ar.move(ml, mr);
    goto mleft;

    // Right side closed (mr == r): extend the equals block leftwards, then
    // pick state 2L or 3L.
  mleft:
    do {
      --ml;
      if (ml == l) goto exit2;
    } while ((lc = cmp(ml)) == 0);
    m = ml;
    ++ml;
    if (choose_next_state(ClosedSide::Right, l, ml, mr, r) == StateId::S3L) {
      enter(StateId::S3L);
      goto m_scan3L_2;
    }
    enter(StateId::S2L);
    goto m_scan2L_2;

  mright:
    do {
      ++mr;
      if (mr == r) goto exit2;
    } while ((lc = cmp(mr)) == 0);
    m = mr;
    --mr;
    if (choose_next_state(ClosedSide::Left, l, ml, mr, r) == StateId::S3R) {
      enter(StateId::S3R);
      goto m_scan3R_2;
    }
    enter(StateId::S2R);
    goto m_scan2R_2;

    // ---- State 2L. Empty slots {l, r}; equals occupy (m, r).
  m_scan2L:
    while ((lc = cmp(m)) == 0) {
      --m;
      if (m == l) goto exit2;
    }
  m_scan2L_2:
    if (lc < 0) {
      ar.move(l, m);
      ++l;
      if (m == l) goto exit2;
      goto l_scan2L;
    }
    ar.move(r, m);
    --r;
    ar.move(m, r);
    --m;
    if (m == l) goto exit2;
    goto m_scan2L;

  l_scan2L:
    while ((lc = cmp(l)) < 0) {
      ++l;
      if (m == l) goto exit2;
    }
    if (lc == 0) {
      ar.move(m, l);
      --m;
      if (m == l) goto exit2;
      goto m_scan2L;
    }
    ar.move(r, l);
    --r;
    ar.move(m, r);
    --m;
    if (m == l) goto exit2;
    goto m_scan2L;

    // ---- State 2R. Empty slots {l, r}; equals occupy (l, m).
  m_scan2R:
    while ((lc = cmp(m)) == 0) {
      ++m;
      if (m == r) goto exit2;
    }
  m_scan2R_2:
    if (lc < 0) {
      ar.move(l, m);
      ++l;
      ar.move(m, l);
      ++m;
      if (m == r) goto exit2;
      goto m_scan2R;
    }
    ar.move(r, m);
    --r;
    if (m == r) goto exit2;
    goto r_scan2R;

  r_scan2R:
    while ((lc = cmp(r)) > 0) {
      --r;
      if (m == r) goto exit2;
    }
    if (lc == 0) {
      ar.move(m, r);
      ++m;
      if (m == r) goto exit2;
      goto m_scan2R;
    }
    ar.move(l, r);
    ++l;
    ar.move(m, l);
    ++m;
    if (m == r) goto exit2;
    goto m_scan2R;

    // ---- State 3L. Empty slots {l, r} plus one per buffered element, the
    // latter packed right after m. Equals still in the array sit in
    // [ml, r).
  m_scan3L:
    while ((lc = cmp(m)) == 0) {
    m_scan3L_3:
      push(m);
      --m;
      if (m == l) goto exit3L;
    }
  m_scan3L_2:
    if (lc < 0) {
    m_scan3L_4:
      ar.move(l, m);
      ++l;
      if (m == l) goto exit3L;
      goto l_scan3L;
    }
    // A run of elements > p: move it into the gap below r in one pass.
    k = m;
    do {
      --m;
      if (m == l) break;
    } while ((lc = cmp(m)) > 0);
    k2 = m + 1;
    if (k - m < r - k) {
      do {
        ar.move(r, k2);
        --r;
        if (r >= ml) push(r);
      } while (++k2 <= k);
    } else {
      for (;;) {
        ar.move(r, k2);
        --r;
        if (r >= ml) {
          push(r);
        } else if (r <= k) {
          r = k2;
          break;
        }
        ++k2;
      }
    }
    if (m == l) goto exit3L;
    if (lc == 0) goto m_scan3L_3;
    goto m_scan3L_4;

  l_scan3L:
    while ((lc = cmp(l)) < 0) {
      ++l;
      if (m == l) goto exit3L;
    }
    if (lc == 0) {
      push(l);
      --m;
      if (m == l) goto exit3L;
      goto m_scan3L;
    }
    ar.move(r, l);
    --r;
    if (r >= ml) push(r);
    --m;
    if (m == l) goto exit3L;
    goto m_scan3L;

    // ---- State 3R, the mirror of 3L.
  m_scan3R:
    while ((lc = cmp(m)) == 0) {
    m_scan3R_3:
      push(m);
      ++m;
      if (m == r) goto exit3R;
    }
  m_scan3R_2:
    if (lc > 0) {
    m_scan3R_4:
      ar.move(r, m);
      --r;
      if (m == r) goto exit3R;
      goto r_scan3R;
    }
    k = m;
    do {
      ++m;
      if (m == r) break;
    } while ((lc = cmp(m)) < 0);
    k2 = m - 1;
    if (m - k < k - l) {
      do {
        ar.move(l, k2);
        ++l;
        if (l <= mr) push(l);
      } while (--k2 >= k);
    } else {
      for (;;) {
        ar.move(l, k2);
        ++l;
        if (l <= mr) {
          push(l);
        } else if (l >= k) {
          l = k2;
          break;
        }
        --k2;
      }
    }
    if (m == r) goto exit3R;
    if (lc == 0) goto m_scan3R_3;
    goto m_scan3R_4;

  r_scan3R:
    while ((lc = cmp(r)) > 0) {
      --r;
      if (m == r) goto exit3R;
    }
    if (lc == 0) {
      push(r);
      ++m;
      if (m == r) goto exit3R;
      goto m_scan3R;
    }
    ar.move(l, r);
    ++l;
    if (l <= mr) push(l);
    ++m;
    if (m == r) goto exit3R;
    goto m_scan3R;

    // ---- Exits.
  exit3L:
    enter(StateId::Exit3L);
    while (!tar_.empty()) {
      ++m;
      ar.store(m, tar_.back());
      tar_.pop_back();
    }
    goto restore;

  exit3R:
    enter(StateId::Exit3R);
    while (!tar_.empty()) {
      --m;
      ar.store(m, tar_.back());
      tar_.pop_back();
    }
    goto restore;

  exit2:
    enter(StateId::Exit2);
  restore:
    // Slots l and r are the two empty ones; (l, r) holds the equals.
    if (hold_cmp_ >= 0) {
      ar.store(r, *hold_);
      ar.store(l, p_);
      ++ar.stats().pivot_writes;
      return end_stage(l - 1, hold_cmp_ == 0 ? r + 1 : r);
    }
    ar.store(l, *hold_);
    ar.store(r, p_);
    ++ar.stats().pivot_writes;
    return end_stage(l, r + 1);
  }

  PartitionFrame f;

 private:
  void push(index_t i) {
    assert(tar_.size() < tar_.capacity());
    tar_.push_back(std::move(ar_[i]));
    ar_.note_write();
    auto& hw = ar_.stats().temp_high_water;
    if (tar_.size() > hw) hw = tar_.size();
  }

  void enter(StateId s) {
    ++ar_.stats().state_activations[static_cast<std::size_t>(s)];
    if (ar_.tracer() != nullptr) {
      TraceEvent e{TraceKind::StateEnter, s};
      e.value = static_cast<std::int64_t>(tar_.size());
      ar_.tracer()->emit(e);
    }
  }

  StageResult end_stage(index_t left_end, index_t right_begin) {
    ++ar_.stats().stages;
    if (ar_.tracer() != nullptr) {
      TraceEvent e{TraceKind::StageEnd, StateId::S1, f.a, f.b, left_end, right_begin};
      ar_.tracer()->emit(e);
    }
    return {left_end, right_begin};
  }

  const counted_span<T, C>& ar_;
  Buffer& tar_;
  T p_;
  std::optional<T> hold_;
  int hold_cmp_ = 0;
};

}  // namespace tsq

#endif  // TSQ_STAGE_HPP
