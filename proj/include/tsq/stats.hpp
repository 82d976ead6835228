#ifndef TSQ_STATS_HPP
#define TSQ_STATS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace tsq {

/// States of one partition stage, plus the three exits.
enum class StateId : std::uint8_t { S1, S2L, S2R, S3L, S3R, Exit2, Exit3L, Exit3R };

inline constexpr std::size_t kStateCount = 8;

constexpr std::string_view to_string(StateId s) noexcept {
  switch (s) {
    case StateId::S1: return "S1";
    case StateId::S2L: return "S2L";
    case StateId::S2R: return "S2R";
    case StateId::S3L: return "S3L";
    case StateId::S3R: return "S3R";
    case StateId::Exit2: return "Exit2";
    case StateId::Exit3L: return "Exit3L";
    case StateId::Exit3R: return "Exit3R";
  }
  return "?";
}

/// Legal transitions: S1 to any second-phase state or Exit2, S2x to Exit2,
/// S3L to Exit3L, S3R to Exit3R.
constexpr bool is_legal_transition(StateId from, StateId to) noexcept {
  switch (from) {
    case StateId::S1:
      return to == StateId::S2L || to == StateId::S2R || to == StateId::S3L ||
             to == StateId::S3R || to == StateId::Exit2;
    case StateId::S2L:
    case StateId::S2R:
      return to == StateId::Exit2;
    case StateId::S3L:
      return to == StateId::Exit3L;
    case StateId::S3R:
      return to == StateId::Exit3R;
    default:
      return false;
  }
}

struct HandlerCounts {
  std::uint64_t sorted = 0;
  std::uint64_t reversed = 0;
  std::uint64_t fallbacks = 0;
  std::uint64_t bypasses = 0;

  friend bool operator==(const HandlerCounts&, const HandlerCounts&) = default;
};

/// Counters produced by one sort call.
///
/// `element_writes` counts every store of an element: into the array, into
/// the pivot or holdover slot, or into the temporary buffer. `pivot_writes`
/// is the subset spent extracting and restoring pivots, so
/// `element_writes - pivot_writes` is the migration traffic.
struct SortStats {
  std::uint64_t comparisons = 0;
  std::uint64_t element_writes = 0;
  std::uint64_t pivot_writes = 0;
  std::uint64_t temp_high_water = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t stages = 0;
  std::array<std::uint64_t, kStateCount> state_activations{};
  HandlerCounts handler_activations;
  // Only used by the late-swapping path: writes of index handles while the
  // indirection is sorted.
  std::uint64_t handle_writes = 0;

  double virtual_swaps() const noexcept {
    return static_cast<double>(element_writes) / 3.0;
  }
  std::uint64_t migration_writes() const noexcept { return element_writes - pivot_writes; }
  std::uint64_t activations(StateId s) const noexcept {
    return state_activations[static_cast<std::size_t>(s)];
  }

  void note_depth(std::uint64_t depth) noexcept { max_depth = std::max(max_depth, depth); }

  friend bool operator==(const SortStats&, const SortStats&) = default;
};

}  // namespace tsq

#endif  // TSQ_STATS_HPP
