#ifndef TSQ_CONFIG_HPP
#define TSQ_CONFIG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsq {

/// Raised when a SortConfig breaks its ordering invariants.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the retained temporary buffer cannot be allocated. The input
/// range is left untouched when this is thrown.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tuning knobs for the sorter.
///
/// Subranges of at most `insertion_threshold` elements are finished with
/// insertion sort. Larger stages pick a pivot by sample size:
/// median-of-3 below `medof3_max_n`, median-of-5 below `medof5_max_n`,
/// the ninther below `ninther_max_n`, and the fifteenth above that.
struct SortConfig {
  std::size_t insertion_threshold = 16;
  std::size_t medof3_max_n = 70;
  std::size_t medof5_max_n = 600;
  std::size_t ninther_max_n = 60000;

  // Non-conforming elements the reversed-input handler absorbs before it
  // falls back to the general partition.
  std::size_t reverse_tolerance = 3;

  // Jitter interior sample positions by a per-call random factor.
  bool mitigation_enabled = true;

  // Element types at least this large are sorted through an index
  // indirection and permuted once at the end.
  std::size_t late_swap_byte_threshold = 320;

  // When false, small stages use median-of-5 instead of median-of-3 so that
  // every stage has jittered samples.
  bool medof3_small_enabled = true;

  void validate() const {
    if (insertion_threshold < 3) {
      throw config_error("insertion_threshold must be at least 3, got " +
                         std::to_string(insertion_threshold));
    }
    if (!(insertion_threshold < medof3_max_n && medof3_max_n < medof5_max_n &&
          medof5_max_n < ninther_max_n)) {
      throw config_error(
          "thresholds must be strictly increasing: insertion_threshold < "
          "medof3_max_n < medof5_max_n < ninther_max_n");
    }
  }
};

}  // namespace tsq

#endif  // TSQ_CONFIG_HPP
