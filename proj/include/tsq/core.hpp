#ifndef TSQ_CORE_HPP
#define TSQ_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tsq/bigelem.hpp"
#include "tsq/config.hpp"
#include "tsq/engine.hpp"
#include "tsq/rng.hpp"
#include "tsq/stats.hpp"
#include "tsq/trace.hpp"

namespace tsq {

/// Triple State Quicksort.
///
/// Holds the retained temporary buffer (ceil(n/2) elements for the largest
/// n sorted so far) and the mitigation generator. One instance must not be
/// used from two threads at once; independent instances may.
template <class T, class Compare = std::compare_three_way, class Alloc = std::allocator<T>>
  requires three_way_comparator<Compare, T>
class TripleStateSorter {
 public:
  using value_type = T;
  using comparator_type = Compare;

  TripleStateSorter() : TripleStateSorter(SortConfig{}) {}

  /// `seed` fixes the mitigation generator; without it the wall clock is
  /// used.
  explicit TripleStateSorter(SortConfig config, Compare cmp = Compare{},
                             std::optional<std::uint32_t> seed = std::nullopt,
                             const Alloc& alloc = Alloc{})
      : cfg_(config),
        cmp_(std::move(cmp)),
        rng_(seed ? MitigationRng(*seed) : MitigationRng()),
        tar_(alloc) {
    cfg_.validate();
  }

  /// Sorts `data` nondecreasing under the comparator and returns the
  /// counters for this call.
  SortStats sort(std::span<T> data) {
    SortStats stats;
    const std::size_t n = data.size();
    if (cfg_.mitigation_enabled) rng_.next();
    const double dran = cfg_.mitigation_enabled ? rng_.dran() : 1.0;
    if (n < 2) return stats;
    const Tracer* tracer = tracer_.enabled() ? &tracer_ : nullptr;

    if (sizeof(T) >= cfg_.late_swap_byte_threshold) {
      Permutation perm = sort_indirect(std::span<const T>(data.data(), n), cmp_, cfg_, &stats,
                                       dran, tracer);
      stats.element_writes += apply_permutation(data, perm);
      return stats;
    }

    reserve(n);
    counted_span<T, Compare> ops(data, cmp_, stats, tracer);
    detail::sort_range(ops, tar_, cfg_, dran, 0, static_cast<index_t>(n) - 1, 1);
    return stats;
  }

  SortStats sort(std::vector<T, Alloc>& v) { return sort(std::span<T>(v)); }

  /// Makes sure a sort of n elements will not allocate. Throws
  /// resource_error on allocation failure.
  void reserve(std::size_t n) {
    const std::size_t need = detail::temp_capacity_for(n);
    if (tar_.capacity() >= need) return;
    try {
      std::vector<T, Alloc> fresh(tar_.get_allocator());
      fresh.reserve(need);
      tar_.swap(fresh);
    } catch (const std::bad_alloc&) {
      throw resource_error("cannot allocate temporary buffer of " + std::to_string(need) +
                           " elements");
    } catch (const std::length_error&) {
      throw resource_error("temporary buffer of " + std::to_string(need) +
                           " elements exceeds the allocator limit");
    }
    ++allocations_;
  }

  /// Releases the retained buffer; the next sort allocates again.
  void free_temp_storage() noexcept {
    std::vector<T, Alloc> empty(tar_.get_allocator());
    tar_.swap(empty);
  }

  std::size_t temp_capacity() const noexcept { return tar_.capacity(); }
  std::uint64_t allocation_count() const noexcept { return allocations_; }

  void set_tracer(Tracer tracer) { tracer_ = std::move(tracer); }
  const SortConfig& config() const noexcept { return cfg_; }
  const Compare& comparator() const noexcept { return cmp_; }
  const MitigationRng& rng() const noexcept { return rng_; }

 private:
  SortConfig cfg_;
  Compare cmp_;
  MitigationRng rng_;
  std::vector<T, Alloc> tar_;
  std::uint64_t allocations_ = 0;
  Tracer tracer_;
};

/// Sorts `data` with a throwaway sorter and returns its counters.
template <class T, class Compare = std::compare_three_way>
SortStats sort_with_stats(std::span<T> data, Compare cmp = Compare{}, SortConfig config = {},
                          std::optional<std::uint32_t> seed = std::nullopt) {
  TripleStateSorter<T, Compare> sorter(config, std::move(cmp), seed);
  return sorter.sort(data);
}

template <class T, class Compare = std::compare_three_way>
void sort(std::span<T> data, Compare cmp = Compare{}, SortConfig config = {}) {
  sort_with_stats(data, std::move(cmp), config);
}

template <class T, class Compare = std::compare_three_way>
void sort(std::vector<T>& data, Compare cmp = Compare{}, SortConfig config = {}) {
  sort_with_stats(std::span<T>(data), std::move(cmp), config);
}

}  // namespace tsq

#endif  // TSQ_CORE_HPP
