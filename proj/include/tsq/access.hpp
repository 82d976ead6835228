#ifndef TSQ_ACCESS_HPP
#define TSQ_ACCESS_HPP

#include <cstddef>
#include <span>
#include <utility>

#include "tsq/compare.hpp"
#include "tsq/stats.hpp"
#include "tsq/trace.hpp"

namespace tsq {

using index_t = std::ptrdiff_t;

/// A span bundled with the comparator and the counters every algorithm in
/// this library reports. Each element store and each comparator call goes
/// through here, so the counts are exact.
template <class T, class Compare>
class counted_span {
 public:
  counted_span(std::span<T> data, const Compare& cmp, SortStats& stats,
               const Tracer* tracer = nullptr) noexcept
      : data_(data), cmp_(&cmp), stats_(&stats), tracer_(tracer) {}

  std::span<T> data() const noexcept { return data_; }
  index_t size() const noexcept { return static_cast<index_t>(data_.size()); }
  T& operator[](index_t i) const noexcept { return data_[static_cast<std::size_t>(i)]; }

  int compare(const T& x, const T& y) const {
    ++stats_->comparisons;
    trace_compare(-1, -1);
    return compare3(*cmp_, x, y);
  }
  int compare_at(index_t i, index_t j) const {
    ++stats_->comparisons;
    trace_compare(i, j);
    return compare3(*cmp_, (*this)[i], (*this)[j]);
  }
  // cmp(ar[i], v) for a held value v
  int compare_to(index_t i, const T& v) const {
    ++stats_->comparisons;
    trace_compare(i, -1);
    return compare3(*cmp_, (*this)[i], v);
  }

  // ar[dst] = ar[src]
  void move(index_t dst, index_t src) const {
    (*this)[dst] = std::move((*this)[src]);
    count_write(dst);
  }
  // ar[dst] = value
  void store(index_t dst, T& value) const {
    (*this)[dst] = std::move(value);
    count_write(dst);
  }
  void swap(index_t i, index_t j) const {
    T tmp(std::move((*this)[i]));
    count_write(-1);
    (*this)[i] = std::move((*this)[j]);
    count_write(i);
    (*this)[j] = std::move(tmp);
    count_write(j);
  }
  // Accounts for a store into a held slot (pivot, holdover, spare, buffer).
  void note_write() const { count_write(-1); }

  const Compare& comparator() const noexcept { return *cmp_; }
  SortStats& stats() const noexcept { return *stats_; }
  const Tracer* tracer() const noexcept { return tracer_; }
  bool tracing() const noexcept { return tracer_ != nullptr && tracer_->enabled(); }

 private:
  void count_write(index_t dst) const {
    ++stats_->element_writes;
    if (tracer_ != nullptr) tracer_->emit({TraceKind::Write, StateId::S1, dst});
  }
  void trace_compare(index_t i, index_t j) const {
    if (tracer_ != nullptr) tracer_->emit({TraceKind::Compare, StateId::S1, i, j});
  }

  std::span<T> data_;
  const Compare* cmp_;
  SortStats* stats_;
  const Tracer* tracer_;
};

}  // namespace tsq

#endif  // TSQ_ACCESS_HPP
