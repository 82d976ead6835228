#ifndef TSQ_INSTRUMENT_HPP
#define TSQ_INSTRUMENT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "tsq/compare.hpp"
#include "tsq/trace.hpp"

namespace tsq::instrument {

/// Forwards to `inner` and counts every call. Copies share the counter.
template <class C>
class counting_comparator {
 public:
  explicit counting_comparator(C inner = C{})
      : inner_(std::move(inner)), count_(std::make_shared<std::uint64_t>(0)) {}

  template <class T>
  auto operator()(const T& x, const T& y) const {
    ++*count_;
    return inner_(x, y);
  }

  std::uint64_t count() const noexcept { return *count_; }
  void reset() noexcept { *count_ = 0; }
  std::shared_ptr<std::uint64_t> handle() const noexcept { return count_; }

 private:
  C inner_;
  std::shared_ptr<std::uint64_t> count_;
};

struct write_counter {
  std::uint64_t writes = 0;
};

/// An element that counts every copy or move made of it and remembers
/// whether it has been moved from (a hollow slot). The counter travels with
/// the value, so temporaries and buffer entries are counted too.
template <class T>
class tracked {
 public:
  tracked() = default;
  explicit tracked(T value, write_counter* counter = nullptr)
      : value_(std::move(value)), counter_(counter) {}

  tracked(const tracked& o) : value_(o.value_), hollow_(o.hollow_), counter_(o.counter_) { bump(); }
  tracked(tracked&& o) noexcept
      : value_(std::move(o.value_)), hollow_(o.hollow_), counter_(o.counter_) {
    o.hollow_ = true;
    bump();
  }
  tracked& operator=(const tracked& o) {
    value_ = o.value_;
    hollow_ = o.hollow_;
    if (counter_ == nullptr) counter_ = o.counter_;
    bump();
    return *this;
  }
  tracked& operator=(tracked&& o) noexcept {
    value_ = std::move(o.value_);
    hollow_ = o.hollow_;
    if (counter_ == nullptr) counter_ = o.counter_;
    o.hollow_ = true;
    bump();
    return *this;
  }

  const T& value() const noexcept { return value_; }
  bool hollow() const noexcept { return hollow_; }
  void attach(write_counter* counter) noexcept { counter_ = counter; }

  friend auto operator<=>(const tracked& a, const tracked& b) { return a.value_ <=> b.value_; }
  friend bool operator==(const tracked& a, const tracked& b) { return a.value_ == b.value_; }

 private:
  void bump() noexcept {
    if (counter_ != nullptr) ++counter_->writes;
  }

  T value_{};
  bool hollow_ = false;
  write_counter* counter_ = nullptr;
};

template <class T>
std::size_t hollow_count(std::span<const tracked<T>> ar) {
  std::size_t k = 0;
  for (const auto& e : ar) k += e.hollow() ? 1 : 0;
  return k;
}

/// A copy of an array whose element stores are counted independently of
/// the sort's own statistics. Setting up the copy is not counted.
template <class T>
class shadow_array {
 public:
  explicit shadow_array(std::span<const T> src) : counter_(std::make_unique<write_counter>()) {
    elems_.reserve(src.size());
    for (const T& v : src) elems_.emplace_back(v);
    for (auto& e : elems_) e.attach(counter_.get());
  }

  std::span<tracked<T>> span() noexcept { return elems_; }
  std::vector<tracked<T>>& elements() noexcept { return elems_; }
  std::uint64_t writes() const noexcept { return counter_->writes; }
  std::size_t hollow() const { return hollow_count<T>(elems_); }

  std::vector<T> values() const {
    std::vector<T> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(e.value());
    return out;
  }

 private:
  std::unique_ptr<write_counter> counter_;
  std::vector<tracked<T>> elems_;
};

template <class T>
shadow_array<T> shadow_write_monitor(std::span<const T> src) {
  return shadow_array<T>(src);
}

/// Comparator over tracked<T> that compares the wrapped values with `inner`.
template <class C>
struct unwrap_compare {
  C inner{};
  template <class T>
  int operator()(const tracked<T>& x, const tracked<T>& y) const {
    return compare3(inner, x.value(), y.value());
  }
};

}  // namespace tsq::instrument

#endif  // TSQ_INSTRUMENT_HPP
