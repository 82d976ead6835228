#ifndef TSQ_COMPARE_HPP
#define TSQ_COMPARE_HPP

#include <compare>
#include <concepts>
#include <type_traits>

namespace tsq {

namespace detail {

template <class R>
concept ordering_result = std::same_as<R, std::strong_ordering> ||
                          std::same_as<R, std::weak_ordering> ||
                          std::same_as<R, std::partial_ordering>;

}  // namespace detail

/// A three-way comparator: returns a negative / zero / positive integer, or a
/// standard ordering, for (x, y). Must describe a total preorder.
template <class C, class T>
concept three_way_comparator =
    std::copy_constructible<C> && requires(const C& c, const T& x, const T& y) {
      { c(x, y) };
    } && (std::is_integral_v<std::invoke_result_t<const C&, const T&, const T&>> ||
          detail::ordering_result<std::invoke_result_t<const C&, const T&, const T&>>);

/// Collapses a comparator result to -1, 0 or +1.
template <class R>
constexpr int sign_of(R r) noexcept {
  if constexpr (std::is_integral_v<R>) {
    return (r > 0) - (r < 0);
  } else {
    return r < 0 ? -1 : (r > 0 ? 1 : 0);
  }
}

template <class C, class T>
constexpr int compare3(const C& c, const T& x, const T& y) {
  return sign_of(c(x, y));
}

/// Wraps a two-argument less-than predicate as a three-way comparator. Costs
/// one or two predicate calls per comparison.
template <class Less>
struct from_less {
  Less less{};

  template <class T>
  int operator()(const T& x, const T& y) const {
    if (less(x, y)) return -1;
    return less(y, x) ? 1 : 0;
  }
};

}  // namespace tsq

#endif  // TSQ_COMPARE_HPP
