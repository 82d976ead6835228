#ifndef TSQ_SMALLSORT_HPP
#define TSQ_SMALLSORT_HPP

#include <utility>

#include "tsq/access.hpp"

namespace tsq {

/// Insertion sort of ar[from..to] that moves elements by single copies
/// through one held slot. An element displaced by d positions costs d + 2
/// writes; an element already in place costs one comparison and no write.
template <class T, class C>
void insertion_sort(const counted_span<T, C>& ar, index_t from, index_t to) {
  for (index_t k = from + 1; k <= to; ++k) {
    if (ar.compare_at(k, k - 1) < 0) {
      index_t j = k;
      T held(std::move(ar[j]));
      ar.note_write();
      ar.move(j, j - 1);
      if (--j > from) {
        while (ar.compare(held, ar[j - 1]) < 0) {
          ar.move(j, j - 1);
          if (--j == from) break;
        }
      }
      ar.store(j, held);
    }
  }
}

}  // namespace tsq

#endif  // TSQ_SMALLSORT_HPP
