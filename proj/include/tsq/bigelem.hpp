#ifndef TSQ_BIGELEM_HPP
#define TSQ_BIGELEM_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <new>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "tsq/compare.hpp"
#include "tsq/config.hpp"
#include "tsq/engine.hpp"

namespace tsq {

/// map[i] is the original position of the element that belongs at i.
struct Permutation {
  std::vector<std::size_t> map;

  std::size_t size() const noexcept { return map.size(); }
  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (map[i] != i) return false;
    }
    return true;
  }
};

/// Element moves apply_permutation will spend on `perm`: each nontrivial
/// cycle of length k costs k + 1.
inline std::uint64_t permutation_move_cost(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::uint64_t cost = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm.map[i] == i) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm.map[j]) {
      seen[j] = true;
      ++len;
    }
    cost += len + 1;
  }
  return cost;
}

namespace detail {

template <class T, class C>
struct indirect_compare {
  const T* base;
  const C* cmp;
  int operator()(std::size_t x, std::size_t y) const { return compare3(*cmp, base[x], base[y]); }
};

}  // namespace detail

/// Sorts position handles instead of the elements themselves. Comparisons
/// go through one indirection; only handles move. When `stats` is given,
/// comparisons and the other sort counters are recorded there, with handle
/// stores in `handle_writes` (element_writes is left alone).
template <class T, class C>
Permutation sort_indirect(std::span<const T> data, const C& cmp, const SortConfig& cfg = {},
                          SortStats* stats = nullptr, double dran = 1.0,
                          const Tracer* tracer = nullptr) {
  cfg.validate();
  Permutation perm;
  std::vector<std::size_t> tar;
  try {
    perm.map.resize(data.size());
    tar.reserve(detail::temp_capacity_for(data.size()));
  } catch (const std::bad_alloc&) {
    throw resource_error("cannot allocate index handles for late swapping");
  }
  std::iota(perm.map.begin(), perm.map.end(), std::size_t{0});

  SortStats local;
  const detail::indirect_compare<T, C> icmp{data.data(), &cmp};
  counted_span<std::size_t, detail::indirect_compare<T, C>> ops(perm.map, icmp, local, tracer);
  if (data.size() >= 2) {
    detail::sort_range(ops, tar, cfg, dran, 0, static_cast<index_t>(data.size()) - 1, 1);
  }
  if (stats != nullptr) {
    const std::uint64_t element_writes = stats->element_writes;
    *stats = local;
    stats->handle_writes = local.element_writes;
    stats->element_writes = element_writes;
    stats->pivot_writes = 0;
  }
  return perm;
}

/// Rearranges `data` so that data[i] becomes the old data[perm.map[i]],
/// following each cycle once with a single spare element. Consumes the
/// permutation (entries are cleared as their cycle completes). Returns the
/// number of element moves: cycle length + 1 per nontrivial cycle, which is
/// 0 for the identity and at most n + n / 2 overall.
template <class T>
std::uint64_t apply_permutation(std::span<T> data, Permutation& perm) {
  constexpr std::size_t done = std::numeric_limits<std::size_t>::max();
  auto& map = perm.map;
  std::uint64_t moves = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] == done) continue;
    if (map[i] == i) {
      map[i] = done;
      continue;
    }
    T spare(std::move(data[i]));
    ++moves;
    std::size_t hole = i;
    std::size_t j = i;
    do {
      const std::size_t src = map[j];
      data[hole] = std::move(data[src]);
      ++moves;
      map[j] = done;
      hole = src;
      j = src;
    } while (map[j] != i);
    data[hole] = std::move(spare);
    ++moves;
    map[j] = done;
  }
  return moves;
}

}  // namespace tsq

#endif  // TSQ_BIGELEM_HPP
