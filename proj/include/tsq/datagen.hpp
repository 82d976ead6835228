#ifndef TSQ_DATAGEN_HPP
#define TSQ_DATAGEN_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsq/config.hpp"
#include "tsq/rng.hpp"

namespace tsq::gen {

using Key = std::int64_t;

enum class Distribution { Sawtooth, Random, Stagger, Plateau, Shuffle, Hill, OrganPipes };
enum class Reorder { Identity, Sorted, Reversed, FrontHalfReversed, BackHalfReversed, Dither, Fort };

inline constexpr std::array<Distribution, 7> kDistributions{
    Distribution::Sawtooth, Distribution::Random, Distribution::Stagger, Distribution::Plateau,
    Distribution::Shuffle,  Distribution::Hill,   Distribution::OrganPipes};

/// The battery orderings; Identity is available but not part of it.
inline constexpr std::array<Reorder, 6> kBatteryReorders{
    Reorder::Sorted,           Reorder::Reversed, Reorder::FrontHalfReversed,
    Reorder::BackHalfReversed, Reorder::Dither,   Reorder::Fort};

inline constexpr std::array<Reorder, 7> kReorders{
    Reorder::Identity,         Reorder::Sorted, Reorder::Reversed, Reorder::FrontHalfReversed,
    Reorder::BackHalfReversed, Reorder::Dither, Reorder::Fort};

inline constexpr std::string_view to_string(Distribution d) noexcept {
  switch (d) {
    case Distribution::Sawtooth: return "sawtooth";
    case Distribution::Random: return "random";
    case Distribution::Stagger: return "stagger";
    case Distribution::Plateau: return "plateau";
    case Distribution::Shuffle: return "shuffle";
    case Distribution::Hill: return "hill";
    case Distribution::OrganPipes: return "organpipes";
  }
  return "?";
}

inline constexpr std::string_view to_string(Reorder r) noexcept {
  switch (r) {
    case Reorder::Identity: return "identity";
    case Reorder::Sorted: return "sorted";
    case Reorder::Reversed: return "reversed";
    case Reorder::FrontHalfReversed: return "fronthalf";
    case Reorder::BackHalfReversed: return "backhalf";
    case Reorder::Dither: return "dither";
    case Reorder::Fort: return "fort";
  }
  return "?";
}

inline std::optional<Distribution> parse_distribution(std::string_view s) {
  for (Distribution d : kDistributions) {
    if (to_string(d) == s) return d;
  }
  return std::nullopt;
}

inline std::optional<Reorder> parse_reorder(std::string_view s) {
  for (Reorder r : kReorders) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

/// Park-Miller generator used for input data. Seed 0 is a fixed point of
/// the recurrence and is replaced by 1.
class ParkMillerGen {
 public:
  explicit ParkMillerGen(std::uint32_t seed = 1) noexcept
      : zgen_(seed % park_miller::modulus == 0 ? 1u : seed) {}

  /// Uniform in [0, 1).
  double gen_rand() noexcept {
    zgen_ = park_miller::step(zgen_);
    return static_cast<double>(zgen_) / park_miller::modulus;
  }

  /// Integer in [smallest, largest].
  Key gen_random2(Key smallest, Key largest) noexcept {
    return static_cast<Key>(gen_rand() * static_cast<double>(largest - smallest + 1)) + smallest;
  }

  std::uint32_t state() const noexcept { return zgen_; }

 private:
  std::uint32_t zgen_;
};

struct GenSpec {
  Distribution distribution = Distribution::Random;
  Reorder reorder = Reorder::Identity;
  std::size_t n = 0;
  Key arange = 500;
  std::uint32_t seed = 1;
  Key op_max_distance = 100;
  Key op_add = 0;
  std::size_t fort_minl = 2;

  void validate() const {
    if (arange < 1) throw config_error("arange must be at least 1");
    if (fort_minl < 2) throw config_error("fort_minl must be at least 2");
    if (distribution == Distribution::OrganPipes && op_max_distance < 1) {
      throw config_error("op_max_distance must be at least 1");
    }
  }
};

inline void hill(std::span<Key> ar, Key arange) {
  const auto size = static_cast<Key>(ar.size());
  for (Key i = 0; i < size; ++i) ar[i] = std::min(i < (size >> 1) ? i : size - i, arange);
}

inline void organ_pipes(std::span<Key> ar, Key arange, Key op_max_distance, Key op_add,
                        ParkMillerGen& g) {
  double v1 = static_cast<double>(g.gen_random2(1, arange));
  std::size_t i = 0;
  while (i < ar.size()) {
    const double v2 = static_cast<double>(g.gen_random2(1, arange) + op_add);
    Key dist = g.gen_random2(1, op_max_distance);
    const double step = (v2 - v1) / static_cast<double>(dist);
    while (dist != 0 && i < ar.size()) {
      ar[i++] = static_cast<Key>(v1);
      v1 += step;
      --dist;
    }
    v1 = v2;
  }
}

inline void reverse(std::span<Key> ar, std::size_t a, std::size_t b) {
  std::reverse(ar.begin() + static_cast<std::ptrdiff_t>(a),
               ar.begin() + static_cast<std::ptrdiff_t>(b) + 1);
}

inline void fort(std::span<Key> ar, std::size_t a, std::size_t b, std::size_t minl) {
  reverse(ar, a, b);
  if (b - a + 1 > minl) {
    const std::size_t h = (a + b) >> 1;
    fort(ar, a, h, minl);
    fort(ar, h + 1, b, minl);
  }
}

inline void fill(std::span<Key> ar, const GenSpec& spec, ParkMillerGen& g) {
  const Key m = spec.arange;
  const auto n = static_cast<Key>(ar.size());
  switch (spec.distribution) {
    case Distribution::Sawtooth:
      for (Key i = 0; i < n; ++i) ar[i] = i % m;
      break;
    case Distribution::Random:
      for (Key i = 0; i < n; ++i) ar[i] = g.gen_random2(1, m);
      break;
    case Distribution::Stagger:
      for (Key i = 0; i < n; ++i) ar[i] = (i * m + i) % n;
      break;
    case Distribution::Plateau:
      for (Key i = 0; i < n; ++i) ar[i] = std::min(i, m);
      break;
    case Distribution::Shuffle: {
      Key j = 0;
      Key k = 1;
      for (Key i = 0; i < n; ++i) ar[i] = g.gen_random2(0, m - 1) != 0 ? (j += 2) : (k += 2);
      break;
    }
    case Distribution::Hill:
      hill(ar, m);
      break;
    case Distribution::OrganPipes:
      organ_pipes(ar, m, spec.op_max_distance, spec.op_add, g);
      break;
  }
}

inline void reorder(std::span<Key> ar, Reorder kind, std::size_t fort_minl = 2) {
  const std::size_t n = ar.size();
  switch (kind) {
    case Reorder::Identity:
      return;
    case Reorder::Dither:
      for (std::size_t i = 0; i < n; ++i) ar[i] += static_cast<Key>(i % 5);
      return;
    default:
      break;
  }
  std::sort(ar.begin(), ar.end());
  if (n < 2) return;
  switch (kind) {
    case Reorder::Reversed:
      reverse(ar, 0, n - 1);
      break;
    case Reorder::FrontHalfReversed:
      if (n / 2 >= 2) reverse(ar, 0, n / 2 - 1);
      break;
    case Reorder::BackHalfReversed:
      reverse(ar, n / 2, n - 1);
      break;
    case Reorder::Fort:
      fort(ar, 0, n - 1, fort_minl);
      break;
    default:
      break;
  }
}

/// Pure function of `spec`.
inline std::vector<Key> generate(const GenSpec& spec) {
  spec.validate();
  std::vector<Key> v(spec.n);
  ParkMillerGen g(spec.seed);
  fill(v, spec, g);
  reorder(v, spec.reorder, spec.fort_minl);
  return v;
}

/// A random permutation of 1..n (Fisher-Yates over the Park-Miller stream).
inline std::vector<Key> distinct_keys(std::size_t n, std::uint32_t seed) {
  std::vector<Key> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Key>(i) + 1;
  ParkMillerGen g(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(g.gen_random2(0, static_cast<Key>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
  return v;
}

/// One decimal value per line.
inline void write_column(std::ostream& os, std::span<const Key> values) {
  for (Key v : values) os << v << '\n';
}

inline std::vector<Key> read_column(std::istream& is) {
  std::vector<Key> out;
  Key v;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw config_error("malformed value column");
  return out;
}

/// McIlroy's adversary. Items are positions 0..n-1; every item starts as
/// "gas" (larger than any solid value) and is frozen to the next solid value
/// when the target compares two gas items. The comparator refers to the
/// adversary by pointer and must not outlive it.
class KillerAdversary {
 public:
  explicit KillerAdversary(std::size_t n)
      : gas_(static_cast<Key>(n)), val_(n, static_cast<Key>(n)) {}

  /// The items to hand to the target sort.
  std::vector<Key> items() const {
    std::vector<Key> v(val_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Key>(i);
    return v;
  }

  int compare(Key x, Key y) {
    ++comparisons_;
    auto& vx = val_[static_cast<std::size_t>(x)];
    auto& vy = val_[static_cast<std::size_t>(y)];
    if (vx == gas_ && vy == gas_) {
      if (x == candidate_) {
        vx = nsolid_++;
      } else {
        vy = nsolid_++;
      }
    }
    if (vx == gas_) {
      candidate_ = x;
    } else if (vy == gas_) {
      candidate_ = y;
    }
    return (vx > vy) - (vx < vy);
  }

  struct comparator {
    KillerAdversary* adv;
    int operator()(Key x, Key y) const { return adv->compare(x, y); }
  };

  comparator cmp() noexcept { return comparator{this}; }

  /// The cooked input: position i holds the value the adversary assigned to
  /// item i. Items never frozen keep the gas value, which the run only ever
  /// compared against solids.
  std::vector<Key> cooked() const { return val_; }

  std::uint64_t comparisons() const noexcept { return comparisons_; }

 private:
  Key gas_;
  std::vector<Key> val_;
  Key nsolid_ = 0;
  Key candidate_ = -1;
  std::uint64_t comparisons_ = 0;
};

/// Runs `target(items, cmp)` once against a fresh adversary and returns the
/// cooked input.
template <class Target>
std::vector<Key> cook_killer(std::size_t n, Target&& target) {
  KillerAdversary adv(n);
  std::vector<Key> items = adv.items();
  target(items, adv.cmp());
  return adv.cooked();
}

}  // namespace tsq::gen

#endif  // TSQ_DATAGEN_HPP
