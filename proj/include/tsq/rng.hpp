#ifndef TSQ_RNG_HPP
#define TSQ_RNG_HPP

#include <chrono>
#include <cstdint>

namespace tsq {

/// Multiplicative congruential step shared by the mitigation jitter and the
/// input generators: state' = (16807 * state) mod 2^31.
///
/// The modulus is a power of two, so 32-bit unsigned wraparound before the
/// reduction gives the same result as exact arithmetic.
struct park_miller {
  static constexpr std::uint32_t multiplier = 16807u;
  static constexpr std::uint32_t modulus = 2147483648u;

  static constexpr std::uint32_t step(std::uint32_t state) noexcept {
    return (multiplier * state) % modulus;
  }
};

/// Seed drawn from the wall clock; never zero modulo 2^31.
inline std::uint32_t clock_seed() noexcept {
  const auto ticks = static_cast<std::uint64_t>(
      std::chrono::high_resolution_clock::now().time_since_epoch().count());
  auto s = static_cast<std::uint32_t>(ticks ^ (ticks >> 32)) % park_miller::modulus;
  return s == 0 ? 1u : s;
}

/// Per-sorter generator for sample-position jitter. Advanced once per
/// top-level sort call.
class MitigationRng {
 public:
  explicit MitigationRng(std::uint32_t seed) noexcept : zgen_(seed) { refresh(); }
  MitigationRng() noexcept : MitigationRng(clock_seed()) {}

  void next() noexcept {
    if (zgen_ % park_miller::modulus == 0) zgen_ = clock_seed();
    zgen_ = park_miller::step(zgen_);
    refresh();
  }

  std::uint32_t state() const noexcept { return zgen_; }
  /// Scale factor in [0.5, 1.5).
  double dran() const noexcept { return dran_; }
  double dran2() const noexcept { return 1.0 + dran_; }

 private:
  void refresh() noexcept {
    dran_ = 0.5 + static_cast<double>(zgen_ % park_miller::modulus) / park_miller::modulus;
  }

  std::uint32_t zgen_;
  double dran_ = 1.0;
};

}  // namespace tsq

#endif  // TSQ_RNG_HPP
