#ifndef TSQ_BENCH_HPP
#define TSQ_BENCH_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include "tsq/baselines.hpp"
#include "tsq/config.hpp"
#include "tsq/datagen.hpp"

namespace tsq::bench {

using gen::Key;

class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRecord {
  std::string algorithm;
  std::string distribution;
  std::string reorder;
  std::uint64_t n = 0;
  Key arange = 0;
  std::uint32_t seed = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t element_writes = 0;
  double virtual_swaps = 0;
  std::uint64_t temp_high_water = 0;
  std::uint64_t max_depth = 0;
  std::int64_t wall_ns = 0;

  bool operator==(const BenchRecord&) const = default;
};

inline constexpr std::string_view kCsvHeader =
    "algorithm,distribution,reorder,n,arange,seed,comparisons,element_writes,virtual_swaps,"
    "temp_high_water,max_depth,wall_ns";

inline std::string format_real(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

inline std::string to_csv_row(const BenchRecord& r) {
  std::string s;
  s += r.algorithm + ',' + r.distribution + ',' + r.reorder + ',';
  s += std::to_string(r.n) + ',' + std::to_string(r.arange) + ',' + std::to_string(r.seed) + ',';
  s += std::to_string(r.comparisons) + ',' + std::to_string(r.element_writes) + ',';
  s += format_real(r.virtual_swaps) + ',';
  s += std::to_string(r.temp_high_water) + ',' + std::to_string(r.max_depth) + ',';
  s += std::to_string(r.wall_ns);
  return s;
}

namespace detail {

template <class N>
N parse_number(std::string_view field) {
  N v{};
  const auto r = std::from_chars(field.data(), field.data() + field.size(), v);
  if (r.ec != std::errc{} || r.ptr != field.data() + field.size()) {
    throw config_error("bad numeric field '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace detail

inline BenchRecord parse_csv_row(std::string_view line) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    f.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (f.size() != 12) throw config_error("expected 12 fields, got " + std::to_string(f.size()));
  BenchRecord r;
  r.algorithm = f[0];
  r.distribution = f[1];
  r.reorder = f[2];
  r.n = detail::parse_number<std::uint64_t>(f[3]);
  r.arange = detail::parse_number<Key>(f[4]);
  r.seed = detail::parse_number<std::uint32_t>(f[5]);
  r.comparisons = detail::parse_number<std::uint64_t>(f[6]);
  r.element_writes = detail::parse_number<std::uint64_t>(f[7]);
  r.virtual_swaps = detail::parse_number<double>(f[8]);
  r.temp_high_water = detail::parse_number<std::uint64_t>(f[9]);
  r.max_depth = detail::parse_number<std::uint64_t>(f[10]);
  r.wall_ns = detail::parse_number<std::int64_t>(f[11]);
  return r;
}

struct GridSpec {
  std::vector<std::string> algos{"tristate"};
  std::vector<gen::Distribution> dists{gen::Distribution::Random};
  std::vector<gen::Reorder> reorders{gen::Reorder::Identity};
  std::vector<std::size_t> ns{1000};
  std::vector<Key> aranges{500};
  std::uint32_t seeds = 1;
  std::uint32_t seeds_base = 1;
  SortConfig config;
  Key op_max_distance = 100;
  Key op_add = 0;
  std::size_t fort_minl = 2;
  unsigned threads = 1;

  std::size_t row_count() const {
    return algos.size() * dists.size() * reorders.size() * ns.size() * aranges.size() * seeds;
  }

  /// Total elements sorted by the whole grid.
  std::uint64_t element_budget() const {
    std::uint64_t per_seed = 0;
    for (std::size_t n : ns) per_seed += n;
    return per_seed * algos.size() * dists.size() * reorders.size() * aranges.size() * seeds;
  }

  void validate() const {
    config.validate();
    if (seeds == 0) throw config_error("seeds must be at least 1");
    for (const auto& a : algos) {
      if (!find_algorithm<Key>(a)) {
        throw config_error("unknown algorithm '" + a + "' (valid: " + algorithm_list() + ")");
      }
    }
    for (Key a : aranges) {
      if (a < 1) throw config_error("arange must be at least 1");
    }
    if (fort_minl < 2) throw config_error("fort_minl must be at least 2");
  }
};

/// Elements a grid may sort before the harness refuses to run it without
/// the full-scale switch.
inline constexpr std::uint64_t kDeskBudget = 500'000'000;

inline constexpr std::array<std::size_t, 4> kDeskSizes{1'000, 10'000, 100'000, 500'000};
inline constexpr std::size_t kFullSize = 2'000'000;

inline std::vector<std::string_view> preset_names() {
  return {"figures", "adverse2m", "range-sweep", "overhead"};
}

/// Grid definitions for the named experiments. `full` adds the
/// two-million-element points.
inline std::optional<GridSpec> preset(std::string_view name, bool full = false) {
  GridSpec g;
  g.algos.assign(kAlgorithmNames.begin(), kAlgorithmNames.end());
  if (name == "figures") {
    g.dists.assign(gen::kDistributions.begin(), gen::kDistributions.end());
    g.reorders.assign(gen::kBatteryReorders.begin(), gen::kBatteryReorders.end());
    g.ns.assign(kDeskSizes.begin(), kDeskSizes.end());
    if (full) g.ns.push_back(kFullSize);
    g.aranges = {500};
    return g;
  }
  if (name == "adverse2m") {
    g.dists.assign(gen::kDistributions.begin(), gen::kDistributions.end());
    g.reorders = {gen::Reorder::Identity};
    g.ns = {full ? kFullSize : kDeskSizes.back()};
    g.aranges = {9000};
    return g;
  }
  if (name == "range-sweep") {
    g.dists = {gen::Distribution::Random};
    g.reorders = {gen::Reorder::Identity};
    g.ns = {100'000};
    g.aranges = {100, 1'000, 10'000, 100'000, 1'000'000, 10'000'000, 100'000'000, 1'000'000'000,
                 2'000'000'000};
    return g;
  }
  if (name == "overhead") {
    g.dists = {gen::Distribution::Random};
    g.reorders = {gen::Reorder::Identity};
    g.ns = {50};
    g.aranges = {15};
    g.seeds = 1000;
    return g;
  }
  return std::nullopt;
}

struct Cell {
  std::string algorithm;
  gen::Distribution dist;
  gen::Reorder reorder;
  std::size_t n;
  Key arange;
  std::uint32_t seed;
};

/// Cells in output order: algorithm, distribution, reorder, n, arange, seed.
inline std::vector<Cell> expand(const GridSpec& g) {
  std::vector<Cell> cells;
  cells.reserve(g.row_count());
  for (const auto& a : g.algos) {
    for (auto d : g.dists) {
      for (auto r : g.reorders) {
        for (std::size_t n : g.ns) {
          for (Key ar : g.aranges) {
            for (std::uint32_t s = 0; s < g.seeds; ++s) {
              cells.push_back({a, d, r, n, ar, g.seeds_base + s});
            }
          }
        }
      }
    }
  }
  return cells;
}

inline gen::GenSpec input_spec(const GridSpec& g, const Cell& c) {
  gen::GenSpec s;
  s.distribution = c.dist;
  s.reorder = c.reorder;
  s.n = c.n;
  s.arange = c.arange;
  s.seed = c.seed;
  s.op_max_distance = g.op_max_distance;
  s.op_add = g.op_add;
  s.fort_minl = g.fort_minl;
  return s;
}

/// Runs one cell and checks the output is the sorted input. Throws
/// verification_error otherwise.
inline BenchRecord run_cell(const GridSpec& g, const Cell& c) {
  const std::vector<Key> input = gen::generate(input_spec(g, c));
  std::vector<Key> data = input;
  const auto fn = find_algorithm<Key>(c.algorithm);
  if (!fn) throw config_error("unknown algorithm '" + c.algorithm + "'");

  const auto t0 = std::chrono::steady_clock::now();
  const SortStats st = fn(std::span<Key>(data), std::compare_three_way{}, {g.config, c.seed});
  const auto t1 = std::chrono::steady_clock::now();

  std::vector<Key> expect = input;
  std::sort(expect.begin(), expect.end());
  if (data != expect) {
    throw verification_error(c.algorithm + " produced wrong output on " +
                             std::string(gen::to_string(c.dist)) + "/" +
                             std::string(gen::to_string(c.reorder)) + " n=" +
                             std::to_string(c.n) + " seed=" + std::to_string(c.seed));
  }

  BenchRecord r;
  r.algorithm = c.algorithm;
  r.distribution = gen::to_string(c.dist);
  r.reorder = gen::to_string(c.reorder);
  r.n = c.n;
  r.arange = c.arange;
  r.seed = c.seed;
  r.comparisons = st.comparisons;
  r.element_writes = st.element_writes;
  r.virtual_swaps = st.virtual_swaps();
  r.temp_high_water = st.temp_high_water;
  r.max_depth = st.max_depth;
  r.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  return r;
}

/// Runs every cell, `g.threads` at a time, and hands rows to `emit` in grid
/// order.
inline void run_grid(const GridSpec& g, const std::function<void(const BenchRecord&)>& emit) {
  g.validate();
  const std::vector<Cell> cells = expand(g);
  const unsigned workers = std::max(1u, std::min<unsigned>(g.threads, cells.size()));
  if (workers == 1) {
    for (const Cell& c : cells) emit(run_cell(g, c));
    return;
  }

  std::vector<std::optional<BenchRecord>> done(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        try {
          BenchRecord r = run_cell(g, cells[i]);
          std::lock_guard lock(mu);
          done[i] = std::move(r);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next = cells.size();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  for (const auto& r : done) emit(*r);
}

inline std::vector<BenchRecord> run_grid(const GridSpec& g) {
  std::vector<BenchRecord> rows;
  rows.reserve(g.row_count());
  run_grid(g, [&](const BenchRecord& r) { rows.push_back(r); });
  return rows;
}

}  // namespace tsq::bench

#endif  // TSQ_BENCH_HPP
