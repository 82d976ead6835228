#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsq/analysis.hpp"
#include "tsq/bench.hpp"
#include "tsq/datagen.hpp"
#include "tsq/verify.hpp"

namespace {

using tsq::gen::Key;

struct GridArgs {
  std::vector<std::string> algos{"tristate"};
  std::vector<std::string> dists{"random"};
  std::vector<std::string> reorders{"identity"};
  std::vector<std::size_t> ns{1000};
  std::vector<Key> aranges{500};
  std::uint32_t seeds = 0;
  std::uint32_t seeds_base = 1;
  std::string preset;
  std::string mitigation = "on";
  std::string out;
  std::string format = "csv";
  bool emit_input = false;
  bool full = false;
  unsigned threads = 1;
  std::size_t insertion_threshold = tsq::SortConfig{}.insertion_threshold;
};

std::string names_of_distributions() {
  std::string s;
  for (auto d : tsq::gen::kDistributions) s += (s.empty() ? "" : ", ") + std::string(to_string(d));
  return s;
}

std::string names_of_reorders() {
  std::string s;
  for (auto r : tsq::gen::kReorders) s += (s.empty() ? "" : ", ") + std::string(to_string(r));
  return s;
}

tsq::bench::GridSpec build_grid(const GridArgs& a) {
  tsq::bench::GridSpec g;
  if (!a.preset.empty()) {
    auto p = tsq::bench::preset(a.preset, a.full);
    if (!p) throw CLI::ValidationError("--preset", "unknown preset '" + a.preset + "'");
    g = *p;
  } else {
    g.algos = a.algos;
    g.dists.clear();
    for (const auto& d : a.dists) {
      auto v = tsq::gen::parse_distribution(d);
      if (!v) {
        throw CLI::ValidationError("--dist", "unknown distribution '" + d +
                                                 "' (valid: " + names_of_distributions() + ")");
      }
      g.dists.push_back(*v);
    }
    g.reorders.clear();
    for (const auto& r : a.reorders) {
      auto v = tsq::gen::parse_reorder(r);
      if (!v) {
        throw CLI::ValidationError("--reorder",
                                   "unknown reorder '" + r + "' (valid: " + names_of_reorders() + ")");
      }
      g.reorders.push_back(*v);
    }
    g.ns = a.ns;
    g.aranges = a.aranges;
  }
  for (const auto& name : g.algos) {
    if (!tsq::find_algorithm<Key>(name)) {
      throw CLI::ValidationError("--algos", "unknown algorithm '" + name +
                                                "' (valid: " + tsq::algorithm_list() + ")");
    }
  }
  if (a.seeds != 0) g.seeds = a.seeds;
  g.seeds_base = a.seeds_base;
  g.config.mitigation_enabled = a.mitigation == "on";
  g.config.insertion_threshold = a.insertion_threshold;
  g.threads = a.threads;
  return g;
}

nlohmann::json to_json(const tsq::bench::BenchRecord& r) {
  return {{"algorithm", r.algorithm},
          {"distribution", r.distribution},
          {"reorder", r.reorder},
          {"n", r.n},
          {"arange", r.arange},
          {"seed", r.seed},
          {"comparisons", r.comparisons},
          {"element_writes", r.element_writes},
          {"virtual_swaps", r.virtual_swaps},
          {"temp_high_water", r.temp_high_water},
          {"max_depth", r.max_depth},
          {"wall_ns", r.wall_ns}};
}

int run_grid(const GridArgs& a) {
  const tsq::bench::GridSpec g = build_grid(a);
  g.validate();

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) {
      std::cerr << "cannot open " << a.out << "\n";
      return 1;
    }
  }
  std::ostream& os = a.out.empty() ? std::cout : file;

  if (a.emit_input) {
    for (const auto& c : tsq::bench::expand(g)) {
      if (c.algorithm != g.algos.front()) break;
      tsq::gen::write_column(os, tsq::gen::generate(tsq::bench::input_spec(g, c)));
    }
    return 0;
  }

  if (!a.full && g.element_budget() > tsq::bench::kDeskBudget) {
    std::cerr << "grid would sort " << g.element_budget() << " elements, over the desk budget of "
              << tsq::bench::kDeskBudget << "; reduce --n or --seeds, or pass --full\n";
    return 2;
  }

  if (a.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    tsq::bench::run_grid(g, [&](const tsq::bench::BenchRecord& r) { rows.push_back(to_json(r)); });
    os << rows.dump(2) << "\n";
  } else {
    os << tsq::bench::kCsvHeader << "\n";
    tsq::bench::run_grid(g, [&](const tsq::bench::BenchRecord& r) {
      os << tsq::bench::to_csv_row(r) << "\n";
    });
  }
  return 0;
}

int run_verify(const std::string& mitigation, std::size_t insertion_threshold) {
  tsq::SortConfig cfg;
  cfg.mitigation_enabled = mitigation == "on";
  cfg.insertion_threshold = insertion_threshold;
  bool all = true;
  for (const auto& c : tsq::verify::verify_all(cfg)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
    all = all && c.passed;
  }
  return all ? 0 : 1;
}

int run_predict(const std::vector<std::uint64_t>& ns) {
  std::cout << "n,comparisons_classic,swaps_classic,swaps_tsq_exact,swaps_tsq_approx,tsq_below_classic\n";
  std::cout << std::fixed << std::setprecision(4);
  for (std::uint64_t n : ns) {
    if (n < 2) {
      std::cerr << "predict needs n >= 2, got " << n << "\n";
      return 1;
    }
    const auto p = tsq::analysis::predict(n);
    std::cout << p.n << ',' << p.comparisons_classic << ',' << p.swaps_classic << ','
              << p.swaps_tsq_exact << ',' << p.swaps_tsq_approx << ','
              << (p.swaps_tsq_approx < p.swaps_classic ? "yes" : "no") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple State Quicksort benchmark harness"};
  app.require_subcommand(1);

  GridArgs g;
  auto* grid = app.add_subcommand("run-grid", "Run an algorithm x input grid and print counts");
  grid->add_option("--algos", g.algos, "Algorithms: " + tsq::algorithm_list())->delimiter(',');
  grid->add_option("--dist", g.dists, "Distributions: " + names_of_distributions())->delimiter(',');
  grid->add_option("--reorder", g.reorders, "Reorderings: " + names_of_reorders())->delimiter(',');
  grid->add_option("--n", g.ns, "Array sizes")->delimiter(',');
  grid->add_option("--arange", g.aranges, "Value ranges")->delimiter(',');
  grid->add_option("--seeds", g.seeds, "Seeds per cell");
  grid->add_option("--seeds-base", g.seeds_base, "First seed");
  grid->add_option("--preset", g.preset, "figures, adverse2m, range-sweep or overhead");
  grid->add_option("--mitigation", g.mitigation, "Sample jitter")->check(CLI::IsMember({"on", "off"}));
  grid->add_option("--out", g.out, "Output file (default stdout)");
  grid->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  grid->add_flag("--emit-input", g.emit_input, "Print the generated inputs instead of sorting");
  grid->add_flag("--full", g.full, "Allow the two-million-element sizes");
  grid->add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  grid->add_option("--insertion-threshold", g.insertion_threshold, "Insertion sort cutoff");

  std::string verify_mitigation = "on";
  std::size_t verify_threshold = tsq::SortConfig{}.insertion_threshold;
  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->add_option("--mitigation", verify_mitigation, "Sample jitter")
      ->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--insertion-threshold", verify_threshold, "Insertion sort cutoff");

  std::vector<std::uint64_t> predict_ns;
  auto* predict = app.add_subcommand("predict", "Evaluate the average-case predictors");
  predict->add_option("n", predict_ns, "Array sizes")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*grid) return run_grid(g);
    if (*verify) return run_verify(verify_mitigation, verify_threshold);
    if (*predict) return run_predict(predict_ns);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const tsq::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
