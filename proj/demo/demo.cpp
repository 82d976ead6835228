#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "tsq/tsq.hpp"

struct Record {
  int id;
  std::array<char, 400> payload;
};

int main() {
  std::vector<int> v = {5, 3, 9, 1, 5, 7, 2, 8, 6, 4, 0, 5, 3, 9, 1, 2, 7, 8, 6, 4};
  tsq::TripleStateSorter<int> sorter;
  const tsq::SortStats st = sorter.sort(v);
  for (int x : v) std::printf("%d ", x);
  std::printf("\ncomparisons %llu, writes %llu, virtual swaps %.2f\n",
              static_cast<unsigned long long>(st.comparisons),
              static_cast<unsigned long long>(st.element_writes), st.virtual_swaps());

  std::vector<std::string> words = {"pear", "fig", "apple", "kiwi", "banana", "cherry"};
  tsq::sort(words, [](const std::string& a, const std::string& b) {
    return a.size() == b.size() ? a.compare(b) : (a.size() < b.size() ? -1 : 1);
  });
  for (const auto& w : words) std::printf("%s ", w.c_str());
  std::printf("\n");

  std::vector<Record> recs(1000);
  for (int i = 0; i < 1000; ++i) recs[static_cast<std::size_t>(i)].id = (i * 7919) % 1000;
  auto by_id = [](const Record& a, const Record& b) { return (a.id > b.id) - (a.id < b.id); };
  const tsq::SortStats big = tsq::sort_with_stats(std::span<Record>(recs), by_id);
  std::printf("large records: handle writes %llu, element moves %llu\n",
              static_cast<unsigned long long>(big.handle_writes),
              static_cast<unsigned long long>(big.element_writes));
}
