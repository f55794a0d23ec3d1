#include "nebc/greedy.hpp"

#include <algorithm>
#include <numeric>

namespace nebc {

Packing greedy(const Instance& inst, GreedyOrder order) {
  std::vector<int> items(inst.n());
  std::iota(items.begin(), items.end(), 0);
  if (order == GreedyOrder::Descending) {
    std::stable_sort(items.begin(), items.end(),
                     [&](int a, int b) { return inst.sizes[a] > inst.sizes[b]; });
  } else if (order == GreedyOrder::Ascending) {
    std::stable_sort(items.begin(), items.end(),
                     [&](int a, int b) { return inst.sizes[a] < inst.sizes[b]; });
  }

  Packing packing;
  std::vector<int> current;
  Rational total = 0;
  for (int j : items) {
    current.push_back(j);
    total += inst.sizes[j];
    if (total >= 1) {
      packing.bins.push_back(std::move(current));
      current.clear();
      total = 0;
    }
  }
  if (!current.empty()) packing.bins.push_back(std::move(current));
  packing.covers = count_covered(inst, packing.bins);
  return packing;
}

}  // namespace nebc
