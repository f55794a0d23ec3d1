#include "nebc/model.hpp"

#include <stdexcept>

namespace nebc {

void Instance::validate() const {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  for (size_t j = 0; j < sizes.size(); ++j) {
    if (sizes[j] <= 0 || sizes[j] > 1)
      throw std::invalid_argument("size of item " + std::to_string(j) + " outside (0,1]: " + rat_str(sizes[j]));
  }
}

Rational bin_total(const Instance& inst, const std::vector<int>& bin) {
  Rational total = 0;
  for (int j : bin) {
    if (j < 0 || j >= inst.n()) throw std::invalid_argument("item index out of range: " + std::to_string(j));
    total += inst.sizes[j];
  }
  return total;
}

bool is_covered_total(const Instance& inst, const Rational& total) {
  return total >= 1 && total < 1 + inst.delta;
}

long count_covered(const Instance& inst, const std::vector<std::vector<int>>& bins) {
  long covered = 0;
  for (const auto& bin : bins)
    if (is_covered_total(inst, bin_total(inst, bin))) ++covered;
  return covered;
}

bool is_partition(const Instance& inst, const Packing& packing) {
  std::vector<char> seen(inst.n(), 0);
  size_t placed = 0;
  for (const auto& bin : packing.bins) {
    for (int j : bin) {
      if (j < 0 || j >= inst.n() || seen[j]) return false;
      seen[j] = 1;
      ++placed;
    }
  }
  return placed == static_cast<size_t>(inst.n());
}

long evaluate(const Instance& inst, const Packing& packing) {
  if (!is_partition(inst, packing))
    throw std::invalid_argument("packing is not a partition of the item set");
  return count_covered(inst, packing.bins);
}

}  // namespace nebc
