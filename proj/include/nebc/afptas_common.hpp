#pragma once

#include <stdexcept>
#include <vector>

#include "nebc/grouping.hpp"
#include "nebc/model.hpp"

namespace nebc {

// Distinct rounded sizes of a working item set, largest first, with the item
// indices carrying each size (ascending, so instantiation is lowest-index
// first).
struct SizeTable {
  std::vector<Rational> sizes;
  std::vector<long> avail;
  std::vector<std::vector<int>> items;

  size_t count() const { return sizes.size(); }
};

SizeTable build_size_table(const Instance& inst, const GroupedInstance& grouped,
                           const std::vector<int>& item_ids);

struct ConfigCapExceeded : std::runtime_error {
  explicit ConfigCapExceeded(size_t cap)
      : std::runtime_error("configuration enumeration exceeded the cap of " + std::to_string(cap)) {}
};

struct LpDiag {
  Rational lp_value;
  Rational floor_value;  // objective after flooring the unit-reward columns
  int rows = 0;
  int cols = 0;
  int support = 0;
  long pivots = 0;
};

}  // namespace nebc
