#pragma once

#include "nebc/afptas_common.hpp"
#include "nebc/classify.hpp"
#include "nebc/lp.hpp"

namespace nebc {

// A bin configuration over the rounded-up sizes: counts per distinct size.
// Unit reward iff the rounded total lies in [1+delta_small, 1+Delta).
struct ConfigI1 {
  std::vector<int> counts;
  Rational total;
  bool reward = false;
};

// Every multiset over the table's sizes with counts <= avail and total
// strictly below 1+Delta (the empty configuration included). Throws
// ConfigCapExceeded beyond `cap` configurations.
std::vector<ConfigI1> enumerate_configs_i1(const SizeTable& table, const Rational& delta,
                                           const Rational& delta_small, size_t cap);

struct I1Options {
  size_t config_cap = 20000;
};

struct I1Result {
  std::vector<std::vector<int>> bins;  // fragment covering exactly the I1 items
  long covered = 0;                    // covered bins of the fragment (exact sizes)
  long unit_bins = 0;                  // bins instantiated from unit-reward configs
  LpDiag diag;
  bool lp_used = false;
};

// Section-4 pipeline: round up by linear grouping, solve the equality-form
// configuration LP exactly, floor the optimum, instantiate bins (lowest index
// first), everything unpacked to dedicated bins. Every instantiated
// unit-reward bin is checked near-exact covered under original sizes.
I1Result solve_i1(const Instance& inst, const std::vector<int>& i1_items, const SchemeParams& params,
                  const I1Options& options = {});

}  // namespace nebc
