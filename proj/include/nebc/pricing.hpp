#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nebc/lp.hpp"
#include "nebc/params.hpp"

namespace nebc {

struct DualPoint {
  std::vector<Rational> y;  // one per distinct size
  Rational z1, z2;          // sand and sand-bin-count duals
};

// A two-constraint bounded integer program on the (value, modified-size)
// unit grid. Units are the paper's eps*delta/n multiples after scaling.
struct GridIp {
  struct Item {
    long value_units = 0;
    long msize_units = 0;
    Rational size;  // true (rounded-down/up instance) size
    long cap = 0;   // available copies
  };
  std::vector<Item> items;
  long value_cap = 0;  // inclusive unit caps
  long msize_cap = 0;
  bool maximize = true;
};

struct GridCapExceeded : std::runtime_error {
  explicit GridCapExceeded(size_t cap)
      : std::runtime_error("pricing grid exceeded the cell cap of " + std::to_string(cap)) {}
};

struct SweepEntry {
  Rational best;            // optimal total true size at this cell
  std::vector<int> counts;  // a witness achieving it
};

// Cell (value units, msize units) -> optimum of the equality-constrained IP.
// Cells absent from the map are infeasible.
using SweepTable = std::map<std::pair<long, long>, SweepEntry>;

// One bounded-knapsack pass (binary-decomposed multiplicities) filling every
// reachable cell at once.
SweepTable sweep_dp(const GridIp& grid, size_t cell_cap = 4'000'000);

// A configuration produced by the separation oracle.
struct PricingConfig {
  std::vector<int> counts;  // per distinct size
  Rational total;           // rounded-size total
  Rational sand;            // 0, or 1 - total for sand-bearing configs
  int constraint = 3;       // which dual constraint it violates: 2 or 3
};

struct OracleVerdict {
  bool certified = false;
  std::optional<PricingConfig> violated;
};

// Approximate separation for the I2 dual: rounds y up to multiples of eps/n,
// solves the IP1/IP2/IP3 families by sweep_dp, and checks every surviving
// witness against its exact dual constraint at (y', z1, z2). "certified"
// means (1+eps)*(y,z) is feasible for the dual.
OracleVerdict separate(const DualPoint& duals, const std::vector<Rational>& sizes,
                       const std::vector<long>& avail, const SchemeParams& params,
                       size_t cell_cap = 4'000'000);

// Adapter: a violated configuration is exactly a positive-reduced-cost master
// column (objective 1; per-size counts; sand amount; sand-bin indicator).
std::optional<PricingConfig> price(const DualPoint& duals, const std::vector<Rational>& sizes,
                                   const std::vector<long>& avail, const SchemeParams& params,
                                   size_t cell_cap = 4'000'000);

LpColumn pricing_column(const PricingConfig& config, size_t sigma);

}  // namespace nebc
