#pragma once

#include <vector>

#include "nebc/rational.hpp"

namespace nebc {

// An instance of the near-exact bin covering problem: a width delta > 0 and
// item sizes in (0, 1]. Immutable after construction; all arithmetic exact.
struct Instance {
  Rational delta;
  std::vector<Rational> sizes;

  int n() const { return static_cast<int>(sizes.size()); }
  // Throws std::invalid_argument if delta <= 0 or some size is outside (0,1].
  void validate() const;
};

// A partition of the item set into bins. Empty bins are allowed and never
// covered (they total 0 < 1).
struct Packing {
  std::vector<std::vector<int>> bins;
  // Cached cover count; -1 until evaluated.
  long covers = -1;
};

Rational bin_total(const Instance& inst, const std::vector<int>& bin);

// 1 <= total < 1 + delta, decided exactly.
bool is_covered_total(const Instance& inst, const Rational& total);

// Number of covered bins in an arbitrary bin list (no partition requirement).
// Used for solution fragments.
long count_covered(const Instance& inst, const std::vector<std::vector<int>>& bins);

// True iff the bins partition {0..n-1} (no duplicate, no missing, no stray index).
bool is_partition(const Instance& inst, const Packing& packing);

// Cover count of a full solution. Throws std::invalid_argument when the
// packing is not a partition of the item set.
long evaluate(const Instance& inst, const Packing& packing);

}  // namespace nebc
