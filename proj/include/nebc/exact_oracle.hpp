#pragma once

#include <cstdint>
#include <vector>

#include "nebc/model.hpp"

namespace nebc {

// Hard cap on the subset-DP width; the memo is dense in 2^n.
inline constexpr int kMaxExactItems = 24;

struct ExactResult {
  long optimum = 0;
  Packing witness;
};

// True optimum by subset dynamic programming:
//   f(S) = max( f(S \ low), max over covering T containing low of 1 + f(S \ T) )
// where low is the lowest-index item of S. Witness ties resolve to the
// lexicographically smallest covering subset. Items not used by any covering
// subset end up in singleton bins. Throws when n exceeds limit_n.
ExactResult exact_opt(const Instance& inst, int limit_n = 20);

// All subsets T of `mask` that contain its lowest set bit and whose total
// size lies in [1, 1+delta), in lexicographic order of their item lists.
std::vector<std::uint32_t> enumerate_covering_subsets(const Instance& inst, std::uint32_t mask);

}  // namespace nebc
