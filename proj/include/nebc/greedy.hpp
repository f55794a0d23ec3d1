#pragma once

#include "nebc/model.hpp"

namespace nebc {

enum class GreedyOrder { Input, Descending, Ascending };

// Classical greedy adapted to the near-exact objective: scan items in the
// chosen order, fill the current bin until its total first reaches 1, then
// open a new one. A closed bin is covered only when its total is also below
// 1 + delta. Leftovers stay in the final open bin (total < 1).
Packing greedy(const Instance& inst, GreedyOrder order = GreedyOrder::Input);

}  // namespace nebc
