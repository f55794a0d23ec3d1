#include "nebc/grouping.hpp"

namespace nebc {

GroupedInstance linear_group(const Instance& inst, const std::map<long, std::vector<int>>& classes,
                             const SchemeParams& params, RoundDirection direction) {
  GroupedInstance out;
  out.direction = direction;
  const long g = params.groups();

  for (const auto& [psi, items] : classes) {
    const long m = static_cast<long>(items.size());
    auto& cls_groups = out.groups[psi];
    if (m < g) {
      // No rounding: group 1 empty, then one singleton per item, largest first.
      cls_groups.emplace_back();
      for (long k = m - 1; k >= 0; --k) cls_groups.push_back({items[static_cast<size_t>(k)]});
      continue;
    }
    const long q = m / g;
    const long r = m % g;
    long pos = m;  // consume from the top (largest class index) down
    for (long alpha = 0; alpha < g; ++alpha) {
      const long take = q + (alpha < r ? 1 : 0);
      std::vector<int> group;
      for (long t = 0; t < take; ++t) group.push_back(items[static_cast<size_t>(--pos)]);
      // group holds items in decreasing class order: front is the largest.
      const int max_item = group.front();
      const int min_item = group.back();
      const Rational& rounded =
          direction == RoundDirection::Up ? inst.sizes[max_item] : inst.sizes[min_item];
      for (int j : group) out.rounded[j] = rounded;
      cls_groups.push_back(std::move(group));
    }
  }
  return out;
}

}  // namespace nebc
