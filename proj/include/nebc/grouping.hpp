#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "nebc/model.hpp"
#include "nebc/params.hpp"

namespace nebc {

enum class RoundDirection { Up, Down };

// Linear grouping of each class into groups() subsets. Classes with fewer
// items than the group count keep their sizes (every item its own group, the
// first group empty). Larger classes are chunked in decreasing class-order
// index, group cardinalities differing by at most one, and every item rounds
// to the extreme of its group (max for Up, min for Down).
struct GroupedInstance {
  RoundDirection direction = RoundDirection::Up;
  // Per class key: groups in the paper's order (group 1 first = largest
  // items). Only as many groups as were formed are stored.
  std::map<long, std::vector<std::vector<int>>> groups;
  std::unordered_map<int, Rational> rounded;

  const Rational& rounded_size(const Instance& inst, int item) const {
    auto it = rounded.find(item);
    return it == rounded.end() ? inst.sizes[item] : it->second;
  }
};

// `classes` must hold items in class order (size asc, ties by decreasing
// index). Keys are free-form; the I2 path uses -1 for the large-item class.
GroupedInstance linear_group(const Instance& inst, const std::map<long, std::vector<int>>& classes,
                             const SchemeParams& params, RoundDirection direction);

}  // namespace nebc
