#pragma once

#include <cstdint>
#include <vector>

#include "nebc/model.hpp"

namespace nebc {

// Input to the partition problem: positive integers with sum a = 2B.
struct PartitionInput {
  std::vector<long> a;
  long b = 0;
  void validate() const;
};

struct GenerationSpec {
  PartitionInput partition;
  int generations = 1;  // T
  void validate() const;
};

// The documented companion width for the reduction: 1/(3B)^(T+1).
Rational companion_delta(const GenerationSpec& spec);

// Hardness-reduction instance: for each generation j = 1..T the items
// a_i/(3B)^j (i = 1..n) and one item 1 - B/(3B)^j. delta is the caller's.
Instance reduction_instance(const GenerationSpec& spec, const Rational& delta);

enum class DistKind { Uniform, TwoCluster, HugeHeavy };

struct SizeDistribution {
  DistKind kind = DistKind::Uniform;
  Rational lo, hi;    // primary band, in (0,1], lo <= hi
  Rational lo2, hi2;  // second band (two-cluster only)
};

// Seed-deterministic sizes on the 2^20 rational grid so instances serialize
// exactly. Throws std::invalid_argument on invalid bounds.
Instance random_instance(int n, const SizeDistribution& dist, std::uint64_t seed, const Rational& delta);

}  // namespace nebc
