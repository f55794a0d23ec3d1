#include "nebc/generators.hpp"

#include <random>
#include <stdexcept>

namespace nebc {

void PartitionInput::validate() const {
  if (a.empty()) throw std::invalid_argument("partition input needs at least one integer");
  long sum = 0;
  for (long v : a) {
    if (v <= 0) throw std::invalid_argument("partition entries must be positive");
    sum += v;
  }
  if (b <= 0 || sum != 2 * b)
    throw std::invalid_argument("partition entries must sum to 2B");
}

void GenerationSpec::validate() const {
  partition.validate();
  if (generations < 1) throw std::invalid_argument("generation count must be >= 1");
}

Rational companion_delta(const GenerationSpec& spec) {
  spec.validate();
  BigInt den = 1;
  for (int j = 0; j <= spec.generations; ++j) den *= 3 * spec.partition.b;
  return Rational(1, den);
}

Instance reduction_instance(const GenerationSpec& spec, const Rational& delta) {
  spec.validate();
  Instance inst;
  inst.delta = delta;
  BigInt base = 1;
  for (int j = 1; j <= spec.generations; ++j) {
    base *= 3 * spec.partition.b;
    for (long ai : spec.partition.a) inst.sizes.emplace_back(BigInt(ai), base);
    inst.sizes.push_back(Rational(1) - Rational(BigInt(spec.partition.b), base));
  }
  inst.validate();
  return inst;
}

namespace {

constexpr std::int64_t kGrid = 1 << 20;

// Portable uniform integer in [0, m) on top of mt19937_64 (the standard
// distributions are not reproducible across library implementations).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % m;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % m;
}

std::pair<std::int64_t, std::int64_t> grid_bounds(const Rational& lo, const Rational& hi) {
  if (lo <= 0 || hi > 1 || lo > hi) throw std::invalid_argument("distribution bounds must satisfy 0 < lo <= hi <= 1");
  std::int64_t klo = static_cast<std::int64_t>(rat_ceil(lo * kGrid));
  std::int64_t khi = static_cast<std::int64_t>(rat_floor(hi * kGrid));
  if (klo < 1) klo = 1;
  if (klo > khi) throw std::invalid_argument("distribution band contains no grid point");
  return {klo, khi};
}

Rational draw(std::mt19937_64& rng, std::int64_t klo, std::int64_t khi) {
  std::uint64_t span = static_cast<std::uint64_t>(khi - klo + 1);
  return Rational(BigInt(klo + static_cast<std::int64_t>(uniform_below(rng, span))), BigInt(kGrid));
}

}  // namespace

Instance random_instance(int n, const SizeDistribution& dist, std::uint64_t seed, const Rational& delta) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Instance inst;
  inst.delta = delta;
  std::mt19937_64 rng(seed);

  auto [klo, khi] = grid_bounds(dist.lo, dist.hi);
  switch (dist.kind) {
    case DistKind::Uniform: {
      for (int i = 0; i < n; ++i) inst.sizes.push_back(draw(rng, klo, khi));
      break;
    }
    case DistKind::TwoCluster: {
      auto [klo2, khi2] = grid_bounds(dist.lo2, dist.hi2);
      for (int i = 0; i < n; ++i) {
        if (uniform_below(rng, 2) == 0)
          inst.sizes.push_back(draw(rng, klo, khi));
        else
          inst.sizes.push_back(draw(rng, klo2, khi2));
      }
      break;
    }
    case DistKind::HugeHeavy: {
      // 7 of 8 items from the upper quarter of the band.
      std::int64_t kmid = klo + (3 * (khi - klo)) / 4;
      for (int i = 0; i < n; ++i) {
        if (uniform_below(rng, 8) < 7)
          inst.sizes.push_back(draw(rng, kmid, khi));
        else
          inst.sizes.push_back(draw(rng, klo, khi));
      }
      break;
    }
  }
  inst.validate();
  return inst;
}

}  // namespace nebc
