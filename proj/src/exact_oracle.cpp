#include "nebc/exact_oracle.hpp"

#include <limits>
#include <stdexcept>

namespace nebc {

namespace {

template <class Int>
struct ScaledSizes {
  std::vector<Int> w;  // item sizes scaled by the common denominator
  Int lo, hi;          // covered window [lo, hi) in scaled units
};

ScaledSizes<BigInt> scale_big(const Instance& inst) {
  std::vector<Rational> all = inst.sizes;
  all.push_back(inst.delta);
  BigInt d = common_denominator(all);
  ScaledSizes<BigInt> s;
  s.lo = d;
  s.hi = numerator((1 + inst.delta) * d);
  for (const Rational& v : inst.sizes) s.w.push_back(numerator(v * d));
  return s;
}

bool fits_int64(const ScaledSizes<BigInt>& big) {
  BigInt total = big.hi;
  for (const BigInt& v : big.w) total += v;
  return total < BigInt(std::numeric_limits<std::int64_t>::max() / 2);
}

ScaledSizes<std::int64_t> narrow(const ScaledSizes<BigInt>& big) {
  ScaledSizes<std::int64_t> s;
  s.lo = static_cast<std::int64_t>(big.lo);
  s.hi = static_cast<std::int64_t>(big.hi);
  for (const BigInt& v : big.w) s.w.push_back(static_cast<std::int64_t>(v));
  return s;
}

// Visits every subset T of `mask` containing its lowest bit whose scaled sum
// lies in [lo, hi), in lexicographic order of the sorted item lists.
template <class Int, class Fn>
void visit_covering(const ScaledSizes<Int>& s, std::uint32_t mask, Fn&& fn) {
  if (mask == 0) return;
  std::vector<int> elems;
  for (int j = 0; j < 32; ++j)
    if (mask & (1u << j)) elems.push_back(j);

  const int k = static_cast<int>(elems.size());
  std::vector<Int> suffix(k + 1, Int(0));
  for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + s.w[elems[i]];

  // pos 0 is the forced lowest element.
  std::uint32_t chosen = 1u << elems[0];
  Int sum = s.w[elems[0]];

  auto rec = [&](auto&& self, int pos) -> void {
    if (sum >= s.lo && sum < s.hi) fn(chosen);
    if (sum >= s.hi) return;  // sizes are positive, no deeper subset fits
    for (int i = pos; i < k; ++i) {
      if (sum + suffix[i] < s.lo) return;  // even taking everything left falls short
      sum += s.w[elems[i]];
      if (sum < s.hi) {
        chosen |= 1u << elems[i];
        self(self, i + 1);
        chosen &= ~(1u << elems[i]);
      }
      sum -= s.w[elems[i]];
    }
  };
  rec(rec, 1);
}

template <class Int>
ExactResult solve(const Instance& inst, const ScaledSizes<Int>& s) {
  const int n = inst.n();
  const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
  std::vector<std::int16_t> f(full + 1, 0);
  std::vector<std::uint32_t> choice(full + 1, 0);

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (mask ^ (mask - 1));
    std::int16_t best = f[mask ^ low];
    std::uint32_t best_t = 0;
    visit_covering(s, mask, [&](std::uint32_t t) {
      std::int16_t cand = static_cast<std::int16_t>(1 + f[mask ^ t]);
      if (cand > best) {
        best = cand;
        best_t = t;
      }
    });
    f[mask] = best;
    choice[mask] = best_t;
  }

  ExactResult res;
  res.optimum = n == 0 ? 0 : f[full];
  std::uint32_t cur = full;
  while (cur) {
    const std::uint32_t low = cur & (cur ^ (cur - 1));
    std::uint32_t t = choice[cur];
    if (t == 0) t = low;  // leftover item, dedicated bin
    std::vector<int> bin;
    for (int j = 0; j < n; ++j)
      if (t & (1u << j)) bin.push_back(j);
    res.witness.bins.push_back(std::move(bin));
    cur ^= t;
  }
  res.witness.covers = res.optimum;
  return res;
}

void check_width(const Instance& inst, int limit_n) {
  if (limit_n > kMaxExactItems)
    throw std::invalid_argument("exact oracle limit exceeds " + std::to_string(kMaxExactItems));
  if (inst.n() > limit_n)
    throw std::invalid_argument("instance too large for the exact oracle: n=" + std::to_string(inst.n()) +
                                " > " + std::to_string(limit_n));
}

}  // namespace

ExactResult exact_opt(const Instance& inst, int limit_n) {
  check_width(inst, limit_n);
  auto big = scale_big(inst);
  if (fits_int64(big)) return solve(inst, narrow(big));
  return solve(inst, big);
}

std::vector<std::uint32_t> enumerate_covering_subsets(const Instance& inst, std::uint32_t mask) {
  if (inst.n() > kMaxExactItems) throw std::invalid_argument("instance too large for subset enumeration");
  if (inst.n() < 32 && (mask >> inst.n()) != 0)
    throw std::invalid_argument("mask references items outside the instance");
  std::vector<std::uint32_t> out;
  auto big = scale_big(inst);
  if (fits_int64(big)) {
    auto s = narrow(big);
    visit_covering(s, mask, [&](std::uint32_t t) { out.push_back(t); });
  } else {
    visit_covering(big, mask, [&](std::uint32_t t) { out.push_back(t); });
  }
  return out;
}

}  // namespace nebc
