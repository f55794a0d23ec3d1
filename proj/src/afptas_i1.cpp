#include "nebc/afptas_i1.hpp"

#include <algorithm>
#include <map>

namespace nebc {

SizeTable build_size_table(const Instance& inst, const GroupedInstance& grouped,
                           const std::vector<int>& item_ids) {
  std::map<Rational, std::vector<int>> by_size;
  for (int j : item_ids) by_size[grouped.rounded_size(inst, j)].push_back(j);
  SizeTable table;
  for (auto it = by_size.rbegin(); it != by_size.rend(); ++it) {
    std::sort(it->second.begin(), it->second.end());
    table.sizes.push_back(it->first);
    table.avail.push_back(static_cast<long>(it->second.size()));
    table.items.push_back(it->second);
  }
  return table;
}

namespace {

// Largest c with total + c*size < limit, capped by avail.
long max_count(const Rational& total, const Rational& size, const Rational& limit, long avail) {
  const Rational room = limit - total;
  if (room <= 0) return 0;
  BigInt c = rat_ceil(room / size) - 1;  // c*size < room
  if (c < 0) c = 0;
  if (c > avail) c = avail;
  return static_cast<long>(c);
}

template <class Emit>
void dfs_configs(const SizeTable& table, const Rational& limit, const std::vector<Rational>* suffix_reach,
                 const Rational& reward_lo, std::vector<int>& counts, size_t i, Rational total, Emit&& emit) {
  if (i == table.count()) {
    emit(counts, total);
    return;
  }
  // Reward enumeration prunes branches that cannot reach the reward floor.
  if (suffix_reach && total + (*suffix_reach)[i] < reward_lo) return;
  const long cmax = max_count(total, table.sizes[i], limit, table.avail[i]);
  for (long c = cmax; c >= 0; --c) {
    counts[i] = static_cast<int>(c);
    dfs_configs(table, limit, suffix_reach, reward_lo, counts, i + 1, total + c * table.sizes[i], emit);
  }
  counts[i] = 0;
}

}  // namespace

std::vector<ConfigI1> enumerate_configs_i1(const SizeTable& table, const Rational& delta,
                                           const Rational& delta_small, size_t cap) {
  const Rational limit = 1 + delta;
  const Rational reward_lo = 1 + delta_small;
  std::vector<ConfigI1> out;
  std::vector<int> counts(table.count(), 0);
  dfs_configs(table, limit, nullptr, reward_lo, counts, 0, Rational(0),
              [&](const std::vector<int>& c, const Rational& total) {
                if (out.size() >= cap) throw ConfigCapExceeded(cap);
                out.push_back({c, total, total >= reward_lo && total < limit});
              });
  return out;
}

namespace {

std::vector<ConfigI1> enumerate_reward_configs(const SizeTable& table, const Rational& delta,
                                               const Rational& delta_small, size_t cap) {
  const Rational limit = 1 + delta;
  const Rational reward_lo = 1 + delta_small;
  std::vector<Rational> suffix(table.count() + 1, Rational(0));
  for (size_t i = table.count(); i-- > 0;)
    suffix[i] = suffix[i + 1] + table.sizes[i] * table.avail[i];

  std::vector<ConfigI1> out;
  std::vector<int> counts(table.count(), 0);
  dfs_configs(table, limit, &suffix, reward_lo, counts, 0, Rational(0),
              [&](const std::vector<int>& c, const Rational& total) {
                if (total < reward_lo) return;
                if (out.size() >= cap) throw ConfigCapExceeded(cap);
                out.push_back({c, total, true});
              });
  return out;
}

}  // namespace

I1Result solve_i1(const Instance& inst, const std::vector<int>& i1_items, const SchemeParams& params,
                  const I1Options& options) {
  I1Result result;
  if (i1_items.empty()) return result;

  std::map<long, std::vector<int>> classes;
  for (int j : i1_items) classes[class_of(params, inst.sizes[j])].push_back(j);
  for (auto& [psi, items] : classes) sort_class_order(inst, items);

  const GroupedInstance grouped = linear_group(inst, classes, params, RoundDirection::Up);
  const SizeTable table = build_size_table(inst, grouped, i1_items);
  const std::vector<ConfigI1> reward_configs =
      enumerate_reward_configs(table, inst.delta, params.delta_small, options.config_cap);

  // Equality-form configuration LP over the unit-reward configurations plus
  // one dedicated (single item, zero reward) column per size; replacing any
  // zero-reward column by dedicated columns preserves feasibility and the
  // objective, so this column set attains the full configuration-LP optimum.
  const size_t sigma = table.count();
  LpProblem lp;
  lp.sense = Sense::Max;
  lp.rows.resize(sigma);
  for (size_t i = 0; i < sigma; ++i) {
    lp.rows[i].rel = Rel::Eq;
    lp.rows[i].rhs = table.avail[i];
  }
  auto push_column = [&](const std::vector<int>& counts, const Rational& obj) {
    lp.objective.push_back(obj);
    for (size_t i = 0; i < sigma; ++i) lp.rows[i].coeffs.push_back(counts[i]);
  };
  for (size_t i = 0; i < sigma; ++i) {
    std::vector<int> single(sigma, 0);
    single[i] = 1;
    push_column(single, 0);
  }
  for (const auto& cfg : reward_configs) push_column(cfg.counts, 1);

  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("I1 configuration LP must be solvable (dedicated columns exist)");

  result.lp_used = true;
  result.diag.lp_value = sol.objective;
  result.diag.rows = static_cast<int>(sigma);
  result.diag.cols = static_cast<int>(lp.cols());
  result.diag.support = sol.support();
  result.diag.pivots = sol.pivots;

  // Floor and instantiate, lowest-index item per size first.
  std::vector<size_t> next(sigma, 0);
  Rational floor_obj = 0;
  for (size_t c = 0; c < reward_configs.size(); ++c) {
    const BigInt copies = rat_floor(sol.x[sigma + c]);
    if (copies <= 0) continue;
    floor_obj += Rational(copies);
    for (BigInt b = 0; b < copies; ++b) {
      std::vector<int> bin;
      for (size_t i = 0; i < sigma; ++i)
        for (int t = 0; t < reward_configs[c].counts[i]; ++t) bin.push_back(table.items[i][next[i]++]);
      const Rational total = bin_total(inst, bin);
      if (!is_covered_total(inst, total))
        throw std::logic_error("instantiated unit-reward bin not near-exact covered (internal error)");
      ++result.unit_bins;
      result.bins.push_back(std::move(bin));
    }
  }
  result.diag.floor_value = floor_obj;
  for (size_t i = 0; i < sigma; ++i)
    for (size_t t = next[i]; t < table.items[i].size(); ++t) result.bins.push_back({table.items[i][t]});

  result.covered = count_covered(inst, result.bins);
  return result;
}

}  // namespace nebc
