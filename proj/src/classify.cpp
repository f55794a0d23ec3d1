#include "nebc/classify.hpp"

#include <algorithm>
#include <set>

namespace nebc {

long class_of(const SchemeParams& params, const Rational& size) {
  if (size < params.delta_small) throw std::invalid_argument("class_of called with a non-huge size");
  BigInt psi = rat_floor((size - params.delta_small) / params.class_width());
  if (psi < 0 || psi > params.max_class_index())
    throw std::invalid_argument("size outside the class range: " + rat_str(size));
  return static_cast<long>(psi);
}

void sort_class_order(const Instance& inst, std::vector<int>& items) {
  std::sort(items.begin(), items.end(), [&](int a, int b) {
    if (inst.sizes[a] != inst.sizes[b]) return inst.sizes[a] < inst.sizes[b];
    return a > b;
  });
}

Classification classify(const Instance& inst, const SchemeParams& params) {
  Classification cls;
  for (int j = 0; j < inst.n(); ++j) {
    if (inst.sizes[j] >= params.delta_small)
      cls.classes[class_of(params, inst.sizes[j])].push_back(j);
    else
      cls.non_huge.push_back(j);
  }
  for (auto& [psi, items] : cls.classes) sort_class_order(inst, items);
  return cls;
}

std::vector<long> certificate_value_set(const SchemeParams& params, long cap) {
  if (cap < 0) throw std::invalid_argument("cap must be non-negative");
  // step = eps * delta^3
  const Rational step = params.eps * params.class_width();
  const BigInt inv_step = denominator(step) / numerator(step);

  std::vector<long> values;
  if (BigInt(cap) <= inv_step) {
    // Consecutive powers of 1+step differ by less than 1 up to 1/step, so
    // every integer in [0, cap] is the floor of some power.
    values.resize(static_cast<size_t>(cap) + 1);
    for (long k = 0; k <= cap; ++k) values[static_cast<size_t>(k)] = k;
    return values;
  }

  std::set<long> floors = {0};
  Rational cur = 1;
  const Rational base = 1 + step;
  while (true) {
    BigInt f = rat_floor(cur);
    if (f > cap) break;
    floors.insert(static_cast<long>(f));
    cur *= base;
  }
  values.assign(floors.begin(), floors.end());
  return values;
}

namespace {

std::vector<std::pair<long, long>> class_pairs(long h, const std::vector<long>& value_set) {
  std::vector<std::pair<long, long>> pairs;
  for (long v : value_set) {
    if (v > h) break;
    for (long u : value_set) {
      if (v + u > h) break;
      pairs.emplace_back(v, u);
    }
  }
  return pairs;
}

}  // namespace

BigInt certificate_count(const Classification& cls, const SchemeParams& params) {
  long cap = 0;
  for (const auto& [psi, items] : cls.classes) cap = std::max(cap, static_cast<long>(items.size()));
  const auto value_set = certificate_value_set(params, cap);

  BigInt count = 1;
  for (const auto& [psi, items] : cls.classes) {
    const long h = static_cast<long>(items.size());
    BigInt c = 0;
    for (long v : value_set) {
      if (v > h) break;
      c += std::upper_bound(value_set.begin(), value_set.end(), h - v) - value_set.begin();
    }
    count *= c;
  }
  return count;
}

void enumerate_certificates(const Classification& cls, const SchemeParams& params, const BigInt& budget,
                            const std::function<void(const CertificateVector&)>& sink) {
  if (budget <= 0) throw std::invalid_argument("budget must be positive");
  const BigInt count = certificate_count(cls, params);
  if (count > budget) throw BudgetExceeded(count);

  long cap = 0;
  for (const auto& [psi, items] : cls.classes) cap = std::max(cap, static_cast<long>(items.size()));
  const auto value_set = certificate_value_set(params, cap);

  std::vector<long> psis;
  std::vector<std::vector<std::pair<long, long>>> pairs;
  for (const auto& [psi, items] : cls.classes) {
    psis.push_back(psi);
    pairs.push_back(class_pairs(static_cast<long>(items.size()), value_set));
  }

  std::vector<size_t> odo(psis.size(), 0);
  while (true) {
    CertificateVector cert;
    for (size_t k = 0; k < psis.size(); ++k) {
      const auto& [v, u] = pairs[k][odo[k]];
      if (v != 0 || u != 0) cert.vu[psis[k]] = {v, u};
    }
    sink(cert);
    size_t k = psis.size();
    while (k > 0) {
      --k;
      if (++odo[k] < pairs[k].size()) break;
      odo[k] = 0;
      if (k == 0) return;
    }
    if (psis.empty()) return;
  }
}

std::vector<CertificateVector> all_certificates(const Classification& cls, const SchemeParams& params,
                                                const BigInt& budget) {
  std::vector<CertificateVector> out;
  enumerate_certificates(cls, params, budget, [&](const CertificateVector& c) { out.push_back(c); });
  return out;
}

namespace {

void validate_certificate(const Classification& cls, const SchemeParams& params, const CertificateVector& cert) {
  long cap = 0;
  for (const auto& [psi, items] : cls.classes) cap = std::max(cap, static_cast<long>(items.size()));
  const auto value_set = certificate_value_set(params, cap);
  for (const auto& [psi, vu] : cert.vu) {
    const auto [v, u] = vu;
    if (psi < 0 || psi > params.max_class_index())
      throw std::invalid_argument("certificate class index out of range");
    if (v < 0 || u < 0 || v + u > cls.class_size(psi))
      throw std::invalid_argument("certificate exceeds class capacity at psi=" + std::to_string(psi));
    if (!std::binary_search(value_set.begin(), value_set.end(), v) ||
        !std::binary_search(value_set.begin(), value_set.end(), u))
      throw std::invalid_argument("certificate component outside the value set at psi=" + std::to_string(psi));
  }
}

}  // namespace

InputSplit split_input(const Instance& inst, const Classification& cls, const SchemeParams& params,
                       const CertificateVector& cert) {
  (void)inst;
  validate_certificate(cls, params, cert);
  InputSplit split;
  split.i2 = cls.non_huge;
  for (const auto& [psi, items] : cls.classes) {
    const long v = cert.v(psi);
    const long u = cert.u(psi);
    for (long k = 0; k < u; ++k) split.i2.push_back(items[static_cast<size_t>(k)]);
    for (long k = 0; k < v; ++k) split.i1.push_back(items[items.size() - 1 - static_cast<size_t>(k)]);
  }
  std::sort(split.i1.begin(), split.i1.end());
  std::sort(split.i2.begin(), split.i2.end());
  return split;
}

NiceReport check_nice(const Instance& inst, const SchemeParams& params, const Packing& packing,
                      const CertificateVector& cert, const std::vector<int>& bin_types) {
  if (bin_types.size() != packing.bins.size())
    throw std::invalid_argument("bin_types must label every bin");

  const Rational d = params.delta_small;
  std::vector<Rational> totals;
  for (size_t b = 0; b < packing.bins.size(); ++b) {
    totals.push_back(bin_total(inst, packing.bins[b]));
    const bool covered = is_covered_total(inst, totals.back());
    if (bin_types[b] != 0 && bin_types[b] != 1 && bin_types[b] != 2)
      throw std::invalid_argument("bin types must be 0, 1 or 2");
    if (covered && bin_types[b] == 0)
      throw std::invalid_argument("covered bin " + std::to_string(b) + " must be labeled type 1 or 2");
    if (!covered && bin_types[b] != 0)
      throw std::invalid_argument("uncovered bin " + std::to_string(b) + " must be unlabeled");
  }

  const Classification cls = classify(inst, params);
  NiceReport report;

  // Property 1: type-1 totals in [1+d, 1+Delta), type-2 totals in [1, 1+3d].
  for (size_t b = 0; b < packing.bins.size(); ++b) {
    if (bin_types[b] == 1 && !(totals[b] >= 1 + d && totals[b] < 1 + inst.delta))
      report.props[0].offending_bins.push_back(static_cast<int>(b));
    if (bin_types[b] == 2 && !(totals[b] >= 1 && totals[b] <= 1 + 3 * d))
      report.props[0].offending_bins.push_back(static_cast<int>(b));
  }

  // Property 2: type-1 bins contain only huge items.
  for (size_t b = 0; b < packing.bins.size(); ++b) {
    if (bin_types[b] != 1) continue;
    for (int j : packing.bins[b]) {
      if (inst.sizes[j] < d) {
        report.props[1].offending_bins.push_back(static_cast<int>(b));
        break;
      }
    }
  }

  // Property 3: class membership restricted to the last v / first u items.
  for (const auto& [psi, items] : cls.classes) {
    const long v = cert.v(psi);
    const long u = cert.u(psi);
    std::set<int> last_v(items.end() - std::min<size_t>(items.size(), static_cast<size_t>(v)), items.end());
    std::set<int> first_u(items.begin(), items.begin() + std::min<size_t>(items.size(), static_cast<size_t>(u)));
    for (size_t b = 0; b < packing.bins.size(); ++b) {
      if (bin_types[b] == 0) continue;
      for (int j : packing.bins[b]) {
        if (inst.sizes[j] < d || class_of(params, inst.sizes[j]) != psi) continue;
        const bool ok = bin_types[b] == 1 ? last_v.count(j) > 0 : first_u.count(j) > 0;
        if (!ok) {
          report.props[2].offending_bins.push_back(static_cast<int>(b));
          break;
        }
      }
    }
  }

  // Property 4: capacity and value-set membership of the certificate.
  {
    long cap = 0;
    for (const auto& [psi, items] : cls.classes) cap = std::max(cap, static_cast<long>(items.size()));
    for (const auto& [psi, vu] : cert.vu) cap = std::max({cap, vu.first, vu.second});
    const auto value_set = certificate_value_set(params, cap);
    for (const auto& [psi, vu] : cert.vu) {
      const auto [v, u] = vu;
      if (v + u > cls.class_size(psi) ||
          !std::binary_search(value_set.begin(), value_set.end(), v) ||
          !std::binary_search(value_set.begin(), value_set.end(), u))
        report.props[3].pass = false;
    }
  }

  // Property 5: at least v/2 class items in type-1 bins and u/2 in type-2.
  {
    std::map<long, std::pair<long, long>> placed;  // psi -> (in type 1, in type 2)
    for (size_t b = 0; b < packing.bins.size(); ++b) {
      if (bin_types[b] == 0) continue;
      for (int j : packing.bins[b]) {
        if (inst.sizes[j] < d) continue;
        auto& entry = placed[class_of(params, inst.sizes[j])];
        (bin_types[b] == 1 ? entry.first : entry.second) += 1;
      }
    }
    auto check_class = [&](long psi) {
      const auto it = placed.find(psi);
      const long in1 = it == placed.end() ? 0 : it->second.first;
      const long in2 = it == placed.end() ? 0 : it->second.second;
      if (2 * in1 < cert.v(psi) || 2 * in2 < cert.u(psi)) report.props[4].pass = false;
    };
    for (const auto& [psi, items] : cls.classes) check_class(psi);
    for (const auto& [psi, vu] : cert.vu) check_class(psi);
  }

  for (auto& p : report.props)
    if (!p.offending_bins.empty()) p.pass = false;
  return report;
}

}  // namespace nebc
