#pragma once

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "nebc/model.hpp"
#include "nebc/params.hpp"

namespace nebc {

// Huge items split into classes psi with delta + psi*delta^3 <= s < delta +
// (psi+1)*delta^3. Only non-empty classes are stored. Items within a class
// are sorted by non-decreasing size, ties broken by decreasing index.
struct Classification {
  std::map<long, std::vector<int>> classes;
  std::vector<int> non_huge;  // in index order

  long class_size(long psi) const {
    auto it = classes.find(psi);
    return it == classes.end() ? 0 : static_cast<long>(it->second.size());
  }
};

// Class index for a huge size; throws when the size is below delta_small.
long class_of(const SchemeParams& params, const Rational& size);

Classification classify(const Instance& inst, const SchemeParams& params);

// Sorts item indices by (size asc, index desc) - the class-internal order.
void sort_class_order(const Instance& inst, std::vector<int>& items);

// Distinct values of floor((1 + eps*delta^3)^t) over integer t, restricted to
// [0, cap]. Always contains 0 and (for cap >= 1) 1.
std::vector<long> certificate_value_set(const SchemeParams& params, long cap);

// Per-class pair (v_psi, u_psi) of guessed type-1/type-2 item counts.
// Classes without an entry are (0, 0).
struct CertificateVector {
  std::map<long, std::pair<long, long>> vu;

  long v(long psi) const {
    auto it = vu.find(psi);
    return it == vu.end() ? 0 : it->second.first;
  }
  long u(long psi) const {
    auto it = vu.find(psi);
    return it == vu.end() ? 0 : it->second.second;
  }
  bool operator==(const CertificateVector&) const = default;
};

struct BudgetExceeded : std::runtime_error {
  BigInt count;
  explicit BudgetExceeded(BigInt c)
      : std::runtime_error("certificate enumeration budget exceeded (" + c.str() + " vectors)"),
        count(std::move(c)) {}
};

// Closed-form number of certificate vectors for the given classes.
BigInt certificate_count(const Classification& cls, const SchemeParams& params);

// Streams every certificate vector with components in the value set and
// v + u <= |H_psi| per class. Throws BudgetExceeded when the closed-form
// count is above `budget` before emitting anything.
void enumerate_certificates(const Classification& cls, const SchemeParams& params, const BigInt& budget,
                            const std::function<void(const CertificateVector&)>& sink);

// Convenience wrapper that materializes the stream.
std::vector<CertificateVector> all_certificates(const Classification& cls, const SchemeParams& params,
                                                const BigInt& budget);

// I1: per class, the last v_psi items. I2: all non-huge items plus, per
// class, the first u_psi items. Both sorted by item index.
struct InputSplit {
  std::vector<int> i1;
  std::vector<int> i2;
};

InputSplit split_input(const Instance& inst, const Classification& cls, const SchemeParams& params,
                       const CertificateVector& cert);

// Report of the five nice-solution properties; bins are labeled 1 or 2 via
// `bin_types` (0 for uncovered bins).
struct NiceReport {
  struct Property {
    bool pass = true;
    std::vector<int> offending_bins;
  };
  std::array<Property, 5> props;
  bool all_pass() const {
    for (const auto& p : props)
      if (!p.pass) return false;
    return true;
  }
};

NiceReport check_nice(const Instance& inst, const SchemeParams& params, const Packing& packing,
                      const CertificateVector& cert, const std::vector<int>& bin_types);

}  // namespace nebc
