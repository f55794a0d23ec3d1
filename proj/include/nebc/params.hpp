#pragma once

#include <optional>

#include "nebc/rational.hpp"

namespace nebc {

// Granularity delta for the scheme: 1 / max(4, ceil(4/Delta)). The result has
// an integer reciprocal, divides 1 evenly, and satisfies delta <= Delta/4 and
// delta <= 1/4.
Rational compute_delta_small(const Rational& delta);

struct SchemeParams {
  Rational eps;          // 1/eps is a positive integer; eps <= 1/12 unless unsound
  Rational delta_small;  // the scheme's granularity
  Rational delta;        // objective width of the instance
  // Testing hook: overrides the 1/(eps^2 * delta) linear-grouping group count.
  // Forbidden in certified runs.
  std::optional<long> group_count_override;
  bool unsound_constants = false;

  static Rational default_eps();  // 1/12
  static SchemeParams make(const Rational& delta);
  static SchemeParams make(const Rational& delta, const Rational& eps, bool unsound = false);

  void validate() const;

  long inv_eps() const;    // 1/eps
  long inv_delta() const;  // 1/delta_small
  long groups() const;     // group count for linear grouping
  Rational class_width() const;  // delta_small^3
  // Largest class index: 1/delta^3 - 1/delta^2. Classes are 0..max inclusive.
  long max_class_index() const;
};

}  // namespace nebc
