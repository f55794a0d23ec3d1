#include "nebc/params.hpp"

#include <stdexcept>

namespace nebc {

namespace {
// Keeps class indices and grid sizes inside int64.
constexpr long kMaxInvDelta = 1 << 20;
constexpr long kMaxInvEps = 1 << 20;
}  // namespace

Rational compute_delta_small(const Rational& delta) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  BigInt k = rat_ceil(Rational(4) / delta);
  if (k < 4) k = 4;
  if (k > kMaxInvDelta)
    throw std::invalid_argument("delta too small for the scheme's desk-scale limits");
  return Rational(1, k);
}

Rational SchemeParams::default_eps() { return Rational(1, 12); }

SchemeParams SchemeParams::make(const Rational& delta) { return make(delta, default_eps()); }

SchemeParams SchemeParams::make(const Rational& delta, const Rational& eps, bool unsound) {
  SchemeParams p;
  p.delta = delta;
  p.eps = eps;
  p.delta_small = compute_delta_small(delta);
  p.unsound_constants = unsound;
  p.validate();
  return p;
}

void SchemeParams::validate() const {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  if (eps <= 0 || numerator(eps) != 1)
    throw std::invalid_argument("eps must be the reciprocal of a positive integer");
  if (denominator(eps) > kMaxInvEps) throw std::invalid_argument("eps too small");
  if (!unsound_constants && eps > Rational(1, 12))
    throw std::invalid_argument("eps > 1/12 requires the unsound-constants flag");
  if (delta_small <= 0 || numerator(delta_small) != 1)
    throw std::invalid_argument("delta_small must be the reciprocal of a positive integer");
  if (denominator(delta_small) > kMaxInvDelta) throw std::invalid_argument("delta_small too small");
  if (delta_small > delta / 4 || delta_small > Rational(1, 4))
    throw std::invalid_argument("delta_small must satisfy delta_small <= min(delta/4, 1/4)");
  if (group_count_override && *group_count_override < 1)
    throw std::invalid_argument("group count override must be positive");
  if (group_count_override && !unsound_constants)
    throw std::invalid_argument("group count override requires the unsound-constants flag");
}

long SchemeParams::inv_eps() const { return static_cast<long>(denominator(eps)); }

long SchemeParams::inv_delta() const { return static_cast<long>(denominator(delta_small)); }

long SchemeParams::groups() const {
  if (group_count_override) return *group_count_override;
  return inv_eps() * inv_eps() * inv_delta();
}

Rational SchemeParams::class_width() const {
  return delta_small * delta_small * delta_small;
}

long SchemeParams::max_class_index() const {
  const long d = inv_delta();
  return d * d * d - d * d;  // 1/delta^3 - 1/delta^2
}

}  // namespace nebc
