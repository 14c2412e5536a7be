#include "zenowalk/recurrence_oracle.hpp"

#include <cmath>
#include <string>

#include "zenowalk/error.hpp"

namespace zenowalk {

WalkState recurrence_oracle_step(const WalkState& amplitude_field, const CoinParams& params) {
  if (!params.finite()) throw InvalidParameter("coin angles must be finite");
  const int capacity = amplitude_field.capacity();
  const int t = amplitude_field.steps_taken();
  if (t >= capacity) throw CapacityError("recurrence step beyond capacity " + std::to_string(capacity));

  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  const Complex e_xi = std::exp(Complex(0.0, params.xi));
  const Complex e_zeta = std::exp(Complex(0.0, params.zeta));

  auto left_at = [&](int x) { return std::abs(x) <= capacity ? amplitude_field.at(x)[0] : Complex{}; };
  auto right_at = [&](int x) { return std::abs(x) <= capacity ? amplitude_field.at(x)[1] : Complex{}; };

  WalkState next(capacity);
  WalkStateAccess::set_steps_taken(next, t + 1);
  for (int x = -(t + 1); x <= t + 1; ++x) {
    const Complex psi_left = e_xi * c * left_at(x + 1) + e_zeta * s * right_at(x + 1);
    const Complex psi_right = -std::conj(e_zeta) * s * left_at(x - 1) + std::conj(e_xi) * c * right_at(x - 1);
    next.set(x, {psi_left, psi_right});
  }
  return next;
}

}  // namespace zenowalk
