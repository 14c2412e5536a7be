#include "zenowalk/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zenowalk/error.hpp"

namespace zenowalk {

MeasurementSchedule::MeasurementSchedule(int interval, int count) : interval_(interval), count_(count) {
  if (interval < 2 || interval % 2 != 0) {
    throw InvalidParameter("measurement interval must be an even integer >= 2 (odd step counts leave no "
                           "amplitude at the origin), got " +
                           std::to_string(interval));
  }
  if (count < 1) throw InvalidParameter("measurement count must be >= 1, got " + std::to_string(count));
}

std::pair<ProjectionOutcome, WalkState> project_origin(const WalkState& state) {
  if (state.empty()) throw InvalidState("cannot project a zero-norm state");
  const CoinVector origin = state.at(0);
  ProjectionOutcome outcome;
  outcome.probability = norm_squared(origin);

  WalkState collapsed(state.capacity());
  if (outcome.probability == 0.0) return {outcome, collapsed};

  const double scale = 1.0 / std::sqrt(outcome.probability);
  const CoinVector unit{origin[0] * scale, origin[1] * scale};
  outcome.collapsed_coin_state = unit;
  collapsed.set(0, unit);
  return {outcome, collapsed};
}

double survival_undisturbed(const CoinParams& params, int t) {
  if (t < 0) throw InvalidParameter("t must be non-negative");
  if (t % 2 != 0) return 0.0;
  if (t == 0) return 1.0;
  const WalkState evolved = evolve(initial_state(t), build_coin(params), t);
  return evolved.probability_at(0);
}

ZenoResult zeno_survival_from(const CoinParams& params, const MeasurementSchedule& schedule,
                              const CoinVector& coin_state) {
  const CoinMatrix coin = build_coin(params);
  ZenoResult result{params, schedule, 1.0, 0.0, {}, std::nullopt};
  result.per_cycle.reserve(static_cast<std::size_t>(schedule.count()));

  WalkState state = origin_state(schedule.interval(), coin_state);
  for (int cycle = 0; cycle < schedule.count(); ++cycle) {
    if (state.empty()) {
      result.per_cycle.push_back(0.0);
      continue;
    }
    auto [outcome, collapsed] = project_origin(evolve(state, coin, schedule.interval()));
    result.per_cycle.push_back(outcome.probability);
    result.survival_disturbed *= outcome.probability;
    if (outcome.collapsed_coin_state) result.final_coin_state = outcome.collapsed_coin_state;
    state = std::move(collapsed);
  }
  if (state.empty()) {
    result.survival_disturbed = 0.0;
    result.final_coin_state.reset();
  }

  const int total = schedule.total_steps();
  result.survival_undisturbed = evolve(origin_state(total, coin_state), coin, total).probability_at(0);
  return result;
}

ZenoResult zeno_survival(const CoinParams& params, const MeasurementSchedule& schedule) {
  return zeno_survival_from(params, schedule, symmetric_coin_state());
}

TwoStepOrigin two_step_origin_state(const CoinParams& params) {
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  const Complex i(0.0, 1.0);
  const Complex phase = std::exp(Complex(0.0, params.xi - params.zeta));
  const double h = 1.0 / std::sqrt(2.0);
  TwoStepOrigin out;
  out.amplitudes[0] = (-s * s + i * std::conj(phase) * c * s) * h;
  out.amplitudes[1] = (-phase * c * s - i * s * s) * h;
  out.probability = s * s;
  return out;
}

CoinMatrix zeno_coin_map(const CoinParams& params) {
  if (!params.finite()) throw InvalidParameter("coin angles must be finite");
  const double s = std::sin(params.theta);
  const double c = std::cos(params.theta);
  if (std::abs(s) < 1e-15) {
    throw UndefinedConditionalMap("origin survival is zero at sin(theta) = 0; the conditional map is undefined");
  }
  const Complex phase = std::exp(Complex(0.0, params.xi - params.zeta));
  CoinMatrix m;
  m(0, 0) = -s;
  m(0, 1) = std::conj(phase) * c;
  m(1, 0) = -phase * c;
  m(1, 1) = -s;
  return m;
}

double coin_fidelity(const CoinVector& a, const CoinVector& b) {
  constexpr double kUnitTolerance = 1e-9;
  if (std::abs(norm_squared(a) - 1.0) > kUnitTolerance || std::abs(norm_squared(b) - 1.0) > kUnitTolerance) {
    throw InvalidParameter("coin_fidelity needs unit-norm coin states");
  }
  const Complex overlap = std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
  return std::min(1.0, std::norm(overlap));
}

}  // namespace zenowalk
