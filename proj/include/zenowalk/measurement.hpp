#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zenowalk/coin.hpp"
#include "zenowalk/walk_state.hpp"

namespace zenowalk {

/// n projective measurements at the origin, one every tau steps.
class MeasurementSchedule {
 public:
  /// Throws InvalidParameter unless interval is even and >= 2 and count >= 1.
  /// Odd intervals leave no amplitude at the origin.
  MeasurementSchedule(int interval, int count);

  int interval() const { return interval_; }
  int count() const { return count_; }
  int total_steps() const { return interval_ * count_; }

  bool operator==(const MeasurementSchedule&) const = default;

 private:
  int interval_;
  int count_;
};

struct ProjectionOutcome {
  /// Mass found at x = 0 before collapse.
  double probability = 0.0;
  /// Unit-norm coin state after collapse; absent when probability == 0.
  std::optional<CoinVector> collapsed_coin_state;
};

/// Projects onto x = 0. The returned state holds only the renormalized origin
/// amplitude with steps_taken reset to 0, or is all zero (empty()) when the
/// origin carried no mass. Throws InvalidState for a zero-norm input.
std::pair<ProjectionOutcome, WalkState> project_origin(const WalkState& state);

/// P(0, t): origin probability after t undisturbed steps from the
/// symmetric initial state. Odd t gives exactly 0.
double survival_undisturbed(const CoinParams& params, int t);

struct ZenoResult {
  CoinParams params;
  MeasurementSchedule schedule{2, 1};
  /// P(0, tau)^n: probability that all n measurements succeed.
  double survival_disturbed = 0.0;
  /// P(0, n tau) with a single measurement at the end.
  double survival_undisturbed = 0.0;
  /// Conditional success probability of each cycle.
  std::vector<double> per_cycle;
  /// Coin state at the origin after the last successful cycle.
  std::optional<CoinVector> final_coin_state;
};

/// Alternates evolve(tau) and project_origin n times. Once a cycle fails
/// with certainty the remaining cycles are recorded as 0.
ZenoResult zeno_survival(const CoinParams& params, const MeasurementSchedule& schedule);

/// Same protocol started from an arbitrary unit coin state at the origin.
ZenoResult zeno_survival_from(const CoinParams& params, const MeasurementSchedule& schedule,
                              const CoinVector& coin_state);

struct TwoStepOrigin {
  /// Unnormalized origin amplitudes after two steps.
  CoinVector amplitudes;
  double probability = 0.0;
};

/// Closed form of the origin amplitude two steps after the symmetric start:
///   |0>: (-sin^2 t + i e^{-i(xi - zeta)} cos t sin t) / sqrt(2)
///   |1>: (-e^{i(xi - zeta)} cos t sin t - i sin^2 t) / sqrt(2)
/// with probability sin^2 theta regardless of xi and zeta.
TwoStepOrigin two_step_origin_state(const CoinParams& params);

/// Unitary acting on the origin coin state per tau = 2 measure-and-
/// renormalize cycle:
///   [[-sin t, e^{i(zeta - xi)} cos t], [-e^{i(xi - zeta)} cos t, -sin t]].
/// Throws UndefinedConditionalMap when sin(theta) == 0.
CoinMatrix zeno_coin_map(const CoinParams& params);

/// |<a|b>|^2. Throws InvalidParameter if either input is not unit norm
/// (tolerance 1e-9).
double coin_fidelity(const CoinVector& a, const CoinVector& b);

}  // namespace zenowalk
