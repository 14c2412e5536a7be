#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zenowalk/coin.hpp"
#include "zenowalk/error.hpp"
#include "zenowalk/walk_state.hpp"

namespace zenowalk {

/// P_tr(t) = 1 - P(0, t).
double transient_probability(const CoinParams& params, int t);

struct TransientSample {
  int t = 0;
  double probability = 0.0;
};

/// P_tr at every even t in [0, steps] from a single run.
std::vector<TransientSample> transient_series(const CoinParams& params, int steps);

/// Variance of the position distribution after normalizing its mass.
/// Throws InvalidParameter when the mass is zero.
double variance_of(const PositionDistribution& dist);

/// P(0,tau)^n - P(0, n tau) for the unbiased coin at theta_deg, n = steps / interval.
double zeno_gap(double theta_deg, int steps, int interval);
double zeno_gap(const CoinParams& params, int steps, int interval);

enum class CriticalKind { theta_c, n_c };

const char* to_string(CriticalKind kind);

struct GapSample {
  double abscissa = 0.0;
  double gap = 0.0;
};

struct CriticalPoint {
  CriticalKind kind = CriticalKind::theta_c;
  /// Degrees for theta_c, measurement count for n_c.
  double value = 0.0;
  int steps = 0;
  /// Measurement interval (theta_c only).
  int interval = 0;
  /// Fixed coin angle in degrees (n_c only).
  double theta_deg = 0.0;
  /// theta_c: final bisection bracket. n_c: (previous admissible n, n_c).
  std::pair<double, double> bracket{0.0, 0.0};
  double gap_at_value = 0.0;
  /// theta_c: gap on the 1 degree pre-scan. n_c: gap at every admissible n.
  std::vector<GapSample> scan;
};

/// No parameter in the searched range puts the walk in the Zeno region.
/// Carries the scan so callers can still report the gap curve.
class NoTransition : public Error {
 public:
  NoTransition(CriticalKind kind, int steps, std::vector<GapSample> scan, const std::string& what);

  CriticalKind kind() const { return kind_; }
  int steps() const { return steps_; }
  const std::vector<GapSample>& scan() const { return scan_; }

 private:
  CriticalKind kind_;
  int steps_;
  std::vector<GapSample> scan_;
};

inline constexpr double kDefaultThetaToleranceDeg = 0.01;

/// Locates theta_c for the unbiased coin: gap sampled at 1, 2, ..., 89
/// degrees; the largest-theta step from gap <= 0 to gap > 0 is bisected
/// until the bracket is narrower than tolerance_deg.
CriticalPoint critical_theta(int steps, int interval, double tolerance_deg = kDefaultThetaToleranceDeg);

/// Measurement counts n for which steps / n is an even integer, ascending.
std::vector<int> admissible_counts(int steps);

/// Smallest admissible n whose gap is strictly positive.
CriticalPoint critical_n(int steps, const CoinParams& params);

struct PowerLawFit {
  double exponent = 0.0;
  double amplitude = 0.0;
  /// RMS residual of the log-log fit.
  double residual = 0.0;
  int points = 0;
};

/// Least-squares fit of log p = log a + k log t. Needs at least two points.
PowerLawFit fit_power_law(std::span<const double> t, std::span<const double> p);

struct ScalingFit {
  double theta_deg = 0.0;
  std::pair<int, int> t_range{0, 0};
  double exponent = 0.0;
  double amplitude = 0.0;
  double residual = 0.0;
  int points = 0;
  /// Description of the smoothing applied to the samples before the fit.
  std::string smoothing;
};

inline constexpr int kMinScalingPoints = 20;

/// Log-log slope of P(0, t) on even t in [t_min, t_max]. Zero samples are
/// dropped, then each adjacent pair of remaining samples is averaged (in
/// both t and p) to damp the oscillation around the power-law envelope.
/// Throws InvalidParameter unless t_max >= t_min + 40 with both even, and
/// InsufficientData with fewer than kMinScalingPoints smoothed points.
ScalingFit scaling_exponent(const CoinParams& params, int t_min, int t_max);

struct SweepOutputs {
  bool undisturbed = true;
  bool disturbed = true;
  bool transient = true;
  bool variance = true;
};

struct SweepSpec {
  std::vector<double> theta_grid;
  int steps = 0;
  std::vector<int> intervals;
  SweepOutputs outputs;

  /// Throws InvalidParameter naming the offending field.
  void validate() const;
};

struct SweepPoint {
  int interval = 0;
  double theta_deg = 0.0;
};

/// Quantities not requested (or not computed because the point failed) are NaN.
struct SweepRow {
  double theta_deg = 0.0;
  int steps = 0;
  int interval = 0;
  int n = 0;
  double p_undisturbed = 0.0;
  double p_disturbed = 0.0;
  double transient = 0.0;
  double variance = 0.0;
  bool ok = true;
  std::string error;
};

/// (interval, theta) pairs in canonical row order: ascending interval, then
/// ascending theta.
std::vector<SweepPoint> sweep_points(const SweepSpec& spec);

/// Evaluates one point; throws on failure.
SweepRow evaluate_sweep_point(const SweepSpec& spec, const SweepPoint& point);

/// Row standing in for a point whose evaluation threw.
SweepRow flagged_row(const SweepSpec& spec, const SweepPoint& point, std::string error);

/// Sequential sweep. Per-point failures become flagged rows.
std::vector<SweepRow> sweep(const SweepSpec& spec);

}  // namespace zenowalk
