#include "zenowalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zenowalk/measurement.hpp"

namespace zenowalk {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_even_positive(int value, const char* name) {
  if (value < 2 || value % 2 != 0) {
    throw InvalidParameter(std::string(name) + " must be an even integer >= 2, got " + std::to_string(value));
  }
}

void require_divides(int steps, int interval) {
  require_even_positive(interval, "interval");
  if (steps < interval || steps % interval != 0) {
    throw InvalidParameter("interval " + std::to_string(interval) + " does not divide steps " + std::to_string(steps));
  }
}

}  // namespace

double transient_probability(const CoinParams& params, int t) { return 1.0 - survival_undisturbed(params, t); }

std::vector<TransientSample> transient_series(const CoinParams& params, int steps) {
  if (steps < 0) throw InvalidParameter("steps must be non-negative");
  const CoinMatrix coin = build_coin(params);
  std::vector<TransientSample> series;
  series.reserve(static_cast<std::size_t>(steps / 2 + 1));
  series.push_back({0, 0.0});
  WalkState state = initial_state(std::max(steps, 1));
  for (int t = 1; t <= steps; ++t) {
    state = step(state, coin);
    if (t % 2 == 0) series.push_back({t, 1.0 - state.probability_at(0)});
  }
  return series;
}

double variance_of(const PositionDistribution& dist) {
  double mass = 0.0;
  double first = 0.0;
  double second = 0.0;
  for (const auto& row : dist.rows) {
    const double x = row.x;
    mass += row.probability;
    first += x * row.probability;
    second += x * x * row.probability;
  }
  if (!(mass > 0.0)) throw InvalidParameter("variance of a zero-mass distribution");
  const double mean = first / mass;
  return second / mass - mean * mean;
}

double zeno_gap(const CoinParams& params, int steps, int interval) {
  require_divides(steps, interval);
  const ZenoResult r = zeno_survival(params, MeasurementSchedule(interval, steps / interval));
  return r.survival_disturbed - r.survival_undisturbed;
}

double zeno_gap(double theta_deg, int steps, int interval) {
  return zeno_gap(CoinParams::unbiased_degrees(theta_deg), steps, interval);
}

const char* to_string(CriticalKind kind) { return kind == CriticalKind::theta_c ? "theta_c" : "n_c"; }

NoTransition::NoTransition(CriticalKind kind, int steps, std::vector<GapSample> scan, const std::string& what)
    : Error(what), kind_(kind), steps_(steps), scan_(std::move(scan)) {}

CriticalPoint critical_theta(int steps, int interval, double tolerance_deg) {
  require_even_positive(steps, "steps");
  require_divides(steps, interval);
  if (!(tolerance_deg > 0.0)) throw InvalidParameter("tolerance_deg must be positive");

  CriticalPoint point;
  point.kind = CriticalKind::theta_c;
  point.steps = steps;
  point.interval = interval;
  for (int deg = 1; deg <= 89; ++deg) point.scan.push_back({double(deg), zeno_gap(double(deg), steps, interval)});

  // Both survivals are tiny at small theta and the gap wanders around zero
  // there, so only the last upward crossing counts.
  std::ptrdiff_t crossing = -1;
  for (std::size_t i = 0; i + 1 < point.scan.size(); ++i) {
    if (point.scan[i].gap <= 0.0 && point.scan[i + 1].gap > 0.0) crossing = static_cast<std::ptrdiff_t>(i);
  }
  if (crossing < 0) {
    throw NoTransition(CriticalKind::theta_c, steps, point.scan,
                       "no upward gap crossing in (0, 90) degrees for steps " + std::to_string(steps) +
                           ", interval " + std::to_string(interval));
  }

  double lo = point.scan[crossing].abscissa;
  double hi = point.scan[crossing + 1].abscissa;
  while (hi - lo > tolerance_deg) {
    const double mid = 0.5 * (lo + hi);
    if (zeno_gap(mid, steps, interval) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  point.bracket = {lo, hi};
  point.value = 0.5 * (lo + hi);
  point.gap_at_value = zeno_gap(point.value, steps, interval);
  return point;
}

std::vector<int> admissible_counts(int steps) {
  std::vector<int> counts;
  for (int n = 1; n <= steps; ++n) {
    if (steps % n == 0 && (steps / n) % 2 == 0) counts.push_back(n);
  }
  return counts;
}

CriticalPoint critical_n(int steps, const CoinParams& params) {
  require_even_positive(steps, "steps");
  if (!params.finite()) throw InvalidParameter("coin angles must be finite");

  CriticalPoint point;
  point.kind = CriticalKind::n_c;
  point.steps = steps;
  point.theta_deg = rad_to_deg(params.theta);

  const std::vector<int> counts = admissible_counts(steps);
  int found = -1;
  int previous = -1;
  for (int n : counts) {
    const double gap = zeno_gap(params, steps, steps / n);
    point.scan.push_back({double(n), gap});
    if (found < 0) {
      if (gap > 0.0) {
        found = n;
        point.gap_at_value = gap;
      } else {
        previous = n;
      }
    }
  }
  if (found < 0) {
    throw NoTransition(CriticalKind::n_c, steps, point.scan,
                       "no admissible measurement count beats undisturbed survival for steps " +
                           std::to_string(steps));
  }
  point.value = found;
  point.interval = steps / found;
  point.bracket = {double(previous < 0 ? found : previous), double(found)};
  return point;
}

PowerLawFit fit_power_law(std::span<const double> t, std::span<const double> p) {
  if (t.size() != p.size()) throw InvalidParameter("fit_power_law: size mismatch");
  if (t.size() < 2) throw InsufficientData("fit_power_law needs at least two points");
  const auto n = static_cast<double>(t.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(p[i] > 0.0)) throw InvalidParameter("fit_power_law needs positive samples");
    mean_x += std::log(t[i]);
    mean_y += std::log(p[i]);
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double dx = std::log(t[i]) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(p[i]) - mean_y);
  }
  if (sxx == 0.0) throw InsufficientData("fit_power_law needs at least two distinct abscissae");

  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = mean_y - fit.exponent * mean_x;
  fit.amplitude = std::exp(intercept);
  double sse = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = std::log(p[i]) - (intercept + fit.exponent * std::log(t[i]));
    sse += r * r;
  }
  fit.residual = std::sqrt(sse / n);
  fit.points = static_cast<int>(t.size());
  return fit;
}

ScalingFit scaling_exponent(const CoinParams& params, int t_min, int t_max) {
  if (t_min < 2 || t_min % 2 != 0 || t_max % 2 != 0) throw InvalidParameter("t_min and t_max must be even and >= 2");
  if (t_max < t_min + 40) throw InvalidParameter("t_max must be at least t_min + 40");

  const CoinMatrix coin = build_coin(params);
  std::vector<double> raw_t;
  std::vector<double> raw_p;
  WalkState state = initial_state(t_max);
  for (int t = 1; t <= t_max; ++t) {
    state = step(state, coin);
    if (t >= t_min && t % 2 == 0) {
      const double p = state.probability_at(0);
      if (p > 0.0) {
        raw_t.push_back(t);
        raw_p.push_back(p);
      }
    }
  }

  std::vector<double> smooth_t;
  std::vector<double> smooth_p;
  for (std::size_t i = 0; i + 1 < raw_t.size(); ++i) {
    smooth_t.push_back(0.5 * (raw_t[i] + raw_t[i + 1]));
    smooth_p.push_back(0.5 * (raw_p[i] + raw_p[i + 1]));
  }
  if (smooth_t.size() < static_cast<std::size_t>(kMinScalingPoints)) {
    throw InsufficientData("scaling fit needs " + std::to_string(kMinScalingPoints) + " usable points, got " +
                           std::to_string(smooth_t.size()));
  }

  const PowerLawFit fit = fit_power_law(smooth_t, smooth_p);
  ScalingFit out;
  out.theta_deg = rad_to_deg(params.theta);
  out.t_range = {t_min, t_max};
  out.exponent = fit.exponent;
  out.amplitude = fit.amplitude;
  out.residual = fit.residual;
  out.points = fit.points;
  out.smoothing = "adjacent-pair mean over non-zero even-t samples (window 2, stride 1)";
  return out;
}

void SweepSpec::validate() const {
  if (intervals.empty()) throw InvalidParameter("intervals: at least one interval is required");
  require_even_positive(steps, "steps");
  for (double theta : theta_grid) {
    if (!std::isfinite(theta)) throw InvalidParameter("theta: grid values must be finite");
  }
  for (int interval : intervals) {
    if (interval < 2 || interval % 2 != 0) {
      throw InvalidParameter("interval: " + std::to_string(interval) +
                             " is not even; the origin is empty after an odd number of steps");
    }
    if (steps % interval != 0) {
      throw InvalidParameter("interval: " + std::to_string(interval) + " does not divide steps " +
                             std::to_string(steps));
    }
  }
}

std::vector<SweepPoint> sweep_points(const SweepSpec& spec) {
  std::vector<int> intervals = spec.intervals;
  std::vector<double> thetas = spec.theta_grid;
  std::stable_sort(intervals.begin(), intervals.end());
  std::stable_sort(thetas.begin(), thetas.end());
  std::vector<SweepPoint> points;
  points.reserve(intervals.size() * thetas.size());
  for (int interval : intervals)
    for (double theta : thetas) points.push_back({interval, theta});
  return points;
}

SweepRow flagged_row(const SweepSpec& spec, const SweepPoint& point, std::string error) {
  SweepRow row;
  row.theta_deg = point.theta_deg;
  row.steps = spec.steps;
  row.interval = point.interval;
  row.n = point.interval > 0 ? spec.steps / point.interval : 0;
  row.p_undisturbed = row.p_disturbed = row.transient = row.variance = kNaN;
  row.ok = false;
  row.error = std::move(error);
  return row;
}

SweepRow evaluate_sweep_point(const SweepSpec& spec, const SweepPoint& point) {
  SweepRow row = flagged_row(spec, point, "");
  row.ok = true;
  const CoinParams params = CoinParams::unbiased_degrees(point.theta_deg);
  const SweepOutputs& out = spec.outputs;

  if (out.disturbed || out.undisturbed || out.transient) {
    const ZenoResult z = zeno_survival(params, MeasurementSchedule(point.interval, row.n));
    if (out.disturbed) row.p_disturbed = z.survival_disturbed;
    if (out.undisturbed) row.p_undisturbed = z.survival_undisturbed;
    if (out.transient) row.transient = 1.0 - z.survival_undisturbed;
  }
  if (out.variance) {
    const WalkState final_state = evolve(initial_state(spec.steps), build_coin(params), spec.steps);
    row.variance = variance_of(position_distribution(final_state));
  }
  return row;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  for (const SweepPoint& point : sweep_points(spec)) {
    try {
      rows.push_back(evaluate_sweep_point(spec, point));
    } catch (const std::exception& e) {
      rows.push_back(flagged_row(spec, point, e.what()));
    }
  }
  return rows;
}

}  // namespace zenowalk
