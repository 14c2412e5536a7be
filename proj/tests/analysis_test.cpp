#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "zenowalk/analysis.hpp"
#include "zenowalk/measurement.hpp"

using namespace zenowalk;

namespace {

double pow_int(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

TEST(Transient, Values) {
  EXPECT_EQ(transient_probability(CoinParams::unbiased_degrees(20), 0), 0.0);
  EXPECT_NEAR(transient_probability(CoinParams::unbiased_degrees(45), 2), 0.5, 1e-15);
  EXPECT_GT(transient_probability(CoinParams::unbiased_degrees(15), 10),
            transient_probability(CoinParams::unbiased_degrees(75), 10));
}

TEST(Transient, SeriesMatchesPointwise) {
  const CoinParams p = CoinParams::unbiased_degrees(37);
  const auto series = transient_series(p, 40);
  ASSERT_EQ(series.size(), 21u);
  for (const auto& s : series) EXPECT_EQ(s.probability, transient_probability(p, s.t)) << "t=" << s.t;
}

TEST(Variance, TwoPointDistribution) {
  PositionDistribution d{{{-1, 0.5}, {1, 0.5}}, 1};
  EXPECT_DOUBLE_EQ(variance_of(d), 1.0);
}

TEST(Variance, NormalizesMass) {
  PositionDistribution d{{{-1, 0.1}, {1, 0.1}, {3, 0.0}}, 3};
  EXPECT_NEAR(variance_of(d), 1.0, 1e-15);
}

TEST(Variance, BallisticWalkHasVarianceTSquared) {
  for (int t : {1, 7, 40}) {
    const auto dist = position_distribution(evolve(initial_state(t), build_coin({0, 0, 0}), t));
    EXPECT_NEAR(variance_of(dist), double(t) * t, 1e-9);
  }
}

TEST(Variance, HadamardLawAtTwoHundredSteps) {
  const auto dist = position_distribution(evolve(initial_state(200), build_coin(CoinParams::unbiased_degrees(45)), 200));
  const double expected = (1.0 - std::sin(kPi / 4)) * 200.0 * 200.0;
  EXPECT_NEAR(variance_of(dist), expected, 0.05 * expected);
}

TEST(Variance, ZeroMassRejected) {
  PositionDistribution d{{{0, 0.0}}, 0};
  EXPECT_THROW(variance_of(d), InvalidParameter);
}

TEST(AdmissibleCounts, Divisors) {
  EXPECT_EQ(admissible_counts(50), (std::vector<int>{1, 5, 25}));
  EXPECT_EQ(admissible_counts(100), (std::vector<int>{1, 2, 5, 10, 25, 50}));
  EXPECT_EQ(admissible_counts(2), (std::vector<int>{1}));
}

TEST(CriticalTheta, FiftyStepsAtIntervalTwo) {
  const CriticalPoint c = critical_theta(50, 2, 0.01);
  EXPECT_EQ(c.kind, CriticalKind::theta_c);
  EXPECT_GT(c.value, 55.0);
  EXPECT_LT(c.value, 80.0);
  EXPECT_LE(c.bracket.second - c.bracket.first, 0.01);
  EXPECT_LE(zeno_gap(c.bracket.first, 50, 2), 0.0);
  EXPECT_GT(zeno_gap(c.bracket.second, 50, 2), 0.0);
  EXPECT_LE(std::abs(c.gap_at_value),
            std::abs(zeno_gap(c.bracket.second, 50, 2) - zeno_gap(c.bracket.first, 50, 2)));
  EXPECT_GT(zeno_gap(c.value + 2.0, 50, 2), 0.0);
  EXPECT_EQ(c.scan.size(), 89u);
}

TEST(CriticalTheta, GrowsWithSteps) {
  const double t50 = critical_theta(50, 2).value;
  const double t100 = critical_theta(100, 2).value;
  const double t200 = critical_theta(200, 2).value;
  EXPECT_LT(t50, t100);
  EXPECT_LT(t100, t200);
}

TEST(CriticalTheta, TighterToleranceShrinksBracket) {
  const CriticalPoint c = critical_theta(20, 2, 1e-4);
  EXPECT_LE(c.bracket.second - c.bracket.first, 1e-4);
  EXPECT_LE(zeno_gap(c.bracket.first, 20, 2), 0.0);
  EXPECT_GT(zeno_gap(c.bracket.second, 20, 2), 0.0);
}

TEST(CriticalTheta, NoTransitionWhenOnlyOneMeasurement) {
  try {
    critical_theta(10, 10);
    FAIL() << "expected NoTransition";
  } catch (const NoTransition& e) {
    EXPECT_EQ(e.kind(), CriticalKind::theta_c);
    EXPECT_EQ(e.scan().size(), 89u);
    for (const auto& s : e.scan()) EXPECT_EQ(s.gap, 0.0);
  }
}

TEST(CriticalTheta, ValidatesArguments) {
  EXPECT_THROW(critical_theta(50, 4), InvalidParameter);
  EXPECT_THROW(critical_theta(50, 3), InvalidParameter);
  EXPECT_THROW(critical_theta(50, 2, 0.0), InvalidParameter);
}

TEST(CriticalN, EightyDegrees) {
  const CriticalPoint c = critical_n(50, CoinParams::unbiased_degrees(80));
  EXPECT_EQ(c.kind, CriticalKind::n_c);
  EXPECT_EQ(c.value, 25.0);
  EXPECT_EQ(c.interval, 2);
  EXPECT_EQ(c.bracket.first, 5.0);
  EXPECT_EQ(c.bracket.second, 25.0);
  ASSERT_EQ(c.scan.size(), 3u);
  EXPECT_LE(c.scan[0].gap, 0.0);
  EXPECT_LE(c.scan[1].gap, 0.0);
  EXPECT_GT(c.gap_at_value, 0.0);
  const ZenoResult r = zeno_survival(CoinParams::unbiased_degrees(80), MeasurementSchedule(2, 25));
  EXPECT_NEAR(r.survival_disturbed, pow_int(std::sin(deg_to_rad(80)), 50), 1e-12);
  EXPECT_NEAR(r.survival_disturbed, 0.465, 1e-3);
}

TEST(CriticalN, FifteenDegreesHasNoTransition) {
  try {
    critical_n(50, CoinParams::unbiased_degrees(15));
    FAIL() << "expected NoTransition";
  } catch (const NoTransition& e) {
    EXPECT_EQ(e.kind(), CriticalKind::n_c);
    ASSERT_EQ(e.scan().size(), 3u);
    EXPECT_EQ(e.scan()[0].gap, 0.0);
    EXPECT_LT(e.scan()[1].gap, 0.0);
    EXPECT_LT(e.scan()[2].gap, 0.0);
  }
}

TEST(PowerLaw, ConstantInputHasZeroExponent) {
  const std::vector<double> t{10, 20, 30, 40, 50};
  const std::vector<double> p(5, 0.3);
  const PowerLawFit fit = fit_power_law(t, p);
  EXPECT_NEAR(fit.exponent, 0.0, 1e-12);
  EXPECT_NEAR(fit.amplitude, 0.3, 1e-12);
}

TEST(PowerLaw, ExactPowerRecovered) {
  std::vector<double> t, p;
  for (int i = 1; i <= 30; ++i) {
    t.push_back(i * 3.0);
    p.push_back(2.5 * std::pow(i * 3.0, -1.7));
  }
  const PowerLawFit fit = fit_power_law(t, p);
  EXPECT_NEAR(fit.exponent, -1.7, 1e-12);
  EXPECT_NEAR(fit.amplitude, 2.5, 1e-10);
  EXPECT_NEAR(fit.residual, 0.0, 1e-12);
}

TEST(ScalingExponent, HadamardInverseTime) {
  const ScalingFit fit = scaling_exponent(CoinParams::unbiased_degrees(45), 50, 500);
  EXPECT_NEAR(fit.exponent, -1.0, 0.15);
  EXPECT_GE(fit.points, kMinScalingPoints);
  EXPECT_FALSE(fit.smoothing.empty());
}

TEST(ScalingExponent, SeventyFiveDegrees) {
  const ScalingFit fit = scaling_exponent(CoinParams::unbiased_degrees(75), 50, 500);
  EXPECT_NEAR(fit.exponent, -1.0, 0.2);
}

TEST(ScalingExponent, MinimumWindowAndErrors) {
  EXPECT_EQ(scaling_exponent(CoinParams::unbiased_degrees(45), 50, 90).points, 20);
  EXPECT_THROW(scaling_exponent(CoinParams::unbiased_degrees(45), 50, 88), InvalidParameter);
  EXPECT_THROW(scaling_exponent({0, 0, 0}, 50, 200), InsufficientData);
}

TEST(Sweep, SinglePointDegenerate) {
  const auto rows = sweep({{45.0}, 2, {2}, {}});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].p_disturbed, 0.5, 1e-15);
  EXPECT_EQ(rows[0].p_disturbed, rows[0].p_undisturbed);
  EXPECT_EQ(rows[0].n, 1);
  EXPECT_TRUE(rows[0].ok);
}

TEST(Sweep, DisturbedColumnIsSinPower) {
  std::vector<double> grid;
  for (int d = 0; d <= 90; ++d) grid.push_back(d);
  const auto rows = sweep({grid, 100, {2}, {true, true, false, false}});
  ASSERT_EQ(rows.size(), 91u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(rows[i].p_disturbed, pow_int(std::sin(deg_to_rad(rows[i].theta_deg)), 100), 1e-10);
    if (i > 0) EXPECT_GE(rows[i].p_disturbed, rows[i - 1].p_disturbed);
    EXPECT_TRUE(std::isnan(rows[i].variance));
  }
}

TEST(Sweep, CanonicalOrder) {
  const auto rows = sweep({{60.0, 10.0, 30.0}, 20, {4, 2}, {}});
  ASSERT_EQ(rows.size(), 6u);
  const std::vector<std::pair<int, double>> expected{{2, 10}, {2, 30}, {2, 60}, {4, 10}, {4, 30}, {4, 60}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].interval, expected[i].first);
    EXPECT_EQ(rows[i].theta_deg, expected[i].second);
  }
}

TEST(Sweep, FrequentMeasurementLowersThreshold) {
  const double c2 = critical_theta(100, 2).value;
  const double c4 = critical_theta(100, 4).value;
  const double c10 = critical_theta(100, 10).value;
  EXPECT_LE(c2, c4);
  EXPECT_LE(c4, c10);
}

TEST(Sweep, ValidationNamesTheField) {
  try {
    sweep({{10.0}, 20, {3}, {}});
    FAIL();
  } catch (const InvalidParameter& e) {
    EXPECT_NE(std::string(e.what()).find("interval"), std::string::npos);
  }
  EXPECT_THROW(sweep({{10.0}, 20, {}, {}}), InvalidParameter);
  EXPECT_THROW(sweep({{10.0}, 20, {6}, {}}), InvalidParameter);
}

TEST(Sweep, FlaggedRowCarriesError) {
  const SweepSpec spec{{10.0}, 20, {2}, {}};
  const SweepRow row = flagged_row(spec, {2, 10.0}, "boom");
  EXPECT_FALSE(row.ok);
  EXPECT_EQ(row.error, "boom");
  EXPECT_TRUE(std::isnan(row.p_disturbed));
  EXPECT_EQ(row.n, 10);
}
