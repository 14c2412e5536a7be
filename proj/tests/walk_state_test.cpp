#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>

#include "test_support.hpp"
#include "zenowalk/analysis.hpp"
#include "zenowalk/error.hpp"
#include "zenowalk/walk_state.hpp"

using namespace zenowalk;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

void expect_complex(Complex actual, Complex expected, double tol = 1e-12) {
  EXPECT_NEAR(actual.real(), expected.real(), tol);
  EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

}  // namespace

TEST(InitialState, SymmetricCoinAtOrigin) {
  const WalkState s = initial_state(50);
  EXPECT_EQ(s.steps_taken(), 0);
  EXPECT_EQ(s.capacity(), 50);
  expect_complex(s.at(0)[0], Complex(kH, 0.0));
  expect_complex(s.at(0)[1], Complex(0.0, kH));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  EXPECT_NEAR(s.probability_at(0), 1.0, 1e-15);
}

TEST(InitialState, SmallestCapacity) {
  const WalkState s = initial_state(1);
  EXPECT_EQ(s.min_position(), -1);
  EXPECT_EQ(s.max_position(), 1);
  expect_complex(s.at(0)[1], Complex(0.0, kH));
  EXPECT_EQ(s.probability_at(-1), 0.0);
  EXPECT_EQ(s.probability_at(1), 0.0);
}

TEST(InitialState, RejectsNonPositiveCapacity) {
  EXPECT_THROW(initial_state(0), InvalidParameter);
  EXPECT_THROW(WalkState(-3), InvalidParameter);
}

TEST(ApplyCoin, IdentityLeavesStateUnchanged) {
  const WalkState s = evolve(initial_state(8), build_coin(CoinParams::unbiased_degrees(30)), 5);
  EXPECT_EQ(apply_coin(s, CoinMatrix::identity()), s);
}

TEST(ApplyCoin, HadamardOnInitialState) {
  const WalkState s = apply_coin(initial_state(4), build_coin(CoinParams::unbiased_degrees(45)));
  expect_complex(s.at(0)[0], Complex(0.5, 0.5));
  expect_complex(s.at(0)[1], Complex(-0.5, 0.5));
  EXPECT_EQ(s.steps_taken(), 0);
}

TEST(ApplyCoin, PreservesNormForRandomStates) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const CoinMatrix coin = build_coin(support::random_params(rng));
    WalkState s = evolve(initial_state(20), build_coin(support::random_params(rng)), 12);
    const double before = s.norm_squared();
    EXPECT_NEAR(apply_coin(s, coin).norm_squared(), before, 1e-14);
  }
}

TEST(ApplyShift, HadamardContinuation) {
  const WalkState s = apply_shift(apply_coin(initial_state(4), build_coin(CoinParams::unbiased_degrees(45))));
  EXPECT_EQ(s.steps_taken(), 1);
  expect_complex(s.at(-1)[0], Complex(0.5, 0.5));
  EXPECT_EQ(s.at(-1)[1], Complex(0.0));
  EXPECT_EQ(s.at(1)[0], Complex(0.0));
  expect_complex(s.at(1)[1], Complex(-0.5, 0.5));
  EXPECT_NEAR(s.probability_at(-1), 0.5, 1e-15);
  EXPECT_NEAR(s.probability_at(1), 0.5, 1e-15);
}

TEST(ApplyShift, PureComponentsMoveOneSite) {
  const WalkState left = apply_shift(origin_state(3, {Complex(1.0), Complex(0.0)}));
  EXPECT_EQ(left.at(-1)[0], Complex(1.0));
  EXPECT_EQ(left.norm_squared(), 1.0);
  const WalkState right = apply_shift(origin_state(3, {Complex(0.0), Complex(1.0)}));
  EXPECT_EQ(right.at(1)[1], Complex(1.0));
  EXPECT_EQ(right.norm_squared(), 1.0);
}

TEST(ApplyShift, CapacityExhausted) {
  const CoinMatrix coin = build_coin(CoinParams::unbiased_degrees(45));
  WalkState s = evolve(initial_state(3), coin, 3);
  EXPECT_THROW(apply_shift(s), CapacityError);
  EXPECT_THROW(evolve(initial_state(3), coin, 4), CapacityError);
}

TEST(Step, HadamardFromInitialState) {
  const auto dist = position_distribution(step(initial_state(2), build_coin(CoinParams::unbiased_degrees(45))));
  EXPECT_NEAR(dist.at(-1), 0.5, 1e-15);
  EXPECT_NEAR(dist.at(1), 0.5, 1e-15);
  EXPECT_EQ(dist.at(0), 0.0);
}

TEST(Step, ZeroAngleSeparatesBallistically) {
  const WalkState s = step(initial_state(2), build_coin({0, 0, 0}));
  EXPECT_NEAR(s.probability_at(-1), 0.5, 1e-15);
  EXPECT_NEAR(s.probability_at(1), 0.5, 1e-15);
  EXPECT_EQ(s.at(-1)[1], Complex(0.0));
  EXPECT_EQ(s.at(1)[0], Complex(0.0));
}

TEST(Step, RightAngleReturnsToOriginAfterTwo) {
  const WalkState s = evolve(initial_state(2), build_coin(CoinParams::unbiased_degrees(90)), 2);
  EXPECT_NEAR(s.probability_at(0), 1.0, 1e-15);
}

TEST(Step, EqualsShiftAfterCoin) {
  std::mt19937_64 rng(3);
  const CoinMatrix coin = build_coin(support::random_params(rng));
  const WalkState s = evolve(initial_state(10), coin, 4);
  EXPECT_EQ(step(s, coin), apply_shift(apply_coin(s, coin)));
}

TEST(Evolve, ZeroStepsIsIdentity) {
  const WalkState s = initial_state(5);
  EXPECT_EQ(evolve(s, build_coin(CoinParams::unbiased_degrees(33)), 0), s);
}

TEST(Evolve, HadamardDistributionIsSymmetric) {
  const auto dist = position_distribution(evolve(initial_state(50), build_coin(CoinParams::unbiased_degrees(45)), 50));
  for (int x = 1; x <= 50; ++x) EXPECT_NEAR(dist.at(x), dist.at(-x), 1e-12) << "x=" << x;
}

TEST(Evolve, SmallAngleSpreadsWider) {
  auto variance_at = [](double deg) {
    return variance_of(position_distribution(evolve(initial_state(50), build_coin(CoinParams::unbiased_degrees(deg)), 50)));
  };
  EXPECT_GT(variance_at(15), variance_at(75));
}

TEST(Evolve, NormPreservedOverThousandSteps) {
  const WalkState s = evolve(initial_state(1000), build_coin({0.3, 0.9, -1.2}), 1000);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(PositionDistribution, InitialState) {
  const auto dist = position_distribution(initial_state(4));
  ASSERT_EQ(dist.rows.size(), 1u);
  EXPECT_EQ(dist.rows[0].x, 0);
  EXPECT_NEAR(dist.rows[0].probability, 1.0, 1e-15);
}

TEST(PositionDistribution, BallisticThreeSteps) {
  const auto dist = position_distribution(evolve(initial_state(3), build_coin({0, 0, 0}), 3));
  ASSERT_EQ(dist.rows.size(), 7u);
  EXPECT_EQ(dist.rows.front().x, -3);
  EXPECT_EQ(dist.rows.back().x, 3);
  for (const auto& row : dist.rows) {
    const double expected = std::abs(row.x) == 3 ? 0.5 : 0.0;
    EXPECT_NEAR(row.probability, expected, 1e-15) << "x=" << row.x;
  }
}

TEST(PositionDistribution, HadamardTwoSteps) {
  const auto dist = position_distribution(evolve(initial_state(2), build_coin(CoinParams::unbiased_degrees(45)), 2));
  EXPECT_NEAR(dist.at(0), 0.5, 1e-15);
  EXPECT_NEAR(dist.total(), 1.0, 1e-12);
}

// Properties over random coins.

TEST(WalkProperties, UnitarityParityAndLightCone) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 10; ++k) {
    const CoinMatrix coin = build_coin(support::random_params(rng));
    WalkState s = initial_state(300);
    for (int t = 1; t <= 300; ++t) {
      s = step(s, coin);
      if (t % 50 != 0) continue;
      EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
      for (int x = s.min_position(); x <= s.max_position(); ++x) {
        if (std::abs(x) > t || (x + t) % 2 != 0) {
          EXPECT_EQ(s.at(x)[0], Complex(0.0)) << "t=" << t << " x=" << x;
          EXPECT_EQ(s.at(x)[1], Complex(0.0)) << "t=" << t << " x=" << x;
        }
      }
    }
  }
}

TEST(WalkProperties, UnbiasedCoinsGiveMirrorSymmetricDistributions) {
  for (double deg : {15.0, 30.0, 45.0, 60.0, 75.0}) {
    const CoinMatrix coin = build_coin(CoinParams::unbiased_degrees(deg));
    WalkState s = initial_state(200);
    for (int t = 1; t <= 200; ++t) {
      s = step(s, coin);
      for (int x = 1; x <= t; ++x) {
        ASSERT_NEAR(s.probability_at(x), s.probability_at(-x), 1e-12) << "theta=" << deg << " t=" << t << " x=" << x;
      }
    }
  }
}

TEST(WalkProperties, IndependentCopiesEvolveConcurrently) {
  const CoinMatrix coin = build_coin(CoinParams::unbiased_degrees(40));
  const WalkState base = evolve(initial_state(120), coin, 20);
  const WalkState expected = evolve(base, coin, 100);
  std::vector<WalkState> results(4, WalkState(1));
  {
    std::vector<std::jthread> threads;
    for (std::size_t i = 0; i < results.size(); ++i) threads.emplace_back([&, i] { results[i] = evolve(base, coin, 100); });
  }
  for (const auto& r : results) EXPECT_EQ(r, expected);
}
