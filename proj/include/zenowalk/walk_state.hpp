#pragma once

#include <cstddef>
#include <vector>

#include "zenowalk/coin.hpp"

namespace zenowalk {

/// Two-component amplitude field on the lattice [-capacity, capacity].
///
/// Storage is dense, one CoinVector per site at offset x + capacity. The walk
/// always starts at the origin, so after t steps the support lies in
/// |x| <= t and only on sites with x + t even. Operations rely on this and
/// only touch the light cone.
class WalkState {
 public:
  /// All-zero field. Throws InvalidParameter if capacity < 1.
  explicit WalkState(int capacity);

  int capacity() const { return capacity_; }
  int steps_taken() const { return steps_taken_; }
  int min_position() const { return -capacity_; }
  int max_position() const { return capacity_; }
  /// Light-cone half width: |x| > reach() is structurally zero.
  int reach() const { return steps_taken_ < capacity_ ? steps_taken_ : capacity_; }

  /// Throws std::out_of_range outside [-capacity, capacity].
  const CoinVector& at(int x) const;
  void set(int x, const CoinVector& amplitude);

  double probability_at(int x) const { return zenowalk::norm_squared(at(x)); }
  double norm_squared() const;
  bool empty() const { return norm_squared() == 0.0; }

  /// Raw storage, site x at index x + capacity.
  const std::vector<CoinVector>& sites() const { return sites_; }

  bool operator==(const WalkState&) const = default;

 private:
  friend class WalkStateAccess;

  std::size_t index(int x) const { return static_cast<std::size_t>(x + capacity_); }

  int capacity_;
  int steps_taken_ = 0;
  std::vector<CoinVector> sites_;
};

/// Restricted mutator for code that builds states at a given step count
/// (collapse, oracles).
class WalkStateAccess {
 public:
  static void set_steps_taken(WalkState& state, int steps) { state.steps_taken_ = steps; }
  static std::vector<CoinVector>& sites(WalkState& state) { return state.sites_; }
};

/// (|0> + i|1>)/sqrt(2) at x = 0, steps_taken = 0.
WalkState initial_state(int capacity);

/// Arbitrary unit coin state at the origin, steps_taken = 0.
WalkState origin_state(int capacity, const CoinVector& coin_state);

/// B (x) 1: the coin acts independently at every site.
WalkState apply_coin(const WalkState& state, const CoinMatrix& coin);

/// Controlled shift: |0> moves to x - 1, |1> moves to x + 1.
/// Throws CapacityError when steps_taken == capacity.
WalkState apply_shift(const WalkState& state);

/// One walk step W = S (B (x) 1): coin first, then shift.
WalkState step(const WalkState& state, const CoinMatrix& coin);

/// W^steps. Throws CapacityError unless capacity >= steps_taken + steps.
WalkState evolve(const WalkState& state, const CoinMatrix& coin, int steps);

struct PositionProbability {
  int x = 0;
  double probability = 0.0;
};

struct PositionDistribution {
  std::vector<PositionProbability> rows;
  int steps_taken = 0;

  double total() const;
  /// Probability at x, zero when x is not listed.
  double at(int x) const;
};

/// P(x) = |psi_L(x)|^2 + |psi_R(x)|^2 for every x in the light cone,
/// wrong-parity zeros included.
PositionDistribution position_distribution(const WalkState& state);

}  // namespace zenowalk
