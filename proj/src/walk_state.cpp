#include "zenowalk/walk_state.hpp"

#include <stdexcept>
#include <string>

#include "zenowalk/error.hpp"

namespace zenowalk {

WalkState::WalkState(int capacity) : capacity_(capacity) {
  if (capacity < 1) throw InvalidParameter("capacity must be >= 1, got " + std::to_string(capacity));
  sites_.assign(static_cast<std::size_t>(2 * capacity + 1), CoinVector{});
}

const CoinVector& WalkState::at(int x) const {
  if (x < -capacity_ || x > capacity_) throw std::out_of_range("position " + std::to_string(x) + " outside lattice");
  return sites_[index(x)];
}

void WalkState::set(int x, const CoinVector& amplitude) {
  if (x < -capacity_ || x > capacity_) throw std::out_of_range("position " + std::to_string(x) + " outside lattice");
  sites_[index(x)] = amplitude;
}

double WalkState::norm_squared() const {
  double total = 0.0;
  for (const auto& site : sites_) total += zenowalk::norm_squared(site);
  return total;
}

WalkState initial_state(int capacity) { return origin_state(capacity, symmetric_coin_state()); }

WalkState origin_state(int capacity, const CoinVector& coin_state) {
  WalkState state(capacity);
  state.set(0, coin_state);
  return state;
}

WalkState apply_coin(const WalkState& state, const CoinMatrix& coin) {
  WalkState out = state;
  auto& sites = WalkStateAccess::sites(out);
  const int r = state.reach();
  const std::size_t lo = static_cast<std::size_t>(state.capacity() - r);
  const std::size_t hi = static_cast<std::size_t>(state.capacity() + r);
  for (std::size_t i = lo; i <= hi; ++i) sites[i] = coin.apply(sites[i]);
  return out;
}

WalkState apply_shift(const WalkState& state) {
  if (state.steps_taken() >= state.capacity()) {
    throw CapacityError("shift beyond capacity " + std::to_string(state.capacity()) +
                        "; allocate capacity >= total steps");
  }
  WalkState out(state.capacity());
  WalkStateAccess::set_steps_taken(out, state.steps_taken() + 1);
  const auto& src = state.sites();
  auto& dst = WalkStateAccess::sites(out);
  const int r = state.reach();
  const std::size_t lo = static_cast<std::size_t>(state.capacity() - r);
  const std::size_t hi = static_cast<std::size_t>(state.capacity() + r);
  // Sites outside the source light cone are never read, so the fresh
  // lattice keeps exact zeros there.
  for (std::size_t i = lo; i <= hi; ++i) {
    dst[i - 1][0] = src[i][0];
    dst[i + 1][1] = src[i][1];
  }
  return out;
}
WalkState step(const WalkState& state, const CoinMatrix& coin) { return apply_shift(apply_coin(state, coin)); }

WalkState evolve(const WalkState& state, const CoinMatrix& coin, int steps) {
  if (steps < 0) throw InvalidParameter("steps must be non-negative");
  if (state.steps_taken() + steps > state.capacity()) {
    throw CapacityError("evolving " + std::to_string(steps) + " steps needs capacity " +
                        std::to_string(state.steps_taken() + steps) + ", have " +
                        std::to_string(state.capacity()));
  }
  WalkState current = state;
  for (int i = 0; i < steps; ++i) current = step(current, coin);
  return current;
}

double PositionDistribution::total() const {
  double sum = 0.0;
  for (const auto& row : rows) sum += row.probability;
  return sum;
}

double PositionDistribution::at(int x) const {
  for (const auto& row : rows)
    if (row.x == x) return row.probability;
  return 0.0;
}

PositionDistribution position_distribution(const WalkState& state) {
  PositionDistribution dist;
  dist.steps_taken = state.steps_taken();
  const int r = state.reach();
  dist.rows.reserve(static_cast<std::size_t>(2 * r + 1));
  for (int x = -r; x <= r; ++x) dist.rows.push_back({x, state.probability_at(x)});
  return dist;
}

}  // namespace zenowalk
