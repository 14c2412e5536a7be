#pragma once

#include "zenowalk/coin.hpp"
#include "zenowalk/walk_state.hpp"

namespace zenowalk {

/// Site-by-site amplitude recurrence for one step, written independently of
/// apply_coin/apply_shift for cross-checking:
///
///   psi_L(x, t) =  e^{i xi} cos(theta) psi_L(x+1, t-1) + e^{i zeta} sin(theta) psi_R(x+1, t-1)
///   psi_R(x, t) = -e^{-i zeta} sin(theta) psi_L(x-1, t-1) + e^{-i xi} cos(theta) psi_R(x-1, t-1)
///
/// Indices follow W = S (B (x) 1); the coin mixes both components at the
/// source site before the shift carries them away.
WalkState recurrence_oracle_step(const WalkState& amplitude_field, const CoinParams& params);

}  // namespace zenowalk
