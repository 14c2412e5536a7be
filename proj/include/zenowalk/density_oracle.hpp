#pragma once

#include <Eigen/Dense>

#include "zenowalk/coin.hpp"
#include "zenowalk/measurement.hpp"

namespace zenowalk {

/// Density matrix over coin (x) position, positions truncated to the light
/// cone [-T, T] of a T-step run. Basis index is 2 * (x + T) + c.
struct DensityMatrix {
  int half_width = 0;
  Eigen::MatrixXcd entries;

  int dimension() const { return static_cast<int>(entries.rows()); }
  Complex trace() const { return entries.trace(); }
  double hermiticity_defect() const;
  double smallest_eigenvalue() const;
};

inline constexpr int kDensityOracleMaxSteps = 12;

/// rho(0,0) = |Psi_ins><Psi_ins| embedded in a lattice of the given half width.
DensityMatrix initial_density(int half_width);

/// rho(t) = W^t rho(0,0) W^t^dagger with W and the shift built as explicit
/// matrices. Throws OracleTooLarge when t exceeds kDensityOracleMaxSteps.
DensityMatrix evolve_density(const CoinParams& params, int t);

/// Disturbed and undisturbed survival computed with explicit density
/// matrices and origin projectors: tr_c[(W_M^tau)^n rho (W_M^tau)^n^dagger].
/// Throws OracleTooLarge when n * tau exceeds kDensityOracleMaxSteps.
ZenoResult density_oracle_zeno(const CoinParams& params, const MeasurementSchedule& schedule);

}  // namespace zenowalk
