#include "zenowalk/density_oracle.hpp"

#include <cmath>
#include <string>

#include "zenowalk/error.hpp"

namespace zenowalk {
namespace {

int basis_index(int half_width, int x, int coin) { return 2 * (x + half_width) + coin; }

// Explicit matrices. Shift targets outside [-T, T] are dropped; the light
// cone keeps those columns empty for every state reachable in T steps.
Eigen::MatrixXcd coin_operator(const CoinParams& params, int half_width) {
  const int dim = 2 * (2 * half_width + 1);
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  const Complex b00 = std::exp(Complex(0.0, params.xi)) * c;
  const Complex b01 = std::exp(Complex(0.0, params.zeta)) * s;
  const Complex b10 = -std::exp(Complex(0.0, -params.zeta)) * s;
  const Complex b11 = std::exp(Complex(0.0, -params.xi)) * c;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (int x = -half_width; x <= half_width; ++x) {
    const int i0 = basis_index(half_width, x, 0);
    const int i1 = basis_index(half_width, x, 1);
    op(i0, i0) = b00;
    op(i0, i1) = b01;
    op(i1, i0) = b10;
    op(i1, i1) = b11;
  }
  return op;
}

Eigen::MatrixXcd shift_operator(int half_width) {
  const int dim = 2 * (2 * half_width + 1);
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (int x = -half_width; x <= half_width; ++x) {
    if (x - 1 >= -half_width) op(basis_index(half_width, x - 1, 0), basis_index(half_width, x, 0)) = 1.0;
    if (x + 1 <= half_width) op(basis_index(half_width, x + 1, 1), basis_index(half_width, x, 1)) = 1.0;
  }
  return op;
}

Eigen::MatrixXcd origin_projector(int half_width) {
  const int dim = 2 * (2 * half_width + 1);
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  op(basis_index(half_width, 0, 0), basis_index(half_width, 0, 0)) = 1.0;
  op(basis_index(half_width, 0, 1), basis_index(half_width, 0, 1)) = 1.0;
  return op;
}

Eigen::MatrixXcd walk_power(const Eigen::MatrixXcd& walk, int power) {
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(walk.rows(), walk.cols());
  for (int i = 0; i < power; ++i) result = walk * result;
  return result;
}

// tr_c <psi_0| rho |psi_0>.
double origin_trace(const Eigen::MatrixXcd& rho, int half_width) {
  const int i0 = basis_index(half_width, 0, 0);
  const int i1 = basis_index(half_width, 0, 1);
  return (rho(i0, i0) + rho(i1, i1)).real();
}

void check_size(int total_steps) {
  if (total_steps > kDensityOracleMaxSteps) {
    throw OracleTooLarge("density oracle limited to " + std::to_string(kDensityOracleMaxSteps) +
                         " total steps, requested " + std::to_string(total_steps));
  }
}

}  // namespace

double DensityMatrix::hermiticity_defect() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::smallest_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix initial_density(int half_width) {
  if (half_width < 0) throw InvalidParameter("half width must be non-negative");
  const int dim = 2 * (2 * half_width + 1);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  const double h = 1.0 / std::sqrt(2.0);
  psi(basis_index(half_width, 0, 0)) = Complex(h, 0.0);
  psi(basis_index(half_width, 0, 1)) = Complex(0.0, h);
  return {half_width, psi * psi.adjoint()};
}

DensityMatrix evolve_density(const CoinParams& params, int t) {
  if (!params.finite()) throw InvalidParameter("coin angles must be finite");
  if (t < 0) throw InvalidParameter("t must be non-negative");
  check_size(t);
  DensityMatrix rho = initial_density(t);
  const Eigen::MatrixXcd walk = shift_operator(t) * coin_operator(params, t);
  const Eigen::MatrixXcd wt = walk_power(walk, t);
  rho.entries = wt * rho.entries * wt.adjoint();
  return rho;
}

ZenoResult density_oracle_zeno(const CoinParams& params, const MeasurementSchedule& schedule) {
  if (!params.finite()) throw InvalidParameter("coin angles must be finite");
  const int total = schedule.total_steps();
  check_size(total);

  const int half = total;
  const Eigen::MatrixXcd walk = shift_operator(half) * coin_operator(params, half);
  const Eigen::MatrixXcd projector = origin_projector(half);
  const Eigen::MatrixXcd measured_cycle = projector * walk_power(walk, schedule.interval());

  ZenoResult result{params, schedule, 0.0, 0.0, {}, std::nullopt};
  const Eigen::MatrixXcd rho0 = initial_density(half).entries;

  const Eigen::MatrixXcd undisturbed_op = walk_power(walk, total);
  result.survival_undisturbed = origin_trace(undisturbed_op * rho0 * undisturbed_op.adjoint(), half);

  // Unnormalized: tr(rho_k) is the probability that the first k
  // measurements all succeed.
  Eigen::MatrixXcd rho = rho0;
  double previous = 1.0;
  for (int cycle = 0; cycle < schedule.count(); ++cycle) {
    rho = measured_cycle * rho * measured_cycle.adjoint();
    const double joint = rho.trace().real();
    result.per_cycle.push_back(previous > 0.0 ? joint / previous : 0.0);
    previous = joint;
  }
  result.survival_disturbed = previous;
  return result;
}

}  // namespace zenowalk
