#pragma once

#include <array>
#include <complex>

namespace zenowalk {

using Complex = std::complex<double>;

/// Amplitudes of the two coin basis states: [0] is |0> (left mover),
/// [1] is |1> (right mover).
using CoinVector = std::array<Complex, 2>;

inline constexpr double kPi = 3.14159265358979323846;

constexpr double deg_to_rad(double degrees) { return degrees * kPi / 180.0; }
constexpr double rad_to_deg(double radians) { return radians * 180.0 / kPi; }

/// Angles of the SU(2) coin, in radians.
///
/// theta is conventionally in [0, pi/2] but any finite value is accepted;
/// nothing in the core reduces it.
struct CoinParams {
  double xi = 0.0;
  double theta = 0.0;
  double zeta = 0.0;

  static CoinParams from_degrees(double xi_deg, double theta_deg, double zeta_deg) {
    return {deg_to_rad(xi_deg), deg_to_rad(theta_deg), deg_to_rad(zeta_deg)};
  }
  /// Unbiased coin B_theta (xi = zeta = 0).
  static CoinParams unbiased_degrees(double theta_deg) { return from_degrees(0.0, theta_deg, 0.0); }

  bool finite() const;
};

/// 2x2 complex matrix acting on the coin space; entries[row][col], rows
/// indexed by the output basis state.
struct CoinMatrix {
  std::array<std::array<Complex, 2>, 2> entries{};

  static CoinMatrix identity();

  const Complex& operator()(int row, int col) const { return entries[row][col]; }
  Complex& operator()(int row, int col) { return entries[row][col]; }

  CoinVector apply(const CoinVector& v) const {
    return {entries[0][0] * v[0] + entries[0][1] * v[1], entries[1][0] * v[0] + entries[1][1] * v[1]};
  }

  CoinMatrix adjoint() const;
  Complex determinant() const;
  /// Largest entrywise deviation of M^dagger M from the identity.
  double unitarity_defect() const;
};

CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b);

/// B = [[e^{i xi} cos theta, e^{i zeta} sin theta],
///      [-e^{-i zeta} sin theta, e^{-i xi} cos theta]].
/// Throws InvalidParameter on a non-finite angle.
CoinMatrix build_coin(const CoinParams& params);

/// The symmetric coin state (|0> + i|1>)/sqrt(2) used as the walk's start.
CoinVector symmetric_coin_state();

double norm_squared(const CoinVector& v);

}  // namespace zenowalk
