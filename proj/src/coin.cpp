#include "zenowalk/coin.hpp"

#include <algorithm>
#include <cmath>

#include "zenowalk/error.hpp"

namespace zenowalk {

bool CoinParams::finite() const { return std::isfinite(xi) && std::isfinite(theta) && std::isfinite(zeta); }

CoinMatrix CoinMatrix::identity() {
  CoinMatrix m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  return m;
}

CoinMatrix CoinMatrix::adjoint() const {
  CoinMatrix m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = std::conj(entries[c][r]);
  return m;
}

Complex CoinMatrix::determinant() const { return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]; }

double CoinMatrix::unitarity_defect() const {
  const CoinMatrix product = adjoint() * *this;
  const CoinMatrix id = identity();
  double worst = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) worst = std::max(worst, std::abs(product(r, c) - id(r, c)));
  return worst;
}

CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b) {
  CoinMatrix m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return m;
}

CoinMatrix build_coin(const CoinParams& params) {
  if (!params.finite()) throw InvalidParameter("coin angles must be finite");
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  CoinMatrix m;
  m(0, 0) = std::polar(1.0, params.xi) * c;
  m(0, 1) = std::polar(1.0, params.zeta) * s;
  m(1, 0) = -std::polar(1.0, -params.zeta) * s;
  m(1, 1) = std::polar(1.0, -params.xi) * c;
  return m;
}

CoinVector symmetric_coin_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return {Complex(h, 0.0), Complex(0.0, h)};
}

double norm_squared(const CoinVector& v) { return std::norm(v[0]) + std::norm(v[1]); }

}  // namespace zenowalk
