#include "ellcirc/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ellcirc/errors.hpp"

namespace ellcirc {
namespace {

// Duplication stops once all relative deviations from the mean drop below this.
// The truncated series then has error O(kTolerance^6).
constexpr double kTolerance = 1.0e-3;
constexpr int kMaxIterations = 64;

}  // namespace

double carlson_rf(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0 || (x == 0.0 && y == 0.0) ||
      (y == 0.0 && z == 0.0) || (x == 0.0 && z == 0.0)) {
    throw DomainError("carlson_rf: arguments must be non-negative with at most one zero");
  }
  double mu = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;
  for (int it = 0; it < kMaxIterations; ++it) {
    mu = (x + y + z) / 3.0;
    dx = 1.0 - x / mu;
    dy = 1.0 - y / mu;
    dz = 1.0 - z / mu;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kTolerance) {
      break;
    }
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
}

double carlson_rd(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z <= 0.0 || (x == 0.0 && y == 0.0)) {
    throw DomainError("carlson_rd: requires x, y >= 0 (not both zero) and z > 0");
  }
  constexpr double c1 = 3.0 / 14.0;
  constexpr double c2 = 1.0 / 6.0;
  constexpr double c3 = 9.0 / 22.0;
  constexpr double c4 = 3.0 / 26.0;
  constexpr double c5 = 0.25 * c3;
  constexpr double c6 = 1.5 * c4;

  double sum = 0.0;
  double fac = 1.0;
  double ave = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;
  for (int it = 0; it < kMaxIterations; ++it) {
    ave = 0.2 * (x + y + 3.0 * z);
    dx = (ave - x) / ave;
    dy = (ave - y) / ave;
    dz = (ave - z) / ave;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kTolerance) {
      break;
    }
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    sum += fac / (sz * (z + lambda));
    fac *= 0.25;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  const double ea = dx * dy;
  const double eb = dz * dz;
  const double ec = ea - eb;
  const double ed = ea - 6.0 * eb;
  const double ee = ed + ec + ec;
  return 3.0 * sum +
         fac * (1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) +
                dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
             (ave * std::sqrt(ave));
}

double incomplete_e(double phi, double eps) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (!(phi >= 0.0 && phi <= half_pi)) {
    throw DomainError("incomplete_e: amplitude must lie in [0, pi/2], got " + std::to_string(phi));
  }
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw DomainError("incomplete_e: modulus must lie in [0, 1], got " + std::to_string(eps));
  }
  if (phi == 0.0) {
    return 0.0;
  }
  if (eps == 0.0) {
    return phi;
  }
  const double s = std::sin(phi);
  if (eps == 1.0) {
    return s;
  }
  const double c = std::cos(phi);
  const double k2 = eps * eps;
  const double q = (1.0 - eps * s) * (1.0 + eps * s);
  const double cc = c * c;
  return s * carlson_rf(cc, q, 1.0) - k2 * s * s * s * carlson_rd(cc, q, 1.0) / 3.0;
}

double complete_e(double eps) {
  return incomplete_e(std::numbers::pi / 2.0, eps);
}

}  // namespace ellcirc
