#include "ellcirc/ellipse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ellcirc/errors.hpp"

namespace ellcirc {

void require_radius(double r, const char* what) {
  if (!(std::isfinite(r) && r > 0.0)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

Ellipse::Ellipse(double a, double b) : a_(a), b_(b), eps_(0.0) {
  if (!(std::isfinite(a) && std::isfinite(b) && b > 0.0 && a >= b)) {
    throw DomainError("ellipse requires a >= b > 0, got a=" + std::to_string(a) +
                      ", b=" + std::to_string(b));
  }
  eps_ = std::sqrt((a - b) * (a + b)) / a;
}

double support(const Ellipse& e, double phi) {
  return std::hypot(e.a() * std::cos(phi), e.b() * std::sin(phi));
}

double support_d1(const Ellipse& e, double phi) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return -(a2 - b2) * c * s / support(e, phi);
}

double support_d2(const Ellipse& e, double phi) {
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double p = support(e, phi);
  const double c2 = c * c;
  const double s2 = s * s;
  return -(a2 - b2) * (a2 * c2 * c2 - b2 * s2 * s2) / (p * p * p);
}

PlanePoint ellipse_point(const Ellipse& e, double phi) {
  const double p = support(e, phi);
  return {e.a() * e.a() * std::cos(phi) / p, e.b() * e.b() * std::sin(phi) / p};
}

PlanePoint offset_point(const Ellipse& e, double r, OffsetSide side, double phi) {
  const double p = support(e, phi);
  const double kr = static_cast<int>(side) * r;
  return {(e.a() * e.a() / p + kr) * std::cos(phi), (e.b() * e.b() / p + kr) * std::sin(phi)};
}

PlanePoint evolute_point(const Ellipse& e, double phi) {
  const double p = support(e, phi);
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double p2 = p * p;
  return {a2 * std::cos(phi) / p * (1.0 - b2 / p2), b2 * std::sin(phi) / p * (1.0 - a2 / p2)};
}

std::pair<double, double> curvature_radius_bounds(const Ellipse& e) {
  return {e.b() * e.b() / e.a(), e.a() * e.a() / e.b()};
}

std::optional<double> cusp_angle(const Ellipse& e, double r) {
  require_radius(r);
  if (e.is_circle()) {
    return std::nullopt;
  }
  const auto [rho_min, rho_max] = curvature_radius_bounds(e);
  if (r < rho_min || r > rho_max) {
    return std::nullopt;
  }
  const double a2 = e.a() * e.a();
  const double b2 = e.b() * e.b();
  const double arg = (2.0 * std::cbrt(a2 * b2 / r) * std::cbrt(a2 * b2 / r) - a2 - b2) / (a2 - b2);
  return 0.5 * std::acos(std::clamp(arg, -1.0, 1.0));
}

CaseId case_classify(const Ellipse& e, double r) {
  require_radius(r);
  const double a = e.a();
  const double b = e.b();
  if (e.is_circle() && r == a) {
    return CaseId::Three;
  }
  const auto [rho_min, rho_max] = curvature_radius_bounds(e);
  if (r <= rho_min) return CaseId::One;
  if (r < b) return CaseId::Two;
  if (r <= a) return CaseId::Three;
  if (r < rho_max) return CaseId::Four;
  return CaseId::Five;
}

double alpha_angle(const Ellipse& e, double r) {
  if (case_classify(e, r) != CaseId::Two) {
    throw CaseError("alpha_angle is defined only for b^2/a < r < b");
  }
  const double a = e.a();
  const double b = e.b();
  const double num = std::sqrt(r * r * a * a - b * b * b * b);
  const double den = b * std::sqrt((b - r) * (b + r));
  return std::atan2(num, den);
}

double beta_angle(const Ellipse& e, double r) {
  if (case_classify(e, r) != CaseId::Four) {
    throw CaseError("beta_angle is defined only for a < r < a^2/b");
  }
  const double a = e.a();
  const double b = e.b();
  const double num = a * std::sqrt((r - a) * (r + a));
  const double den = std::sqrt(a * a * a * a - r * r * b * b);
  return std::atan2(num, den);
}

std::vector<PlanePoint> sample_offset_curve(const Ellipse& e, double r, OffsetSide side, int n) {
  require_radius(r);
  if (n < 16) {
    throw DomainError("sample_offset_curve needs at least 16 points");
  }
  std::vector<PlanePoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pts.push_back(offset_point(e, r, side, 2.0 * std::numbers::pi * i / n));
  }
  return pts;
}

std::vector<PlanePoint> sample_offset_arc(const Ellipse& e, double r, OffsetSide side,
                                          double phi0, double phi1, int n) {
  require_radius(r);
  if (n < 2) {
    throw DomainError("sample_offset_arc needs at least 2 points");
  }
  std::vector<PlanePoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double phi = i + 1 == n ? phi1 : phi0 + (phi1 - phi0) * i / (n - 1);
    pts.push_back(offset_point(e, r, side, phi));
  }
  return pts;
}

}  // namespace ellcirc
