#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace ellcirc {

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Axis-aligned, origin-centred ellipse with semi-axes a >= b > 0.
class Ellipse {
 public:
  /// Throws DomainError unless a >= b > 0 and both are finite.
  Ellipse(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  /// sqrt(a^2 - b^2) / a, in [0, 1).
  double eccentricity() const { return eps_; }
  bool is_circle() const { return a_ == b_; }

 private:
  double a_;
  double b_;
  double eps_;
};

/// +1 selects the outer parallel curve, -1 the inner one.
enum class OffsetSide : int { Outer = 1, Inner = -1 };

/// Radius regimes of the fixed circle relative to the ellipse's curvature
/// radii b^2/a <= b <= a <= a^2/b.
enum class CaseId : int {
  One = 1,    // 0 < r <= b^2/a
  Two = 2,    // b^2/a < r < b
  Three = 3,  // b <= r <= a
  Four = 4,   // a < r < a^2/b
  Five = 5,   // a^2/b <= r
};

inline int to_int(CaseId c) { return static_cast<int>(c); }

// Support function p(phi) = sqrt(a^2 cos^2 phi + b^2 sin^2 phi) and its derivatives.
double support(const Ellipse& e, double phi);
double support_d1(const Ellipse& e, double phi);
double support_d2(const Ellipse& e, double phi);

/// Boundary point whose outward normal has direction phi.
PlanePoint ellipse_point(const Ellipse& e, double phi);

/// Parallel curve point at normal distance r: ((a^2/p + k r) cos phi, (b^2/p + k r) sin phi).
PlanePoint offset_point(const Ellipse& e, double r, OffsetSide side, double phi);

/// Centre of curvature of the boundary point with normal direction phi.
PlanePoint evolute_point(const Ellipse& e, double phi);

/// First-quadrant cusp parameter of the inner parallel curve, present only
/// when b^2/a <= r <= a^2/b. The other cusps sit at pi - lambda, pi + lambda
/// and 2 pi - lambda. Absent for circles.
std::optional<double> cusp_angle(const Ellipse& e, double r);

/// (b^2/a, a^2/b): minimum and maximum radius of curvature.
std::pair<double, double> curvature_radius_bounds(const Ellipse& e);

CaseId case_classify(const Ellipse& e, double r);

/// Parameter of the double point of the inner offset on the positive x-axis
/// (Case 2 only, throws CaseError otherwise).
double alpha_angle(const Ellipse& e, double r);

/// Parameter of the double point of the inner offset on the y-axis
/// (Case 4 only, throws CaseError otherwise).
double beta_angle(const Ellipse& e, double r);

/// n points of a parallel curve at phi = 2 pi i / n, i = 0..n-1. Requires n >= 16.
std::vector<PlanePoint> sample_offset_curve(const Ellipse& e, double r, OffsetSide side, int n);

/// n points of a parallel curve on [phi0, phi1], both endpoints included. Requires n >= 2.
std::vector<PlanePoint> sample_offset_arc(const Ellipse& e, double r, OffsetSide side,
                                          double phi0, double phi1, int n);

/// Throws DomainError unless r is positive and finite.
void require_radius(double r, const char* what = "r");

}  // namespace ellcirc
