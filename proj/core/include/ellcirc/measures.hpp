#pragma once

#include "ellcirc/ellipse.hpp"

namespace ellcirc {

/// Areas of the sets of centre positions for a fixed-direction ellipse
/// against a fixed circle of radius r.
struct AreaSet {
  CaseId case_id = CaseId::One;
  double a_i01 = 0.0;  // circle contained in the ellipse
  double a_i10 = 0.0;  // ellipse contained in the circle
  double a_2 = 0.0;    // two crossings
  double a_4 = 0.0;    // four crossings
  double a_plus = 0.0;  // region bounded by the outer parallel curve
  double a_star = 0.0;  // signed area enclosed by the inner parallel curve
};

/// Which containment the measure m_i counts.
enum class ContainmentFlavor {
  EllipseInCircle,  // "10": cases 4 and 5
  None,             // case 3
  CircleInEllipse,  // "01": cases 1 and 2
};

/// Kinematic measures (translations and rotations) of ellipse poses.
struct MeasureSet {
  double m_i = 0.0;
  double m_2 = 0.0;
  double m_4 = 0.0;
  ContainmentFlavor flavor = ContainmentFlavor::None;
};

/// Circle lattice: centres at the vertices of parallelograms with sides s, t
/// and angle sigma in (0, pi/2].
struct Lattice {
  double s = 0.0;
  double t = 0.0;
  double sigma = 0.0;

  /// Area of one fundamental parallelogram.
  double cell_area() const;
};

/// Hitting probabilities for a random throw onto a circle lattice.
struct ProbabilitySet {
  double p_0 = 0.0;
  double p_2 = 0.0;
  double p_4 = 0.0;
  double p_i = 0.0;
  double p_e = 0.0;
};

/// Line segment of length l against circles of radius r.
struct SegmentSpec {
  double l = 0.0;
  double r = 0.0;
};

struct SegmentMeasures {
  double m_i = 0.0;
  double m_1 = 0.0;
  double m_2 = 0.0;
};

struct SegmentProbabilitySet {
  double p_0 = 0.0;
  double p_1 = 0.0;
  double p_2 = 0.0;
  double p_i = 0.0;
  double p_e = 0.0;
};

/// Antiderivative of 2 (p - r)(p - r + p'') on [0, pi/2], normalised so that
/// F(0) = 0. The arctan term is continued through phi = pi/2.
double loop_area_antiderivative(const Ellipse& e, double r, double phi);

/// pi r^2 + pi a b - 4 r a E(eps). Negative exactly in case 3.
double signed_inner_area(const Ellipse& e, double r);

/// pi r^2 + pi a b + 4 r a E(eps), the area of the Minkowski sum of disk and ellipse.
double outer_area(const Ellipse& e, double r);

/// Case table of the four position-set areas. Negative values in
/// [-1e-9, 0) are clamped to zero; anything lower raises ConsistencyError.
AreaSet areas(const Ellipse& e, double r);

/// Kinematic measures m_i, m_2, m_4. Cross-checked against 2 pi * areas().
MeasureSet measures(const Ellipse& e, double r);

/// Throws DomainError for a malformed lattice.
void validate_lattice(const Lattice& lat);

/// Throws AssumptionError unless 2 (a + r) <= min(s, t).
void require_one_circle(const Ellipse& e, double r, const Lattice& lat);

ProbabilitySet probabilities(const Ellipse& e, double r, const Lattice& lat);

/// Expected number of intersection points of a randomly thrown ellipse.
double expected_intersections(const Ellipse& e, double r, const Lattice& lat);

/// Measure of segment poses contained in the disk; zero once l >= 2 r.
double segment_m_i(const SegmentSpec& seg);

SegmentMeasures segment_measures(const SegmentSpec& seg);

SegmentProbabilitySet segment_probabilities(const SegmentSpec& seg, const Lattice& lat);

/// (1/2) * integral_0^{2 pi} (p - r)(p - r + p'') dphi by periodic trapezoid
/// rule with doubling until successive estimates agree. Equals signed_inner_area.
double signed_inner_area_quadrature(const Ellipse& e, double r);

}  // namespace ellcirc
