#pragma once

#include <string_view>
#include <vector>

#include "ellcirc/ellipse.hpp"

namespace ellcirc {

/// Circle centre relative to the ellipse centre, in the ellipse frame.
struct CenterOffset {
  double x0 = 0.0;
  double y0 = 0.0;
};

enum class Relation {
  DisjointOutside,
  EllipseInsideCircle,
  CircleInsideEllipse,
  TwoPoints,
  FourPoints,
  Degenerate,
};

std::string_view to_string(Relation rel);

struct ClassifyOptions {
  /// Tangency threshold on g = (x/a)^2 + (y/b)^2 - 1 along the circle.
  double tol = 1e-10;
  /// Number of uniform samples of the circle parameter.
  int grid = 4096;
};

/// Classifies one circle pose against the ellipse by counting sign changes
/// of g(t) over the circle, with golden-section refinement of every grid
/// extremum to expose crossing pairs hidden between samples. Throws
/// ResolutionError if the refined crossing count is odd.
Relation classify(const Ellipse& e, double r, CenterOffset c, const ClassifyOptions& opts = {});

/// Number of distinct transversal crossings (0, 2 or 4). Throws
/// DegeneratePoseError for tangent poses.
int count_intersections(const Ellipse& e, double r, CenterOffset c,
                        const ClassifyOptions& opts = {});

/// Independent classifier that locates the circle centre in the regions cut
/// out by the outer parallel curve and the loops of the inner parallel curve.
class RegionChecker {
 public:
  /// `samples` is the polyline resolution of each full parallel curve.
  RegionChecker(const Ellipse& e, double r, int samples = 8192);

  /// Throws IndeterminateError when the centre lies within `boundary_tol`
  /// of either parallel curve.
  Relation check(CenterOffset c, double boundary_tol = 1e-6) const;

  /// Distance from a point to the nearer of the two parallel curves.
  double boundary_distance(CenterOffset c) const;

  struct Loop {
    std::vector<PlanePoint> polygon;
    Relation inside;
    // Parameter of each polygon vertex; used to refine boundary distances.
    std::vector<double> params;
  };

  const std::vector<Loop>& inner_loops() const { return loops_; }
  const std::vector<PlanePoint>& outer_polygon() const { return outer_; }

 private:
  double curve_distance(const std::vector<PlanePoint>& poly, const std::vector<double>& params,
                        OffsetSide side, PlanePoint q, bool closed) const;

  Ellipse e_;
  double r_;
  std::vector<PlanePoint> outer_;
  std::vector<double> outer_params_;
  std::vector<Loop> loops_;
};

Relation region_cross_check(const Ellipse& e, double r, CenterOffset c);

}  // namespace ellcirc
