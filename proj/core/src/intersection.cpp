#include "ellcirc/intersection.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "ellcirc/errors.hpp"

namespace ellcirc {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Samples cos t, sin t, cos 2t on a uniform grid of [0, 2 pi).
struct TrigTable {
  explicit TrigTable(int n) : cos1(n), sin1(n), cos2(n) {
    for (int i = 0; i < n; ++i) {
      const double t = two_pi * i / n;
      cos1[i] = std::cos(t);
      sin1[i] = std::sin(t);
      cos2[i] = std::cos(2.0 * t);
    }
  }
  std::vector<double> cos1;
  std::vector<double> sin1;
  std::vector<double> cos2;
};

const TrigTable& default_table() {
  static const TrigTable table(ClassifyOptions{}.grid);
  return table;
}

// g(t) = ((x0 + r cos t)/a)^2 + ((y0 + r sin t)/b)^2 - 1 written as the
// trigonometric polynomial k0 + k1 cos t + k2 sin t + k3 cos 2t.
struct TrigPoly {
  double k0;
  double k1;
  double k2;
  double k3;

  double operator()(double t) const {
    return k0 + k1 * std::cos(t) + k2 * std::sin(t) + k3 * std::cos(2.0 * t);
  }
};

TrigPoly circle_on_ellipse(const Ellipse& e, double r, CenterOffset c) {
  const double ia2 = 1.0 / (e.a() * e.a());
  const double ib2 = 1.0 / (e.b() * e.b());
  const double half_r2 = 0.5 * r * r;
  return {c.x0 * c.x0 * ia2 + c.y0 * c.y0 * ib2 + half_r2 * (ia2 + ib2) - 1.0,
          2.0 * c.x0 * r * ia2, 2.0 * c.y0 * r * ib2, half_r2 * (ia2 - ib2)};
}

// Golden-section search for the minimum of sign * g on [lo, hi].
double refine_extremum(const TrigPoly& g, double lo, double hi, double sign) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = sign * g(x1);
  double f2 = sign * g(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = sign * g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = sign * g(x2);
    }
  }
  return std::min(f1, f2) * sign;
}

Relation classify_on_grid(const Ellipse& e, double r, CenterOffset c, const ClassifyOptions& opts,
                          const TrigTable& table) {
  const TrigPoly g = circle_on_ellipse(e, r, c);
  const int n = opts.grid;
  thread_local std::vector<double> buffer;
  buffer.resize(static_cast<std::size_t>(n) + 2);
  // buffer[k + 1] = g(t_k); buffer[0] and buffer[n + 1] wrap around.
  double* v = buffer.data() + 1;
  const double* cos1 = table.cos1.data();
  const double* sin1 = table.sin1.data();
  const double* cos2 = table.cos2.data();
  for (int i = 0; i < n; ++i) {
    v[i] = g.k0 + g.k1 * cos1[i] + g.k2 * sin1[i] + g.k3 * cos2[i];
  }
  v[-1] = v[n - 1];
  v[n] = v[0];

  double sign_changes = 0.0;
  for (int i = 0; i < n; ++i) {
    sign_changes += ((v[i] > 0.0) != (v[i + 1] > 0.0)) ? 1.0 : 0.0;
  }
  int crossings = static_cast<int>(sign_changes);

  // Grid extrema: the discrete slope changes sign (at most four for g).
  // Blocks are screened with a branch-free pass before the scalar scan.
  constexpr int block = 64;
  const double h = two_pi / n;
  for (int start = 0; start < n; start += block) {
    const int stop = std::min(n, start + block);
    double flagged = 0.0;
    for (int i = start; i < stop; ++i) {
      flagged += ((v[i] - v[i - 1]) * (v[i + 1] - v[i]) <= 0.0) ? 1.0 : 0.0;
    }
    if (flagged == 0.0) {
      continue;
    }
    for (int i = start; i < stop; ++i) {
      const double back = v[i] - v[i - 1];
      const double fwd = v[i + 1] - v[i];
      if (back * fwd > 0.0) {
        continue;
      }
      const double cur = v[i];
      const bool is_min = back <= 0.0 && fwd >= 0.0;
      if (std::abs(cur) < opts.tol) {
        return Relation::Degenerate;
      }
      // Only extrema that point toward zero can hide a crossing pair or a tangency.
      if ((is_min && cur > 0.0) || (!is_min && cur < 0.0)) {
        const double t = h * i;
        const double extreme = refine_extremum(g, t - h, t + h, is_min ? 1.0 : -1.0);
        if (std::abs(extreme) < opts.tol) {
          return Relation::Degenerate;
        }
        if ((extreme > 0.0) != (cur > 0.0)) {
          crossings += 2;
        }
      }
    }
  }

  if (crossings % 2 != 0 || crossings > 4) {
    throw ResolutionError("intersection oracle found " + std::to_string(crossings) +
                          " crossings; grid too coarse for this pose");
  }
  if (crossings == 4) return Relation::FourPoints;
  if (crossings == 2) return Relation::TwoPoints;
  if (v[0] < 0.0) {
    return Relation::CircleInsideEllipse;
  }
  const double dx = e.a() - c.x0;
  const double dy = c.y0;
  return dx * dx + dy * dy < r * r ? Relation::EllipseInsideCircle : Relation::DisjointOutside;
}

}  // namespace

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::DisjointOutside: return "DisjointOutside";
    case Relation::EllipseInsideCircle: return "EllipseInsideCircle";
    case Relation::CircleInsideEllipse: return "CircleInsideEllipse";
    case Relation::TwoPoints: return "TwoPoints";
    case Relation::FourPoints: return "FourPoints";
    case Relation::Degenerate: return "Degenerate";
  }
  return "?";
}

Relation classify(const Ellipse& e, double r, CenterOffset c, const ClassifyOptions& opts) {
  require_radius(r);
  if (!(opts.tol > 0.0) || opts.grid < 16) {
    throw DomainError("classify needs tol > 0 and grid >= 16");
  }
  if (!std::isfinite(c.x0) || !std::isfinite(c.y0)) {
    throw DomainError("circle centre must be finite");
  }

  // Exact disk-bound shortcuts. The slack keeps near-tangent poses on the full path.
  const double d = std::hypot(c.x0, c.y0);
  const double slack = 1e-6 * (e.a() + r);
  if (d > e.a() + r + slack) {
    return Relation::DisjointOutside;
  }
  if (d + e.a() < r - slack) {
    return Relation::EllipseInsideCircle;
  }
  if (d + r < e.b() - slack) {
    return Relation::CircleInsideEllipse;
  }

  if (opts.grid == ClassifyOptions{}.grid) {
    return classify_on_grid(e, r, c, opts, default_table());
  }
  return classify_on_grid(e, r, c, opts, TrigTable(opts.grid));
}

int count_intersections(const Ellipse& e, double r, CenterOffset c, const ClassifyOptions& opts) {
  switch (classify(e, r, c, opts)) {
    case Relation::TwoPoints: return 2;
    case Relation::FourPoints: return 4;
    case Relation::Degenerate:
      throw DegeneratePoseError("circle is tangent to the ellipse within tolerance");
    default: return 0;
  }
}

namespace {

bool point_in_polygon(const std::vector<PlanePoint>& poly, PlanePoint q) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const PlanePoint& pi = poly[i];
    const PlanePoint& pj = poly[j];
    if ((pi.y > q.y) != (pj.y > q.y) &&
        q.x < (pj.x - pi.x) * (q.y - pi.y) / (pj.y - pi.y) + pi.x) {
      inside = !inside;
    }
  }
  return inside;
}

void append_arc(RegionChecker::Loop& loop, const Ellipse& e, double r, double phi0, double phi1,
                int n) {
  for (int i = 0; i < n; ++i) {
    const double phi = i + 1 == n ? phi1 : phi0 + (phi1 - phi0) * i / (n - 1);
    loop.polygon.push_back(offset_point(e, r, OffsetSide::Inner, phi));
    loop.params.push_back(phi);
  }
}

int arc_samples(double span, int samples) {
  return std::max(64, static_cast<int>(std::ceil(span / two_pi * samples)) + 1);
}

}  // namespace

RegionChecker::RegionChecker(const Ellipse& e, double r, int samples) : e_(e), r_(r) {
  require_radius(r);
  if (samples < 256) {
    throw DomainError("RegionChecker needs at least 256 samples per curve");
  }
  outer_ = sample_offset_curve(e, r, OffsetSide::Outer, samples);
  outer_params_.resize(outer_.size());
  for (int i = 0; i < samples; ++i) {
    outer_params_[i] = two_pi * i / samples;
  }

  const double pi = std::numbers::pi;
  const auto add_loop = [&](Relation inside,
                            std::initializer_list<std::pair<double, double>> arcs) {
    Loop loop{{}, inside, {}};
    for (const auto& [lo, hi] : arcs) {
      append_arc(loop, e, r, lo, hi, arc_samples(hi - lo, samples));
    }
    loops_.push_back(std::move(loop));
  };

  switch (case_classify(e, r)) {
    case CaseId::One:
      add_loop(Relation::CircleInsideEllipse, {{0.0, two_pi}});
      break;
    case CaseId::Two: {
      // Double points on the x-axis at phi = +-alpha and pi -+ alpha.
      const double al = alpha_angle(e, r);
      add_loop(Relation::FourPoints, {{-al, al}});
      add_loop(Relation::FourPoints, {{pi - al, pi + al}});
      add_loop(Relation::CircleInsideEllipse, {{al, pi - al}, {pi + al, two_pi - al}});
      break;
    }
    case CaseId::Three:
      add_loop(Relation::FourPoints, {{0.0, two_pi}});
      break;
    case CaseId::Four: {
      // Double points on the y-axis at phi = beta, pi - beta, pi + beta, 2 pi - beta.
      const double be = beta_angle(e, r);
      add_loop(Relation::FourPoints, {{be, pi - be}});
      add_loop(Relation::FourPoints, {{pi + be, two_pi - be}});
      add_loop(Relation::EllipseInsideCircle, {{-be, be}, {pi - be, pi + be}});
      break;
    }
    case CaseId::Five:
      add_loop(Relation::EllipseInsideCircle, {{0.0, two_pi}});
      break;
  }
}

double RegionChecker::curve_distance(const std::vector<PlanePoint>& poly,
                                     const std::vector<double>& params, OffsetSide side,
                                     PlanePoint q, bool closed) const {
  const std::size_t n = poly.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = poly[i].x - q.x;
    const double dy = poly[i].y - q.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < best) {
      best = d2;
      best_i = i;
    }
  }
  // Refine on the true curve between the neighbouring vertices.
  const std::size_t lo_i = best_i == 0 ? (closed ? n - 1 : 0) : best_i - 1;
  const std::size_t hi_i = best_i + 1 == n ? (closed ? 0 : n - 1) : best_i + 1;
  double lo = params[lo_i];
  double hi = params[hi_i];
  if (closed && best_i == 0) lo -= two_pi;
  if (closed && best_i + 1 == n) hi += two_pi;
  const auto dist2 = [&](double phi) {
    const PlanePoint p = offset_point(e_, r_, side, phi);
    return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
  };
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = dist2(x1);
  double f2 = dist2(x2);
  for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = dist2(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = dist2(x2);
    }
  }
  return std::sqrt(std::min({best, f1, f2}));
}

double RegionChecker::boundary_distance(CenterOffset c) const {
  const PlanePoint q{c.x0, c.y0};
  double d = curve_distance(outer_, outer_params_, OffsetSide::Outer, q, true);
  for (const Loop& loop : loops_) {
    d = std::min(d, curve_distance(loop.polygon, loop.params, OffsetSide::Inner, q, false));
  }
  return d;
}

Relation RegionChecker::check(CenterOffset c, double boundary_tol) const {
  if (boundary_distance(c) <= boundary_tol) {
    throw IndeterminateError("centre lies on a parallel curve within tolerance");
  }
  const PlanePoint q{c.x0, c.y0};
  if (!point_in_polygon(outer_, q)) {
    return Relation::DisjointOutside;
  }
  for (const Loop& loop : loops_) {
    if (point_in_polygon(loop.polygon, q)) {
      return loop.inside;
    }
  }
  return Relation::TwoPoints;
}

Relation region_cross_check(const Ellipse& e, double r, CenterOffset c) {
  return RegionChecker(e, r).check(c);
}

}  // namespace ellcirc
