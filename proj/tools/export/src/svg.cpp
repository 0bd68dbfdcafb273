#include "ellcirc/export/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "ellcirc/errors.hpp"

namespace ellcirc::exporting {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double margin_fraction = 0.08;

std::vector<PlanePoint> sample_closed(int n, auto&& point) {
  std::vector<PlanePoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back(point(2.0 * pi * i / n));
  return pts;
}

void add_loop(CurveScene& scene, const Ellipse& e, double r, int n,
              std::initializer_list<std::pair<double, double>> arcs) {
  StyledPolyline loop{"inner-loop", {}, true};
  for (const auto& [lo, hi] : arcs) {
    const int k = std::max(8, static_cast<int>(std::ceil((hi - lo) / (2.0 * pi) * n)) + 1);
    const auto arc = sample_offset_arc(e, r, OffsetSide::Inner, lo, hi, k);
    loop.points.insert(loop.points.end(), arc.begin(), arc.end());
  }
  scene.polylines.push_back(std::move(loop));
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

const char* stroke_of(const std::string& style) {
  if (style == "ellipse") return "#000000";
  if (style == "outer") return "#1f77b4";
  if (style == "inner") return "#d62728";
  if (style == "evolute") return "#7f7f7f";
  return "#2ca02c";
}

}  // namespace

CurveScene build_curve_scene(const Ellipse& e, double r, int n) {
  require_radius(r);
  if (n < 64) throw DomainError("curves needs n >= 64");

  CurveScene scene;
  scene.polylines.push_back(
      {"ellipse", sample_closed(n, [&](double phi) { return ellipse_point(e, phi); }), true});
  scene.polylines.push_back({"outer", sample_offset_curve(e, r, OffsetSide::Outer, n), true});

  switch (case_classify(e, r)) {
    case CaseId::Two: {
      const double al = alpha_angle(e, r);
      add_loop(scene, e, r, n, {{-al, al}});
      add_loop(scene, e, r, n, {{pi - al, pi + al}});
      add_loop(scene, e, r, n, {{al, pi - al}, {pi + al, 2.0 * pi - al}});
      break;
    }
    case CaseId::Three:
      add_loop(scene, e, r, n, {{0.0, 2.0 * pi}});
      break;
    case CaseId::Four: {
      const double be = beta_angle(e, r);
      add_loop(scene, e, r, n, {{be, pi - be}});
      add_loop(scene, e, r, n, {{pi + be, 2.0 * pi - be}});
      add_loop(scene, e, r, n, {{-be, be}, {pi - be, pi + be}});
      break;
    }
    default:
      scene.polylines.push_back({"inner", sample_offset_curve(e, r, OffsetSide::Inner, n), true});
      break;
  }

  if (!e.is_circle()) {
    scene.polylines.push_back(
        {"evolute", sample_closed(n, [&](double phi) { return evolute_point(e, phi); }), true});
  }
  if (const auto lambda = cusp_angle(e, r)) {
    for (const double phi : {*lambda, pi - *lambda, pi + *lambda, 2.0 * pi - *lambda}) {
      scene.cusps.push_back(offset_point(e, r, OffsetSide::Inner, phi));
    }
  }

  double lo_x = 0.0, lo_y = 0.0, hi_x = 0.0, hi_y = 0.0;
  const auto grow = [&](const PlanePoint& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ConsistencyError("non-finite point in curve scene");
    }
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  };
  for (const auto& pl : scene.polylines) std::for_each(pl.points.begin(), pl.points.end(), grow);
  std::for_each(scene.cusps.begin(), scene.cusps.end(), grow);

  const double pad = margin_fraction * std::max(hi_x - lo_x, hi_y - lo_y);
  scene.min_x = lo_x - pad;
  scene.min_y = lo_y - pad;
  scene.max_x = hi_x + pad;
  scene.max_y = hi_y + pad;
  return scene;
}

std::string render_svg(const CurveScene& scene) {
  const double w = scene.max_x - scene.min_x;
  const double h = scene.max_y - scene.min_y;
  const double stroke = 0.003 * std::max(w, h);
  // SVG y grows downwards, so every y is negated and the viewBox flipped.
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" +
         fmt(std::round(800.0 * h / w)) + "\" viewBox=\"" + fmt(scene.min_x) + " " +
         fmt(-scene.max_y) + " " + fmt(w) + " " + fmt(h) + "\">\n";
  for (const auto& pl : scene.polylines) {
    out += std::string("  <") + (pl.closed ? "polygon" : "polyline") + " class=\"" + pl.style +
           "\" fill=\"none\" stroke=\"" + stroke_of(pl.style) + "\" stroke-width=\"" +
           fmt(stroke) + "\"";
    if (pl.style == "evolute") out += " stroke-dasharray=\"" + fmt(4 * stroke) + "\"";
    out += " points=\"";
    for (std::size_t i = 0; i < pl.points.size(); ++i) {
      if (i) out += ' ';
      out += fmt(pl.points[i].x) + "," + fmt(-pl.points[i].y);
    }
    out += "\"/>\n";
  }
  for (const auto& c : scene.cusps) {
    out += "  <circle class=\"cusp\" cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(-c.y) + "\" r=\"" +
           fmt(2.5 * stroke) + "\" fill=\"#ff7f0e\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ellcirc::exporting
