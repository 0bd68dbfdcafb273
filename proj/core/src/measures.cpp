#include "ellcirc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "ellcirc/elliptic.hpp"
#include "ellcirc/errors.hpp"

namespace ellcirc {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double kNegativeAreaTolerance = 1e-9;
constexpr double kMeasureCrossCheck = 1e-9;

double clamp_area(double value, const char* name) {
  if (value >= 0.0) {
    return value;
  }
  if (value >= -kNegativeAreaTolerance) {
    std::clog << "ellcirc: clamping " << name << " = " << value << " to 0\n";
    return 0.0;
  }
  std::ostringstream msg;
  msg << "negative area " << name << " = " << value;
  throw ConsistencyError(msg.str());
}

void require_segment(const SegmentSpec& seg) {
  if (!(std::isfinite(seg.l) && seg.l > 0.0)) {
    throw DomainError("segment length l must be positive and finite");
  }
  require_radius(seg.r);
}

}  // namespace

double Lattice::cell_area() const { return s * t * std::sin(sigma); }

double loop_area_antiderivative(const Ellipse& e, double r, double phi) {
  require_radius(r);
  if (!(phi >= 0.0 && phi <= pi / 2.0)) {
    throw DomainError("loop_area_antiderivative: phi must lie in [0, pi/2]");
  }
  const double a = e.a();
  const double b = e.b();
  const double eps = e.eccentricity();
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double eps_s = eps * s;
  return 2.0 * r * r * phi + 2.0 * a * b * std::atan2(b * s, a * c) -
         4.0 * r * a * incomplete_e(phi, eps) +
         r * a * eps * eps * 2.0 * s * c / std::sqrt((1.0 - eps_s) * (1.0 + eps_s));
}

double signed_inner_area(const Ellipse& e, double r) {
  require_radius(r);
  return pi * r * r + pi * e.a() * e.b() - 4.0 * r * e.a() * complete_e(e.eccentricity());
}

double outer_area(const Ellipse& e, double r) {
  require_radius(r);
  return pi * r * r + pi * e.a() * e.b() + 4.0 * r * e.a() * complete_e(e.eccentricity());
}

AreaSet areas(const Ellipse& e, double r) {
  AreaSet out;
  out.case_id = case_classify(e, r);
  out.a_star = signed_inner_area(e, r);
  out.a_plus = outer_area(e, r);
  const double ee = complete_e(e.eccentricity());
  const double a = e.a();
  const double b = e.b();
  const double base = 2.0 * pi * r * r + 2.0 * pi * a * b;
  switch (out.case_id) {
    case CaseId::One:
      out.a_i01 = out.a_star;
      out.a_2 = 8.0 * r * a * ee;
      break;
    case CaseId::Two: {
      const double f_tilde = out.a_star - loop_area_antiderivative(e, r, alpha_angle(e, r));
      out.a_i01 = f_tilde;
      out.a_2 = base - 2.0 * f_tilde;
      out.a_4 = f_tilde - out.a_star;
      break;
    }
    case CaseId::Three:
      out.a_2 = base;
      out.a_4 = -out.a_star;
      break;
    case CaseId::Four: {
      const double f_beta = loop_area_antiderivative(e, r, beta_angle(e, r));
      out.a_i10 = f_beta;
      out.a_2 = base - 2.0 * f_beta;
      out.a_4 = f_beta - out.a_star;
      break;
    }
    case CaseId::Five:
      out.a_i10 = out.a_star;
      out.a_2 = 8.0 * r * a * ee;
      break;
  }
  out.a_i01 = clamp_area(out.a_i01, "A_i01");
  out.a_i10 = clamp_area(out.a_i10, "A_i10");
  out.a_2 = clamp_area(out.a_2, "A_2");
  out.a_4 = clamp_area(out.a_4, "A_4");
  return out;
}

MeasureSet measures(const Ellipse& e, double r) {
  const AreaSet ar = areas(e, r);
  const double a = e.a();
  const double b = e.b();
  MeasureSet out;
  if (a < r) {
    out.m_i = 2.0 * pi * ar.a_i10;
    out.flavor = ContainmentFlavor::EllipseInCircle;
  } else if (b <= r) {
    out.m_i = 0.0;
    out.flavor = ContainmentFlavor::None;
  } else {
    out.m_i = 2.0 * pi * ar.a_i01;
    out.flavor = ContainmentFlavor::CircleInEllipse;
  }
  const double pi2 = pi * pi;
  const double ee = complete_e(e.eccentricity());
  out.m_2 = 4.0 * pi2 * r * r + 4.0 * pi2 * a * b - 2.0 * out.m_i;
  out.m_4 = 8.0 * pi * r * a * ee - 2.0 * pi2 * r * r - 2.0 * pi2 * a * b + out.m_i;

  const auto check = [](double lhs, double rhs, const char* name) {
    if (std::abs(lhs - rhs) > kMeasureCrossCheck * std::max(1.0, std::abs(rhs))) {
      std::ostringstream msg;
      msg.precision(17);
      msg << name << " = " << lhs << " disagrees with 2 pi * area = " << rhs;
      throw ConsistencyError(msg.str());
    }
  };
  check(out.m_2, 2.0 * pi * ar.a_2, "m_2");
  check(out.m_4, 2.0 * pi * ar.a_4, "m_4");
  out.m_4 = std::max(out.m_4, 0.0);
  return out;
}

void validate_lattice(const Lattice& lat) {
  if (!(std::isfinite(lat.s) && lat.s > 0.0 && std::isfinite(lat.t) && lat.t > 0.0)) {
    throw DomainError("lattice sides s, t must be positive and finite");
  }
  if (!(lat.sigma > 0.0 && lat.sigma <= pi / 2.0)) {
    throw DomainError("lattice angle sigma must lie in (0, pi/2]");
  }
}

void require_one_circle(const Ellipse& e, double r, const Lattice& lat) {
  validate_lattice(lat);
  require_radius(r);
  const double need = 2.0 * (e.a() + r);
  const double have = std::min(lat.s, lat.t);
  if (need > have) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "one-circle assumption 2(a+r) <= min(s,t) violated: 2(a+r) = " << need
        << " > min(s,t) = " << have;
    throw AssumptionError(msg.str());
  }
}

ProbabilitySet probabilities(const Ellipse& e, double r, const Lattice& lat) {
  require_one_circle(e, r, lat);
  const MeasureSet m = measures(e, r);
  const double m_t = 2.0 * pi * lat.cell_area();
  const double hit = 2.0 * pi * pi * r * r + 2.0 * pi * pi * e.a() * e.b() +
                     8.0 * pi * r * e.a() * complete_e(e.eccentricity());
  ProbabilitySet p;
  p.p_2 = m.m_2 / m_t;
  p.p_4 = m.m_4 / m_t;
  p.p_i = m.m_i / m_t;
  p.p_e = 1.0 - hit / m_t;
  p.p_0 = 1.0 - p.p_2 - p.p_4;
  return p;
}

double expected_intersections(const Ellipse& e, double r, const Lattice& lat) {
  require_one_circle(e, r, lat);
  return 16.0 * r * e.a() * complete_e(e.eccentricity()) / lat.cell_area();
}

double segment_m_i(const SegmentSpec& seg) {
  require_segment(seg);
  const double l = seg.l;
  const double r = seg.r;
  if (l >= 2.0 * r) {
    return 0.0;
  }
  const double half = 0.5 * l;
  return 2.0 * pi *
         (pi * r * r - 2.0 * r * r * std::asin(l / (2.0 * r)) -
          l * std::sqrt((r - half) * (r + half)));
}

SegmentMeasures segment_measures(const SegmentSpec& seg) {
  SegmentMeasures out;
  out.m_i = segment_m_i(seg);
  const double r = seg.r;
  out.m_1 = 4.0 * pi * pi * r * r - 2.0 * out.m_i;
  out.m_2 = 4.0 * pi * r * seg.l - 2.0 * pi * pi * r * r + out.m_i;
  return out;
}

SegmentProbabilitySet segment_probabilities(const SegmentSpec& seg, const Lattice& lat) {
  require_segment(seg);
  validate_lattice(lat);
  const double need = 2.0 * (0.5 * seg.l + seg.r);
  const double have = std::min(lat.s, lat.t);
  if (need > have) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "one-circle assumption 2(l/2+r) <= min(s,t) violated: " << need << " > " << have;
    throw AssumptionError(msg.str());
  }
  const double m_i = segment_m_i(seg);
  const double r = seg.r;
  const double l = seg.l;
  const double cell = lat.cell_area();
  const double m_t = 2.0 * pi * cell;
  SegmentProbabilitySet p;
  p.p_0 = 1.0 - (2.0 * pi * pi * r * r + 4.0 * pi * r * l - m_i) / m_t;
  p.p_1 = (2.0 * pi * pi * r * r - m_i) / (pi * cell);
  p.p_2 = (4.0 * pi * r * l - 2.0 * pi * pi * r * r + m_i) / m_t;
  p.p_i = m_i / m_t;
  p.p_e = 1.0 - (2.0 * pi * pi * r * r + 4.0 * pi * r * l) / m_t;
  return p;
}

double signed_inner_area_quadrature(const Ellipse& e, double r) {
  require_radius(r);
  const auto integrand = [&](double phi) {
    const double q = support(e, phi) - r;
    return q * (q + support_d2(e, phi));
  };
  // Trapezoid sums on a periodic smooth integrand; each doubling reuses the
  // previous nodes and adds the midpoints.
  int panels = 1024;
  double h = 2.0 * pi / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    sum += integrand(h * i);
  }
  double estimate = 0.5 * sum * h;
  constexpr int kMaxPanels = 1 << 22;
  while (panels < kMaxPanels) {
    double mid = 0.0;
    for (int i = 0; i < panels; ++i) {
      mid += integrand(h * (i + 0.5));
    }
    sum += mid;
    panels *= 2;
    h *= 0.5;
    const double refined = 0.5 * sum * h;
    if (std::abs(refined - estimate) <= 1e-13 * std::max(1.0, std::abs(refined))) {
      return refined;
    }
    estimate = refined;
  }
  throw ConsistencyError("signed_inner_area_quadrature did not converge");
}

}  // namespace ellcirc
