#include "ballhull/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/toms748_solve.hpp>

#include "ballhull/error.hpp"

namespace ballhull {

namespace {

constexpr double kAngularWidth = 1e-13;
constexpr double kMergeDistance = 1e-9;

void require_radius(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw GeometryError(ErrorCode::InvalidRadius, "radius must be positive and finite");
  }
}

void require_finite(Point p, const char* what) {
  if (!is_finite(p)) throw GeometryError(ErrorCode::InvalidInput, std::string("non-finite ") + what);
}

// Root of f on [a, b] given f(a) < 0 < f(b) (or the reverse).
template <class F>
double bracketed_root(F&& f, double a, double b, double fa, double fb) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  std::uintmax_t max_iter = 200;
  auto stop = [](double lo, double hi) { return std::fabs(hi - lo) < kAngularWidth; };
  auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, stop, max_iter);
  return 0.5 * (lo + hi);
}

// Signed excess of the distance from c2 along S(c1, lambda).
struct DistanceExcess {
  const NormPlane& plane;
  Point c1, c2;
  double lambda;
  double operator()(double theta) const {
    return norm_unchecked(plane, sphere_point(plane, c1, lambda, theta) - c2) - lambda;
  }
};

}  // namespace

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double Arc::lift(double theta) const { return theta_start + normalize_angle(theta - theta_start); }

bool Arc::covers(double theta) const { return is_full() || lift(theta) <= theta_end; }

Arc make_arc(Point center, double radius, Point from, Point to) {
  Arc arc;
  arc.center = center;
  arc.radius = radius;
  arc.theta_start = normalize_angle(std::atan2(from.y - center.y, from.x - center.x));
  const double to_angle = normalize_angle(std::atan2(to.y - center.y, to.x - center.x));
  arc.theta_end = arc.theta_start + normalize_angle(to_angle - arc.theta_start);
  arc.start = from;
  arc.end = to;
  return arc;
}

Arc full_circle(const NormPlane& plane, Point center, double radius) {
  require_radius(radius);
  Arc arc;
  arc.center = center;
  arc.radius = radius;
  arc.theta_start = 0.0;
  arc.theta_end = kTwoPi;
  arc.start = arc.end = sphere_point(plane, center, radius, 0.0);
  return arc;
}

Membership classify_margin(double margin, double lambda, double band) {
  Membership m;
  m.margin = margin;
  if (margin < -band * lambda) {
    m.location = Location::Inside;
  } else if (margin <= band * lambda) {
    m.location = Location::OnBoundary;
  } else {
    m.location = Location::Outside;
  }
  return m;
}

std::vector<Point> circle_circle_intersection(const NormPlane& plane, Point c1, Point c2,
                                              double lambda, double tol) {
  require_radius(lambda);
  require_finite(c1, "center");
  require_finite(c2, "center");
  if (c1 == c2) {
    throw GeometryError(ErrorCode::CoincidentCenters, "circles with equal centers and radii");
  }
  const double d = norm_unchecked(plane, c2 - c1);
  if (std::fabs(d - 2.0 * lambda) <= tol * lambda) return {0.5 * (c1 + c2)};
  if (d > 2.0 * lambda) return {};

  const DistanceExcess g{plane, c1, c2, lambda};
  const double theta0 = std::atan2(c2.y - c1.y, c2.x - c1.x);
  const double near = g(theta0);
  const double far_left = g(theta0 + std::numbers::pi);
  if (!(near < 0.0)) return {0.5 * (c1 + c2)};  // tangency lost in rounding

  const double t_left = bracketed_root(g, theta0, theta0 + std::numbers::pi, near, far_left);
  const double t_right =
      bracketed_root(g, theta0 + std::numbers::pi, theta0 + kTwoPi, far_left, g(theta0 + kTwoPi));
  const Point a = sphere_point(plane, c1, lambda, t_left);
  const Point b = sphere_point(plane, c1, lambda, t_right);
  if (euclid(a - b) < kMergeDistance * lambda) return {0.5 * (a + b)};
  return {a, b};
}

Point left_intersection(const NormPlane& plane, Point c1, Point c2, double lambda) {
  const DistanceExcess g{plane, c1, c2, lambda};
  const double theta0 = std::atan2(c2.y - c1.y, c2.x - c1.x);
  const double near = g(theta0);
  if (!(near < 0.0)) return 0.5 * (c1 + c2);
  const double far = g(theta0 + std::numbers::pi);
  const double t = bracketed_root(g, theta0, theta0 + std::numbers::pi, near, far);
  return sphere_point(plane, c1, lambda, t);
}

Membership disc_membership(const NormPlane& plane, Point center, double lambda, Point q,
                           double band) {
  require_radius(lambda);
  if (band < 0.0) throw GeometryError(ErrorCode::InvalidInput, "negative band");
  return classify_margin(norm_eval(plane, q - center) - lambda, lambda, band);
}

Point inner_center(const NormPlane& plane, Point p, Point q, double lambda) {
  if (p == q) throw GeometryError(ErrorCode::DegenerateChord, "p and q coincide");
  const double d = norm_unchecked(plane, q - p);
  if (d > 2.0 * lambda * (1.0 + kBoundaryBand)) {
    throw GeometryError(ErrorCode::NoCommonDisc, "points farther apart than 2 lambda");
  }
  return left_intersection(plane, p, q, lambda);
}

std::vector<Arc> minimal_arcs(const NormPlane& plane, Point p, Point q, double lambda) {
  require_radius(lambda);
  require_finite(p, "point");
  require_finite(q, "point");
  if (p == q) throw GeometryError(ErrorCode::DegenerateChord, "p and q coincide");
  if (norm_unchecked(plane, q - p) > 2.0 * lambda * (1.0 + kBoundaryBand)) {
    throw GeometryError(ErrorCode::NoCommonDisc, "points farther apart than 2 lambda");
  }
  const auto centers = circle_circle_intersection(plane, p, q, lambda);
  if (centers.size() == 2) {
    // centers[0] is left of p->q, so its far-side arc runs ccw from p to q.
    return {make_arc(centers[0], lambda, p, q), make_arc(centers[1], lambda, q, p)};
  }
  const Point mid = centers.empty() ? 0.5 * (p + q) : centers.front();
  return {make_arc(mid, lambda, p, q), make_arc(mid, lambda, q, p)};
}

std::vector<Point> arc_sample(const NormPlane& plane, const Arc& arc, int k) {
  if (k < 1) throw GeometryError(ErrorCode::InvalidInput, "sample count must be >= 1");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  out.push_back(arc.start);
  const double step = arc.extent() / k;
  for (int i = 1; i < k; ++i) {
    out.push_back(sphere_point(plane, arc.center, arc.radius, arc.theta_start + i * step));
  }
  out.push_back(arc.end);
  return out;
}

std::pair<double, double> arc_x_range(const NormPlane& plane, const Arc& arc) {
  double lo = std::min(arc.start.x, arc.end.x);
  double hi = std::max(arc.start.x, arc.end.x);
  if (arc.covers(std::numbers::pi)) {
    lo = std::min(lo, sphere_point(plane, arc.center, arc.radius, std::numbers::pi).x);
  }
  if (arc.covers(0.0)) {
    hi = std::max(hi, sphere_point(plane, arc.center, arc.radius, 0.0).x);
  }
  return {lo, hi};
}

std::vector<Point> arc_point_at_x(const NormPlane& plane, const Arc& arc, double x0) {
  // Split the parameter range at multiples of pi; x is monotone on each piece.
  std::vector<double> cuts{arc.theta_start};
  const double first = std::ceil(arc.theta_start / std::numbers::pi) * std::numbers::pi;
  for (double c = first; c < arc.theta_end; c += std::numbers::pi) {
    if (c > arc.theta_start) cuts.push_back(c);
  }
  cuts.push_back(arc.theta_end);

  auto x_at = [&](double t) { return sphere_point(plane, arc.center, arc.radius, t).x - x0; };
  std::vector<Point> out;
  auto add = [&](Point q) {
    for (const Point& r : out) {
      if (euclid(r - q) <= kMergeDistance * arc.radius) return;
    }
    out.push_back(q);
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double fa = x_at(a);
    const double fb = x_at(b);
    if ((fa > 0.0 && fb > 0.0) || (fa < 0.0 && fb < 0.0)) continue;
    double t;
    if (fa == 0.0) {
      t = a;
    } else if (fb == 0.0) {
      t = b;
    } else {
      double lo = a, hi = b;
      while (hi - lo > kAngularWidth) {
        const double mid = 0.5 * (lo + hi);
        if ((x_at(mid) < 0.0) == (fa < 0.0)) lo = mid; else hi = mid;
      }
      t = 0.5 * (lo + hi);
    }
    Point q = sphere_point(plane, arc.center, arc.radius, t);
    if (t == arc.theta_start) q = arc.start;
    if (t == arc.theta_end) q = arc.end;
    q.x = x0;
    add(q);
  }
  return out;
}

}  // namespace ballhull
