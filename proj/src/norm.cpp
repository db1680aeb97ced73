#include "ballhull/norm.hpp"

#include <algorithm>
#include <sstream>

#include "ballhull/error.hpp"

namespace ballhull {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::InvalidRadius: return "invalid-radius";
    case ErrorCode::NotStrictlyConvex: return "not-strictly-convex";
    case ErrorCode::CoincidentCenters: return "coincident-centers";
    case ErrorCode::NoCommonDisc: return "no-common-disc";
    case ErrorCode::DegenerateChord: return "degenerate-chord";
    case ErrorCode::NoArcs: return "no-arcs";
    case ErrorCode::RadiusTooSmall: return "radius-too-small";
  }
  return "unknown";
}

void validate_plane(const NormPlane& plane) {
  if (plane.family != NormFamily::Lp) {
    throw GeometryError(ErrorCode::NotStrictlyConvex, "unknown norm family");
  }
  std::ostringstream msg;
  if (!std::isfinite(plane.p)) {
    msg << "p must be finite (got " << plane.p << "); the L-infinity ball has flat edges";
    throw GeometryError(ErrorCode::NotStrictlyConvex, msg.str());
  }
  if (!(plane.p > 1.0)) {
    msg << "p must be > 1 (got " << plane.p << "); the L1 ball has flat edges";
    throw GeometryError(ErrorCode::NotStrictlyConvex, msg.str());
  }
}

double norm_unchecked(const NormPlane& plane, Vector v) {
  const double a = std::fabs(v.x);
  const double b = std::fabs(v.y);
  if (plane.p == 2.0) return std::hypot(a, b);
  const double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  // Scale by the larger component so the power never overflows.
  const double r = std::min(a, b) / m;
  return m * std::pow(1.0 + std::pow(r, plane.p), 1.0 / plane.p);
}

double norm_eval(const NormPlane& plane, Vector v) {
  if (!is_finite(v)) throw GeometryError(ErrorCode::InvalidInput, "non-finite vector");
  return norm_unchecked(plane, v);
}

Point sphere_point(const NormPlane& plane, Point center, double lambda, double theta) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw GeometryError(ErrorCode::InvalidRadius, "radius must be positive and finite");
  }
  const Vector u{std::cos(theta), std::sin(theta)};
  const double s = lambda / norm_unchecked(plane, u);
  return {center.x + s * u.x, center.y + s * u.y};
}

double unit_height(const NormPlane& plane, double u) {
  const double a = std::min(std::fabs(u), 1.0);
  if (plane.p == 2.0) return std::sqrt((1.0 - a) * (1.0 + a));
  return std::pow(1.0 - std::pow(a, plane.p), 1.0 / plane.p);
}

}  // namespace ballhull
