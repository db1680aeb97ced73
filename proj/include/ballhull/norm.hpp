#pragma once

#include <cmath>
#include <compare>

namespace ballhull {

/// A point (or vector) of the plane in a fixed Euclidean orthonormal frame.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

using Vector = Point;

/// Lexicographic order: x first, y breaks ties.
constexpr bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

constexpr double cross(Vector a, Vector b) { return a.x * b.y - a.y * b.x; }
constexpr double dot(Vector a, Vector b) { return a.x * b.x + a.y * b.y; }
inline double euclid(Vector v) { return std::hypot(v.x, v.y); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

enum class NormFamily { Lp };

/// The ambient normed plane. Only strictly convex members are admitted
/// by validate_plane; every distance in the library goes through norm_eval.
struct NormPlane {
  NormFamily family = NormFamily::Lp;
  double p = 2.0;

  static NormPlane lp(double exponent) { return {NormFamily::Lp, exponent}; }
};

/// Throws GeometryError(NotStrictlyConvex) unless 1 < p < inf.
void validate_plane(const NormPlane& plane);

/// ||v|| in the plane's norm. Throws InvalidInput on non-finite v.
double norm_eval(const NormPlane& plane, Vector v);

/// Same as norm_eval without the finiteness check; for inner loops.
double norm_unchecked(const NormPlane& plane, Vector v);

/// center + lambda * u(theta) / ||u(theta)||, u(theta) = (cos theta, sin theta).
Point sphere_point(const NormPlane& plane, Point center, double lambda, double theta);

/// Upper half of the unit circle as a graph: the y >= 0 with ||(u, y)|| = 1,
/// for |u| <= 1 (clamped). The unit disc of every admitted norm spans [-1, 1]
/// in x, with the extreme points (+-1, 0).
double unit_height(const NormPlane& plane, double u);

}  // namespace ballhull
