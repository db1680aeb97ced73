#pragma once

#include <numbers>
#include <utility>
#include <vector>

#include "ballhull/norm.hpp"

namespace ballhull {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default half-width of the "on the circle" band, relative to the radius.
inline constexpr double kBoundaryBand = 1e-9;

/// Normalizes an angle into [0, 2pi).
double normalize_angle(double theta);

/// A counterclockwise arc of S(center, radius). Angles are parameters of
/// sphere_point, so theta_start in [0, 2pi) and theta_end = theta_start + extent.
/// The endpoints are kept as given by the constructor (shared vertices stay
/// bit-identical between neighbouring arcs).
struct Arc {
  Point center;
  double radius = 0.0;
  double theta_start = 0.0;
  double theta_end = 0.0;
  Point start;
  Point end;

  double extent() const { return theta_end - theta_start; }
  bool is_full() const { return extent() >= kTwoPi; }
  /// True if the parameter theta (any branch) lies in [theta_start, theta_end].
  bool covers(double theta) const;
  /// theta lifted to the branch >= theta_start.
  double lift(double theta) const;
};

/// Arc of S(center, radius) running counterclockwise from `from` to `to`.
/// The points are assumed to lie on the circle; coincident endpoints give a
/// zero-extent arc (use full_circle for the whole circle).
Arc make_arc(Point center, double radius, Point from, Point to);

Arc full_circle(const NormPlane& plane, Point center, double radius);

enum class Location { Inside, OnBoundary, Outside };

struct Membership {
  Location location = Location::Outside;
  double margin = 0.0;  // ||q - c|| - lambda (or the region analogue)

  bool covered() const { return location != Location::Outside; }
};

/// Classifies a signed margin against a band of width band * lambda.
Membership classify_margin(double margin, double lambda, double band);

/// All q with ||q - c1|| = ||q - c2|| = lambda. Two points are returned as
/// {left of c1->c2, right of c1->c2}, i.e. counterclockwise around c1 starting
/// from the direction of c2. One point (the midpoint) when ||c1 - c2|| = 2 lambda
/// within tol; none when farther apart.
std::vector<Point> circle_circle_intersection(const NormPlane& plane, Point c1, Point c2,
                                              double lambda, double tol = kBoundaryBand);

/// The intersection point on the left of the directed line c1 -> c2.
/// Requires 0 < ||c1 - c2|| < 2 lambda (checked loosely; near tangency the
/// midpoint is returned).
Point left_intersection(const NormPlane& plane, Point c1, Point c2, double lambda);

Membership disc_membership(const NormPlane& plane, Point center, double lambda, Point q,
                           double band = kBoundaryBand);

/// Center of the radius-lambda circle through p and q lying on the left of
/// p -> q. Its minimal arc between p and q runs counterclockwise from p to q.
Point inner_center(const NormPlane& plane, Point p, Point q, double lambda);

/// The minimal arcs of radius lambda meeting p and q: for each center of a
/// circle through both, the arc on the far side of the chord from that center.
std::vector<Arc> minimal_arcs(const NormPlane& plane, Point p, Point q, double lambda);

/// k + 1 points at evenly spaced parameters; the two endpoints are returned exactly.
std::vector<Point> arc_sample(const NormPlane& plane, const Arc& arc, int k);

std::pair<double, double> arc_x_range(const NormPlane& plane, const Arc& arc);

/// Points of the arc with first coordinate x0 (zero, one or two).
std::vector<Point> arc_point_at_x(const NormPlane& plane, const Arc& arc, double x0);

}  // namespace ballhull
