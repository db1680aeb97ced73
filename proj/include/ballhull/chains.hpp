#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ballhull/arcs.hpp"

namespace ballhull {

/// A boundary arc together with the point whose radius-lambda circle carries it.
struct ArcWithCenter {
  Arc arc;
  Point generating_center;
};

enum class BoundaryKind { Empty, SinglePoint, Region };

/// Boundary of a closed convex region bounded by radius-lambda arcs.
///
/// For a Region, `upper` and `lower` list the arcs of the two chains from left
/// to right; both chains run from `leftmost` to `rightmost`. Arcs are always
/// stored counterclockwise, so an upper arc starts at its right end and a lower
/// arc at its left end. An arc crossing an extreme point is split there, which
/// means a circle may contribute one arc to each chain.
///
/// `vertices` are the corners of the region (points where the carrying circle
/// changes) in counterclockwise order; a smooth extreme point is not a vertex.
struct ChainBoundary {
  BoundaryKind kind = BoundaryKind::Empty;
  double radius = 0.0;
  Point point;  // location of a SinglePoint
  std::vector<ArcWithCenter> upper;
  std::vector<ArcWithCenter> lower;
  std::vector<Point> vertices;
  Point leftmost;
  Point rightmost;

  bool is_region() const { return kind == BoundaryKind::Region; }
};

/// Lexicographic (x, then y) order with exact duplicates removed.
std::vector<Point> sort_points(std::vector<Point> points);

/// Boundary of the intersection of the radius-lambda discs centered at K.
ChainBoundary build_ball_intersection(const NormPlane& plane, std::span<const Point> points,
                                      double lambda);

/// Same, for input that is already sorted by sort_points. Used by callers that
/// sort once and build many intersections over subsequences.
ChainBoundary build_ball_intersection_sorted(const NormPlane& plane,
                                             std::span<const Point> sorted, double lambda);

/// Generating centers of the upper and lower chain arcs, in arc order.
std::pair<std::vector<Point>, std::vector<Point>> chain_arc_centers(const ChainBoundary& boundary);

/// Point location against a non-empty boundary. The margin is the largest
/// ||q - c|| - lambda over the discs whose arcs bound the region above and
/// below q (over all carrying discs when q is outside the x-extent).
Membership boundary_membership(const NormPlane& plane, const ChainBoundary& boundary, Point q,
                               double band = kBoundaryBand);

/// The maximal boundary arcs in counterclockwise order, starting at the
/// leftmost point (arcs split only at smooth extreme points are rejoined).
std::vector<ArcWithCenter> boundary_arcs(const ChainBoundary& boundary);

/// Builds a Region from a counterclockwise cycle of arcs whose consecutive
/// endpoints coincide. Arcs shorter than 1e-10 rad are dropped and consecutive
/// arcs on the same circle are joined before the split into chains.
ChainBoundary boundary_from_cycle(const NormPlane& plane, double lambda,
                                  std::vector<ArcWithCenter> cycle);

/// Boundary points: `per_arc` + 1 samples on every chain arc.
std::vector<Point> sample_boundary(const NormPlane& plane, const ChainBoundary& boundary,
                                   int per_arc = 64);

/// Sampled boundary distance between two regions, measured with the gauge
/// |boundary_membership margin|: the largest |margin| of the samples of each
/// boundary against the other region.
double boundary_deviation(const NormPlane& plane, const ChainBoundary& a, const ChainBoundary& b,
                          int per_arc = 64);

/// Structural checks of a Region (shared endpoints, extremes, convexity of the
/// sampled polyline, endpoints on their circles, center-order reversal).
/// Returns one message per violation; empty when the boundary is valid.
std::vector<std::string> check_boundary(const NormPlane& plane, const ChainBoundary& boundary,
                                        int per_arc = 64);

/// True if the generating centers of each chain are in strictly decreasing
/// lexicographic order along the chain.
bool centers_reversed(const ChainBoundary& boundary);

}  // namespace ballhull
