#include "ballhull/two_center.hpp"

#include <algorithm>
#include <cmath>

#include "ballhull/error.hpp"

namespace ballhull {

namespace {

bool within(const NormPlane& plane, Point c, Point q, double radius, double band) {
  return norm_unchecked(plane, q - c) <= radius * (1.0 + band);
}

bool inside_all(const NormPlane& plane, std::span<const Point> centers, Point q, double radius) {
  return std::all_of(centers.begin(), centers.end(),
                     [&](Point c) { return within(plane, c, q, radius, kBoundaryBand); });
}

// Marches the sorted points through the chains of `bi` and returns the first
// point inside. Arc pointers only move right.
std::optional<Point> march(const NormPlane& plane, std::span<const Point> sorted,
                           std::span<const Point> far, const ChainBoundary& bi, double lambda,
                           TwoCenterStats& stats) {
  if (bi.kind == BoundaryKind::SinglePoint) {
    for (const Point& q : sorted) {
      if (euclid(q - bi.point) <= 1e-6 * lambda && inside_all(plane, far, q, lambda)) return q;
    }
    return std::nullopt;
  }
  const double slack = kBoundaryBand * lambda;
  const double x0 = bi.leftmost.x - slack;
  const double x1 = bi.rightmost.x + slack;
  auto right_end = [&](const ArcWithCenter& a) { return std::max(a.arc.start.x, a.arc.end.x); };

  std::size_t iu = 0, il = 0, visits = 0;
  for (const Point& q : sorted) {
    if (q.x < x0) continue;
    if (q.x > x1) break;
    while (iu + 1 < bi.upper.size() && right_end(bi.upper[iu]) < q.x) {
      ++iu;
      ++visits;
    }
    while (il + 1 < bi.lower.size() && right_end(bi.lower[il]) < q.x) {
      ++il;
      ++visits;
    }
    if (within(plane, bi.upper[iu].generating_center, q, lambda, kBoundaryBand) &&
        within(plane, bi.lower[il].generating_center, q, lambda, kBoundaryBand) &&
        inside_all(plane, far, q, lambda)) {
      stats.arc_visits += visits;
      return q;
    }
  }
  stats.arc_visits += visits;
  const std::size_t arcs = bi.upper.size() + bi.lower.size();
  if (visits > arcs) stats.max_visits_over_arcs = std::max(stats.max_visits_over_arcs, visits - arcs);
  return std::nullopt;
}

}  // namespace

std::vector<Point> far_set(const NormPlane& plane, std::span<const Point> sorted, Point p,
                           double r) {
  std::vector<Point> out;
  for (const Point& q : sorted) {
    if (!within(plane, p, q, r, kBoundaryBand)) out.push_back(q);
  }
  return out;
}

TwoCenterAnswer solve_constrained_two_center(const NormPlane& plane, std::span<const Point> points,
                                             double r, double lambda2) {
  validate_plane(plane);
  if (!(lambda2 > 0.0) || !std::isfinite(r) || !(r >= lambda2)) {
    throw GeometryError(ErrorCode::InvalidRadius, "radii must satisfy r >= lambda2 > 0");
  }
  if (points.empty()) throw GeometryError(ErrorCode::InvalidInput, "empty point set");
  for (const Point& q : points) {
    if (!is_finite(q)) throw GeometryError(ErrorCode::InvalidInput, "non-finite point");
  }

  const auto sorted = sort_points({points.begin(), points.end()});
  TwoCenterAnswer answer;
  for (const Point& p : sorted) {
    ++answer.stats.candidates;
    auto far = far_set(plane, sorted, p, r);
    if (far.empty()) {
      answer.feasible = true;
      answer.single_disc = true;
      answer.big_center = answer.small_center = p;
      answer.uncovered_witness.clear();
      return answer;
    }
    if (answer.uncovered_witness.empty() || far.size() < answer.uncovered_witness.size()) {
      answer.uncovered_witness = far;
    }
    ++answer.stats.intersections;
    const ChainBoundary bi = build_ball_intersection_sorted(plane, far, lambda2);
    if (bi.kind == BoundaryKind::Empty) continue;
    if (auto q = march(plane, sorted, far, bi, lambda2, answer.stats)) {
      answer.feasible = true;
      answer.big_center = p;
      answer.small_center = *q;
      answer.uncovered_witness.clear();
      return answer;
    }
  }
  return answer;
}

bool covers_all(const NormPlane& plane, std::span<const Point> points, const TwoCenterAnswer& answer,
                double r, double lambda2, double band) {
  if (!answer.feasible || !answer.big_center || !answer.small_center) return false;
  return std::all_of(points.begin(), points.end(), [&](Point q) {
    return within(plane, *answer.big_center, q, r, band) ||
           within(plane, *answer.small_center, q, lambda2, band);
  });
}

}  // namespace ballhull
