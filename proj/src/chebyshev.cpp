#include "ballhull/chebyshev.hpp"

#include <algorithm>

#include "ballhull/error.hpp"

namespace ballhull {

double diameter(const NormPlane& plane, std::span<const Point> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, norm_eval(plane, points[i] - points[j]));
    }
  }
  return best;
}

CircumResult circumradius(const NormPlane& plane, std::span<const Point> points, double tol) {
  if (points.empty()) throw GeometryError(ErrorCode::InvalidInput, "empty point set");
  validate_plane(plane);
  if (tol <= 0.0) tol = 1e-9;

  const auto sorted = sort_points({points.begin(), points.end()});
  CircumResult out;
  if (sorted.size() == 1) {
    out.chebyshev_set.kind = BoundaryKind::SinglePoint;
    out.chebyshev_set.point = out.chebyshev_set.leftmost = out.chebyshev_set.rightmost = sorted[0];
    return out;
  }

  const double diam = diameter(plane, sorted);
  auto nonempty = [&](double lambda) {
    return build_ball_intersection_sorted(plane, sorted, lambda).kind != BoundaryKind::Empty;
  };

  double lo = 0.5 * diam;
  double hi = diam;
  if (nonempty(lo)) {
    hi = lo;
  } else {
    while (hi - lo > tol * hi && out.iterations < 200) {
      const double mid = 0.5 * (lo + hi);
      (nonempty(mid) ? hi : lo) = mid;
      ++out.iterations;
    }
  }
  out.lambda_K = hi;
  out.residual = hi - lo;
  out.chebyshev_set = build_ball_intersection_sorted(plane, sorted, hi);
  return out;
}

bool monotonicity_check(const NormPlane& plane, std::span<const Point> subset,
                        std::span<const Point> superset, double tol) {
  const double a = circumradius(plane, subset).lambda_K;
  const double b = circumradius(plane, superset).lambda_K;
  return a <= b + tol * b;
}

}  // namespace ballhull
