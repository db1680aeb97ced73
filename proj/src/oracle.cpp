#include "ballhull/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ballhull/error.hpp"

namespace ballhull::oracle {

namespace {

constexpr double kInvPhi = 0.6180339887498949;

template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && b - a > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

double farthest(const NormPlane& plane, std::span<const Point> points, Point c) {
  double best = 0.0;
  for (const Point& q : points) best = std::max(best, norm_unchecked(plane, q - c));
  return best;
}

struct Box {
  double x0, y0, x1, y1;
};

Box bounding_box(std::span<const Point> points, double pad) {
  Box b{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Point& q : points) {
    b.x0 = std::min(b.x0, q.x);
    b.y0 = std::min(b.y0, q.y);
    b.x1 = std::max(b.x1, q.x);
    b.y1 = std::max(b.y1, q.y);
  }
  return {b.x0 - pad, b.y0 - pad, b.x1 + pad, b.y1 + pad};
}

}  // namespace

bool bi_membership(const NormPlane& plane, std::span<const Point> points, double lambda, Point q) {
  return std::all_of(points.begin(), points.end(), [&](Point x) {
    return norm_eval(plane, q - x) <= lambda + 1e-12 * lambda;
  });
}

BallHullGrid::BallHullGrid(const NormPlane& plane, std::span<const Point> points, double lambda,
                           int grid_n)
    : plane_(plane), lambda_(lambda) {
  if (points.empty()) throw GeometryError(ErrorCode::InvalidInput, "empty point set");
  if (grid_n < 2) throw GeometryError(ErrorCode::InvalidInput, "grid_n must be >= 2");
  const Box box = bounding_box(points, lambda);
  const double hx = (box.x1 - box.x0) / (grid_n - 1);
  const double hy = (box.y1 - box.y0) / (grid_n - 1);
  spacing_ = std::max(hx, hy);
  const double limit = lambda + 1e-9 * lambda;

  for (int row = 0; row < grid_n; ++row) {
    const double y = box.y0 + row * hy;
    auto node = [&](int i) { return Point{box.x0 + i * hx, y}; };
    auto cost = [&](int i) { return farthest(plane, points, node(i)); };

    // The farthest distance is convex along the row: ternary search on the
    // node index for a minimizer, then binary searches for the run ends.
    int lo = 0, hi = grid_n - 1;
    while (hi - lo > 2) {
      const int m1 = lo + (hi - lo) / 3;
      const int m2 = hi - (hi - lo) / 3;
      const double c1 = cost(m1), c2 = cost(m2);
      if (c1 < c2) {
        hi = m2 - 1;
      } else if (c1 > c2) {
        lo = m1 + 1;
      } else {
        lo = m1;
        hi = m2;
      }
    }
    int best = lo;
    for (int i = lo + 1; i <= hi; ++i) {
      if (cost(i) < cost(best)) best = i;
    }
    if (cost(best) > limit) continue;

    int a = 0, b = best;  // first admissible node in [a, b]
    while (a < b) {
      const int m = a + (b - a) / 2;
      if (cost(m) <= limit) b = m; else a = m + 1;
    }
    const int left = a;
    a = best;
    b = grid_n - 1;  // last admissible node in [a, b]
    while (a < b) {
      const int m = a + (b - a + 1) / 2;
      if (cost(m) <= limit) a = m; else b = m - 1;
    }
    run_ends_.push_back(node(left));
    run_ends_.push_back(node(a));
  }
}

bool BallHullGrid::contains(Point q) const {
  const double limit = lambda_ + 1e-6 * lambda_;
  return std::all_of(run_ends_.begin(), run_ends_.end(),
                     [&](Point x) { return norm_unchecked(plane_, q - x) <= limit; });
}

bool bh_membership(const NormPlane& plane, std::span<const Point> points, double lambda, Point q,
                   int grid_n) {
  return BallHullGrid(plane, points, lambda, grid_n).contains(q);
}

bool excluded_by_some_disc(const NormPlane& plane, std::span<const Point> points, double lambda,
                           Point q, std::span<const Point> candidates) {
  return std::any_of(candidates.begin(), candidates.end(), [&](Point x) {
    return norm_eval(plane, q - x) > lambda &&
           farthest(plane, points, x) <= lambda + 1e-9 * lambda;
  });
}

double circumradius(const NormPlane& plane, std::span<const Point> points, double tol) {
  if (points.empty()) throw GeometryError(ErrorCode::InvalidInput, "empty point set");
  double diam = 0.0;
  for (const Point& a : points) {
    for (const Point& b : points) diam = std::max(diam, norm_eval(plane, a - b));
  }
  if (diam == 0.0) return 0.0;
  const Box box = bounding_box(points, diam);
  const double step = tol * diam;
  auto inner = [&](double x) {
    return golden_min([&](double y) { return farthest(plane, points, {x, y}); }, box.y0, box.y1,
                      step)
        .second;
  };
  return golden_min(inner, box.x0, box.x1, step).second;
}

TwoCenterAnswer two_center(const NormPlane& plane, std::span<const Point> points, double r,
                           double lambda2) {
  const std::size_t n = points.size();
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = norm_eval(plane, points[i] - points[j]);
  }
  const double big = r * (1.0 + 1e-9);
  const double small = lambda2 * (1.0 + 1e-9);
  TwoCenterAnswer answer;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        ok = dist[i * n + k] <= big || dist[j * n + k] <= small;
      }
      if (ok) {
        answer.feasible = true;
        answer.big_center = points[i];
        answer.small_center = points[j];
        answer.single_disc = i == j;
        return answer;
      }
    }
  }
  return answer;
}

}  // namespace ballhull::oracle
