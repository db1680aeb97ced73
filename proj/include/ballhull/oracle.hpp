#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ballhull/norm.hpp"
#include "ballhull/two_center.hpp"

// Brute-force reference implementations straight from the definitions.
// Nothing here calls the chain or hull builders.
namespace ballhull::oracle {

/// q lies in every disc B(x, lambda), x in K (relative slack 1e-12).
bool bi_membership(const NormPlane& plane, std::span<const Point> points, double lambda, Point q);

/// Grid approximation of the intersection of all radius-lambda discs containing K.
/// Centers are the nodes of a grid_n x grid_n grid over the bounding box of K
/// inflated by lambda; a node is admissible when K lies in its disc (slack 1e-9).
/// Along each grid row the admissible nodes form a contiguous run and the
/// distance to q is convex along it, so only the two ends of every run are kept.
class BallHullGrid {
 public:
  BallHullGrid(const NormPlane& plane, std::span<const Point> points, double lambda,
               int grid_n = 400);

  /// ||q - x|| <= lambda (1 + 1e-6) for every admissible node x.
  bool contains(Point q) const;
  std::size_t admissible_rows() const { return run_ends_.size() / 2; }
  /// Larger of the two node spacings. False positives of contains() lie
  /// within about one spacing of the true boundary.
  double spacing() const { return spacing_; }

 private:
  NormPlane plane_;
  double lambda_;
  double spacing_ = 0.0;
  std::vector<Point> run_ends_;
};

bool bh_membership(const NormPlane& plane, std::span<const Point> points, double lambda, Point q,
                   int grid_n = 400);

/// True when one of the candidate centers x admits K (||k - x|| <= lambda (1 + 1e-9)
/// for all k) and keeps q outside its disc (||q - x|| > lambda). Such an x is a
/// certificate that q is not in the ball hull.
bool excluded_by_some_disc(const NormPlane& plane, std::span<const Point> points, double lambda,
                           Point q, std::span<const Point> candidates);

/// min over c of max_i ||c - p_i|| by nested golden-section search (x outer,
/// y inner) over the bounding box of K inflated by its diameter.
double circumradius(const NormPlane& plane, std::span<const Point> points, double tol = 1e-12);

/// Exhaustive search over all ordered pairs (p, q) of K, p == q included.
TwoCenterAnswer two_center(const NormPlane& plane, std::span<const Point> points, double r,
                           double lambda2);

}  // namespace ballhull::oracle
