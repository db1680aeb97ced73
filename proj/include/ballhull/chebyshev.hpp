#pragma once

#include <cstddef>
#include <span>

#include "ballhull/chains.hpp"

namespace ballhull {

struct CircumResult {
  double lambda_K = 0.0;
  ChainBoundary chebyshev_set;  // bi(K, lambda_K); a SinglePoint when the center is unique
  std::size_t iterations = 0;
  double residual = 0.0;  // width of the final bracket
};

/// Largest pairwise distance; 0 for a single point.
double diameter(const NormPlane& plane, std::span<const Point> points);

/// Smallest lambda for which the ball intersection is non-empty, found by
/// bisection on [diam/2, diam]. The bracket is shrunk to a relative width of
/// `tol`; tol <= 0 selects the default 1e-9.
CircumResult circumradius(const NormPlane& plane, std::span<const Point> points, double tol = 0.0);

/// circumradius(subset) <= circumradius(superset) + tol * circumradius(superset).
bool monotonicity_check(const NormPlane& plane, std::span<const Point> subset,
                        std::span<const Point> superset, double tol = 1e-8);

}  // namespace ballhull
