#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ballhull/chains.hpp"

namespace ballhull {

struct TwoCenterStats {
  std::size_t candidates = 0;      // centers p tried
  std::size_t intersections = 0;   // ball intersections built
  std::size_t arc_visits = 0;      // arc pointer advances over all marches
  std::size_t max_visits_over_arcs = 0;  // worst (visits - arcs) of a single march; 0 when linear
};

struct TwoCenterAnswer {
  bool feasible = false;
  std::optional<Point> big_center;    // radius r
  std::optional<Point> small_center;  // radius lambda2
  bool single_disc = false;           // the big disc alone covers K
  std::vector<Point> uncovered_witness;
  TwoCenterStats stats;
};

/// Points of `sorted` with ||q - p|| > r, in the same order. Points within
/// the closed-disc band r * (1 + 1e-9) count as covered.
std::vector<Point> far_set(const NormPlane& plane, std::span<const Point> sorted, Point p,
                           double r);

/// Decides whether two discs centered at points of K, of radii r >= lambda2,
/// cover K. For every candidate big center p the uncovered points U are
/// collected and the small center is searched by one left-to-right march
/// of K against the two chains of bi(U, lambda2).
TwoCenterAnswer solve_constrained_two_center(const NormPlane& plane, std::span<const Point> points,
                                             double r, double lambda2);

/// Every point lies within r of the big center or lambda2 of the small one.
bool covers_all(const NormPlane& plane, std::span<const Point> points, const TwoCenterAnswer& answer,
                double r, double lambda2, double band = kBoundaryBand);

}  // namespace ballhull
