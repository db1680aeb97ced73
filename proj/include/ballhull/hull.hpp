#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ballhull/chains.hpp"
#include "ballhull/error.hpp"

namespace ballhull {

enum class HullAlgorithm { ViaBi, DivideConquer };

struct HullReport {
  ChainBoundary boundary;
  std::size_t input_size = 0;
  double radius = 0.0;
  HullAlgorithm algorithm = HullAlgorithm::ViaBi;
  /// Generating center of each entry of boundary_arcs(boundary), same order.
  std::vector<Point> arc_centers;
};

/// Raised when lambda is below the circumradius; carries the empty
/// ball-intersection that proves it.
class RadiusTooSmallError : public GeometryError {
 public:
  explicit RadiusTooSmallError(ChainBoundary witness)
      : GeometryError(ErrorCode::RadiusTooSmall, "lambda is below the circumradius of the set"),
        witness_(std::move(witness)) {}

  const ChainBoundary& witness() const noexcept { return witness_; }

 private:
  ChainBoundary witness_;
};

/// Ball hull as the ball intersection of the vertices of the ball intersection.
HullReport build_ball_hull(const NormPlane& plane, std::span<const Point> points, double lambda);

/// Counters collected by the divide-and-conquer builder.
struct MergeStats {
  std::size_t merges = 0;
  std::size_t containments = 0;     // one child hull swallowed the other
  std::size_t walk_steps = 0;       // index advances of the tangent walks
  std::size_t fallbacks = 0;        // walk result rejected, exhaustive search used
  std::size_t heredity_violations = 0;
};

/// Ball hull by bottom-up merging of sibling hulls along outer common tangents.
HullReport build_ball_hull_dc(const NormPlane& plane, std::span<const Point> points,
                              double lambda, MergeStats* stats = nullptr);

/// True iff every vertex of `right` lies in the discs of the arcs of `left`
/// reaching its x-range. For vertically separated sets this is the disc of
/// the single arc of `left` crossing the separating line.
bool hull_contains_hull(const NormPlane& plane, const ChainBoundary& left,
                        const ChainBoundary& right, double lambda, double band = kBoundaryBand);

/// The upper and lower outer common tangent arcs of two ball hulls given by
/// their counterclockwise vertex cycles, `left` entirely to the left of `right`.
/// Both are minimal arcs through a vertex of each hull whose disc contains both
/// hulls. Throws InvalidInput when one hull contains the other.
struct TangentPair {
  ArcWithCenter upper;  // runs ccw from a vertex of right to a vertex of left
  ArcWithCenter lower;  // runs ccw from a vertex of left to a vertex of right
  std::size_t steps = 0;
};
TangentPair outer_common_tangents(const NormPlane& plane, std::span<const Point> left,
                                  std::span<const Point> right, double lambda);

/// Counterclockwise vertex cycle of a hull boundary (corners; a full circle
/// or a single point yields one entry).
std::vector<Point> hull_vertices(const ChainBoundary& boundary);

}  // namespace ballhull
