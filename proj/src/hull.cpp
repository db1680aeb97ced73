#include "ballhull/hull.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace ballhull {

namespace {

HullReport make_report(ChainBoundary boundary, std::size_t n, double lambda, HullAlgorithm algo) {
  HullReport report;
  report.input_size = n;
  report.radius = lambda;
  report.algorithm = algo;
  for (const auto& a : boundary_arcs(boundary)) report.arc_centers.push_back(a.generating_center);
  report.boundary = std::move(boundary);
  return report;
}

ChainBoundary point_boundary(Point p, double lambda) {
  ChainBoundary b;
  b.kind = BoundaryKind::SinglePoint;
  b.radius = lambda;
  b.point = b.leftmost = b.rightmost = p;
  return b;
}

bool in_disc(const NormPlane& plane, Point center, double lambda, Point q, double band) {
  return norm_unchecked(plane, q - center) <= lambda * (1.0 + band);
}

// Does the region bounded by `arcs` contain every point of `pts`? Only arcs
// whose x-range meets the x-range of the points can bound the region there.
bool arcs_contain(const NormPlane& plane, const std::vector<ArcWithCenter>& arcs,
                  std::span<const Point> pts, double lambda, double band) {
  if (arcs.empty() || pts.empty()) return false;
  double px0 = std::numeric_limits<double>::infinity();
  double px1 = -px0;
  for (const Point& q : pts) {
    px0 = std::min(px0, q.x);
    px1 = std::max(px1, q.x);
  }
  double ax0 = std::numeric_limits<double>::infinity();
  double ax1 = -ax0;
  std::vector<Point> centers;
  for (const auto& a : arcs) {
    const auto [lo, hi] = arc_x_range(plane, a.arc);
    ax0 = std::min(ax0, lo);
    ax1 = std::max(ax1, hi);
    if (hi >= px0 && lo <= px1) centers.push_back(a.generating_center);
  }
  const double slack = band * lambda;
  if (px0 < ax0 - slack || px1 > ax1 + slack) return false;
  for (const Point& q : pts) {
    for (const Point& c : centers) {
      if (!in_disc(plane, c, lambda, q, band)) return false;
    }
  }
  return true;
}

std::vector<ArcWithCenter> cycle_arcs(const NormPlane& plane, std::span<const Point> cycle,
                                      double lambda) {
  std::vector<ArcWithCenter> arcs;
  if (cycle.size() < 2) return arcs;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point a = cycle[i];
    const Point b = cycle[(i + 1) % cycle.size()];
    const Point c = inner_center(plane, a, b, lambda);
    arcs.push_back({make_arc(c, lambda, a, b), c});
  }
  return arcs;
}

ChainBoundary cycle_boundary(const NormPlane& plane, std::span<const Point> cycle, double lambda) {
  if (cycle.size() == 1) return point_boundary(cycle[0], lambda);
  return boundary_from_cycle(plane, lambda, cycle_arcs(plane, cycle, lambda));
}

std::size_t extreme_index(std::span<const Point> cycle, bool rightmost) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    const bool better = rightmost ? lex_less(cycle[best], cycle[i]) : lex_less(cycle[i], cycle[best]);
    if (better) best = i;
  }
  return best;
}

struct TangentIndices {
  std::size_t upper_left, upper_right;  // upper tangent: right vertex -> left vertex
  std::size_t lower_left, lower_right;  // lower tangent: left vertex -> right vertex
  std::size_t steps = 0;
  bool verified = false;
};

class TangentFinder {
 public:
  TangentFinder(const NormPlane& plane, std::span<const Point> left, std::span<const Point> right,
                double lambda)
      : plane_(plane), l_(left), r_(right), lambda_(lambda) {}

  TangentIndices find() {
    const auto l_arcs = cycle_arcs(plane_, l_, lambda_);
    const auto r_arcs = cycle_arcs(plane_, r_, lambda_);
    for (const auto& a : l_arcs) l_centers_.push_back(a.generating_center);
    for (const auto& a : r_arcs) r_centers_.push_back(a.generating_center);
    // A vertex strictly inside the other hull is never a contact point; start
    // the search from one that is not.
    auto start = [&](std::size_t k, std::span<const Point> cycle,
                     const std::vector<ArcWithCenter>& other) {
      for (std::size_t n = 0; n < cycle.size(); ++n) {
        if (!arcs_contain(plane_, other, cycle.subspan(k, 1), lambda_, -kBoundaryBand)) break;
        k = next(k, cycle);
      }
      return k;
    };
    const std::size_t j0 = start(extreme_index(r_, false), r_, l_arcs);

    // Upper tangent: at the left contact the incoming left arc is cut away and
    // the outgoing one survives; at the right contact the reverse.
    const auto up = alternate(j0, false, true);
    const auto low = alternate(j0, true, false);

    TangentIndices t{};
    t.upper_left = up.i;
    t.upper_right = up.j;
    t.lower_left = low.i;
    t.lower_right = low.j;
    t.steps = up.steps + low.steps;
    t.verified = up.converged && low.converged && supports(upper_center(up.i, up.j)) &&
                 supports(lower_center(low.i, low.j));
    if (!t.verified) exhaustive(t);
    return t;
  }

  Point upper_center(std::size_t i, std::size_t j) const {
    return inner_center(plane_, r_[j], l_[i], lambda_);
  }
  Point lower_center(std::size_t i, std::size_t j) const {
    return inner_center(plane_, l_[i], r_[j], lambda_);
  }

 private:
  static std::size_t next(std::size_t k, std::span<const Point> c) { return (k + 1) % c.size(); }
  static std::size_t prev(std::size_t k, std::span<const Point> c) {
    return (k + c.size() - 1) % c.size();
  }
  static std::size_t step(std::size_t k, int d, std::span<const Point> c) {
    return d > 0 ? next(k, c) : prev(k, c);
  }

  struct Contacts {
    std::size_t i = 0, j = 0, steps = 0;
    bool converged = false;
  };

  // Contact vertex of the hull of `cycle` plus the outside point q. The arcs
  // of `cycle` whose discs contain q survive in the joint hull and form one
  // cyclic run; the contact is an end of that run. `incoming` selects the end
  // where the arc entering the vertex survives and the leaving one does not.
  // Returns nothing when q lies inside the hull.
  std::optional<std::size_t> contact(std::span<const Point> cycle,
                                     const std::vector<Point>& centers, Point q,
                                     std::size_t from, bool incoming,
                                     std::size_t& steps) const {
    if (cycle.size() == 1) return 0;
    std::size_t k = from;
    for (std::size_t n = 0; n < cycle.size(); ++n, ++steps) {
      const bool in = holds(centers[prev(k, cycle)], q);
      const bool out = holds(centers[k], q);
      if (in == incoming && out != incoming) return k;
      k = incoming ? prev(k, cycle) : next(k, cycle);
    }
    for (std::size_t m = 0; m < cycle.size(); ++m) {
      if (holds(centers[m], q)) return std::nullopt;  // every arc survives: q is inside
    }
    // No arc survives: the joint hull is the lens of q and the farthest vertex.
    std::size_t far = 0;
    for (std::size_t m = 1; m < cycle.size(); ++m) {
      if (norm_unchecked(plane_, cycle[m] - q) > norm_unchecked(plane_, cycle[far] - q)) far = m;
    }
    return far;
  }

  // Alternates the one-sided contacts until both ends are stable. When the
  // right vertex lies inside the left hull, or its contact on the left lies
  // inside the right hull, the right vertex cannot be on the merged hull and
  // moves one step along its walk direction.
  Contacts alternate(std::size_t j, bool left_incoming, bool right_incoming) const {
    Contacts c;
    c.j = j;
    c.i = extreme_index(l_, true);
    const int dj = right_incoming ? -1 : +1;
    const std::size_t rounds = 2 * (l_.size() + r_.size()) + 4;
    for (std::size_t round = 0; round < rounds; ++round) {
      const auto i = contact(l_, l_centers_, r_[c.j], c.i, left_incoming, c.steps);
      if (!i) {
        c.j = step(c.j, dj, r_);
        ++c.steps;
        continue;
      }
      const auto nj = contact(r_, r_centers_, l_[*i], c.j, right_incoming, c.steps);
      if (!nj) {
        c.i = *i;
        c.j = step(c.j, dj, r_);
        ++c.steps;
        continue;
      }
      const bool stable = *i == c.i && *nj == c.j;
      c.i = *i;
      c.j = *nj;
      if (stable) {
        c.converged = true;
        return c;
      }
    }
    return c;
  }

  bool holds(Point center, Point q) const {
    return in_disc(plane_, center, lambda_, q, kBoundaryBand);
  }

  // The disc contains both vertex sets.
  bool supports(Point center) const {
    for (const Point& q : l_) {
      if (!holds(center, q)) return false;
    }
    for (const Point& q : r_) {
      if (!holds(center, q)) return false;
    }
    return true;
  }

  void exhaustive(TangentIndices& t) const {
    bool have_upper = false, have_lower = false;
    for (std::size_t i = 0; i < l_.size(); ++i) {
      for (std::size_t j = 0; j < r_.size(); ++j) {
        if (!have_upper && supports(upper_center(i, j))) {
          t.upper_left = i;
          t.upper_right = j;
          have_upper = true;
        }
        if (!have_lower && supports(lower_center(i, j))) {
          t.lower_left = i;
          t.lower_right = j;
          have_lower = true;
        }
      }
    }
    if (!have_upper || !have_lower) {
      throw GeometryError(ErrorCode::NoCommonDisc, "no outer common tangent found");
    }
  }

  const NormPlane& plane_;
  std::span<const Point> l_;
  std::span<const Point> r_;
  double lambda_;
  std::vector<Point> l_centers_;
  std::vector<Point> r_centers_;
};

class DivideConquer {
 public:
  DivideConquer(const NormPlane& plane, std::span<const Point> sorted, double lambda,
                MergeStats& stats)
      : plane_(plane), pts_(sorted), lambda_(lambda), stats_(stats) {}

  std::vector<Point> build(std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return {pts_[lo]};
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge(build(lo, mid), build(mid, hi));
  }

 private:
  std::vector<Point> merge(const std::vector<Point>& left, const std::vector<Point>& right) {
    ++stats_.merges;
    if (left.size() > 1 && arcs_contain(plane_, cycle_arcs(plane_, left, lambda_), right,
                                        lambda_, kBoundaryBand)) {
      ++stats_.containments;
      return left;
    }
    if (right.size() > 1 && arcs_contain(plane_, cycle_arcs(plane_, right, lambda_), left,
                                         lambda_, kBoundaryBand)) {
      ++stats_.containments;
      return right;
    }
    TangentFinder finder(plane_, left, right, lambda_);
    const TangentIndices t = finder.find();
    stats_.walk_steps += t.steps;
    if (!t.verified) ++stats_.fallbacks;

    std::vector<Point> merged;
    for (std::size_t k = t.upper_left;; k = (k + 1) % left.size()) {
      merged.push_back(left[k]);
      if (k == t.lower_left) break;
    }
    for (std::size_t k = t.lower_right;; k = (k + 1) % right.size()) {
      merged.push_back(right[k]);
      if (k == t.upper_right) break;
    }

    // Every vertex of the merged hull is a vertex of one of the children.
    for (const Point& v : merged) {
      const bool from_left = std::find(left.begin(), left.end(), v) != left.end();
      const bool from_right = std::find(right.begin(), right.end(), v) != right.end();
      if (!from_left && !from_right) ++stats_.heredity_violations;
    }
    return merged;
  }

  const NormPlane& plane_;
  std::span<const Point> pts_;
  double lambda_;
  MergeStats& stats_;
};

}  // namespace

HullReport build_ball_hull(const NormPlane& plane, std::span<const Point> points, double lambda) {
  const auto sorted = sort_points({points.begin(), points.end()});
  ChainBoundary bi = build_ball_intersection(plane, sorted, lambda);
  if (bi.kind == BoundaryKind::Empty) throw RadiusTooSmallError(std::move(bi));
  if (sorted.size() == 1) {
    return make_report(point_boundary(sorted[0], lambda), points.size(), lambda,
                       HullAlgorithm::ViaBi);
  }
  if (bi.kind == BoundaryKind::SinglePoint) {
    // A unique minimal enclosing disc: the hull is that disc.
    auto disc = boundary_from_cycle(plane, lambda, {{full_circle(plane, bi.point, lambda), bi.point}});
    return make_report(std::move(disc), points.size(), lambda, HullAlgorithm::ViaBi);
  }
  const auto corners = sort_points(bi.vertices);
  return make_report(build_ball_intersection_sorted(plane, corners, lambda), points.size(), lambda,
                     HullAlgorithm::ViaBi);
}

HullReport build_ball_hull_dc(const NormPlane& plane, std::span<const Point> points,
                              double lambda, MergeStats* stats) {
  const auto sorted = sort_points({points.begin(), points.end()});
  ChainBoundary bi = build_ball_intersection(plane, sorted, lambda);
  if (bi.kind == BoundaryKind::Empty) throw RadiusTooSmallError(std::move(bi));
  MergeStats local;
  MergeStats& s = stats ? *stats : local;
  if (bi.kind == BoundaryKind::SinglePoint && sorted.size() > 1) {
    auto disc = boundary_from_cycle(plane, lambda, {{full_circle(plane, bi.point, lambda), bi.point}});
    return make_report(std::move(disc), points.size(), lambda, HullAlgorithm::DivideConquer);
  }
  const auto cycle = DivideConquer(plane, sorted, lambda, s).build(0, sorted.size());
  return make_report(cycle_boundary(plane, cycle, lambda), points.size(), lambda,
                     HullAlgorithm::DivideConquer);
}

std::vector<Point> hull_vertices(const ChainBoundary& boundary) {
  switch (boundary.kind) {
    case BoundaryKind::Empty: return {};
    case BoundaryKind::SinglePoint: return {boundary.point};
    case BoundaryKind::Region: return boundary.vertices;
  }
  return {};
}

bool hull_contains_hull(const NormPlane& plane, const ChainBoundary& left,
                        const ChainBoundary& right, double lambda, double band) {
  if (!left.is_region() || right.kind == BoundaryKind::Empty) return false;
  auto pts = hull_vertices(right);
  if (pts.empty()) pts = sample_boundary(plane, right, 16);
  return arcs_contain(plane, boundary_arcs(left), pts, lambda, band);
}

TangentPair outer_common_tangents(const NormPlane& plane, std::span<const Point> left,
                                  std::span<const Point> right, double lambda) {
  if (left.empty() || right.empty()) {
    throw GeometryError(ErrorCode::InvalidInput, "tangents need two non-empty hulls");
  }
  if ((left.size() > 1 &&
       arcs_contain(plane, cycle_arcs(plane, left, lambda), right, lambda, kBoundaryBand)) ||
      (right.size() > 1 &&
       arcs_contain(plane, cycle_arcs(plane, right, lambda), left, lambda, kBoundaryBand))) {
    throw GeometryError(ErrorCode::InvalidInput, "one hull contains the other");
  }
  TangentFinder finder(plane, left, right, lambda);
  const TangentIndices t = finder.find();
  TangentPair out;
  const Point cu = finder.upper_center(t.upper_left, t.upper_right);
  const Point cl = finder.lower_center(t.lower_left, t.lower_right);
  out.upper = {make_arc(cu, lambda, right[t.upper_right], left[t.upper_left]), cu};
  out.lower = {make_arc(cl, lambda, left[t.lower_left], right[t.lower_right]), cl};
  out.steps = t.steps;
  return out;
}

}  // namespace ballhull
