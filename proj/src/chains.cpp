#include "ballhull/chains.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>

#include "ballhull/error.hpp"

namespace ballhull {

namespace {

constexpr double kVertexMerge = 1e-9;  // relative to lambda
constexpr double kMinExtent = 1e-10;   // rad
constexpr double kThinBand = 1e-9;     // relative to lambda

// One circle's share of an envelope over [from, to].
struct Piece {
  std::size_t center;
  double from;
  double to;
  Point from_pt;
  Point to_pt;
};

// Lower envelope of the upper half-circles of radius lambda centered at
// `centers` (x non-decreasing), over [centers.back().x - lambda, centers.front().x + lambda].
// Each new circle can only enter at the left end of the envelope.
class UpperEnvelope {
 public:
  UpperEnvelope(const NormPlane& plane, std::span<const Point> centers, double lambda)
      : plane_(plane), c_(centers), lambda_(lambda) {}

  double height(std::size_t k, double t) const {
    const Point c = c_[k];
    if (t <= c.x - lambda_ || t >= c.x + lambda_) return c.y;
    return c.y + lambda_ * unit_height(plane_, (t - c.x) / lambda_);
  }

  std::vector<Piece> build() {
    std::deque<Piece> chain;
    const double right = c_.front().x + lambda_;
    chain.push_back({0, c_[0].x - lambda_, right, {c_[0].x - lambda_, c_[0].y}, {right, c_[0].y}});
    for (std::size_t k = 1; k < c_.size(); ++k) {
      const double lo = c_[k].x - lambda_;
      const Point left_pt{lo, c_[k].y};
      bool settled = false;
      while (!chain.empty()) {
        Piece& front = chain.front();
        if (front.to <= lo) {
          chain.pop_front();
          continue;
        }
        const double a = std::max(front.from, lo);
        // Compare against the stored piece ends: near a vertical tangent the
        // circle's height at an end is not where the piece meets its neighbour.
        if (height(k, front.to) <= front.to_pt.y) {
          chain.pop_front();  // the new circle is below this whole piece
          continue;
        }
        const double env_a = a > front.from ? height(front.center, a) : front.from_pt.y;
        if (height(k, a) >= env_a) {
          if (a > front.from) {
            front.from = a;
            front.from_pt = {a, height(front.center, a)};
          }
          settled = true;  // above at the left end: no contribution
          break;
        }
        const auto [t, v] = crossing(front.center, k, a, front.to);
        front.from = t;
        front.from_pt = v;
        chain.push_front({k, lo, t, left_pt, v});
        settled = true;
        break;
      }
      if (!settled) chain.push_front({k, lo, right, left_pt, {right, height(k, right)}});
    }
    return {chain.begin(), chain.end()};
  }

 private:
  // Upper crossing of circle `left` with circle `right` inside [a, b], where
  // `right` is below at a and above at b.
  std::pair<double, Point> crossing(std::size_t left, std::size_t right, double a, double b) const {
    const Point v = left_intersection(plane_, c_[left], c_[right], lambda_);
    // Of the two intersections only one lies on both upper halves; testing
    // y is well conditioned where the circles are steep and x is not.
    const double slack = 1e-9 * lambda_;
    if (v.x >= a - slack && v.x <= b + slack &&
        v.y >= std::max(c_[left].y, c_[right].y) - slack) {
      return {std::clamp(v.x, a, b), v};
    }
    double lo = a, hi = b;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * lambda_; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (height(right, mid) < height(left, mid)) lo = mid; else hi = mid;
    }
    const double t = 0.5 * (lo + hi);
    return {t, Point{t, height(left, t)}};
  }

  const NormPlane& plane_;
  std::span<const Point> c_;
  double lambda_;
};

// An envelope in real coordinates; sign = +1 for the upper chain, -1 for the lower.
struct Chain {
  std::vector<Piece> pieces;
  std::span<const Point> centers;  // real coordinates
  double sign;

  std::size_t locate(double t) const {
    auto it = std::lower_bound(pieces.begin(), pieces.end(), t,
                               [](const Piece& p, double v) { return p.to < v; });
    if (it == pieces.end()) return pieces.size() - 1;
    return static_cast<std::size_t>(it - pieces.begin());
  }
};

struct DomainFn {
  const NormPlane& plane;
  const Chain& upper;
  const Chain& lower;
  double lambda;

  // Height of piece i at t. Near a vertical tangent the circle's height is
  // ill conditioned in t, so the stored endpoints are used at and beyond the
  // piece ends and inner values are clamped to the y-range the piece spans:
  // its endpoints, extended to the circle's top (bottom) when it passes over it.
  double y(const Chain& ch, std::size_t i, double t) const {
    const Piece& p = ch.pieces[i];
    if (t <= p.from) return p.from_pt.y;
    if (t >= p.to) return p.to_pt.y;
    const Point c = ch.centers[p.center];
    double v = c.y;
    if (t > c.x - lambda && t < c.x + lambda) {
      v += ch.sign * lambda * unit_height(plane, (t - c.x) / lambda);
    }
    double lo = std::min(p.from_pt.y, p.to_pt.y);
    double hi = std::max(p.from_pt.y, p.to_pt.y);
    if (p.from <= c.x && c.x <= p.to) {
      if (ch.sign > 0) hi = c.y + lambda; else lo = c.y - lambda;
    }
    return std::clamp(v, lo, hi);
  }
  double up(double t) const { return y(upper, upper.locate(t), t); }
  double down(double t) const { return y(lower, lower.locate(t), t); }
  double gap(double t) const { return up(t) - down(t); }
};

// Crossing of the upper piece iu with the lower piece il over [a, b] where the
// gap changes sign.
Point chain_crossing(const NormPlane& plane, const DomainFn& fn, std::size_t iu, std::size_t il,
                     double a, double b, bool rising) {
  const double lambda = fn.lambda;
  const Point cu = fn.upper.centers[fn.upper.pieces[iu].center];
  const Point cl = fn.lower.centers[fn.lower.pieces[il].center];
  if (cu != cl) {
    const auto candidates = circle_circle_intersection(plane, cu, cl, lambda, 1e-14);
    double best = std::numeric_limits<double>::infinity();
    Point best_pt;
    for (const Point& v : candidates) {
      const double score = std::max({0.0, a - v.x, v.x - b}) + std::max(0.0, cu.y - v.y) +
                           std::max(0.0, v.y - cl.y);
      if (score < best) {
        best = score;
        best_pt = v;
      }
    }
    if (best <= 1e-7 * lambda) return best_pt;
  }
  double lo = a, hi = b;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * lambda; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double g = fn.y(fn.upper, iu, mid) - fn.y(fn.lower, il, mid);
    if ((g < 0.0) == rising) lo = mid; else hi = mid;
  }
  const double t = 0.5 * (lo + hi);
  return {t, 0.5 * (fn.y(fn.upper, iu, t) + fn.y(fn.lower, il, t))};
}

// Direction angle of v seen from the center of a chain piece, mirrored for
// the lower chain so that every piece spans [angle(to), angle(from)] in [0, pi].
double piece_angle(const Chain& ch, std::size_t center, Point v) {
  const Point c = ch.centers[center];
  return std::atan2(std::max(0.0, ch.sign * (v.y - c.y)), v.x - c.x);
}

// How far v (on the piece's circle) lies outside the piece, in radians.
double piece_excess(const Chain& ch, const Piece& p, Point v, double lambda) {
  const double t = piece_angle(ch, p.center, v);
  const double below = ch.sign * (v.y - ch.centers[p.center].y);
  return std::max({0.0, piece_angle(ch, p.center, p.to_pt) - t,
                   t - piece_angle(ch, p.center, p.from_pt), -below / lambda});
}

struct EndCrossing {
  Point pt;
  std::size_t iu, il;
};

// Crossings of the upper and lower chains found by intersecting the circles
// of x-overlapping pieces. Angles stay well conditioned on the near-vertical
// pieces at the ends of the domain, where height comparisons do not.
std::pair<std::optional<EndCrossing>, std::optional<EndCrossing>> chain_ends(
    const NormPlane& plane, const Chain& upper, const Chain& lower, double lambda) {
  constexpr double kAngleTol = 1e-9;
  std::optional<EndCrossing> left, right;
  const double slack = kVertexMerge * lambda;
  std::size_t first = 0;
  for (std::size_t iu = 0; iu < upper.pieces.size(); ++iu) {
    const Piece& pu = upper.pieces[iu];
    const Point cu = upper.centers[pu.center];
    while (first < lower.pieces.size() && lower.pieces[first].to < pu.from - slack) ++first;
    for (std::size_t il = first; il < lower.pieces.size() && lower.pieces[il].from <= pu.to + slack;
         ++il) {
      const Piece& pl = lower.pieces[il];
      const Point cl = lower.centers[pl.center];
      if (cu == cl) continue;
      for (const Point& v : circle_circle_intersection(plane, cu, cl, lambda, 1e-14)) {
        if (piece_excess(upper, pu, v, lambda) > kAngleTol ||
            piece_excess(lower, pl, v, lambda) > kAngleTol) {
          continue;
        }
        if (!left || v.x < left->pt.x) left = EndCrossing{v, iu, il};
        if (!right || v.x > right->pt.x) right = EndCrossing{v, iu, il};
      }
    }
  }
  return {left, right};
}

ChainBoundary single_point(Point p, double lambda) {
  ChainBoundary b;
  b.kind = BoundaryKind::SinglePoint;
  b.radius = lambda;
  b.point = b.leftmost = b.rightmost = p;
  return b;
}

ChainBoundary empty_boundary(double lambda) {
  ChainBoundary b;
  b.kind = BoundaryKind::Empty;
  b.radius = lambda;
  return b;
}

void require_inputs(const NormPlane& plane, std::span<const Point> points, double lambda) {
  validate_plane(plane);
  if (points.empty()) throw GeometryError(ErrorCode::InvalidInput, "empty point set");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw GeometryError(ErrorCode::InvalidRadius, "radius must be positive and finite");
  }
  for (const Point& p : points) {
    if (!is_finite(p)) throw GeometryError(ErrorCode::InvalidInput, "non-finite point");
  }
}

// Upper arc i spans x in [end.x, start.x]; lower arc i spans [start.x, end.x].
double right_x(const ArcWithCenter& a, bool upper) { return upper ? a.arc.start.x : a.arc.end.x; }

std::size_t locate_arc(const std::vector<ArcWithCenter>& chain, bool upper, double x) {
  auto it = std::lower_bound(chain.begin(), chain.end(), x, [upper](const ArcWithCenter& a, double v) {
    return right_x(a, upper) < v;
  });
  if (it == chain.end()) return chain.size() - 1;
  return static_cast<std::size_t>(it - chain.begin());
}

ArcWithCenter rebuilt(const ArcWithCenter& a, Point from, Point to, double lambda) {
  return {make_arc(a.arc.center, lambda, from, to), a.generating_center};
}

// Splits cycle[i] at parameter theta (lifted, strictly inside the arc).
void split_at(const NormPlane& plane, std::vector<ArcWithCenter>& cycle, std::size_t i,
              double theta, double lambda) {
  const ArcWithCenter whole = cycle[i];
  const Point mid = sphere_point(plane, whole.arc.center, lambda, theta);
  ArcWithCenter first = whole;
  ArcWithCenter second = whole;
  first.arc.theta_end = theta;
  first.arc.end = mid;
  second.arc.theta_start = normalize_angle(theta);
  second.arc.theta_end = second.arc.theta_start + (whole.arc.theta_end - theta);
  second.arc.start = mid;
  cycle[i] = first;
  cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i) + 1, second);
}

// Finds the extreme (leftmost when dir = -1, rightmost when dir = +1) point
// of the cycle, splits an arc there if needed and returns the index of the
// arc starting at it.
std::size_t split_extreme(const NormPlane& plane, std::vector<ArcWithCenter>& cycle, double lambda,
                          int dir, std::size_t skip_first) {
  const double extreme_theta = dir < 0 ? std::numbers::pi : 0.0;
  std::size_t best = skip_first;
  double best_x = dir * cycle[skip_first].arc.start.x;
  bool best_interior = false;
  double best_theta = 0.0;
  for (std::size_t i = skip_first; i < cycle.size(); ++i) {
    const Arc& arc = cycle[i].arc;
    const double sx = dir * arc.start.x;
    if (sx > best_x) {
      best_x = sx;
      best = i;
      best_interior = false;
    }
    const double lifted = arc.lift(extreme_theta);
    if (lifted - arc.theta_start > kMinExtent && arc.theta_end - lifted > kMinExtent) {
      const double ex = dir * sphere_point(plane, arc.center, lambda, extreme_theta).x;
      if (ex > best_x) {
        best_x = ex;
        best = i;
        best_interior = true;
        best_theta = lifted;
      }
    }
  }
  if (!best_interior) return best;
  split_at(plane, cycle, best, best_theta, lambda);
  return best + 1;
}

}  // namespace

std::vector<Point> sort_points(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

ChainBoundary boundary_from_cycle(const NormPlane& plane, double lambda,
                                  std::vector<ArcWithCenter> cycle) {
  if (cycle.empty()) throw GeometryError(ErrorCode::NoArcs, "empty arc cycle");

  // Drop slivers; neighbours meet at the sliver's midpoint.
  for (bool changed = true; changed && cycle.size() > 1;) {
    changed = false;
    for (std::size_t i = 0; i < cycle.size() && cycle.size() > 1; ++i) {
      if (cycle[i].arc.extent() >= kMinExtent) continue;
      const Point mid = 0.5 * (cycle[i].arc.start + cycle[i].arc.end);
      const std::size_t prev = (i + cycle.size() - 1) % cycle.size();
      const std::size_t next = (i + 1) % cycle.size();
      if (prev == next) {
        cycle[prev] = rebuilt(cycle[prev], mid, mid, lambda);
        cycle[prev].arc.theta_end = cycle[prev].arc.theta_start + kTwoPi;
      } else {
        cycle[prev] = rebuilt(cycle[prev], cycle[prev].arc.start, mid, lambda);
        cycle[next] = rebuilt(cycle[next], mid, cycle[next].arc.end, lambda);
      }
      cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }

  // Join consecutive arcs carried by the same circle.
  for (bool changed = true; changed && cycle.size() > 1;) {
    changed = false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t next = (i + 1) % cycle.size();
      if (next == i || cycle[i].generating_center != cycle[next].generating_center) continue;
      ArcWithCenter joined = cycle[i];
      const double extent = cycle[i].arc.extent() + cycle[next].arc.extent();
      joined.arc.end = cycle[next].arc.end;
      joined.arc.theta_end = joined.arc.theta_start + std::min(extent, kTwoPi);
      if (cycle.size() == 2 || extent >= kTwoPi - kMinExtent) {
        joined.arc.theta_end = joined.arc.theta_start + kTwoPi;
        joined.arc.end = joined.arc.start;
      }
      cycle[i] = joined;
      cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(next));
      changed = true;
      break;
    }
  }

  ChainBoundary out;
  out.kind = BoundaryKind::Region;
  out.radius = lambda;

  // Corners, counterclockwise, before the chain split adds smooth cut points.
  std::vector<Point> corners;
  if (cycle.size() > 1) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      corners.push_back(cycle[i].arc.end);
    }
  }

  const std::size_t left = split_extreme(plane, cycle, lambda, -1, 0);
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(left), cycle.end());
  if (cycle.size() == 1) {
    // Full circle starting at the leftmost point.
    split_at(plane, cycle, 0, cycle[0].arc.theta_start + std::numbers::pi, lambda);
  }
  const std::size_t right = split_extreme(plane, cycle, lambda, +1, 1);

  out.leftmost = cycle.front().arc.start;
  out.rightmost = cycle[right].arc.start;
  out.lower.assign(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(right));
  out.upper.assign(cycle.rbegin(), cycle.rend() - static_cast<std::ptrdiff_t>(right));

  // Report corners starting from the leftmost point.
  if (!corners.empty()) {
    auto first = std::min_element(corners.begin(), corners.end(), lex_less);
    std::rotate(corners.begin(), first, corners.end());
  }
  out.vertices = std::move(corners);
  return out;
}

ChainBoundary build_ball_intersection(const NormPlane& plane, std::span<const Point> points,
                                      double lambda) {
  require_inputs(plane, points, lambda);
  const auto sorted = sort_points({points.begin(), points.end()});
  return build_ball_intersection_sorted(plane, sorted, lambda);
}

ChainBoundary build_ball_intersection_sorted(const NormPlane& plane,
                                             std::span<const Point> sorted, double lambda) {
  require_inputs(plane, sorted, lambda);
  if (sorted.size() == 1) {
    return boundary_from_cycle(plane, lambda, {{full_circle(plane, sorted[0], lambda), sorted[0]}});
  }

  const double lo = sorted.back().x - lambda;
  const double hi = sorted.front().x + lambda;
  if (lo > hi) return empty_boundary(lambda);
  if (hi - lo <= kThinBand * lambda) {
    // The x-domain collapsed: the only candidate is where the rightmost point
    // of the leftmost disc meets the leftmost point of the rightmost disc.
    const Point p{0.5 * (lo + hi), 0.5 * (sorted.front().y + sorted.back().y)};
    for (const Point& q : sorted) {
      if (norm_unchecked(plane, q - p) > lambda * (1.0 + kThinBand)) return empty_boundary(lambda);
    }
    return single_point(p, lambda);
  }

  std::vector<Point> mirrored(sorted.begin(), sorted.end());
  for (Point& p : mirrored) p.y = -p.y;

  Chain upper{UpperEnvelope(plane, sorted, lambda).build(), sorted, +1.0};
  Chain lower{UpperEnvelope(plane, mirrored, lambda).build(), sorted, -1.0};
  for (Piece& piece : lower.pieces) {
    piece.from_pt.y = -piece.from_pt.y;
    piece.to_pt.y = -piece.to_pt.y;
  }
  const DomainFn fn{plane, upper, lower, lambda};

  // The vertical gap between the chains is concave; find its maximum.
  std::vector<double> ts;
  ts.reserve(upper.pieces.size() + lower.pieces.size() + 2);
  for (const Piece& p : upper.pieces) ts.push_back(p.from);
  for (const Piece& p : lower.pieces) ts.push_back(p.from);
  ts.push_back(hi);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::size_t k = 0;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (fn.gap(ts[i]) > fn.gap(ts[k])) k = i;
  }
  double t_best = ts[k];
  double gap_best = fn.gap(t_best);
  // Golden section on the bracket around the best sample and, since sample
  // gaps are unreliable next to a near-vertical end piece, on the whole domain.
  auto golden = [&](double a, double b) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = fn.gap(x1), f2 = fn.gap(x2);
    for (int it = 0; it < 200 && b - a > 1e-15 * lambda; ++it) {
      if (f1 < f2) {
        a = x1; x1 = x2; f1 = f2; x2 = a + phi * (b - a); f2 = fn.gap(x2);
      } else {
        b = x2; x2 = x1; f2 = f1; x1 = b - phi * (b - a); f1 = fn.gap(x1);
      }
    }
    const double t = 0.5 * (a + b);
    if (fn.gap(t) > gap_best) {
      t_best = t;
      gap_best = fn.gap(t);
    }
  };
  golden(ts[k == 0 ? 0 : k - 1], ts[std::min(k + 1, ts.size() - 1)]);
  golden(lo, hi);

  if (gap_best < -kThinBand * lambda) return empty_boundary(lambda);
  if (gap_best < kThinBand * lambda) {
    return single_point({t_best, 0.5 * (fn.up(t_best) + fn.down(t_best))}, lambda);
  }

  std::vector<double> samples = ts;
  samples.insert(std::upper_bound(samples.begin(), samples.end(), t_best), t_best);
  const auto m = static_cast<std::size_t>(
      std::find(samples.begin(), samples.end(), t_best) - samples.begin());

  std::size_t iu_left = 0, il_left = 0;
  std::size_t iu_right = upper.pieces.size() - 1, il_right = lower.pieces.size() - 1;
  Point left_pt, right_pt;
  const bool shared_left = upper.pieces.front().center == lower.pieces.front().center;
  const bool shared_right = upper.pieces.back().center == lower.pieces.back().center;
  auto [left_end, right_end] = chain_ends(plane, upper, lower, lambda);
  if (!shared_left && !shared_right && left_end && !(left_end->pt.x < right_end->pt.x)) {
    left_end = right_end = std::nullopt;  // a single crossing: leave it to the gap search
  }

  // Left end of the region.
  if (shared_left) {
    const Point c = sorted[upper.pieces.front().center];
    left_pt = {c.x - lambda, c.y};
  } else if (left_end) {
    left_pt = left_end->pt;
    iu_left = left_end->iu;
    il_left = left_end->il;
  } else {
    std::size_t i = m;
    while (i > 0 && fn.gap(samples[i - 1]) >= 0.0) --i;
    if (i == 0) {
      left_pt = {samples[0], fn.up(samples[0])};
    } else {
      const double a = samples[i - 1], b = samples[i];
      const double mid = 0.5 * (a + b);
      iu_left = upper.locate(mid);
      il_left = lower.locate(mid);
      left_pt = chain_crossing(plane, fn, iu_left, il_left, a, b, true);
    }
  }

  // Right end of the region.
  if (shared_right) {
    const Point c = sorted[upper.pieces.back().center];
    right_pt = {c.x + lambda, c.y};
  } else if (right_end) {
    right_pt = right_end->pt;
    iu_right = right_end->iu;
    il_right = right_end->il;
  } else {
    std::size_t i = m;
    while (i + 1 < samples.size() && fn.gap(samples[i + 1]) >= 0.0) ++i;
    if (i + 1 == samples.size()) {
      right_pt = {samples.back(), fn.up(samples.back())};
    } else {
      const double a = samples[i], b = samples[i + 1];
      const double mid = 0.5 * (a + b);
      iu_right = upper.locate(mid);
      il_right = lower.locate(mid);
      right_pt = chain_crossing(plane, fn, iu_right, il_right, a, b, false);
    }
  }
  if (iu_left > iu_right || il_left > il_right) {
    return single_point({t_best, 0.5 * (fn.up(t_best) + fn.down(t_best))}, lambda);
  }

  // Counterclockwise cycle: lower chain left to right, upper chain right to left.
  std::vector<ArcWithCenter> cycle;
  for (std::size_t i = il_left; i <= il_right; ++i) {
    const Piece& p = lower.pieces[i];
    const Point from = i == il_left ? left_pt : p.from_pt;
    const Point to = i == il_right ? right_pt : p.to_pt;
    const Point c = sorted[p.center];
    cycle.push_back({make_arc(c, lambda, from, to), c});
  }
  for (std::size_t i = iu_right + 1; i-- > iu_left;) {
    const Piece& p = upper.pieces[i];
    const Point from = i == iu_right ? right_pt : p.to_pt;
    const Point to = i == iu_left ? left_pt : p.from_pt;
    const Point c = sorted[p.center];
    cycle.push_back({make_arc(c, lambda, from, to), c});
  }
  return boundary_from_cycle(plane, lambda, std::move(cycle));
}

std::pair<std::vector<Point>, std::vector<Point>> chain_arc_centers(const ChainBoundary& boundary) {
  if (!boundary.is_region()) throw GeometryError(ErrorCode::NoArcs, "boundary has no arcs");
  std::pair<std::vector<Point>, std::vector<Point>> out;
  for (const auto& a : boundary.upper) out.first.push_back(a.generating_center);
  for (const auto& a : boundary.lower) out.second.push_back(a.generating_center);
  return out;
}

bool centers_reversed(const ChainBoundary& boundary) {
  auto check = [](const std::vector<ArcWithCenter>& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!lex_less(chain[i + 1].generating_center, chain[i].generating_center)) return false;
    }
    return true;
  };
  return check(boundary.upper) && check(boundary.lower);
}

Membership boundary_membership(const NormPlane& plane, const ChainBoundary& boundary, Point q,
                               double band) {
  const double lambda = boundary.radius;
  switch (boundary.kind) {
    case BoundaryKind::Empty:
      throw GeometryError(ErrorCode::InvalidInput, "membership query against an empty region");
    case BoundaryKind::SinglePoint:
      return classify_margin(norm_eval(plane, q - boundary.point), lambda, band);
    case BoundaryKind::Region:
      break;
  }
  if (q.x < boundary.leftmost.x || q.x > boundary.rightmost.x) {
    double margin = -std::numeric_limits<double>::infinity();
    for (const auto* chain : {&boundary.upper, &boundary.lower}) {
      for (const auto& a : *chain) {
        margin = std::max(margin, norm_eval(plane, q - a.generating_center) - lambda);
      }
    }
    return classify_margin(margin, lambda, band);
  }
  const auto& up = boundary.upper[locate_arc(boundary.upper, true, q.x)];
  const auto& down = boundary.lower[locate_arc(boundary.lower, false, q.x)];
  const double margin = std::max(norm_eval(plane, q - up.generating_center),
                                 norm_eval(plane, q - down.generating_center)) -
                        lambda;
  return classify_margin(margin, lambda, band);
}

std::vector<ArcWithCenter> boundary_arcs(const ChainBoundary& boundary) {
  if (!boundary.is_region()) return {};
  std::vector<ArcWithCenter> cycle(boundary.lower.begin(), boundary.lower.end());
  cycle.insert(cycle.end(), boundary.upper.rbegin(), boundary.upper.rend());
  // Rejoin arcs split at a smooth extreme point.
  std::vector<ArcWithCenter> out;
  for (const auto& a : cycle) {
    if (!out.empty() && out.back().generating_center == a.generating_center) {
      out.back().arc.end = a.arc.end;
      out.back().arc.theta_end += a.arc.extent();
    } else {
      out.push_back(a);
    }
  }
  if (out.size() > 1 && out.back().generating_center == out.front().generating_center) {
    ArcWithCenter joined = out.back();
    joined.arc.end = out.front().arc.end;
    joined.arc.theta_end += out.front().arc.extent();
    out.front() = joined;
    out.pop_back();
  }
  if (out.size() == 1) {
    out[0].arc.theta_end = out[0].arc.theta_start + kTwoPi;
    out[0].arc.end = out[0].arc.start;
  }
  return out;
}

std::vector<Point> sample_boundary(const NormPlane& plane, const ChainBoundary& boundary,
                                   int per_arc) {
  if (boundary.kind == BoundaryKind::SinglePoint) return {boundary.point};
  std::vector<Point> out;
  for (const auto* chain : {&boundary.lower, &boundary.upper}) {
    for (const auto& a : *chain) {
      auto s = arc_sample(plane, a.arc, per_arc);
      out.insert(out.end(), s.begin(), s.end());
    }
  }
  return out;
}

double boundary_deviation(const NormPlane& plane, const ChainBoundary& a, const ChainBoundary& b,
                          int per_arc) {
  if (a.kind != b.kind) return std::numeric_limits<double>::infinity();
  if (a.kind == BoundaryKind::Empty) return 0.0;
  if (a.kind == BoundaryKind::SinglePoint) return norm_eval(plane, a.point - b.point);
  double worst = 0.0;
  for (const Point& q : sample_boundary(plane, a, per_arc)) {
    worst = std::max(worst, std::fabs(boundary_membership(plane, b, q).margin));
  }
  for (const Point& q : sample_boundary(plane, b, per_arc)) {
    worst = std::max(worst, std::fabs(boundary_membership(plane, a, q).margin));
  }
  return worst;
}

std::vector<std::string> check_boundary(const NormPlane& plane, const ChainBoundary& boundary,
                                        int per_arc) {
  std::vector<std::string> issues;
  if (!boundary.is_region()) return issues;
  const double lambda = boundary.radius;
  const double merge = kVertexMerge * lambda;
  auto report = [&](const std::string& what) { issues.push_back(what); };

  if (boundary.upper.empty() || boundary.lower.empty()) {
    report("a chain is empty");
    return issues;
  }
  for (const auto* chain : {&boundary.upper, &boundary.lower}) {
    const bool up = chain == &boundary.upper;
    const char* name = up ? "upper" : "lower";
    for (std::size_t i = 0; i < chain->size(); ++i) {
      const Arc& arc = (*chain)[i].arc;
      if (!(arc.extent() > 0.0) || arc.extent() > kTwoPi + 1e-12) {
        report(std::string(name) + " arc with extent outside (0, 2pi]");
      }
      for (const Point& e : {arc.start, arc.end}) {
        const double off = std::fabs(norm_eval(plane, e - arc.center) - arc.radius);
        if (off > 1e-10 * lambda) {
          std::ostringstream msg;
          msg << name << " arc " << i << " endpoint off its circle by " << off;
          report(msg.str());
        }
      }
    }
  }
  auto endpoint_gap = [&](const std::vector<ArcWithCenter>& chain, bool up) {
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const Point right_of_i = up ? chain[i].arc.start : chain[i].arc.end;
      const Point left_of_next = up ? chain[i + 1].arc.end : chain[i + 1].arc.start;
      worst = std::max(worst, euclid(right_of_i - left_of_next));
    }
    return worst;
  };
  if (endpoint_gap(boundary.upper, true) > merge) report("upper chain arcs do not share endpoints");
  if (endpoint_gap(boundary.lower, false) > merge) report("lower chain arcs do not share endpoints");

  if (euclid(boundary.upper.front().arc.end - boundary.leftmost) > merge ||
      euclid(boundary.lower.front().arc.start - boundary.leftmost) > merge) {
    report("chains do not meet at the leftmost point");
  }
  if (euclid(boundary.upper.back().arc.start - boundary.rightmost) > merge ||
      euclid(boundary.lower.back().arc.end - boundary.rightmost) > merge) {
    report("chains do not meet at the rightmost point");
  }
  if (!centers_reversed(boundary)) report("chain centers are not in reversed order");

  // Convexity of the counterclockwise polyline.
  std::vector<Point> ring;
  for (const auto& a : boundary_arcs(boundary)) {
    auto s = arc_sample(plane, a.arc, per_arc);
    ring.insert(ring.end(), s.begin(), s.end() - 1);
  }
  const double tol = -1e-12 * lambda * lambda;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % ring.size()];
    const Point c = ring[(i + 2) % ring.size()];
    if (cross(b - a, c - b) < tol) {
      std::ostringstream msg;
      msg << "right turn at sample " << i << " (cross " << cross(b - a, c - b) << ")";
      report(msg.str());
      break;
    }
  }
  return issues;
}

}  // namespace ballhull
