#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ballhull/arcs.hpp"
#include "ballhull/error.hpp"

using namespace ballhull;

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kHalfSqrt3 = std::sqrt(3.0) / 2;

// y > 0 with (1/2)^4 + y^4 = 1, by bisection.
double l4_height_at_half() {
  double lo = 0, hi = 1;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::pow(0.5, 4) + std::pow(mid, 4) < 1 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("circle_circle_intersection, Euclidean") {
  const NormPlane e = NormPlane::lp(2);
  auto two = circle_circle_intersection(e, {0, 0}, {2, 0}, kSqrt2);
  REQUIRE(two.size() == 2);
  // Counterclockwise around c1 from the direction of c2: left first.
  CHECK(two[0].x == doctest::Approx(1.0));
  CHECK(two[0].y == doctest::Approx(1.0));
  CHECK(two[1].x == doctest::Approx(1.0));
  CHECK(two[1].y == doctest::Approx(-1.0));

  auto one = circle_circle_intersection(e, {0, 0}, {2, 0}, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Point{1, 0});

  CHECK(circle_circle_intersection(e, {0, 0}, {3, 0}, 1).empty());
  CHECK_THROWS_AS(circle_circle_intersection(e, {1, 1}, {1, 1}, 1), GeometryError);
}

TEST_CASE("circle_circle_intersection, p = 4") {
  const double y = l4_height_at_half();
  CHECK(y == doctest::Approx(std::pow(15.0 / 16.0, 0.25)).epsilon(1e-14));
  auto pts = circle_circle_intersection(NormPlane::lp(4), {0, 0}, {1, 0}, 1);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pts[0].y == doctest::Approx(y).epsilon(1e-12));
  CHECK(pts[1].x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pts[1].y == doctest::Approx(-y).epsilon(1e-12));
}

TEST_CASE("circle_circle_intersection residuals and symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-5, 5);
  std::uniform_real_distribution<double> unit(0.05, 0.99);
  int checked = 0;
  for (double p : {1.5, 2.0, 3.0, 8.0}) {
    const NormPlane plane = NormPlane::lp(p);
    for (int i = 0; i < 500; ++i) {
      const Point c1{coord(rng), coord(rng)};
      const Point c2{coord(rng), coord(rng)};
      const double lambda = norm_eval(plane, c2 - c1) / (2 * unit(rng));
      const auto a = circle_circle_intersection(plane, c1, c2, lambda);
      const auto b = circle_circle_intersection(plane, c2, c1, lambda);
      REQUIRE(a.size() == 2);
      REQUIRE(b.size() == 2);
      for (const Point& q : a) {
        CHECK(std::fabs(norm_eval(plane, q - c1) - lambda) < 1e-10 * lambda);
        CHECK(std::fabs(norm_eval(plane, q - c2) - lambda) < 1e-10 * lambda);
      }
      // Swapping the centers swaps left and right.
      CHECK(euclid(a[0] - b[1]) < 1e-10 * lambda);
      CHECK(euclid(a[1] - b[0]) < 1e-10 * lambda);
      ++checked;
    }
  }
  CHECK(checked == 2000);
}

TEST_CASE("disc_membership") {
  const NormPlane e = NormPlane::lp(2);
  auto m = disc_membership(e, {0, 0}, 1, {0, 0});
  CHECK(m.location == Location::Inside);
  CHECK(m.margin == doctest::Approx(-1.0));
  m = disc_membership(e, {0, 0}, 1, {1, 0});
  CHECK(m.location == Location::OnBoundary);
  CHECK(m.margin == doctest::Approx(0.0));
  m = disc_membership(NormPlane::lp(3), {0, 0}, 1, {1, 1});
  CHECK(m.location == Location::Outside);
  CHECK(m.margin == doctest::Approx(std::cbrt(2.0) - 1).epsilon(1e-13));
  CHECK_THROWS_AS(disc_membership(e, {0, 0}, 1, {0, 0}, -1), GeometryError);
}

TEST_CASE("minimal_arcs") {
  const NormPlane e = NormPlane::lp(2);
  auto arcs = minimal_arcs(e, {1, 0}, {0, 1}, 1);
  REQUIRE(arcs.size() == 2);
  bool found = false;
  for (const Arc& a : arcs) {
    if (euclid(a.center) < 1e-12) {
      found = true;
      const auto mid = arc_sample(e, a, 2)[1];
      CHECK(mid.x == doctest::Approx(kSqrt2 / 2));
      CHECK(mid.y == doctest::Approx(kSqrt2 / 2));
    }
  }
  CHECK(found);

  arcs = minimal_arcs(e, {0, 0}, {1, 0}, 1);
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0].center.x == doctest::Approx(0.5));
  CHECK(arcs[0].center.y == doctest::Approx(kHalfSqrt3));
  CHECK(arcs[1].center.y == doctest::Approx(-kHalfSqrt3));
  // The arc lies on the far side of the chord from its center.
  CHECK(arc_sample(e, arcs[0], 2)[1].y < 0);
  CHECK(arc_sample(e, arcs[1], 2)[1].y > 0);

  const double y = l4_height_at_half();
  arcs = minimal_arcs(NormPlane::lp(4), {0, 0}, {1, 0}, 1);
  CHECK(arcs[0].center.x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(arcs[0].center.y == doctest::Approx(y).epsilon(1e-12));
  CHECK(arcs[1].center.y == doctest::Approx(-y).epsilon(1e-12));

  // Diametral pair: two half circles.
  arcs = minimal_arcs(e, {0, 0}, {2, 0}, 1);
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0].extent() == doctest::Approx(std::numbers::pi));
  CHECK(arcs[1].extent() == doctest::Approx(std::numbers::pi));

  auto code = [&](auto fn) {
    try {
      fn();
    } catch (const GeometryError& err) {
      return err.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code([&] { minimal_arcs(e, {0, 0}, {3, 0}, 1); }) == ErrorCode::NoCommonDisc);
  CHECK(code([&] { minimal_arcs(e, {0, 0}, {0, 0}, 1); }) == ErrorCode::DegenerateChord);
}

TEST_CASE("minimal arcs lie in every disc containing both endpoints") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-3, 3);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> frac(0, 1);
  for (double p : {1.5, 2.0, 3.0, 8.0}) {
    const NormPlane plane = NormPlane::lp(p);
    for (int inst = 0; inst < 20; ++inst) {
      const Point a{coord(rng), coord(rng)};
      const Point b{coord(rng), coord(rng)};
      const double lambda = norm_eval(plane, b - a) * (0.55 + frac(rng));
      std::vector<Point> samples;
      for (const Arc& arc : minimal_arcs(plane, a, b, lambda)) {
        const auto s = arc_sample(plane, arc, 32);
        samples.insert(samples.end(), s.begin(), s.end());
      }
      // Random enclosing centers: points of S(a, t lambda) that also cover b.
      int tried = 0;
      while (tried < 50) {
        const Point c = sphere_point(plane, a, lambda * frac(rng), angle(rng));
        if (norm_eval(plane, b - c) > lambda) continue;
        ++tried;
        for (const Point& q : samples) {
          CHECK(norm_eval(plane, q - c) <= lambda * (1 + 1e-8));
        }
      }
    }
  }
}

TEST_CASE("reflected center identity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (double p : {1.5, 2.0, 3.0, 8.0}) {
    const NormPlane plane = NormPlane::lp(p);
    for (int i = 0; i < 200; ++i) {
      const double lambda = 1.7;
      const Point o{0.3, -0.2};
      const Point a = sphere_point(plane, o, lambda, angle(rng));
      const Point b = sphere_point(plane, o, lambda, angle(rng));
      if (euclid(a - b) < 1e-3) continue;
      const auto centers = circle_circle_intersection(plane, a, b, lambda);
      REQUIRE(centers.size() == 2);
      const Point other = euclid(centers[0] - o) > euclid(centers[1] - o) ? centers[0] : centers[1];
      // On the flat sides of the p = 8 circle the intersection is only
      // determined to a few 1e-9 in double precision (zero residual across it).
      const double tol = p == 8.0 ? 1e-8 : 1e-9;
      CHECK(euclid(other - (a + b - o)) < tol * lambda);
      CHECK(std::fabs(norm_eval(plane, other - a) - lambda) < 1e-12 * lambda);
    }
  }
}

TEST_CASE("arc_sample") {
  const NormPlane e = NormPlane::lp(2);
  const auto circle = arc_sample(e, full_circle(e, {0, 0}, 1), 4);
  REQUIRE(circle.size() == 5);
  const Point expected[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}};
  for (int i = 0; i < 5; ++i) {
    CHECK(circle[i].x == doctest::Approx(expected[i].x));
    CHECK(circle[i].y == doctest::Approx(expected[i].y));
  }
  const Arc quarter = make_arc({0, 0}, 1, {1, 0}, {0, 1});
  const auto ends = arc_sample(e, quarter, 1);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0] == Point{1, 0});
  CHECK(ends[1] == Point{0, 1});
  const auto mid = arc_sample(e, quarter, 2)[1];
  CHECK(mid.x == doctest::Approx(kSqrt2 / 2));
  CHECK(mid.y == doctest::Approx(kSqrt2 / 2));
  CHECK_THROWS_AS(arc_sample(e, quarter, 0), GeometryError);
}

TEST_CASE("arc_x_range and arc_point_at_x") {
  const NormPlane e = NormPlane::lp(2);
  const auto [lo, hi] = arc_x_range(e, full_circle(e, {0, 0}, 1));
  CHECK(lo == doctest::Approx(-1.0));
  CHECK(hi == doctest::Approx(1.0));

  const Arc quarter = make_arc({0, 0}, 1, {1, 0}, {0, 1});
  auto pts = arc_point_at_x(e, quarter, kSqrt2 / 2);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].y == doctest::Approx(kSqrt2 / 2).epsilon(1e-12));
  CHECK(arc_point_at_x(e, quarter, 2).empty());

  pts = arc_point_at_x(NormPlane::lp(3), full_circle(NormPlane::lp(3), {0, 0}, 1), 0.5);
  REQUIRE(pts.size() == 2);
  for (const Point& q : pts) CHECK(norm_eval(NormPlane::lp(3), q) == doctest::Approx(1.0));
}
