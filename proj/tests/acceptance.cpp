// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ballhull/chains.hpp"
#include "ballhull/chebyshev.hpp"
#include "ballhull/hull.hpp"
#include "ballhull/oracle.hpp"
#include "ballhull/two_center.hpp"

using namespace ballhull;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Instance {
  NormPlane plane;
  std::vector<Point> points;
  double lambda;
  double lambda_k;
  double diam;
};

const double kExponents[] = {1.5, 2.0, 3.0, 8.0};

// n in [n_min, n_max], points uniform in [0, 10]^2, lambda uniform in
// [lambda_K, 2 diam].
Instance random_instance(std::mt19937_64& rng, int index, int n_min, int n_max) {
  std::uniform_real_distribution<double> coord(0, 10);
  std::uniform_real_distribution<double> unit(0, 1);
  Instance inst{NormPlane::lp(kExponents[index % 4]), {}, 0, 0, 0};
  const int n = n_min + static_cast<int>(rng() % static_cast<unsigned>(n_max - n_min + 1));
  for (int i = 0; i < n; ++i) inst.points.push_back({coord(rng), coord(rng)});
  inst.lambda_k = circumradius(inst.plane, inst.points).lambda_K;
  inst.diam = diameter(inst.plane, inst.points);
  inst.lambda = inst.lambda_k + (2 * inst.diam - inst.lambda_k) * unit(rng);
  return inst;
}

// Half the queries uniform in a box around the region, half within 1e-2
// lambda of a boundary sample.
std::vector<Point> queries(std::mt19937_64& rng, const NormPlane& plane, const ChainBoundary& b,
                           double lambda, int count) {
  std::uniform_real_distribution<double> unit(0, 1);
  const auto ring = sample_boundary(plane, b, 16);
  double x0 = ring[0].x, x1 = x0, y0 = ring[0].y, y1 = y0;
  for (const Point& q : ring) {
    x0 = std::min(x0, q.x);
    x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y);
    y1 = std::max(y1, q.y);
  }
  const double pad = 0.2 * lambda;
  std::vector<Point> out;
  for (int i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      out.push_back({x0 - pad + (x1 - x0 + 2 * pad) * unit(rng),
                     y0 - pad + (y1 - y0 + 2 * pad) * unit(rng)});
    } else {
      const double t = 2 * std::numbers::pi * unit(rng);
      const double d = 1e-2 * lambda * (2 * unit(rng) - 1);
      out.push_back(ring[rng() % ring.size()] + d * Point{std::cos(t), std::sin(t)});
    }
  }
  return out;
}

double farthest(const NormPlane& plane, const std::vector<Point>& pts, Point q) {
  double m = 0.0;
  for (const Point& x : pts) m = std::max(m, norm_eval(plane, q - x));
  return m;
}

double nearest(Point q, const std::vector<Point>& pts) {
  double best = INFINITY;
  for (const Point& p : pts) best = std::min(best, euclid(q - p));
  return best;
}

std::size_t equal_x_ties(std::vector<Point> pts) {
  pts = sort_points(std::move(pts));
  std::size_t ties = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) ties += pts[i].x == pts[i - 1].x;
  return ties;
}

struct Report {
  int failures = 0;
  void line(int id, bool pass, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    failures += !pass;
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Shared bookkeeping for the structural criteria 4 and 6.
struct Ledger {
  std::size_t chains = 0;
  std::size_t reversal_failures = 0;
  std::size_t ties = 0;
  std::size_t instances = 0;
  std::size_t diameter_bound_failures = 0;

  void chain(const ChainBoundary& b) {
    if (!b.is_region()) return;
    ++chains;
    reversal_failures += !centers_reversed(b);
  }
  void instance(const Instance& inst) {
    ++instances;
    ties += equal_x_ties(inst.points);
    const double rel = 1e-8;
    const bool ok = inst.lambda_k <= inst.diam * (1 + rel) && inst.diam <= 2 * inst.lambda_k * (1 + rel);
    diameter_bound_failures += !ok;
  }
};

void criterion_bi(Report& report, Ledger& ledger, std::vector<Instance>& small) {
  std::mt19937_64 rng(1);
  const auto t0 = Clock::now();
  std::size_t checked = 0, skipped = 0, bad = 0;
  for (int k = 0; k < 200; ++k) {
    const auto inst = random_instance(rng, k, 3, 12);
    ledger.instance(inst);
    if (inst.points.size() <= 10) small.push_back(inst);
    const auto bi = build_ball_intersection(inst.plane, inst.points, inst.lambda);
    ledger.chain(bi);
    if (!bi.is_region()) {
      ++bad;
      continue;
    }
    for (const Point& q : queries(rng, inst.plane, bi, inst.lambda, 100)) {
      const double margin = farthest(inst.plane, inst.points, q) - inst.lambda;
      if (std::abs(margin) < 1e-6 * inst.lambda) {
        ++skipped;
        continue;
      }
      ++checked;
      const bool fast = boundary_membership(inst.plane, bi, q).covered();
      bad += fast != oracle::bi_membership(inst.plane, inst.points, inst.lambda, q);
    }
  }
  const double secs = seconds_since(t0);
  report.line(1, bad == 0 && secs < 30,
              fmt("bi vs oracle membership: %zu disagreements in %zu queries (%zu in the 1e-6 band), %.2f s",
                  bad, checked, skipped, secs));
}

void criterion_bh(Report& report, Ledger& ledger) {
  std::mt19937_64 rng(2);
  const auto t0 = Clock::now();
  std::size_t checked = 0, skipped = 0, false_inside = 0, false_outside = 0, certified = 0;
  std::size_t empty_grids = 0;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto inst = random_instance(rng, k, 3, 12);
    ledger.instance(inst);
    const auto via = build_ball_hull(inst.plane, inst.points, inst.lambda);
    ledger.chain(via.boundary);
    const oracle::BallHullGrid grid(inst.plane, inst.points, inst.lambda, 400);
    empty_grids += grid.admissible_rows() == 0;
    for (const Point& q : queries(rng, inst.plane, via.boundary, inst.lambda, 50)) {
      const auto m = boundary_membership(inst.plane, via.boundary, q);
      if (std::abs(m.margin) < 1e-3 * inst.lambda) {
        ++skipped;
        continue;
      }
      ++checked;
      const bool fast = m.covered();
      const bool slow = grid.contains(q);
      if (fast == slow) continue;
      worst = std::max(worst, std::abs(m.margin) / inst.lambda);
      if (fast) {
        ++false_outside;
      } else {
        ++false_inside;
        // The hull's arc centers admit K; one of them excluding q proves the
        // fast answer and pins the disagreement on the grid resolution.
        certified += oracle::excluded_by_some_disc(inst.plane, inst.points, inst.lambda, q,
                                                   via.arc_centers);
      }
    }
  }
  const std::size_t bad = false_inside + false_outside;
  report.line(2, bad == 0,
              fmt("bh (via bi) vs grid oracle: %zu disagreements in %zu queries (%zu in the 1e-3 band); "
                  "grid inside/fast outside %zu (%zu certified by an admissible disc), "
                  "grid outside/fast inside %zu; worst margin %.2e lambda; %zu grids without nodes; %.2f s",
                  bad, checked, skipped, false_inside, certified, false_outside, worst, empty_grids,
                  seconds_since(t0)));
}

void criterion_algorithms(Report& report, Ledger& ledger) {
  std::mt19937_64 rng(3);
  std::size_t over = 0, fallbacks = 0;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto inst = random_instance(rng, k, 2, 24);
    ledger.instance(inst);
    const auto via = build_ball_hull(inst.plane, inst.points, inst.lambda);
    MergeStats stats;
    const auto dc = build_ball_hull_dc(inst.plane, inst.points, inst.lambda, &stats);
    ledger.chain(via.boundary);
    ledger.chain(dc.boundary);
    fallbacks += stats.fallbacks;
    const double dev = boundary_deviation(inst.plane, via.boundary, dc.boundary) / inst.lambda;
    worst = std::max(worst, dev);
    over += dev > 1e-8;
  }
  report.line(3, over == 0,
              fmt("via-bi vs divide-and-conquer: %zu of 200 over 1e-8 lambda, worst %.2e lambda, "
                  "%zu tangent fallbacks",
                  over, worst, fallbacks));
}

void criterion_duality(Report& report) {
  std::mt19937_64 rng(5);
  std::size_t center_bad = 0, vertex_bad = 0, deviation_bad = 0;
  double worst_center = 0.0, worst_dev = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto inst = random_instance(rng, k, 3, 16);
    const double lam = inst.lambda;
    const auto bi = build_ball_intersection(inst.plane, inst.points, lam);
    const auto bh = build_ball_hull(inst.plane, inst.points, lam);
    // Arc centers of bh are vertices of bi, and every vertex of bi carries an arc of bh.
    for (const Point& c : bh.arc_centers) {
      const double d = nearest(c, bi.vertices);
      worst_center = std::max(worst_center, d / lam);
      center_bad += d > 1e-8 * lam;
    }
    for (const Point& v : bi.vertices) vertex_bad += nearest(v, bh.arc_centers) > 1e-8 * lam;
    const auto again = build_ball_intersection(inst.plane, bh.boundary.vertices, lam);
    const double dev = boundary_deviation(inst.plane, bi, again) / lam;
    worst_dev = std::max(worst_dev, dev);
    deviation_bad += dev > 1e-8;
  }
  report.line(5, center_bad + vertex_bad + deviation_bad == 0,
              fmt("duality on 100 instances: %zu arc centers off a bi vertex, %zu bi vertices without "
                  "an arc (worst %.2e lambda); bi(K) vs bi(K'') %zu over 1e-8, worst %.2e lambda",
                  center_bad, vertex_bad, worst_center, deviation_bad, worst_dev));
}

void criterion_circumradius(Report& report, const Ledger& ledger, const std::vector<Instance>& small) {
  std::size_t oracle_bad = 0;
  double worst = 0.0;
  for (const auto& inst : small) {
    const double d = std::abs(inst.lambda_k - oracle::circumradius(inst.plane, inst.points));
    worst = std::max(worst, d);
    oracle_bad += d > 1e-7;
  }
  const auto l2 = NormPlane::lp(2);
  const std::vector<Point> tri{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const double tri_err = std::abs(circumradius(l2, tri).lambda_K - 1 / std::sqrt(3.0));
  const double sq_err = std::abs(circumradius(l2, square).lambda_K - std::numbers::sqrt2 / 2);
  const bool pass = ledger.diameter_bound_failures == 0 && oracle_bad == 0 && tri_err <= 1e-8 &&
                    sq_err <= 1e-8;
  report.line(6, pass,
              fmt("circumradius: diameter bounds fail on %zu of %zu instances; oracle off by more than "
                  "1e-7 on %zu of %zu (worst %.2e); triangle error %.2e, square error %.2e",
                  ledger.diameter_bound_failures, ledger.instances, oracle_bad, small.size(), worst,
                  tri_err, sq_err));
}

std::vector<Point> cluster(std::mt19937_64& rng, Point c, double radius, int n) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * unit(rng);
    pts.push_back(c + radius * std::sqrt(unit(rng)) * Point{std::cos(t), std::sin(t)});
  }
  return pts;
}

void criterion_two_center(Report& report) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0, 1);
  std::size_t disagree = 0, uncovered = 0, feasible = 0;
  for (int k = 0; k < 100; ++k) {
    // Two clusters with radii drawn around the cluster sizes: a mix of
    // feasible and infeasible instances, some with a stray third point.
    const double gap = 3 + 9 * unit(rng);
    const double ra = 0.5 + 1.5 * unit(rng);
    const double rb = 0.5 + 1.5 * unit(rng);
    auto pts = cluster(rng, {0, 0}, ra, 2 + static_cast<int>(rng() % 19));
    const auto b = cluster(rng, {gap, 0.5 * gap * (unit(rng) - 0.5)}, rb, 1 + static_cast<int>(rng() % 19));
    pts.insert(pts.end(), b.begin(), b.end());
    if (rng() % 4 == 0) pts.push_back({0.5 * gap, 4 * (unit(rng) - 0.5) * gap});
    double r = std::max(ra, rb) * (0.6 + 0.9 * unit(rng));
    double l2 = std::min(ra, rb) * (0.6 + 0.9 * unit(rng));
    if (r < l2) std::swap(r, l2);
    const auto plane = NormPlane::lp(kExponents[k % 4]);
    const auto ans = solve_constrained_two_center(plane, pts, r, l2);
    const auto ref = oracle::two_center(plane, pts, r, l2);
    disagree += ans.feasible != ref.feasible;
    if (ans.feasible) {
      ++feasible;
      uncovered += !covers_all(plane, pts, ans, r, l2, 1e-9);
    }
  }
  report.line(7, disagree == 0 && uncovered == 0 && feasible > 0 && feasible < 100,
              fmt("2-center vs all-pairs oracle: %zu disagreements on 100 instances (%zu feasible), "
                  "%zu returned pairs fail the coverage check",
                  disagree, feasible, uncovered));
}

// Median CPU time of `reps` runs after one untimed warm-up run. CPU time
// keeps preemption by other processes out of the ratios.
double median_seconds(const std::function<void()>& run, int reps = 5) {
  run();
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const std::clock_t c0 = std::clock();
    run();
    t.push_back(static_cast<double>(std::clock() - c0) / CLOCKS_PER_SEC);
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

std::vector<Point> uniform_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> coord(0, 1);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
  return pts;
}

void criterion_scaling(Report& report) {
  std::mt19937_64 rng(8);
  const auto plane = NormPlane::lp(2);
  const auto t0 = Clock::now();

  // Ball intersection at lambda = 2 >= diam of the unit square.
  std::vector<double> bi_t;
  for (int e : {14, 16, 18}) {
    const auto pts = uniform_points(rng, 1 << e);
    bi_t.push_back(median_seconds([&] {
      const auto b = build_ball_intersection(plane, pts, 2.0);
      if (!b.is_region()) std::abort();
    }));
  }
  const double bi_r1 = bi_t[1] / bi_t[0], bi_r2 = bi_t[2] / bi_t[1];

  // Small discs leave every instance infeasible, so each candidate is tried.
  std::vector<double> tc_t;
  for (int e : {9, 10, 11}) {
    const auto pts = uniform_points(rng, 1 << e);
    tc_t.push_back(median_seconds([&] {
      const auto ans = solve_constrained_two_center(plane, pts, 0.1, 0.1);
      if (ans.feasible || ans.stats.candidates != pts.size()) std::abort();
    }));
  }
  const double tc_r1 = tc_t[1] / tc_t[0], tc_r2 = tc_t[2] / tc_t[1];
  const double secs = seconds_since(t0);
  const bool pass = bi_r1 <= 5.5 && bi_r2 <= 5.5 && tc_r1 >= 3.0 && tc_r1 <= 5.5 && tc_r2 >= 3.0 &&
                    tc_r2 <= 5.5 && secs < 300;
  report.line(8, pass,
              fmt("scaling: bi time(4n)/time(n) = %.2f (n=2^14), %.2f (n=2^16); 2-center "
                  "time(2n)/time(n) = %.2f (n=2^9), %.2f (n=2^10); %.1f s",
                  bi_r1, bi_r2, tc_r1, tc_r2, secs));
}

void criterion_kernel(Report& report) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> coord(-5, 5);
  std::uniform_real_distribution<double> unit(0, 1);
  const auto plane = NormPlane::lp(2);
  double worst = 0.0;
  std::size_t bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const Point c1{coord(rng), coord(rng)};
    const Point c2{coord(rng), coord(rng)};
    const Point v = c2 - c1;
    const double d = euclid(v);
    const double lambda = 0.5 * d * (1.001 + 9 * unit(rng));
    // Closed form: the midpoint plus the half chord along the left normal.
    const Point mid = 0.5 * (c1 + c2);
    const double h = std::sqrt(lambda * lambda - 0.25 * d * d);
    const Point normal{-v.y / d, v.x / d};
    const Point left = mid + h * normal;
    const Point right = mid - h * normal;
    const auto got = circle_circle_intersection(plane, c1, c2, lambda);
    if (got.size() != 2) {
      ++bad;
      continue;
    }
    const double err = std::max(euclid(got[0] - left), euclid(got[1] - right));
    worst = std::max(worst, err);
    bad += err > 1e-10;
  }
  report.line(9, bad == 0,
              fmt("Euclidean circle intersection vs closed form: %zu of 1000 over 1e-10, worst %.2e",
                  bad, worst));
}

}  // namespace

int main() {
  Report report;
  Ledger ledger;
  std::vector<Instance> small;
  criterion_bi(report, ledger, small);
  criterion_bh(report, ledger);
  criterion_algorithms(report, ledger);
  report.line(4, ledger.reversal_failures == 0,
              fmt("center order reversal: %zu failures on %zu chains from criteria 1-3; "
                  "%zu equal-x ties in the inputs",
                  ledger.reversal_failures, ledger.chains, ledger.ties));
  criterion_duality(report);
  criterion_circumradius(report, ledger, small);
  criterion_two_center(report);
  criterion_scaling(report);
  criterion_kernel(report);
  std::printf("%d of 9 criteria failed\n", report.failures);
  return report.failures == 0 ? 0 : 1;
}
