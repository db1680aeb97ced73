#include "ballhull/cli.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "ballhull/chebyshev.hpp"
#include "ballhull/error.hpp"
#include "ballhull/hull.hpp"
#include "ballhull/io.hpp"
#include "ballhull/oracle.hpp"
#include "ballhull/two_center.hpp"

namespace ballhull::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string output;
  std::string svg;
  double tol = 1e-9;
  int samples = 64;
  std::uint64_t seed = 1;
  int count = 20;
  int grid = 400;
  std::optional<double> norm_p;
  std::optional<double> lambda;
  std::optional<double> r;
  std::optional<double> lambda2;
};

struct Outcome {
  Json result;
  int code = 0;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

io::Instance load(const Options& opt) {
  io::Instance inst = io::read_instance(opt.input);
  if (opt.norm_p) {
    inst.plane = NormPlane::lp(*opt.norm_p);
    try {
      validate_plane(inst.plane);
    } catch (const GeometryError& e) {
      throw io::InputError(std::string("--norm-p: ") + e.what());
    }
  }
  if (opt.lambda) inst.lambda = opt.lambda;
  if (opt.r) inst.r = opt.r;
  if (opt.lambda2) inst.lambda2 = opt.lambda2;
  return inst;
}

double required(const std::optional<double>& v, const char* name) {
  if (!v) throw io::InputError(std::string(name) + ": missing (set it in the input or by flag)");
  if (!(*v > 0.0)) throw io::InputError(std::string(name) + ": must be positive");
  return *v;
}

Json base(const io::Instance& inst, const char* kind) {
  Json j;
  j["instance"] = io::instance_to_json(inst);
  j["kind"] = kind;
  return j;
}

void add_scalars(Json& j, const io::Instance& inst, double tol) {
  const auto circ = circumradius(inst.plane, inst.points, tol);
  j["scalars"] = {{"lambda_K", circ.lambda_K}, {"diam", diameter(inst.plane, inst.points)}};
}

const char* status_of(const ChainBoundary& b) {
  switch (b.kind) {
    case BoundaryKind::Empty: return "empty";
    case BoundaryKind::SinglePoint: return "single_point";
    case BoundaryKind::Region: return "ok";
  }
  return "ok";
}

Outcome run_bi(const Options& opt) {
  const auto inst = load(opt);
  const double lambda = required(inst.lambda, "lambda");
  Timer t;
  const auto b = build_ball_intersection(inst.plane, inst.points, lambda);
  const double elapsed = t.seconds();
  Outcome o{base(inst, "bi")};
  o.result["status"] = status_of(b);
  o.result["boundary"] = io::boundary_to_json(b);
  add_scalars(o.result, inst, opt.tol);
  o.result["timing"] = {{"seconds", elapsed}};
  o.code = b.kind == BoundaryKind::Empty ? 2 : 0;
  return o;
}

Outcome run_bh(const Options& opt, HullAlgorithm algo) {
  const auto inst = load(opt);
  const double lambda = required(inst.lambda, "lambda");
  Outcome o{base(inst, algo == HullAlgorithm::ViaBi ? "bh" : "bh-dc")};
  Timer t;
  try {
    MergeStats stats;
    const auto report = algo == HullAlgorithm::ViaBi
                            ? build_ball_hull(inst.plane, inst.points, lambda)
                            : build_ball_hull_dc(inst.plane, inst.points, lambda, &stats);
    o.result["status"] = status_of(report.boundary);
    o.result["boundary"] = io::boundary_to_json(report.boundary);
    if (algo == HullAlgorithm::DivideConquer) {
      o.result["merge_stats"] = {{"merges", stats.merges},
                                 {"containments", stats.containments},
                                 {"walk_steps", stats.walk_steps},
                                 {"fallbacks", stats.fallbacks}};
    }
  } catch (const RadiusTooSmallError& e) {
    o.result["status"] = "radius_too_small";
    o.result["boundary"] = io::boundary_to_json(e.witness());
    o.code = 2;
  }
  const double elapsed = t.seconds();
  add_scalars(o.result, inst, opt.tol);
  o.result["timing"] = {{"seconds", elapsed}};
  return o;
}

Outcome run_chebyshev(const Options& opt) {
  const auto inst = load(opt);
  Timer t;
  const auto circ = circumradius(inst.plane, inst.points, opt.tol);
  const double elapsed = t.seconds();
  Outcome o{base(inst, "chebyshev")};
  o.result["status"] = "ok";
  o.result["boundary"] = io::boundary_to_json(circ.chebyshev_set);
  o.result["scalars"] = {{"lambda_K", circ.lambda_K},
                         {"diam", diameter(inst.plane, inst.points)},
                         {"iterations", circ.iterations},
                         {"residual", circ.residual}};
  o.result["timing"] = {{"seconds", elapsed}};
  return o;
}

Outcome run_two_center(const Options& opt) {
  const auto inst = load(opt);
  const double r = required(inst.r, "r");
  const double lambda2 = required(inst.lambda2, "lambda2");
  if (r < lambda2) throw io::InputError("r: must be at least lambda2");
  Timer t;
  const auto ans = solve_constrained_two_center(inst.plane, inst.points, r, lambda2);
  const double elapsed = t.seconds();
  Outcome o{base(inst, "two-center")};
  o.result["status"] = ans.feasible ? "ok" : "infeasible";
  Json tc;
  tc["feasible"] = ans.feasible;
  tc["big_center"] = ans.big_center ? io::point_to_json(*ans.big_center) : Json();
  tc["small_center"] = ans.small_center ? io::point_to_json(*ans.small_center) : Json();
  tc["single_disc"] = ans.single_disc;
  tc["uncovered_witness"] = Json::array();
  for (const Point& p : ans.uncovered_witness) tc["uncovered_witness"].push_back(io::point_to_json(p));
  tc["candidates_tried"] = ans.stats.candidates;
  o.result["two_center"] = tc;
  o.result["scalars"] = {{"diam", diameter(inst.plane, inst.points)}};
  o.result["timing"] = {{"seconds", elapsed}};
  o.code = ans.feasible ? 0 : 2;
  return o;
}

Outcome run_oracle_check(const Options& opt) {
  if (opt.count < 1) throw io::InputError("--count: must be >= 1");
  if (opt.grid < 100) throw io::InputError("--grid: must be >= 100");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> size(3, 12);
  const double exponents[] = {1.5, 2.0, 3.0, 8.0};

  std::size_t bi_queries = 0, bi_bad = 0, bh_queries = 0, bh_bad = 0, bh_certified = 0;
  std::size_t dc_bad = 0, circ_bad = 0;
  double worst_dc = 0.0, worst_circ = 0.0;
  Timer t;
  for (int k = 0; k < opt.count; ++k) {
    const NormPlane plane = NormPlane::lp(exponents[k % 4]);
    std::vector<Point> pts(static_cast<std::size_t>(size(rng)));
    for (Point& p : pts) p = {coord(rng), coord(rng)};
    const double lambda_K = circumradius(plane, pts, opt.tol).lambda_K;
    const double diam = diameter(plane, pts);
    const double lambda = lambda_K + (2.0 * diam - lambda_K) * unit(rng);

    const auto bi = build_ball_intersection(plane, pts, lambda);
    for (int q = 0; q < 100; ++q) {
      const Point query{coord(rng), coord(rng)};
      const auto m = boundary_membership(plane, bi, query, 1e-6);
      if (m.location == Location::OnBoundary) continue;
      ++bi_queries;
      if (m.covered() != oracle::bi_membership(plane, pts, lambda, query)) ++bi_bad;
    }

    const auto hull = build_ball_hull(plane, pts, lambda);
    const auto hull_dc = build_ball_hull_dc(plane, pts, lambda);
    const double dev = boundary_deviation(plane, hull.boundary, hull_dc.boundary, opt.samples);
    worst_dc = std::max(worst_dc, dev / lambda);
    if (dev > 1e-8 * lambda) ++dc_bad;

    const oracle::BallHullGrid grid(plane, pts, lambda, opt.grid);
    for (int q = 0; q < 50; ++q) {
      const Point query{coord(rng), coord(rng)};
      const auto m = boundary_membership(plane, hull.boundary, query, 1e-3);
      if (m.location == Location::OnBoundary) continue;
      ++bh_queries;
      if (m.covered() == grid.contains(query)) continue;
      ++bh_bad;
      if (!m.covered() &&
          oracle::excluded_by_some_disc(plane, pts, lambda, query, hull.arc_centers)) {
        ++bh_certified;
      }
    }

    const double diff = std::fabs(oracle::circumradius(plane, pts) - lambda_K);
    worst_circ = std::max(worst_circ, diff);
    if (diff > 1e-7) ++circ_bad;
  }

  Outcome o;
  o.result["kind"] = "oracle-check";
  o.result["seed"] = opt.seed;
  o.result["instances"] = opt.count;
  o.result["bi"] = {{"queries", bi_queries}, {"disagreements", bi_bad}};
  o.result["bh_grid"] = {{"grid_n", opt.grid},
                         {"queries", bh_queries},
                         {"disagreements", bh_bad},
                         {"certified_by_disc", bh_certified}};
  o.result["bh_algorithms"] = {{"over_tolerance", dc_bad}, {"worst_relative", worst_dc}};
  o.result["circumradius"] = {{"over_tolerance", circ_bad}, {"worst_absolute", worst_circ}};
  const bool ok = bi_bad == 0 && dc_bad == 0 && circ_bad == 0 && bh_bad == bh_certified;
  o.result["status"] = ok ? "ok" : "mismatch";
  o.result["timing"] = {{"seconds", t.seconds()}};
  o.code = ok ? 0 : 2;
  return o;
}

int emit(const Options& opt, const Outcome& o, std::ostream& out) {
  const std::string text = o.result.dump(2) + "\n";
  if (opt.output.empty()) {
    out << text;
  } else {
    io::write_file(opt.output, text);
  }
  if (!opt.svg.empty() && o.result.contains("instance")) {
    io::write_file(opt.svg, io::render_svg(o.result, opt.samples));
  }
  return o.code;
}

int run_render(const Options& opt, std::ostream& out) {
  const std::string text = io::read_file(opt.input);
  Json result;
  try {
    result = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw io::InputError(opt.input + ": " + e.what());
  }
  if (result.contains("boundary") && result.contains("instance")) {
    const auto inst = io::parse_instance(result["instance"].dump());
    const auto b = io::boundary_from_json(inst.plane, result["boundary"]);
    if (b.is_region()) {
      const auto problems = check_boundary(inst.plane, b, opt.samples);
      if (!problems.empty()) throw io::InputError("boundary: " + problems.front());
    }
  }
  const std::string svg = io::render_svg(result, opt.samples);
  const std::string& dest = !opt.svg.empty() ? opt.svg : opt.output;
  if (dest.empty()) {
    out << svg;
  } else {
    io::write_file(dest, svg);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ball hulls, ball intersections, Chebyshev sets and constrained 2-centers in Lp planes"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", opt.input, "Instance (JSON or \"x y\" lines) or result file");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    sub->add_option("--output", opt.output, "Result file (stdout when omitted)");
    sub->add_option("--svg", opt.svg, "Also write an SVG figure");
    sub->add_option("--tol", opt.tol, "Relative tolerance of the circumradius bisection")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--samples-per-arc", opt.samples, "Polyline samples per arc")
        ->capture_default_str()
        ->check(CLI::Range(1, 1 << 20));
    sub->add_option("--norm-p", opt.norm_p, "Exponent of the Lp norm (overrides the input)");
    sub->add_option("--lambda", opt.lambda, "Disc radius");
    sub->add_option("--r", opt.r, "Radius of the big disc (two-center)");
    sub->add_option("--lambda2", opt.lambda2, "Radius of the small disc (two-center)");
  };

  auto* bi = app.add_subcommand("bi", "Ball intersection of the radius-lambda discs centered at the points");
  auto* bh = app.add_subcommand("bh", "Ball hull via the vertices of the ball intersection");
  auto* bh_dc = app.add_subcommand("bh-dc", "Ball hull by divide and conquer");
  auto* cheb = app.add_subcommand("chebyshev", "Circumradius, diameter and Chebyshev set");
  auto* two = app.add_subcommand("two-center", "Constrained 2-center decision");
  auto* check = app.add_subcommand("oracle-check", "Compare fast algorithms with brute-force oracles");
  auto* render = app.add_subcommand("render", "Render a result file as SVG");
  for (auto* sub : {bi, bh, bh_dc, cheb, two, render}) add_common(sub, true);
  add_common(check, false);
  check->add_option("--seed", opt.seed, "Seed of the instance generator")->capture_default_str();
  check->add_option("--count", opt.count, "Number of random instances")->capture_default_str();
  check->add_option("--grid", opt.grid, "Grid size of the ball hull oracle")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (render->parsed()) return run_render(opt, out);
    Outcome o;
    if (bi->parsed()) o = run_bi(opt);
    if (bh->parsed()) o = run_bh(opt, HullAlgorithm::ViaBi);
    if (bh_dc->parsed()) o = run_bh(opt, HullAlgorithm::DivideConquer);
    if (cheb->parsed()) o = run_chebyshev(opt);
    if (two->parsed()) o = run_two_center(opt);
    if (check->parsed()) o = run_oracle_check(opt);
    return emit(opt, o, out);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const GeometryError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ballhull::cli
