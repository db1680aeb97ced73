#include "ballhull/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ballhull/error.hpp"

namespace ballhull::io {

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

double number_field(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(where + ": not finite");
  return v;
}

Point point_field(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected [x, y]");
  return {number_field(j[0], where + "[0]"), number_field(j[1], where + "[1]")};
}

std::optional<double> positive_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  const double v = number_field(doc[key], key);
  if (!(v > 0.0)) throw InputError(std::string(key) + ": must be positive");
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

Json point_to_json(Point p) { return Json::array({p.x, p.y}); }

Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("line 1: expected a JSON object");

  Instance inst;
  if (!doc.contains("norm")) throw InputError("norm: missing");
  const Json& norm = doc["norm"];
  if (!norm.is_object()) throw InputError("norm: expected an object");
  if (!norm.contains("type") || norm["type"] != "lp") throw InputError("norm.type: expected \"lp\"");
  if (!norm.contains("p")) throw InputError("norm.p: missing");
  inst.plane = NormPlane::lp(number_field(norm["p"], "norm.p"));
  try {
    validate_plane(inst.plane);
  } catch (const GeometryError& e) {
    throw InputError(std::string("norm.p: ") + e.what());
  }

  if (!doc.contains("points")) throw InputError("points: missing");
  const Json& pts = doc["points"];
  if (!pts.is_array() || pts.empty()) throw InputError("points: expected a non-empty array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    inst.points.push_back(point_field(pts[i], "points[" + std::to_string(i) + "]"));
  }
  inst.lambda = positive_field(doc, "lambda");
  inst.r = positive_field(doc, "r");
  inst.lambda2 = positive_field(doc, "lambda2");
  return inst;
}

std::vector<Point> parse_point_lines(const std::string& text) {
  std::vector<Point> out;
  std::istringstream in(text);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double x, y;
    if (!(row >> x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InputError("line " + std::to_string(no) + ": expected \"x y\"");
    }
    std::string rest;
    if (!(row >> y) || (row >> rest) || !std::isfinite(x) || !std::isfinite(y)) {
      throw InputError("line " + std::to_string(no) + ": expected \"x y\"");
    }
    out.push_back({x, y});
  }
  if (out.empty()) throw InputError("no points in input");
  return out;
}

Instance read_instance(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_instance(text);
  Instance inst;
  inst.points = parse_point_lines(text);
  return inst;
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["norm"] = {{"type", "lp"}, {"p", inst.plane.p}};
  j["points"] = Json::array();
  for (const Point& p : inst.points) j["points"].push_back(point_to_json(p));
  if (inst.lambda) j["lambda"] = *inst.lambda;
  if (inst.r) j["r"] = *inst.r;
  if (inst.lambda2) j["lambda2"] = *inst.lambda2;
  return j;
}

Json boundary_to_json(const ChainBoundary& b) {
  Json j;
  switch (b.kind) {
    case BoundaryKind::Empty:
      j["type"] = "empty";
      return j;
    case BoundaryKind::SinglePoint:
      j["type"] = "single_point";
      j["point"] = point_to_json(b.point);
      return j;
    case BoundaryKind::Region:
      break;
  }
  j["type"] = "region";
  j["arcs"] = Json::array();
  for (const auto& a : boundary_arcs(b)) {
    j["arcs"].push_back({{"center", point_to_json(a.arc.center)},
                         {"radius", a.arc.radius},
                         {"theta_start", a.arc.theta_start},
                         {"theta_end", a.arc.theta_end},
                         {"endpoints", Json::array({point_to_json(a.arc.start), point_to_json(a.arc.end)})},
                         {"generating_center", point_to_json(a.generating_center)}});
  }
  j["vertices"] = Json::array();
  for (const Point& v : b.vertices) j["vertices"].push_back(point_to_json(v));
  return j;
}

std::vector<ArcWithCenter> arcs_from_json(const Json& j) {
  std::vector<ArcWithCenter> out;
  if (!j.contains("arcs")) return out;
  const Json& arcs = j["arcs"];
  if (!arcs.is_array()) throw InputError("boundary.arcs: expected an array");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "boundary.arcs[" + std::to_string(i) + "]";
    const Json& a = arcs[i];
    if (!a.is_object()) throw InputError(where + ": expected an object");
    for (const char* key : {"center", "radius", "theta_start", "theta_end", "endpoints",
                            "generating_center"}) {
      if (!a.contains(key)) throw InputError(where + "." + key + ": missing");
    }
    const Json& ends = a["endpoints"];
    if (!ends.is_array() || ends.size() != 2) throw InputError(where + ".endpoints: expected two points");
    ArcWithCenter rec;
    rec.arc.center = point_field(a["center"], where + ".center");
    rec.arc.radius = number_field(a["radius"], where + ".radius");
    rec.arc.theta_start = number_field(a["theta_start"], where + ".theta_start");
    rec.arc.theta_end = number_field(a["theta_end"], where + ".theta_end");
    rec.arc.start = point_field(ends[0], where + ".endpoints[0]");
    rec.arc.end = point_field(ends[1], where + ".endpoints[1]");
    rec.generating_center = point_field(a["generating_center"], where + ".generating_center");
    if (!(rec.arc.radius > 0.0)) throw InputError(where + ".radius: must be positive");
    out.push_back(rec);
  }
  return out;
}

ChainBoundary boundary_from_json(const NormPlane& plane, const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw InputError("boundary.type: missing");
  ChainBoundary b;
  if (j["type"] == "empty") return b;
  if (j["type"] == "single_point") {
    b.kind = BoundaryKind::SinglePoint;
    b.point = b.leftmost = b.rightmost = point_field(j["point"], "boundary.point");
    return b;
  }
  if (j["type"] != "region") throw InputError("boundary.type: unknown value");
  auto arcs = arcs_from_json(j);
  if (arcs.empty()) throw InputError("boundary.arcs: a region needs arcs");
  const double radius = arcs.front().arc.radius;
  return boundary_from_cycle(plane, radius, std::move(arcs));
}

std::string render_svg(const Json& result, int samples_per_arc) {
  if (samples_per_arc < 1) throw InputError("samples-per-arc must be >= 1");
  if (!result.contains("instance")) throw InputError("instance: missing");
  const Instance inst = parse_instance(result["instance"].dump());

  std::vector<std::vector<Point>> lines;
  std::vector<Point> vertices, centers;
  if (result.contains("boundary")) {
    const Json& b = result["boundary"];
    for (const auto& a : arcs_from_json(b)) {
      lines.push_back(arc_sample(inst.plane, a.arc, samples_per_arc));
      centers.push_back(a.generating_center);
    }
    if (b.contains("vertices")) {
      for (std::size_t i = 0; i < b["vertices"].size(); ++i) {
        vertices.push_back(point_field(b["vertices"][i], "boundary.vertices[" + std::to_string(i) + "]"));
      }
    }
    if (b.value("type", "") == "single_point") vertices.push_back(point_field(b["point"], "boundary.point"));
  }

  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  auto grow = [&](Point p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  };
  for (const Point& p : inst.points) grow(p);
  for (const auto& l : lines) std::for_each(l.begin(), l.end(), grow);
  for (const Point& p : centers) grow(p);
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double pad = 0.05 * span;
  const double dot = 0.006 * span;
  const double stroke = 0.002 * span;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(x0 - pad)
      << ' ' << fmt(-y1 - pad) << ' ' << fmt(x1 - x0 + 2 * pad) << ' ' << fmt(y1 - y0 + 2 * pad)
      << "\" width=\"800\" height=\"800\">\n";
  auto circles = [&](const char* id, const char* color, const std::vector<Point>& pts) {
    out << "  <g id=\"" << id << "\" fill=\"" << color << "\">\n";
    for (const Point& p : pts) {
      out << "    <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(-p.y) << "\" r=\"" << fmt(dot)
          << "\"/>\n";
    }
    out << "  </g>\n";
  };
  out << "  <g id=\"boundary\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"" << fmt(stroke)
      << "\">\n";
  for (const auto& l : lines) {
    out << "    <polyline points=\"";
    for (std::size_t i = 0; i < l.size(); ++i) {
      out << (i ? " " : "") << fmt(l[i].x) << ',' << fmt(-l[i].y);
    }
    out << "\"/>\n";
  }
  out << "  </g>\n";
  circles("points", "black", inst.points);
  circles("vertices", "crimson", vertices);
  circles("centers", "gray", centers);
  out << "</svg>\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << text;
}

}  // namespace ballhull::io
