#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballhull/chains.hpp"

namespace ballhull::io {

using Json = nlohmann::ordered_json;

/// Malformed instance or result file; the message names the line or field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  NormPlane plane;
  std::vector<Point> points;
  std::optional<double> lambda;
  std::optional<double> r;
  std::optional<double> lambda2;
};

/// Parses a JSON instance document:
/// {"norm": {"type": "lp", "p": 2}, "points": [[x, y], ...], "lambda": 1, "r": .., "lambda2": ..}
Instance parse_instance(const std::string& text);

/// Plain text: one "x y" pair per line, '#' starts a comment. Norm and radii
/// come from the caller.
std::vector<Point> parse_point_lines(const std::string& text);

/// Either format, chosen by the first non-blank character ('{' means JSON).
Instance read_instance(const std::string& path);

Json instance_to_json(const Instance& instance);
Json point_to_json(Point p);

/// {"type": "empty" | "single_point" | "region", "point": .., "arcs": [..], "vertices": [..]}
/// Arcs are the maximal boundary arcs, counterclockwise from the leftmost point.
Json boundary_to_json(const ChainBoundary& boundary);

/// Rebuilds a boundary from boundary_to_json output.
ChainBoundary boundary_from_json(const NormPlane& plane, const Json& j);

/// Counterclockwise arcs stored in a boundary record, exactly as written.
std::vector<ArcWithCenter> arcs_from_json(const Json& j);

/// Renders a result document (instance echo plus optional boundary) as SVG.
/// Layers: input points, one boundary polyline per arc with samples + 1
/// points, vertices, arc centers.
std::string render_svg(const Json& result, int samples_per_arc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ballhull::io
