#pragma once

// Exact 2-D pictures of hemispaces. The plane is cut by every line on which
// membership can change, the window is split into vertical slabs at every
// crossing, and each slab into trapezoids. Cells, boundary edges and
// vertices each carry a membership flag evaluated at an exact rational
// point, so the picture is exact rather than sampled.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tropical/spec_io.hpp"

namespace tropical::cli {

struct RenderConfig {
  // Upper window corner. Max-times windows start at 0; max-plus windows are
  // symmetric around 0 because zero (-inf) cannot be drawn.
  std::optional<mpq_class> xmax, ymax;
  // Pixels per unit; 0 picks a size near 400 pixels.
  unsigned resolution = 0;
  bool show_complement = true;
  bool show_boundary_ownership = true;

  // Throws std::invalid_argument for a non-positive window or a resolution
  // in 1..15.
  void validate() const;
};

struct Point {
  mpq_class x, y;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// y = slope * x + intercept, or x = at when vertical.
struct Line {
  bool vertical = false;
  mpq_class slope, intercept, at;

  mpq_class y_at(const mpq_class& x) const { return slope * x + intercept; }
  friend bool operator==(const Line& a, const Line& b) {
    return a.vertical == b.vertical && a.slope == b.slope && a.intercept == b.intercept && a.at == b.at;
  }
};

struct Cell {
  std::vector<Point> polygon;  // counterclockwise
  Point sample;
  bool member = false;
};

struct Edge {
  Point a, b;
  bool member = false;
  // Differs from a neighbouring cell; only these are drawn.
  bool boundary = false;
};

struct Vertex {
  Point p;
  bool member = false;
  bool drawn = false;
};

struct Scene {
  Model model = Model::MaxTimes;
  mpq_class xlo, xhi, ylo, yhi;
  std::vector<Line> lines;  // boundary candidates, window sides excluded
  std::vector<Cell> cells;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
};

// Needs a conical spec of dimension 2 or an affine one of ambient
// dimension 2; throws SpecError otherwise.
Scene build_scene(const SpecFile& spec, const RenderConfig& config);

// Plane point to tropical vector: max-times 0 is zero.
Vec to_vec(Model model, const Point& p);

// Membership of p as read from the picture: the flag of the vertex, edge or
// cell containing p. Nullopt outside the window.
std::optional<bool> scene_member(const Scene& scene, const Point& p);

// Colour painted at p: a drawn vertex, else a drawn edge, else the cell.
std::optional<std::string> scene_color(const Scene& scene, const Point& p, const RenderConfig& config);

// Which side a colour from scene_color stands for.
std::optional<bool> color_member(const std::string& color, const RenderConfig& config);

// SVG 1.1 document; deterministic for fixed inputs.
std::string render_svg(const Scene& scene, const RenderConfig& config, const std::string& title);

}  // namespace tropical::cli
