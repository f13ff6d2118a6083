#include "tropical_cli/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace tropical::cli {

namespace {

const char* kInFill = "#9ecae1";
const char* kOutFill = "#fdd0a2";
const char* kInStroke = "#08519c";
const char* kOutStroke = "#a63603";
const char* kBlank = "#ffffff";
const char* kNeutral = "#808080";

Line horizontal(const mpq_class& y) { return Line{false, 0, y, 0}; }
Line vertical(const mpq_class& x) { return Line{true, 0, 0, x}; }
Line sloped(const mpq_class& m, const mpq_class& c) { return Line{false, m, c, 0}; }

// The line x_j = t ⊗ x_i in plane coordinates; index 2 is the homogenizing
// coordinate, fixed at the unit.
Line boundary_line(Model model, std::size_t i, std::size_t j, const mpq_class& t) {
  if (model == Model::MaxTimes) {
    if (i == 2) return j == 0 ? vertical(t) : horizontal(t);
    if (j == 2) return i == 0 ? vertical(1 / t) : horizontal(1 / t);
    return i == 0 ? sloped(t, 0) : sloped(1 / t, 0);
  }
  if (i == 2) return j == 0 ? vertical(t) : horizontal(t);
  if (j == 2) return i == 0 ? vertical(-t) : horizontal(-t);
  return i == 0 ? sloped(1, t) : sloped(1, -t);
}

std::optional<Point> intersect(const Line& a, const Line& b) {
  if (a.vertical && b.vertical) return std::nullopt;
  if (a.vertical) return Point{a.at, b.y_at(a.at)};
  if (b.vertical) return Point{b.at, a.y_at(b.at)};
  if (a.slope == b.slope) return std::nullopt;
  mpq_class x = (b.intercept - a.intercept) / (a.slope - b.slope);
  return Point{x, a.y_at(x)};
}

mpq_class cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool in_polygon(const Point& p, const std::vector<Point>& poly) {
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (cross(poly[k], poly[(k + 1) % poly.size()], p) < 0) return false;
  }
  return true;
}

bool in_window(const Scene& s, const Point& p) {
  return s.xlo <= p.x && p.x <= s.xhi && s.ylo <= p.y && p.y <= s.yhi;
}

Point canonical(Point p) {
  p.x.canonicalize();
  p.y.canonicalize();
  return p;
}

using PlaneMember = std::function<bool(const Point&)>;

struct SlabCell {
  std::size_t cell;
  Line lower, upper;
};

struct Slab {
  mpq_class a, b;
  std::vector<SlabCell> cells;
};

// The cell of slab s whose side at x = c contains (c, y) in its interior.
std::optional<std::size_t> cell_at_side(const Slab& s, const mpq_class& c, const mpq_class& y) {
  for (const auto& sc : s.cells) {
    if (sc.lower.y_at(c) < y && y < sc.upper.y_at(c)) return sc.cell;
  }
  return std::nullopt;
}

void auto_window(Scene& s, const RenderConfig& config) {
  std::vector<mpq_class> coords;
  for (const auto& l : s.lines) {
    if (l.vertical) coords.push_back(l.at);
    else if (l.slope == 0) coords.push_back(l.intercept);
  }
  for (std::size_t a = 0; a < s.lines.size(); ++a) {
    for (std::size_t b = a + 1; b < s.lines.size(); ++b) {
      if (auto p = intersect(s.lines[a], s.lines[b])) {
        coords.push_back(p->x);
        coords.push_back(p->y);
      }
    }
  }
  mpq_class extent = 1;
  for (const auto& c : coords) extent = std::max(extent, mpq_class(abs(c)));
  extent *= 2;
  const mpq_class xmax = config.xmax.value_or(extent);
  const mpq_class ymax = config.ymax.value_or(extent);
  s.xhi = xmax;
  s.yhi = ymax;
  s.xlo = s.model == Model::MaxTimes ? mpq_class(0) : mpq_class(-xmax);
  s.ylo = s.model == Model::MaxTimes ? mpq_class(0) : mpq_class(-ymax);
}

Scene build(Model model, std::vector<Line> lines, const PlaneMember& member, const RenderConfig& config) {
  Scene s;
  s.model = model;
  for (const auto& l : lines) {
    if (std::find(s.lines.begin(), s.lines.end(), l) == s.lines.end()) s.lines.push_back(l);
  }
  auto_window(s, config);

  std::vector<Line> all = s.lines;
  for (const Line& w : {vertical(s.xlo), vertical(s.xhi), horizontal(s.ylo), horizontal(s.yhi)}) {
    if (std::find(all.begin(), all.end(), w) == all.end()) all.push_back(w);
  }

  std::set<mpq_class> breaks{s.xlo, s.xhi};
  std::vector<Point> crossings;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      auto p = intersect(all[a], all[b]);
      if (!p || !in_window(s, *p)) continue;
      breaks.insert(p->x);
      if (std::find(crossings.begin(), crossings.end(), *p) == crossings.end()) crossings.push_back(*p);
    }
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const Point& p, const Point& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });

  std::vector<Line> flat;
  for (const auto& l : all) {
    if (!l.vertical) flat.push_back(l);
  }

  std::vector<Slab> slabs;
  std::vector<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> edge_sides;
  const std::vector<mpq_class> xs(breaks.begin(), breaks.end());
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    Slab slab{xs[k], xs[k + 1], {}};
    const mpq_class mid = (slab.a + slab.b) / 2;
    std::vector<Line> here;
    for (const auto& l : flat) {
      mpq_class y = l.y_at(mid);
      if (s.ylo <= y && y <= s.yhi) here.push_back(l);
    }
    std::sort(here.begin(), here.end(), [&](const Line& p, const Line& q) { return p.y_at(mid) < q.y_at(mid); });
    for (std::size_t c = 0; c + 1 < here.size(); ++c) {
      const Line& lo = here[c];
      const Line& hi = here[c + 1];
      std::vector<Point> poly;
      for (const Point& p : {Point{slab.a, lo.y_at(slab.a)}, Point{slab.b, lo.y_at(slab.b)},
                             Point{slab.b, hi.y_at(slab.b)}, Point{slab.a, hi.y_at(slab.a)}}) {
        if (poly.empty() || !(poly.back() == p)) poly.push_back(p);
      }
      if (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
      Point sample{mid, (lo.y_at(mid) + hi.y_at(mid)) / 2};
      slab.cells.push_back({s.cells.size(), lo, hi});
      s.cells.push_back({std::move(poly), sample, member(sample)});
    }
    for (std::size_t c = 0; c < here.size(); ++c) {
      const Line& l = here[c];
      s.edges.push_back({{slab.a, l.y_at(slab.a)}, {slab.b, l.y_at(slab.b)}, member({mid, l.y_at(mid)}), false});
      std::optional<std::size_t> below, above;
      if (c > 0) below = slab.cells[c - 1].cell;
      if (c + 1 < here.size()) above = slab.cells[c].cell;
      edge_sides.emplace_back(below, above);
    }
    slabs.push_back(std::move(slab));
  }

  for (const auto& v : all) {
    if (!v.vertical) continue;
    std::set<mpq_class> ys;
    for (const auto& l : flat) {
      mpq_class y = l.y_at(v.at);
      if (s.ylo <= y && y <= s.yhi) ys.insert(y);
    }
    const std::vector<mpq_class> yv(ys.begin(), ys.end());
    for (std::size_t k = 0; k + 1 < yv.size(); ++k) {
      const mpq_class ym = (yv[k] + yv[k + 1]) / 2;
      s.edges.push_back({{v.at, yv[k]}, {v.at, yv[k + 1]}, member({v.at, ym}), false});
      std::optional<std::size_t> left, right;
      for (const auto& slab : slabs) {
        if (slab.b == v.at) left = cell_at_side(slab, v.at, ym);
        if (slab.a == v.at) right = cell_at_side(slab, v.at, ym);
      }
      edge_sides.emplace_back(left, right);
    }
  }

  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    Edge& edge = s.edges[e];
    for (const auto& side : {edge_sides[e].first, edge_sides[e].second}) {
      if (side && s.cells[*side].member != edge.member) edge.boundary = true;
    }
    const auto& [p, q] = edge_sides[e];
    if (p && q && s.cells[*p].member != s.cells[*q].member) edge.boundary = true;
  }

  for (const auto& p : crossings) {
    // Drawn only where the strokes and fills around it would paint the
    // wrong side.
    Vertex v{p, member(p), false};
    bool on_stroke = false, differs_stroke = false, differs_any = false;
    for (const auto& e : s.edges) {
      if (!(e.a == p || e.b == p)) continue;
      differs_any |= e.member != v.member;
      if (e.boundary) {
        on_stroke = true;
        differs_stroke |= e.member != v.member;
      }
    }
    for (const auto& c : s.cells) {
      if (std::find(c.polygon.begin(), c.polygon.end(), p) != c.polygon.end()) differs_any |= c.member != v.member;
    }
    v.drawn = on_stroke ? differs_stroke : differs_any;
    s.vertices.push_back(v);
  }
  return s;
}

std::string fill_color(bool member, const RenderConfig& config) {
  if (member) return kInFill;
  return config.show_complement ? kOutFill : kBlank;
}

std::string stroke_color(bool member, const RenderConfig& config) {
  if (!config.show_boundary_ownership) return kNeutral;
  return member ? kInStroke : kOutStroke;
}

std::string vertex_color(bool member) { return member ? kInStroke : kBlank; }

}  // namespace

void RenderConfig::validate() const {
  if (xmax && *xmax <= 0) throw std::invalid_argument("window width must be positive");
  if (ymax && *ymax <= 0) throw std::invalid_argument("window height must be positive");
  if (resolution != 0 && resolution < 16) throw std::invalid_argument("resolution must be at least 16");
}

Vec to_vec(Model model, const Point& p) {
  auto coord = [&](const mpq_class& v) {
    if (model == Model::MaxTimes && v == 0) return Scalar::zero(model);
    return Scalar::finite(model, v);
  };
  return Vec(model, {coord(p.x), coord(p.y)});
}

Scene build_scene(const SpecFile& spec, const RenderConfig& config) {
  config.validate();
  const Model model = spec.raw.model;
  std::vector<Line> lines;
  for (const auto& [key, s] : spec.raw.sigma) {
    if (s.threshold().is_finite()) lines.push_back(boundary_line(model, key.first, key.second, s.threshold().value()));
  }
  if (spec.affine()) {
    if (spec.raw.dim != 3) throw SpecError("render2d needs an affine spec with n = 2");
    AffineHemispace h = AffineHemispace::make(HemispaceSpec::validate(spec.raw), *spec.contains_zero);
    return build(model, std::move(lines), [h, model](const Point& p) { return affine_member(h, to_vec(model, p)); },
                 config);
  }
  if (spec.raw.dim != 2) throw SpecError("render2d needs a conical spec with n = 2");
  HemispaceSpec v = HemispaceSpec::validate(spec.raw);
  return build(model, std::move(lines), [v, model](const Point& p) { return conical_member(v, to_vec(model, p)); },
               config);
}

std::optional<bool> scene_member(const Scene& scene, const Point& raw) {
  const Point p = canonical(raw);
  if (!in_window(scene, p)) return std::nullopt;
  for (const auto& v : scene.vertices) {
    if (v.p == p) return v.member;
  }
  for (const auto& e : scene.edges) {
    if (on_segment(p, e.a, e.b)) return e.member;
  }
  for (const auto& c : scene.cells) {
    if (in_polygon(p, c.polygon)) return c.member;
  }
  return std::nullopt;
}

std::optional<std::string> scene_color(const Scene& scene, const Point& raw, const RenderConfig& config) {
  const Point p = canonical(raw);
  if (!in_window(scene, p)) return std::nullopt;
  for (const auto& v : scene.vertices) {
    if (v.drawn && v.p == p) return vertex_color(v.member);
  }
  for (const auto& e : scene.edges) {
    if (e.boundary && on_segment(p, e.a, e.b)) return stroke_color(e.member, config);
  }
  for (const auto& c : scene.cells) {
    if (in_polygon(p, c.polygon)) return fill_color(c.member, config);
  }
  return std::nullopt;
}

std::optional<bool> color_member(const std::string& color, const RenderConfig& config) {
  if (color == kInFill || (config.show_boundary_ownership && color == kInStroke)) return true;
  if (color == kOutFill || color == kBlank || (config.show_boundary_ownership && color == kOutStroke)) return false;
  return std::nullopt;
}

std::string render_svg(const Scene& scene, const RenderConfig& config, const std::string& title) {
  auto d = [](const mpq_class& v) { return v.get_d(); };
  const double span = std::max(d(scene.xhi - scene.xlo), d(scene.yhi - scene.ylo));
  const double res = config.resolution ? config.resolution : std::max(16.0, std::ceil(400.0 / span));
  const double margin = 30;
  const double width = d(scene.xhi - scene.xlo) * res + 2 * margin;
  const double height = d(scene.yhi - scene.ylo) * res + 2 * margin;
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  auto px = [&](const Point& p) {
    return num(margin + d(p.x - scene.xlo) * res) + "," + num(margin + d(scene.yhi - p.y) * res);
  };
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '<') out += "&lt;";
      else if (c == '>') out += "&gt;";
      else if (c == '&') out += "&amp;";
      else out += c;
    }
    return out;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
      << "<title>" << escape(title) << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"" << kBlank << "\"/>\n<g id=\"cells\" stroke=\"none\">\n";
  for (const auto& c : scene.cells) {
    svg << "<polygon points=\"";
    for (std::size_t k = 0; k < c.polygon.size(); ++k) svg << (k ? " " : "") << px(c.polygon[k]);
    svg << "\" fill=\"" << fill_color(c.member, config) << "\"/>\n";
  }
  svg << "</g>\n<g id=\"boundary\" stroke-width=\"2.5\" fill=\"none\">\n";
  for (const auto& e : scene.edges) {
    if (!e.boundary) continue;
    svg << "<polyline points=\"" << px(e.a) << " " << px(e.b) << "\" stroke=\"" << stroke_color(e.member, config)
        << "\"";
    if (config.show_boundary_ownership && !e.member) svg << " stroke-dasharray=\"6,4\"";
    svg << "/>\n";
  }
  svg << "</g>\n<g id=\"vertices\" stroke-width=\"1.5\">\n";
  for (const auto& v : scene.vertices) {
    if (!v.drawn) continue;
    const std::string c = px(v.p);
    const auto comma = c.find(',');
    svg << "<circle cx=\"" << c.substr(0, comma) << "\" cy=\"" << c.substr(comma + 1) << "\" r=\"3.5\" fill=\""
        << vertex_color(v.member) << "\" stroke=\"" << stroke_color(v.member, config) << "\"/>\n";
  }
  svg << "</g>\n<g id=\"axes\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
  svg << "<text x=\"" << num(margin) << "\" y=\"" << num(height - margin + 14) << "\">" << scene.xlo.get_str()
      << "</text>\n"
      << "<text x=\"" << num(width - margin) << "\" y=\"" << num(height - margin + 14)
      << "\" text-anchor=\"end\">x1 = " << scene.xhi.get_str() << "</text>\n"
      << "<text x=\"" << num(margin - 4) << "\" y=\"" << num(margin + 4) << "\" text-anchor=\"end\">"
      << scene.yhi.get_str() << "</text>\n"
      << "<text x=\"" << num(margin) << "\" y=\"" << num(margin - 8) << "\">x2</text>\n"
      << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace tropical::cli
