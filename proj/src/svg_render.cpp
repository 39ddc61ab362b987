#include "wimlab/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "wimlab/errors.hpp"

namespace wimlab {

namespace {

constexpr double kHexSide = 30.0;
constexpr double kGridCell = 30.0;
constexpr double kMargin = 40.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void append_line(std::string& svg, const char* cls, double x1, double y1, double x2,
                 double y2) {
  svg += "<line class=\"" + std::string(cls) + "\" x1=\"" + fmt(x1) + "\" y1=\"" +
         fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" + fmt(y2) + "\"/>\n";
}

void append_text(std::string& svg, const char* cls, double x, double y,
                 const std::string& text) {
  svg += "<text class=\"" + std::string(cls) + "\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
         "\">" + text + "</text>\n";
}

}  // namespace

std::string render_kekule_svg(const KekuleStructure& structure) {
  if (!structure.graph) {
    throw ValidationError("render_kekule_svg: null graph");
  }
  const BenzenoidGraph& graph = *structure.graph;
  if (!is_kekule(graph, structure.selected)) {
    throw ValidationError("render_kekule_svg: edge set is not a perfect matching");
  }

  // One x2 unit is half a hexagon width, one y unit half a side.
  const double ux = std::sqrt(3.0) / 2.0 * kHexSide;
  const double uy = kHexSide / 2.0;
  int min_x2 = std::numeric_limits<int>::max();
  int min_y = std::numeric_limits<int>::max();
  int max_x2 = std::numeric_limits<int>::min();
  int max_y = std::numeric_limits<int>::min();
  for (const PlanarCoord& c : graph.coords()) {
    min_x2 = std::min(min_x2, c.x2);
    min_y = std::min(min_y, c.y);
    max_x2 = std::max(max_x2, c.x2);
    max_y = std::max(max_y, c.y);
  }
  auto px = [&](const PlanarCoord& c) { return kMargin + (c.x2 - min_x2) * ux; };
  auto py = [&](const PlanarCoord& c) { return kMargin + (c.y - min_y) * uy; };
  const double width = 2 * kMargin + (max_x2 - min_x2) * ux;
  const double height = 2 * kMargin + (max_y - min_y) * uy;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
         fmt(height) + "\">\n";
  svg += "<style>\n"
         ".hex{fill:#f7f3e8;stroke:none}\n"
         ".edge{stroke:#444444;stroke-width:1.5}\n"
         ".bond{stroke:#b02020;stroke-width:2}\n"
         ".vbar-label{font:11px monospace;fill:#1030a0;text-anchor:middle}\n"
         "</style>\n";

  for (const Hexagon& hex : graph.hexagons()) {
    svg += "<polygon class=\"hex\" points=\"";
    for (size_t c = 0; c < hex.corners.size(); ++c) {
      const PlanarCoord& coord = graph.coords()[static_cast<size_t>(hex.corners[c])];
      if (c > 0) {
        svg += ' ';
      }
      svg += fmt(px(coord)) + "," + fmt(py(coord));
    }
    svg += "\"/>\n";
  }

  for (const BenzEdge& e : graph.edges()) {
    const PlanarCoord& a = graph.coords()[static_cast<size_t>(e.u)];
    const PlanarCoord& b = graph.coords()[static_cast<size_t>(e.v)];
    append_line(svg, "edge", px(a), py(a), px(b), py(b));
  }

  // Selected edges become triple parallel strokes offset along the edge
  // normal.
  const double offset = 3.0;
  for (int id : structure.selected) {
    const BenzEdge& e = graph.edges()[static_cast<size_t>(id)];
    const PlanarCoord& a = graph.coords()[static_cast<size_t>(e.u)];
    const PlanarCoord& b = graph.coords()[static_cast<size_t>(e.v)];
    const double x1 = px(a), y1 = py(a), x2 = px(b), y2 = py(b);
    const double len = std::hypot(x2 - x1, y2 - y1);
    const double nx = -(y2 - y1) / len;
    const double ny = (x2 - x1) / len;
    for (int s = -1; s <= 1; ++s) {
      append_line(svg, "bond", x1 + s * offset * nx, y1 + s * offset * ny,
                  x2 + s * offset * nx, y2 + s * offset * ny);
    }
  }

  for (int id : structure.selected) {
    const BenzEdge& e = graph.edges()[static_cast<size_t>(id)];
    if (e.kind != EdgeKind::kVertical) {
      continue;
    }
    const PlanarCoord& a = graph.coords()[static_cast<size_t>(e.u)];
    const PlanarCoord& b = graph.coords()[static_cast<size_t>(e.v)];
    const std::string label =
        "(" + std::to_string(e.row) + "," + std::to_string(e.index) + ")";
    append_text(svg, "vbar-label", (px(a) + px(b)) / 2.0 - 14.0,
                (py(a) + py(b)) / 2.0 + 4.0, label);
  }

  svg += "</svg>\n";
  return svg;
}

std::string render_paths_svg(const PathTuple& tuple) {
  if (tuple.paths.empty()) {
    throw ValidationError("render_paths_svg: empty tuple");
  }
  int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  std::vector<std::vector<GridPoint>> all_vertices;
  for (const LatticePath& path : tuple.paths) {
    all_vertices.push_back(path.vertices());
    for (const GridPoint& v : all_vertices.back()) {
      min_x = std::min(min_x, v.x);
      min_y = std::min(min_y, v.y);
      max_x = std::max(max_x, v.x);
      max_y = std::max(max_y, v.y);
    }
  }
  --min_x;
  --min_y;
  ++max_x;
  ++max_y;
  auto px = [&](int x) { return kMargin + (x - min_x) * kGridCell; };
  auto py = [&](int y) { return kMargin + (max_y - y) * kGridCell; };
  const double width = 2 * kMargin + (max_x - min_x) * kGridCell;
  const double height = 2 * kMargin + (max_y - min_y) * kGridCell;

  static const char* kPalette[] = {"#b02020", "#2050b0", "#208040",
                                   "#806010", "#603080", "#108080"};

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
         fmt(height) + "\">\n";
  svg += "<style>\n"
         ".grid{stroke:#999999;stroke-width:1;stroke-dasharray:2,4}\n"
         ".path{fill:none;stroke-width:4;stroke-linecap:round;stroke-linejoin:round}\n"
         ".endpoint-label{font:13px monospace;fill:#202020}\n"
         "</style>\n";

  for (int x = min_x; x <= max_x; ++x) {
    append_line(svg, "grid", px(x), py(max_y), px(x), py(min_y));
  }
  for (int y = min_y; y <= max_y; ++y) {
    append_line(svg, "grid", px(min_x), py(y), px(max_x), py(y));
  }

  for (size_t i = 0; i < tuple.paths.size(); ++i) {
    svg += "<polyline class=\"path\" stroke=\"";
    svg += kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg += "\" points=\"";
    for (size_t v = 0; v < all_vertices[i].size(); ++v) {
      if (v > 0) {
        svg += ' ';
      }
      svg += fmt(px(all_vertices[i][v].x)) + "," + fmt(py(all_vertices[i][v].y));
    }
    svg += "\"/>\n";
  }

  for (size_t i = 0; i < tuple.paths.size(); ++i) {
    const GridPoint a = tuple.paths[i].start;
    const GridPoint b = tuple.paths[i].end();
    append_text(svg, "endpoint-label", px(a.x) - 24.0, py(a.y) + 14.0,
                "a" + std::to_string(i + 1));
    append_text(svg, "endpoint-label", px(b.x) + 8.0, py(b.y) - 8.0,
                "b" + std::to_string(i + 1));
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace wimlab
