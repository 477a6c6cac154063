#include "nikodym/svg.hpp"

#include <sstream>

namespace nikodym {

namespace {

const Rational kScale(kSvgSize);

std::string sx(const Rational& x) { return (x * kScale).fixed(kSvgPlaces); }
std::string sy(const Rational& y) { return ((Rational(1) - y) * kScale).fixed(kSvgPlaces); }

void emit_polygon(std::ostringstream& out, const ConvexPolygon& p, const char* cls) {
  out << "    <polygon class=\"" << cls << "\" points=\"";
  bool first = true;
  for (const Point& v : p.vertices()) {
    if (!first) out << ' ';
    out << sx(v.x) << ',' << sy(v.y);
    first = false;
  }
  out << "\"/>\n";
}

}  // namespace

std::string render_svg(const Family& f) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kSvgSize << ' ' << kSvgSize << "\" width=\""
      << kSvgSize << "\" height=\"" << kSvgSize << "\">\n"
      << "  <title>parallelogram families, n = " << f.n() << "</title>\n"
      << "  <style>\n"
      << "    .square { fill: none; stroke: #222; stroke-width: 2; }\n"
      << "    .q { fill: #1f77b4; fill-opacity: 0.45; stroke: none; }\n"
      << "    .r { fill: #d62728; fill-opacity: 0.45; stroke: none; }\n"
      << "    .cover { stroke: #2ca02c; stroke-width: 8; }\n"
      << "  </style>\n"
      << "  <rect class=\"square\" x=\"0\" y=\"0\" width=\"" << kSvgSize << "\" height=\"" << kSvgSize << "\"/>\n";

  out << "  <g id=\"q-family\">\n";
  for (const auto& p : f.q_polygons()) emit_polygon(out, p, "q");
  out << "  </g>\n  <g id=\"r-family\">\n";
  for (const auto& p : f.r_polygons()) emit_polygon(out, p, "r");
  out << "  </g>\n";

  const CoverInterval cover = left_cover_interval(f);
  out << "  <line class=\"cover\" x1=\"0\" y1=\"" << sy(cover.lo) << "\" x2=\"0\" y2=\"" << sy(cover.hi) << "\"/>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace nikodym
