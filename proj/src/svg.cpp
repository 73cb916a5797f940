#include "tropical/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace tropical {

namespace {

struct Pt {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

Pt to_pt(const AffinePoint2<Rat>& p) { return {to_double(p.x()), to_double(p.y())}; }

/// Keeps the part of `poly` where a*x + b*y <= c.
std::vector<Pt> clip(const std::vector<Pt>& poly, double a, double b, double c) {
  std::vector<Pt> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % n];
    const double fp = a * p.x + b * p.y - c;
    const double fq = a * q.x + b * q.y - c;
    if (fp <= 0) out.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      const double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(double min_x, double min_y, double max_x, double max_y, double width)
      : min_x_(min_x), max_y_(max_y), scale_(width / (max_x - min_x)), width_(width),
        height_((max_y - min_y) * scale_) {}

  double width() const { return width_; }
  double height() const { return height_; }
  std::string x(double v) const { return num((v - min_x_) * scale_); }
  std::string y(double v) const { return num((max_y_ - v) * scale_); }

  std::string points(const std::vector<Pt>& poly) const {
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) out += (i ? " " : "") + x(poly[i].x) + "," + y(poly[i].y);
    return out;
  }

 private:
  double min_x_, max_y_, scale_, width_, height_;
};

}  // namespace

std::string render_svg(const HullResult<Rat>& hull, std::span<const AffinePoint2<Rat>> points,
                       const SvgOptions& options) {
  if (hull.vertices.empty()) throw PreconditionError("render_svg: empty hull");

  std::vector<Pt> extent;
  for (const auto& p : points) extent.push_back(to_pt(p));
  for (const auto& p : hull.vertices) extent.push_back(to_pt(p));
  if (options.shade) extent.push_back(to_pt(to_chart2(options.shade->apex())));
  double min_x = extent[0].x, max_x = min_x, min_y = extent[0].y, max_y = min_y;
  for (const Pt& p : extent) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double pad_x = max_x > min_x ? 0.1 * (max_x - min_x) : 0.1 * span;
  const double pad_y = max_y > min_y ? 0.1 * (max_y - min_y) : 0.1 * span;
  min_x -= pad_x;
  max_x += pad_x;
  min_y -= pad_y;
  max_y += pad_y;
  const Canvas canvas(min_x, min_y, max_x, max_y, options.width);
  const std::vector<Pt> view = {{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(canvas.width())
      << "\" height=\"" << num(canvas.height()) << "\" viewBox=\"0 0 " << num(canvas.width()) << " "
      << num(canvas.height()) << "\">\n";

  if (options.shade) {
    const Pt a = to_pt(to_chart2(options.shade->apex()));
    const double skew_a = a.y - a.x;
    for (int k : options.shade->indices()) {
      std::vector<Pt> region = view;
      if (k == 0) {
        region = clip(clip(region, -1, 0, -a.x), 0, -1, -a.y);
      } else if (k == 1) {
        region = clip(clip(region, 1, 0, a.x), 1, -1, -skew_a);
      } else {
        region = clip(clip(region, 0, 1, a.y), -1, 1, skew_a);
      }
      if (region.size() >= 3) {
        svg << "  <polygon class=\"sector\" fill=\"#9ecae1\" fill-opacity=\"0.4\" stroke=\"none\" points=\""
            << canvas.points(region) << "\"/>\n";
      }
    }
  }

  std::vector<Pt> boundary;
  for (const auto& p : boundary_polyline(hull)) boundary.push_back(to_pt(p));
  svg << "  <polygon class=\"hull\" fill=\"#d9d9d9\" stroke=\"none\" points=\"" << canvas.points(boundary)
      << "\"/>\n";

  if (options.arrangement) {
    for (const auto& v : hull.vertices) {
      const Pt p = to_pt(v);
      const double lo = std::max(min_x, min_y + p.x - p.y), hi = std::min(max_x, max_y + p.x - p.y);
      const std::array<std::array<double, 4>, 3> lines = {{{min_x, p.y, max_x, p.y},
                                                          {p.x, min_y, p.x, max_y},
                                                          {lo, lo + p.y - p.x, hi, hi + p.y - p.x}}};
      for (const auto& l : lines) {
        svg << "  <line class=\"arrangement\" stroke=\"#969696\" stroke-dasharray=\"4 3\" x1=\"" << canvas.x(l[0])
            << "\" y1=\"" << canvas.y(l[1]) << "\" x2=\"" << canvas.x(l[2]) << "\" y2=\"" << canvas.y(l[3])
            << "\"/>\n";
      }
    }
  }

  for (const auto& [a, b] : facets2d(hull).facets) {
    std::vector<Pt> line;
    for (const auto& p : segment_breakpoints(to_projective(a), to_projective(b))) line.push_back(to_pt(to_chart2(p)));
    svg << "  <polyline class=\"facet\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\""
        << canvas.points(line) << "\"/>\n";
  }

  for (const auto& p : points) {
    const Pt q = to_pt(p);
    svg << "  <circle class=\"point\" fill=\"#000000\" r=\"3\" cx=\"" << canvas.x(q.x) << "\" cy=\"" << canvas.y(q.y)
        << "\"/>\n";
  }
  if (options.pseudovertices) {
    for (const auto& p : pseudovertices(hull)) {
      const Pt q = to_pt(p);
      svg << "  <circle class=\"pseudovertex\" fill=\"#ffffff\" stroke=\"#000000\" r=\"4\" cx=\"" << canvas.x(q.x)
          << "\" cy=\"" << canvas.y(q.y) << "\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tropical
