#pragma once

// Deterministic SVG strip diagrams.
//
// The strip is drawn over three periods: integers 1-N .. 2N.  Points of X sit
// on the top line and points of Xi on the bottom line (a one-line strip uses
// a single middle line).  Each finite part of a partition becomes one path
// per fully visible translate: consecutive points in boundary order joined by
// quadratic arcs bulging into the strip, nested arcs bulging deeper.  Each
// infinite residue class becomes a dashed drifting path through its visible
// orbit.  All coordinates are integers, so output is byte-stable.

#include <sstream>
#include <string>
#include <vector>

#include "ctilde/germ.hpp"

namespace ctilde {

namespace detail {

struct DrawLayout {
  Int lo, hi;       // visible value range
  Int unit = 48;    // horizontal pixels per integer
  Int margin = 60;  // outer margin
  Int y_top, y_bot;

  Int x(Int v) const { return margin + (v - lo) * unit; }
};

inline const char* draw_palette(std::size_t index) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  return colors[index % 8];
}

// Quadratic arc between two points on the same line, bulging toward the
// strip interior; straight segment between points on different lines.
inline void draw_segment(std::ostringstream& out, const Strip& strip,
                         const DrawLayout& lay, Int a, Int b, bool first) {
  auto y_of = [&](Int v) { return strip.in_x(v) ? lay.y_top : lay.y_bot; };
  Int xa = lay.x(a), ya = y_of(a), xb = lay.x(b), yb = y_of(b);
  if (first) out << "M " << xa << " " << ya << " ";
  if (ya == yb) {
    Int span = xb > xa ? xb - xa : xa - xb;
    Int bulge = 14 + span / 6;
    if (bulge > 70) bulge = 70;
    Int cy = ya == lay.y_top ? ya + bulge : ya - bulge;
    if (lay.y_top == lay.y_bot) cy = ya - bulge;  // one-line: arcs above
    out << "Q " << (xa + xb) / 2 << " " << cy << " " << xb << " " << yb
        << " ";
  } else {
    out << "L " << xb << " " << yb << " ";
  }
}

}  // namespace detail

inline std::string draw_svg(const Strip& strip, const PeriodicPartition& p,
                            const std::string& caption = "") {
  if (p.period != strip.period())
    throw std::invalid_argument("partition period does not match the strip");
  Int n = strip.period();
  detail::DrawLayout lay;
  lay.lo = 1 - n;
  lay.hi = 2 * n;
  bool two = strip.two_line();
  lay.y_top = two ? 80 : 140;
  lay.y_bot = two ? 200 : 140;
  Int width = 2 * lay.margin + (lay.hi - lay.lo) * lay.unit;
  Int height = 280;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";
  if (!caption.empty())
    out << "<text x=\"" << lay.margin << "\" y=\"36\" font-family=\"monospace\""
        << " font-size=\"16\" fill=\"#000000\">" << caption << "</text>\n";

  // Boundary lines, with the fundamental window [1, N] emphasised.
  std::vector<Int> lines = two ? std::vector<Int>{lay.y_top, lay.y_bot}
                               : std::vector<Int>{lay.y_top};
  for (Int y : lines) {
    out << "<line x1=\"" << lay.x(lay.lo) << "\" y1=\"" << y << "\" x2=\""
        << lay.x(lay.hi) << "\" y2=\"" << y
        << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << lay.x(1) << "\" y1=\"" << y << "\" x2=\""
        << lay.x(n) << "\" y2=\"" << y
        << "\" stroke=\"#444444\" stroke-width=\"2\"/>\n";
  }

  std::size_t color = 0;
  // Finite parts: one path per fully visible translate.
  for (const auto& part : p.finite_parts) {
    const char* stroke = detail::draw_palette(color++);
    for (Int m = -3; m <= 3; ++m) {
      std::vector<Int> pts;
      bool visible = true;
      for (Int v : part) {
        Int t = v + m * n;
        if (t < lay.lo || t > lay.hi) visible = false;
        pts.push_back(t);
      }
      if (!visible) continue;
      std::sort(pts.begin(), pts.end(),
                [&](Int u, Int v) { return strip.boundary_less(u, v); });
      std::ostringstream path;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        detail::draw_segment(path, strip, lay, pts[i], pts[i + 1], i == 0);
      if (pts.size() > 2)
        detail::draw_segment(path, strip, lay, pts.back(), pts.front(),
                             false);
      out << "<path class=\"part\" d=\"" << path.str()
          << "\" fill=\"none\" stroke=\"" << stroke
          << "\" stroke-width=\"2\"/>\n";
    }
  }

  // Infinite residue classes: dashed drifting paths through their orbits.
  for (Int r : p.infinite_residues) {
    const char* stroke = detail::draw_palette(color++);
    std::vector<Int> pts;
    for (Int v = lay.lo; v <= lay.hi; ++v)
      if (mod1(v, n) == mod1(r, n)) pts.push_back(v);
    std::ostringstream path;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      detail::draw_segment(path, strip, lay, pts[i], pts[i + 1], i == 0);
    out << "<path class=\"orbit\" d=\"" << path.str()
        << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
  }

  // Points and labels last, on top of the curves.
  for (Int v = lay.lo; v <= lay.hi; ++v) {
    Int y = strip.in_x(v) ? lay.y_top : lay.y_bot;
    out << "<circle cx=\"" << lay.x(v) << "\" cy=\"" << y
        << "\" r=\"4\" fill=\"#000000\"/>\n";
    out << "<text x=\"" << lay.x(v) << "\" y=\"" << (y + 24)
        << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#333333\""
        << " text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string draw_svg(const Germ& germ, const GermElement& x) {
  return draw_svg(germ.strip(), x.partition, print_permutation(x.perm));
}

}  // namespace ctilde
