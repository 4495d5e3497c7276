#ifndef TROPLEX_TOOLS_SVG_HPP
#define TROPLEX_TOOLS_SVG_HPP

// Picture of a tropical complex and its sphere projection.  Only drawing
// uses floating point.

#include "troplex/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace troplex::svg {

namespace detail {

struct Pt {
  double x = 0, y = 0;
};

inline Pt pt(const Covector& v) { return {v.size() > 0 ? v[0].get_d() : 0.0, v.size() > 1 ? v[1].get_d() : 0.0}; }

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline Pt unit(Pt d) {
  double l = std::hypot(d.x, d.y);
  return {d.x / l, d.y / l};
}

}  // namespace detail

inline std::string render(const TropicalComplex& t, const std::string& title) {
  using detail::Pt;
  using detail::num;
  const double panel = 300, margin = 10;
  double extent = 2;
  for (const auto& c : t.cells) {
    Pt b = detail::pt(c.base);
    extent = std::max({extent, 1.5 * std::abs(b.x), 1.5 * std::abs(b.y)});
    if (c.kind == TropCell::Kind::Segment) {
      Pt e = detail::pt(troplex::detail::axpy(c.base, Rational(1), c.dirs[0]));
      extent = std::max({extent, 1.5 * std::abs(e.x), 1.5 * std::abs(e.y)});
    }
  }
  const double scale = panel / (2 * extent);
  auto X = [&](double x) { return margin + panel / 2 + x * scale; };
  auto Y = [&](double y) { return margin + panel / 2 - y * scale; };
  auto P = [&](Pt p) { return num(X(p.x)) + "," + num(Y(p.y)); };
  const double far = 4 * extent;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << 2 * panel + 4 * margin
     << "\" height=\"" << panel + 2 * margin + 20 << "\">\n"
     << "<title>" << title << "</title>\n"
     << "<defs><clipPath id=\"box\"><rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << panel
     << "\" height=\"" << panel << "\"/></clipPath></defs>\n"
     << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << panel << "\" height=\"" << panel
     << "\" fill=\"white\" stroke=\"#999\"/>\n"
     << "<line x1=\"" << num(X(-extent)) << "\" y1=\"" << num(Y(0)) << "\" x2=\"" << num(X(extent)) << "\" y2=\""
     << num(Y(0)) << "\" stroke=\"#ddd\"/>\n"
     << "<line x1=\"" << num(X(0)) << "\" y1=\"" << num(Y(-extent)) << "\" x2=\"" << num(X(0)) << "\" y2=\""
     << num(Y(extent)) << "\" stroke=\"#ddd\"/>\n"
     << "<g clip-path=\"url(#box)\">\n";
  if (t.everything)
    os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << panel << "\" height=\"" << panel
       << "\" fill=\"#9ab\" fill-opacity=\"0.5\"/>\n";
  auto line = [&](Pt a, Pt b, const Integer& w) {
    os << "<line x1=\"" << num(X(a.x)) << "\" y1=\"" << num(Y(a.y)) << "\" x2=\"" << num(X(b.x)) << "\" y2=\""
       << num(Y(b.y)) << "\" stroke=\"black\" stroke-width=\"" << (w > 1 ? 3 : 1.5) << "\"/>\n";
    if (w > 1) {
      Pt m{(a.x + b.x) / 2, (a.y + b.y) / 2};
      double mx = std::clamp(m.x, -0.8 * extent, 0.8 * extent), my = std::clamp(m.y, -0.8 * extent, 0.8 * extent);
      os << "<text x=\"" << num(X(mx) + 4) << "\" y=\"" << num(Y(my) - 4) << "\" font-size=\"12\">" << w.get_str()
         << "</text>\n";
    }
  };
  for (const auto& c : t.cells) {
    Pt b = detail::pt(c.base);
    switch (c.kind) {
      case TropCell::Kind::Vertex:
        os << "<circle cx=\"" << num(X(b.x)) << "\" cy=\"" << num(Y(b.y)) << "\" r=\"3\"/>\n";
        break;
      case TropCell::Kind::Segment: {
        Pt d = detail::pt(c.dirs[0]);
        line(b, {b.x + d.x, b.y + d.y}, c.weight);
        break;
      }
      case TropCell::Kind::Ray:
      case TropCell::Kind::Line: {
        Pt d = detail::unit(detail::pt(c.dirs[0]));
        Pt from = c.kind == TropCell::Kind::Line ? Pt{b.x - far * d.x, b.y - far * d.y} : b;
        line(from, {b.x + far * d.x, b.y + far * d.y}, c.weight);
        break;
      }
      case TropCell::Kind::Cone2: {
        Pt d1 = detail::unit(detail::pt(c.dirs[0])), d2 = detail::unit(detail::pt(c.dirs[1]));
        double a1 = std::atan2(d1.y, d1.x), a2 = std::atan2(d2.y, d2.x);
        if (a2 <= a1) a2 += 2 * M_PI;
        os << "<polygon fill=\"#9ab\" fill-opacity=\"0.5\" stroke=\"#567\" points=\"" << P(b);
        for (int k = 0; k <= 16; ++k) {
          double a = a1 + (a2 - a1) * k / 16;
          os << " " << P({b.x + far * std::cos(a), b.y + far * std::sin(a)});
        }
        os << "\"/>\n";
        break;
      }
    }
  }
  os << "</g>\n";

  // sphere panel
  const double cx = 3 * margin + 1.5 * panel, cy = margin + panel / 2, rad = panel * 0.35;
  os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(rad)
     << "\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
  if (t.nvars == 2) {
    SphereArcSet s = sphere_projection(t);
    auto at = [&](double deg) {
      double a = deg * M_PI / 180;
      return num(cx + rad * std::cos(a)) + "," + num(cy - rad * std::sin(a));
    };
    if (s.is_full() || (s.arcs().empty() && !s.punctures().empty())) {
      os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(rad)
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
    }
    for (const auto& arc : s.arcs()) {
      double a = arc.from.degrees(), b = arc.to.degrees();
      if (b <= a) b += 360;
      os << "<path d=\"M " << at(a) << " A " << num(rad) << " " << num(rad) << " 0 " << (b - a > 180 ? 1 : 0)
         << " 0 " << at(b) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
    }
    for (const auto& d : s.isolated_points())
      os << "<circle cx=\"" << num(cx + rad * std::cos(d.degrees() * M_PI / 180)) << "\" cy=\""
         << num(cy - rad * std::sin(d.degrees() * M_PI / 180)) << "\" r=\"4\"/>\n";
    for (const auto& d : s.punctures())
      os << "<circle cx=\"" << num(cx + rad * std::cos(d.degrees() * M_PI / 180)) << "\" cy=\""
         << num(cy - rad * std::sin(d.degrees() * M_PI / 180)) << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  }
  os << "<text x=\"" << margin << "\" y=\"" << panel + 2 * margin + 12 << "\" font-size=\"12\">" << title
     << "</text>\n</svg>\n";
  return os.str();
}

}  // namespace troplex::svg

#endif  // TROPLEX_TOOLS_SVG_HPP
