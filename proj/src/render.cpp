#include "tridiss/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace tridiss {

namespace {

std::string num(double v) {
  if (std::abs(v) < 1e-15) v = 0;  // avoid "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Dissection& d, double width) {
  const double margin = 10;
  const double height = width * std::sqrt(3.0) / 2;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width + 2 * margin) << "\" height=\""
     << num(height + 2 * margin) << "\" viewBox=\"0 0 " << num(width + 2 * margin) << ' ' << num(height + 2 * margin)
     << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\" stroke-linejoin=\"round\">\n";
  for (const auto& t : equilateral_render_coords(d)) {
    os << "<polygon class=\"" << (t.orientation == Orientation::Up ? "up" : "down") << "\" points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      const auto [x, y] = t.vertices[i];
      os << (i ? " " : "") << num(margin + x * width) << ',' << num(margin + height - y * width);
    }
    os << '"';
    if (t.orientation == Orientation::Down) os << " stroke-dasharray=\"4 2\"";
    os << "/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_tikz(const Dissection& d) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=6]\n";
  for (const auto& t : equilateral_render_coords(d)) {
    os << "  \\draw" << (t.orientation == Orientation::Down ? "[dashed]" : "") << ' ';
    for (const auto& [x, y] : t.vertices) os << '(' << num(x) << ',' << num(y) << ") -- ";
    os << "cycle;\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace tridiss
