#include "svg.h"

#include <sstream>
#include <stdexcept>

namespace gridsat {

namespace {

constexpr int kUnit = 20;  // pixels per grid cell

void openSvg(std::ostringstream& out, int rows, int cols, bool gridLines) {
  int w = cols * kUnit, h = rows * kUnit;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\" style=\"background:#ffffff\">\n";
  if (gridLines) {
    out << "<path stroke=\"#d0d0d0\" stroke-width=\"1\" fill=\"none\" d=\"";
    for (int c = 0; c <= cols; c++) out << "M" << c * kUnit << " 0V" << h;
    for (int r = 0; r <= rows; r++) out << "M0 " << r * kUnit << "H" << w;
    out << "\"/>\n";
  }
}

void rect(std::ostringstream& out, int x, int y, int w, int h, const std::string& attrs) {
  out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h << "\" "
      << attrs << "/>\n";
}

}  // namespace

std::string layout2dToSvg(const Layout2D& layout, bool gridLines) {
  std::ostringstream out;
  openSvg(out, layout.rows, layout.cols, gridLines);
  for (const VBar& bar : layout.edgeBars) {
    int y1 = (bar.rowLo - 1) * kUnit + kUnit / 2;
    int y2 = (bar.rowHi - 1) * kUnit + kUnit / 2;
    rect(out, (bar.col - 1) * kUnit + 8, y1, 4, std::max(4, y2 - y1), "fill=\"#a8dadc\"");
  }
  for (const HBar& bar : layout.vertexBars) {
    int x1 = (bar.colLo - 1) * kUnit + 2;
    int x2 = bar.colHi * kUnit - 2;
    rect(out, x1, (bar.row - 1) * kUnit + 6, x2 - x1, 8, "fill=\"#1d3557\" rx=\"2\"");
  }
  out << "</svg>\n";
  return out.str();
}

std::string boxLayoutToSvg(const BoxLayout& layout, bool gridLines) {
  if (layout.dim != 2)
    throw std::invalid_argument("svg output supports two-dimensional box layouts only");
  std::ostringstream out;
  openSvg(out, layout.side, layout.side, gridLines);
  for (const GridBox& box : layout.boxes) {
    rect(out, (box.lo[1] - 1) * kUnit + 2, (box.lo[0] - 1) * kUnit + 2,
         (box.hi[1] - box.lo[1] + 1) * kUnit - 4, (box.hi[0] - box.lo[0] + 1) * kUnit - 4,
         "fill=\"#457b9d\" fill-opacity=\"0.35\" stroke=\"#1d3557\"");
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gridsat
