#pragma once

#include <utility>
#include <vector>

#include "box_model.h"

namespace gridsat {

/// Closed interval per vertex on the line [1, n].
using Layout1D = std::vector<std::pair<int, int>>;

/// Grid point per vertex.
using Positions = std::vector<int>;

struct StOrientation {
  std::vector<std::pair<int, int>> directedEdges;  // (tail, head), aligned with Graph::edges
  std::vector<int> levels;                         // per vertex, 1-based
};

/// Horizontal bar: one row, a range of columns.
struct HBar {
  int row = 0;
  int colLo = 0, colHi = 0;
};

/// Vertical bar: one column, a range of rows.
struct VBar {
  int col = 0;
  int rowLo = 0, rowHi = 0;
};

struct Layout2D {
  int rows = 0, cols = 0;
  std::vector<HBar> vertexBars;  // per vertex
  std::vector<VBar> edgeBars;    // aligned with Graph::edges
};

struct BoxLayout {
  int dim = 0;
  int side = 0;
  std::vector<GridBox> boxes;  // per vertex
};

}  // namespace gridsat
