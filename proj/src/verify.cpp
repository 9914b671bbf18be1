#include "verify.h"

#include <algorithm>
#include <cstdlib>

namespace gridsat {

namespace {

VerifyResult fail(const std::string& reason) { return {false, reason}; }

}  // namespace

VerifyResult verifyPathwidth(const Graph& g, const Layout1D& intervals, int p) {
  if ((int)intervals.size() != g.n) return fail("interval count differs from vertex count");
  for (int v = 0; v < g.n; v++)
    if (intervals[v].first > intervals[v].second)
      return fail("vertex " + std::to_string(v) + " has an empty interval");
  for (auto [u, v] : g.edges) {
    if (std::max(intervals[u].first, intervals[v].first) >
        std::min(intervals[u].second, intervals[v].second))
      return fail("intervals of edge " + std::to_string(u) + "-" + std::to_string(v) +
                  " do not intersect");
  }
  if (intervals.empty()) return {};
  int lo = intervals[0].first, hi = intervals[0].second;
  for (auto [a, b] : intervals) {
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
  for (int point = lo; point <= hi; point++) {
    int count = 0;
    for (auto [a, b] : intervals)
      if (a <= point && point <= b) count++;
    if (count > p + 1)
      return fail("point " + std::to_string(point) + " lies in " + std::to_string(count) +
                  " intervals, budget is " + std::to_string(p + 1));
  }
  return {};
}

VerifyResult verifyBandwidth(const Graph& g, const Positions& positions, int k) {
  if ((int)positions.size() != g.n) return fail("position count differs from vertex count");
  std::vector<char> used(g.n + 1, 0);
  for (int v = 0; v < g.n; v++) {
    int p = positions[v];
    if (p < 1 || p > g.n)
      return fail("vertex " + std::to_string(v) + " placed outside [1,n]");
    if (used[p]) return fail("two vertices share position " + std::to_string(p));
    used[p] = 1;
  }
  for (auto [u, v] : g.edges) {
    int stretch = std::abs(positions[u] - positions[v]);
    if (stretch > k)
      return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " stretches " +
                  std::to_string(stretch) + " > " + std::to_string(k));
  }
  return {};
}

VerifyResult verifyStOrientation(const Graph& g, const StOrientation& o, int s, int t, int k) {
  if ((int)o.directedEdges.size() != g.m()) return fail("orientation does not cover all edges");
  std::vector<std::vector<int>> out(g.n);
  std::vector<int> indeg(g.n, 0), outdeg(g.n, 0);
  for (int e = 0; e < g.m(); e++) {
    auto [tail, head] = o.directedEdges[e];
    auto [u, v] = g.edges[e];
    if (!((tail == u && head == v) || (tail == v && head == u)))
      return fail("directed edge " + std::to_string(e) + " does not match the undirected edge");
    out[tail].push_back(head);
    outdeg[tail]++;
    indeg[head]++;
  }
  for (int v = 0; v < g.n; v++) {
    if ((indeg[v] == 0) != (v == s))
      return fail("vertex " + std::to_string(v) + (indeg[v] == 0 ? " is an extra source"
                                                                 : " should be the source"));
    if ((outdeg[v] == 0) != (v == t))
      return fail("vertex " + std::to_string(v) + (outdeg[v] == 0 ? " is an extra sink"
                                                                  : " should be the sink"));
  }

  // topological order (Kahn); cycles leave vertices unprocessed
  std::vector<int> remaining(indeg);
  std::vector<int> order;
  std::vector<int> queue;
  for (int v = 0; v < g.n; v++)
    if (remaining[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    order.push_back(v);
    for (int w : out[v])
      if (--remaining[w] == 0) queue.push_back(w);
  }
  if ((int)order.size() != g.n) return fail("orientation contains a cycle");

  std::vector<int> longest(g.n, 0);
  for (int v : order)
    for (int w : out[v]) longest[w] = std::max(longest[w], longest[v] + 1);
  int pathEdges = *std::max_element(longest.begin(), longest.end());
  if (pathEdges > k - 1)
    return fail("longest path has " + std::to_string(pathEdges) + " edges, allowed " +
                std::to_string(k - 1));
  return {};
}

namespace {

bool barContains(const HBar& bar, int row, int col) {
  return bar.row == row && bar.colLo <= col && col <= bar.colHi;
}

}  // namespace

VerifyResult verifyBarVisibility(const Graph& g, const Layout2D& layout, int k) {
  if ((int)layout.vertexBars.size() != g.n) return fail("vertex bar count differs from n");
  if ((int)layout.edgeBars.size() != g.m()) return fail("edge bar count differs from m");
  for (int v = 0; v < g.n; v++) {
    const HBar& bar = layout.vertexBars[v];
    if (bar.row < 1 || bar.row > layout.rows || bar.colLo < 1 || bar.colHi > layout.cols ||
        bar.colLo > bar.colHi)
      return fail("vertex bar " + std::to_string(v) + " leaves the grid");
  }
  for (int e = 0; e < g.m(); e++) {
    const VBar& bar = layout.edgeBars[e];
    if (bar.col < 1 || bar.col > layout.cols || bar.rowLo < 1 || bar.rowHi > layout.rows ||
        bar.rowLo > bar.rowHi)
      return fail("edge bar " + std::to_string(e) + " leaves the grid");
  }

  for (int u = 0; u < g.n; u++) {
    for (int v = u + 1; v < g.n; v++) {
      const HBar& a = layout.vertexBars[u];
      const HBar& b = layout.vertexBars[v];
      if (a.row == b.row && std::max(a.colLo, b.colLo) <= std::min(a.colHi, b.colHi))
        return fail("vertex bars " + std::to_string(u) + " and " + std::to_string(v) + " overlap");
    }
  }

  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    const VBar& bar = layout.edgeBars[e];
    bool topU = barContains(layout.vertexBars[u], bar.rowHi, bar.col) &&
                barContains(layout.vertexBars[v], bar.rowLo, bar.col);
    bool topV = barContains(layout.vertexBars[v], bar.rowHi, bar.col) &&
                barContains(layout.vertexBars[u], bar.rowLo, bar.col);
    if (!topU && !topV)
      return fail("edge bar " + std::to_string(e) + " does not join the bars of " +
                  std::to_string(u) + " and " + std::to_string(v));
    int crossed = 0;
    for (int w = 0; w < g.n; w++) {
      if (w == u || w == v) continue;
      const HBar& other = layout.vertexBars[w];
      if (other.row >= bar.rowLo && other.row <= bar.rowHi &&
          other.colLo <= bar.col && bar.col <= other.colHi)
        crossed++;
    }
    if (crossed > k)
      return fail("edge bar " + std::to_string(e) + " crosses " + std::to_string(crossed) +
                  " bars, budget is " + std::to_string(k));
  }

  for (int e = 0; e < g.m(); e++) {
    for (int f = e + 1; f < g.m(); f++) {
      const VBar& a = layout.edgeBars[e];
      const VBar& b = layout.edgeBars[f];
      if (a.col != b.col) continue;
      int lo = std::max(a.rowLo, b.rowLo), hi = std::min(a.rowHi, b.rowHi);
      if (lo > hi) continue;
      if (lo != hi)
        return fail("edge bars " + std::to_string(e) + " and " + std::to_string(f) +
                    " share a segment");
      bool endOfA = lo == a.rowLo || lo == a.rowHi;
      bool endOfB = lo == b.rowLo || lo == b.rowHi;
      bool onVertexBar = false;
      for (int w = 0; w < g.n; w++)
        if (barContains(layout.vertexBars[w], lo, a.col)) onVertexBar = true;
      if (!endOfA || !endOfB || !onVertexBar)
        return fail("edge bars " + std::to_string(e) + " and " + std::to_string(f) +
                    " meet away from a shared endpoint on a vertex bar");
    }
  }
  return {};
}

VerifyResult verifyBoxicity(const Graph& g, const BoxLayout& layout) {
  if ((int)layout.boxes.size() != g.n) return fail("box count differs from vertex count");
  for (int v = 0; v < g.n; v++) {
    const GridBox& box = layout.boxes[v];
    if (box.dim() != layout.dim) return fail("box " + std::to_string(v) + " has wrong dimension");
    for (int j = 0; j < box.dim(); j++)
      if (box.lo[j] > box.hi[j]) return fail("box " + std::to_string(v) + " is empty");
  }
  for (int u = 0; u < g.n; u++) {
    for (int v = u + 1; v < g.n; v++) {
      bool meet = layout.boxes[u].intersects(layout.boxes[v]);
      if (meet && !g.hasEdge(u, v))
        return fail("boxes " + std::to_string(u) + " and " + std::to_string(v) +
                    " intersect without an edge");
      if (!meet && g.hasEdge(u, v))
        return fail("boxes of edge " + std::to_string(u) + "-" + std::to_string(v) +
                    " do not intersect");
    }
  }
  return {};
}

}  // namespace gridsat
