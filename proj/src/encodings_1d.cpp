#include "encodings.h"

namespace gridsat {

BuilderOptions builderOptions(const EncodeOptions& opts) {
  BuilderOptions b;
  b.clauseGuard = opts.clauseGuard;
  b.sequentialCounters = opts.sequentialCounters;
  b.trackProvenance = opts.trackProvenance;
  return b;
}

namespace {

void requireVertices(const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("encoding requires at least one vertex");
}

}  // namespace

Encoding encodePathwidth(const Graph& g, int p, const EncodeOptions& opts) {
  requireVertices(g);
  if (p < 0) throw std::invalid_argument("pathwidth: parameter must be >= 0");
  Encoding enc(builderOptions(opts));
  enc.problem = "pathwidth";
  enc.p = p;
  enc.grid = GridDims{{g.n}};
  CnfBuilder& b = enc.builder;

  for (int v = 0; v < g.n; v++) enc.vertexBoxes.push_back(encodeBox(b, enc.grid, v));

  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    std::vector<int> xe = allocPointVars(b, enc.grid, g.n + e);
    b.addClause(std::vector<int>(xe.begin(), xe.end()), "edge-covered");
    for (int i = 0; i < g.n; i++) {
      b.addClause({-xe[i], enc.vertexBoxes[u].pointVars[i]}, "edge-inside-endpoints");
      b.addClause({-xe[i], enc.vertexBoxes[v].pointVars[i]}, "edge-inside-endpoints");
    }
    enc.edgePointVars.push_back(std::move(xe));
  }

  std::vector<int> column(g.n);
  for (int i = 0; i < g.n; i++) {
    for (int v = 0; v < g.n; v++) column[v] = enc.vertexBoxes[v].pointVars[i];
    b.addAtMost(column, p + 1, "point-capacity");
  }
  return enc;
}

Layout1D decodePathwidth(const Encoding& enc, const Assignment& a) {
  Layout1D intervals;
  for (const auto& box : enc.vertexBoxes) {
    GridBox decoded = decodeBox(box, a);
    intervals.push_back({decoded.lo[0], decoded.hi[0]});
  }
  return intervals;
}

Encoding encodeBandwidth(const Graph& g, int k, const EncodeOptions& opts) {
  requireVertices(g);
  if (k < 0) throw std::invalid_argument("bandwidth: parameter must be >= 0");
  Encoding enc(builderOptions(opts));
  enc.problem = "bandwidth";
  enc.k = k;
  enc.grid = GridDims{{g.n}};
  CnfBuilder& b = enc.builder;

  // vertices need no begin/end indicators: one point each is forced by the
  // pigeonhole of n non-empty, pairwise disjoint sets on n points
  for (int v = 0; v < g.n; v++) {
    BoxVarSet set;
    set.object = v;
    set.dims = enc.grid;
    set.pointVars = allocPointVars(b, enc.grid, v);
    b.addClause(std::vector<int>(set.pointVars.begin(), set.pointVars.end()), "vertex-placed");
    enc.vertexBoxes.push_back(std::move(set));
  }

  std::vector<int> column(g.n);
  for (int i = 0; i < g.n; i++) {
    for (int v = 0; v < g.n; v++) column[v] = enc.vertexBoxes[v].pointVars[i];
    b.addAtMost(column, 1, "point-exclusive");
  }

  for (auto [u, v] : g.edges) {
    for (int dir = 0; dir < 2; dir++) {
      int a = dir == 0 ? u : v;
      int c = dir == 0 ? v : u;
      for (int i = 0; i < g.n; i++) {
        std::vector<int> window;
        for (int j = std::max(0, i - k); j <= std::min(g.n - 1, i + k); j++)
          window.push_back(enc.vertexBoxes[c].pointVars[j]);
        b.addAtLeastOneIf(enc.vertexBoxes[a].pointVars[i], window, "neighbor-within-k");
      }
    }
  }
  return enc;
}

Positions decodeBandwidth(const Encoding& enc, const Assignment& a) {
  Positions positions(enc.vertexBoxes.size());
  for (size_t v = 0; v < enc.vertexBoxes.size(); v++) {
    int where = -1;
    const auto& vars = enc.vertexBoxes[v].pointVars;
    for (size_t i = 0; i < vars.size(); i++) {
      if (a[vars[i]]) {
        if (where >= 0)
          throw EncodingError("decode: vertex " + std::to_string(v) + " occupies two points");
        where = (int)i + 1;
      }
    }
    if (where < 0) throw EncodingError("decode: vertex " + std::to_string(v) + " is unplaced");
    positions[v] = where;
  }
  return positions;
}

Encoding encodeStOrientation(const Graph& g, int s, int t, int k, const EncodeOptions& opts) {
  requireVertices(g);
  if (s < 0 || s >= g.n || t < 0 || t >= g.n || s == t)
    throw std::invalid_argument("orientation: s and t must be distinct vertices");
  if (!g.hasEdge(s, t))
    throw std::invalid_argument("orientation: the edge st is required; add it to the graph first");
  if (k < 1) throw std::invalid_argument("orientation: level count must be >= 1");

  Encoding enc(builderOptions(opts));
  enc.problem = "st-orientation";
  enc.s = s;
  enc.t = t;
  enc.k = k;
  enc.grid = GridDims{{k}};
  CnfBuilder& b = enc.builder;

  for (int v = 0; v < g.n; v++) {
    BoxVarSet set;
    set.object = v;
    set.dims = enc.grid;
    set.pointVars = allocPointVars(b, enc.grid, v);
    b.addClause(std::vector<int>(set.pointVars.begin(), set.pointVars.end()), "vertex-leveled");
    b.addAtMost(set.pointVars, 1, "vertex-single-level");
    enc.vertexBoxes.push_back(std::move(set));
  }

  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    BoxVarSet box = encodeBox(b, enc.grid, g.n + e);
    b.addAtLeast(box.pointVars, 2, "edge-spans-two-levels");
    for (int i = 0; i < k; i++) {
      std::vector<int> ends = {enc.vertexBoxes[u].pointVars[i], enc.vertexBoxes[v].pointVars[i]};
      b.addAtLeastOneIf(box.beginVars[0][i], ends, "edge-starts-at-endpoint");
      b.addAtLeastOneIf(box.endVars[0][i], ends, "edge-stops-at-endpoint");
    }
    enc.edgeBoxes.push_back(std::move(box));
  }

  for (int v = 0; v < g.n; v++) {
    for (int i = 0; i < k; i++) {
      if (v != t) {
        std::vector<int> outgoing;
        for (int w : g.adj[v]) outgoing.push_back(enc.edgeBoxes[g.edgeIndex(v, w)].beginVars[0][i]);
        b.addAtLeastOneIf(enc.vertexBoxes[v].pointVars[i], outgoing, "edge-out-at-level");
      }
      if (v != s) {
        std::vector<int> incoming;
        for (int w : g.adj[v]) incoming.push_back(enc.edgeBoxes[g.edgeIndex(v, w)].endVars[0][i]);
        b.addAtLeastOneIf(enc.vertexBoxes[v].pointVars[i], incoming, "edge-in-at-level");
      }
    }
  }
  return enc;
}

StOrientation decodeStOrientation(const Graph& g, const Encoding& enc, const Assignment& a) {
  StOrientation st;
  st.levels.resize(enc.vertexBoxes.size());
  for (size_t v = 0; v < enc.vertexBoxes.size(); v++) {
    int where = -1;
    const auto& vars = enc.vertexBoxes[v].pointVars;
    for (size_t i = 0; i < vars.size(); i++) {
      if (a[vars[i]]) {
        if (where >= 0)
          throw EncodingError("decode: vertex " + std::to_string(v) + " occupies two levels");
        where = (int)i + 1;
      }
    }
    if (where < 0) throw EncodingError("decode: vertex " + std::to_string(v) + " has no level");
    st.levels[v] = where;
  }
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    GridBox box = decodeBox(enc.edgeBoxes[e], a);
    int lo = box.lo[0], hi = box.hi[0];
    int tail, head;
    if (st.levels[u] == lo && st.levels[v] == hi) {
      tail = u;
      head = v;
    } else if (st.levels[v] == lo && st.levels[u] == hi) {
      tail = v;
      head = u;
    } else {
      throw EncodingError("decode: edge box does not run between its endpoints' levels");
    }
    if (lo == hi) throw EncodingError("decode: edge collapsed to a single level");
    st.directedEdges.push_back({tail, head});
  }
  return st;
}

}  // namespace gridsat
