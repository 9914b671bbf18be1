#include "encodings.h"

namespace gridsat {

namespace {

// Shared core of plain and budgeted bar visibility. crossBudget < 0 means
// plain mode: an edge may not touch any non-incident vertex bar.
Encoding encodeBars(const Graph& g, int rows, int cols, int crossBudget,
                    const EncodeOptions& opts) {
  if (g.n < 1) throw std::invalid_argument("encoding requires at least one vertex");
  if (rows < 1 || cols < 1) throw std::invalid_argument("bar visibility: grid must be non-empty");
  Encoding enc(builderOptions(opts));
  enc.problem = crossBudget < 0 ? "bar-visibility" : "bar-k-visibility";
  enc.rows = rows;
  enc.cols = cols;
  enc.k = crossBudget < 0 ? 0 : crossBudget;
  enc.grid = GridDims{{rows, cols}};
  CnfBuilder& b = enc.builder;
  int points = (int)enc.grid.points();

  for (int v = 0; v < g.n; v++) {
    BoxVarSet box = encodeBox(b, enc.grid, v);
    addUnitExtent(b, box, 0);  // vertex bars are horizontal: one row
    enc.vertexBoxes.push_back(std::move(box));
  }
  for (int e = 0; e < g.m(); e++) {
    BoxVarSet box = encodeBox(b, enc.grid, g.n + e);
    addUnitExtent(b, box, 1);  // edge bars are vertical: one column
    enc.edgeBoxes.push_back(std::move(box));
  }

  std::vector<int> column(g.n);
  for (int i = 0; i < points; i++) {
    for (int v = 0; v < g.n; v++) column[v] = enc.vertexBoxes[v].pointVars[i];
    b.addAtMost(column, 1, "vertex-bars-disjoint");
  }

  if (crossBudget >= 0) {
    for (int e = 0; e < g.m(); e++) {
      std::vector<int> ys(points);
      for (int i = 0; i < points; i++)
        ys[i] = b.addVar({VarFamily::Crossing, g.n + e, -1, -1, i});
      enc.crossingVars.push_back(std::move(ys));
    }
  }

  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    for (int w = 0; w < g.n; w++) {
      if (w == u || w == v) continue;
      for (int i = 0; i < points; i++) {
        if (crossBudget < 0) {
          b.addClause({-enc.edgeBoxes[e].pointVars[i], -enc.vertexBoxes[w].pointVars[i]},
                      "edge-avoids-other-bars");
        } else {
          b.addClause({-enc.edgeBoxes[e].pointVars[i], -enc.vertexBoxes[w].pointVars[i],
                       enc.crossingVars[e][i]},
                      "crossing-flagged");
        }
      }
    }
  }

  if (crossBudget >= 0) {
    for (int e = 0; e < g.m(); e++)
      b.addAtMost(enc.crossingVars[e], crossBudget, "edge-crossing-budget");
    // any two edge bars may only meet where one of them begins or ends
    for (int e = 0; e < g.m(); e++) {
      for (int f = 0; f < g.m(); f++) {
        if (e == f) continue;
        for (int i = 0; i < points; i++) {
          int row = enc.grid.coordOf(i, 0);
          b.addClause({-enc.edgeBoxes[e].pointVars[i], -enc.edgeBoxes[f].pointVars[i],
                       enc.edgeBoxes[e].beginVars[0][row - 1], enc.edgeBoxes[e].endVars[0][row - 1]},
                      "edges-meet-at-ends");
        }
      }
    }
  }

  enc.contactVars.resize(g.m());
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    for (int side = 0; side < 2; side++) {
      int w = side == 0 ? u : v;
      std::vector<int> contact(points);
      for (int i = 0; i < points; i++) {
        contact[i] = b.addVar({VarFamily::Incidence, g.n + e, w, -1, i});
        b.addClause({-contact[i], enc.edgeBoxes[e].pointVars[i]}, "contact-inside-edge");
        b.addClause({-contact[i], enc.vertexBoxes[w].pointVars[i]}, "contact-inside-vertex");
        if (opts.pinEdgeEndpoints) {
          int row = enc.grid.coordOf(i, 0);
          b.addClause({-contact[i], enc.edgeBoxes[e].beginVars[0][row - 1],
                       enc.edgeBoxes[e].endVars[0][row - 1]},
                      "contact-at-edge-end");
        }
      }
      b.addClause(std::vector<int>(contact.begin(), contact.end()), "edge-touches-endpoint");
      enc.contactVars[e][side] = std::move(contact);
    }
  }
  return enc;
}

}  // namespace

Encoding encodeBarVisibility(const Graph& g, int rows, int cols, const EncodeOptions& opts) {
  return encodeBars(g, rows, cols, -1, opts);
}

Encoding encodeBarKVisibility(const Graph& g, int rows, int cols, int crossBudget,
                              const EncodeOptions& opts) {
  if (crossBudget < 0) throw std::invalid_argument("bar visibility: crossing budget must be >= 0");
  return encodeBars(g, rows, cols, crossBudget, opts);
}

Layout2D decodeLayout2d(const Encoding& enc, const Assignment& a) {
  Layout2D layout;
  layout.rows = enc.rows;
  layout.cols = enc.cols;
  for (const auto& set : enc.vertexBoxes) {
    GridBox box = decodeBox(set, a);
    if (box.lo[0] != box.hi[0]) throw EncodingError("decode: vertex bar spans several rows");
    layout.vertexBars.push_back({box.lo[0], box.lo[1], box.hi[1]});
  }
  for (size_t e = 0; e < enc.edgeBoxes.size(); e++) {
    GridBox box = decodeBox(enc.edgeBoxes[e], a);
    if (box.lo[1] != box.hi[1]) throw EncodingError("decode: edge bar spans several columns");
    // clip the bar to its outermost contact points; without the endpoint pin
    // the box may stick out past the bars it connects
    int lo = -1, hi = -1;
    for (int side = 0; side < 2; side++) {
      for (int i = 0; i < (int)enc.contactVars[e][side].size(); i++) {
        if (!a[enc.contactVars[e][side][i]]) continue;
        int row = enc.grid.coordOf(i, 0);
        if (lo < 0 || row < lo) lo = row;
        if (hi < 0 || row > hi) hi = row;
      }
    }
    if (lo < 0) throw EncodingError("decode: edge has no contact points");
    layout.edgeBars.push_back({box.lo[1], lo, hi});
  }
  return layout;
}

Encoding encodeBoxicity(const Graph& g, int d, int side, const EncodeOptions& opts) {
  if (g.n < 1) throw std::invalid_argument("encoding requires at least one vertex");
  if (d < 1) throw std::invalid_argument("boxicity: dimension must be >= 1");
  if (side < 1) throw std::invalid_argument("boxicity: grid side must be >= 1");
  Encoding enc(builderOptions(opts));
  enc.problem = "boxicity";
  enc.d = d;
  enc.side = side;
  enc.grid = GridDims{std::vector<int>(d, side)};
  CnfBuilder& b = enc.builder;
  int points = (int)enc.grid.points();

  for (int v = 0; v < g.n; v++) enc.vertexBoxes.push_back(encodeBox(b, enc.grid, v));

  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    std::vector<int> xe = allocPointVars(b, enc.grid, g.n + e);
    b.addClause(std::vector<int>(xe.begin(), xe.end()), "adjacent-boxes-meet");
    for (int i = 0; i < points; i++) {
      b.addClause({-xe[i], enc.vertexBoxes[u].pointVars[i]}, "meeting-inside-endpoints");
      b.addClause({-xe[i], enc.vertexBoxes[v].pointVars[i]}, "meeting-inside-endpoints");
    }
    enc.edgePointVars.push_back(std::move(xe));
  }

  for (int u = 0; u < g.n; u++) {
    for (int v = u + 1; v < g.n; v++) {
      if (g.hasEdge(u, v)) continue;
      for (int i = 0; i < points; i++)
        b.addClause({-enc.vertexBoxes[u].pointVars[i], -enc.vertexBoxes[v].pointVars[i]},
                    "non-adjacent-boxes-disjoint");
    }
  }
  return enc;
}

BoxLayout decodeBoxicity(const Encoding& enc, const Assignment& a) {
  BoxLayout layout;
  layout.dim = enc.d;
  layout.side = enc.side;
  for (const auto& set : enc.vertexBoxes) layout.boxes.push_back(decodeBox(set, a));
  return layout;
}

}  // namespace gridsat
