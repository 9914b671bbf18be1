#pragma once

#include <array>
#include <string>
#include <vector>

#include "box_model.h"
#include "graph.h"
#include "layouts.h"

namespace gridsat {

struct EncodeOptions {
  long long clauseGuard = 10'000'000;
  bool sequentialCounters = false;
  bool trackProvenance = kDefaultTrackProvenance;
  bool pinEdgeEndpoints = true;  // visibility: edges must begin/end at contact rows
};

/// A problem instance translated to CNF, together with the variable handles
/// the decoders need.
struct Encoding {
  std::string problem;
  CnfBuilder builder;
  GridDims grid;

  std::vector<BoxVarSet> vertexBoxes;  // full boxes, or point-only sets
  std::vector<BoxVarSet> edgeBoxes;    // orientation and visibility problems
  std::vector<std::vector<int>> edgePointVars;  // pathwidth and boxicity
  // visibility: contact variables per edge, one block per endpoint, by flat point
  std::vector<std::array<std::vector<int>, 2>> contactVars;
  std::vector<std::vector<int>> crossingVars;  // bar-k: y variables per edge

  // parameters, -1 when not applicable
  int p = -1, k = -1, s = -1, t = -1, d = -1, side = -1, rows = -1, cols = -1;

  explicit Encoding(BuilderOptions opts) : builder(opts) {}
  long long vars() const { return builder.formula().numVars; }
  long long clauses() const { return builder.formula().clauseCount(); }
};

BuilderOptions builderOptions(const EncodeOptions& opts);

/// Interval representation with at most p+1 intervals over any point.
Encoding encodePathwidth(const Graph& g, int p, const EncodeOptions& opts = {});
Layout1D decodePathwidth(const Encoding& enc, const Assignment& a);

/// Vertex placement on [1,n] with adjacent vertices at distance <= k.
Encoding encodeBandwidth(const Graph& g, int k, const EncodeOptions& opts = {});
Positions decodeBandwidth(const Encoding& enc, const Assignment& a);

/// Acyclic orientation with unique source s and sink t on k levels; requires
/// the edge st to be present (callers may add it first).
Encoding encodeStOrientation(const Graph& g, int s, int t, int k,
                             const EncodeOptions& opts = {});
StOrientation decodeStOrientation(const Graph& g, const Encoding& enc, const Assignment& a);

/// Bar visibility on a rows x cols grid; crossBudget < 0 means plain
/// visibility (edges may touch no non-incident bar at all).
Encoding encodeBarVisibility(const Graph& g, int rows, int cols, const EncodeOptions& opts = {});
Encoding encodeBarKVisibility(const Graph& g, int rows, int cols, int crossBudget,
                              const EncodeOptions& opts = {});
Layout2D decodeLayout2d(const Encoding& enc, const Assignment& a);

/// Boxes in [1,side]^d whose intersection graph is exactly g.
Encoding encodeBoxicity(const Graph& g, int d, int side, const EncodeOptions& opts = {});
BoxLayout decodeBoxicity(const Encoding& enc, const Assignment& a);

}  // namespace gridsat
