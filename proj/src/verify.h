#pragma once

#include <string>

#include "graph.h"
#include "layouts.h"

namespace gridsat {

struct VerifyResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Each edge's intervals intersect, and no point lies in more than p+1 intervals.
VerifyResult verifyPathwidth(const Graph& g, const Layout1D& intervals, int p);

/// Positions are a bijection onto [1,n] and adjacent vertices sit within k.
VerifyResult verifyBandwidth(const Graph& g, const Positions& positions, int k);

/// The orientation covers every edge once, is acyclic, has s as its only
/// source and t as its only sink, and its longest path has at most k-1 edges.
VerifyResult verifyStOrientation(const Graph& g, const StOrientation& o, int s, int t, int k);

/// Vertex bars are pairwise disjoint, every edge bar connects its endpoints'
/// bars, crosses at most k non-incident bars, and edge bars only meet at a
/// shared endpoint lying on a vertex bar.
VerifyResult verifyBarVisibility(const Graph& g, const Layout2D& layout, int k);

/// The boxes' intersection graph equals g exactly.
VerifyResult verifyBoxicity(const Graph& g, const BoxLayout& layout);

}  // namespace gridsat
