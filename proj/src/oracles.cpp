#include "oracles.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "box_model.h"

namespace gridsat {

int oraclePathwidth(const Graph& g) {
  if (g.n > 9) throw std::invalid_argument("pathwidth oracle is limited to 9 vertices");
  if (g.n == 0) return 0;
  // Vertex separation equals pathwidth. dp[S] is the best achievable maximum
  // boundary over all orderings that place exactly S first; the boundary of S
  // counts members with a neighbor outside S.
  int full = 1 << g.n;
  std::vector<int> boundary(full, 0);
  for (int set = 0; set < full; set++) {
    int count = 0;
    for (int v = 0; v < g.n; v++) {
      if (!(set >> v & 1)) continue;
      for (int w : g.adj[v])
        if (!(set >> w & 1)) {
          count++;
          break;
        }
    }
    boundary[set] = count;
  }
  std::vector<int> dp(full, g.n + 1);
  dp[0] = 0;
  for (int set = 1; set < full; set++)
    for (int v = 0; v < g.n; v++)
      if (set >> v & 1)
        dp[set] = std::min(dp[set], std::max(dp[set ^ (1 << v)], boundary[set]));
  return dp[full - 1];
}

int oracleBandwidth(const Graph& g) {
  if (g.n > 9) throw std::invalid_argument("bandwidth oracle is limited to 9 vertices");
  if (g.m() == 0) return 0;
  std::vector<int> pos(g.n);
  std::iota(pos.begin(), pos.end(), 0);
  int best = g.n;
  do {
    int widest = 0;
    for (auto [u, v] : g.edges) widest = std::max(widest, std::abs(pos[u] - pos[v]));
    best = std::min(best, widest);
  } while (std::next_permutation(pos.begin(), pos.end()));
  return best;
}

std::optional<int> oracleStLevels(const Graph& g, int s, int t) {
  if (g.m() > 22) throw std::invalid_argument("orientation oracle is limited to 22 edges");
  if (s < 0 || s >= g.n || t < 0 || t >= g.n || s == t)
    throw std::invalid_argument("orientation oracle needs distinct vertices s and t");
  std::optional<int> best;
  std::vector<int> indeg(g.n), outdeg(g.n), remaining(g.n), longest(g.n);
  std::vector<std::vector<int>> out(g.n);
  std::vector<int> queue, order;
  for (unsigned mask = 0; mask < (1u << g.m()); mask++) {
    std::fill(indeg.begin(), indeg.end(), 0);
    std::fill(outdeg.begin(), outdeg.end(), 0);
    for (auto& lst : out) lst.clear();
    for (int e = 0; e < g.m(); e++) {
      auto [u, v] = g.edges[e];
      if (mask >> e & 1) std::swap(u, v);
      out[u].push_back(v);
      outdeg[u]++;
      indeg[v]++;
    }
    bool valid = true;
    for (int v = 0; v < g.n && valid; v++) {
      if ((indeg[v] == 0) != (v == s)) valid = false;
      if ((outdeg[v] == 0) != (v == t)) valid = false;
    }
    if (!valid) continue;
    remaining = indeg;
    queue.clear();
    order.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      order.push_back(v);
      for (int w : out[v])
        if (--remaining[w] == 0) queue.push_back(w);
    }
    if ((int)order.size() != g.n) continue;  // cyclic
    std::fill(longest.begin(), longest.end(), 0);
    for (int v : order)
      for (int w : out[v]) longest[w] = std::max(longest[w], longest[v] + 1);
    int levels = longest[t] + 1;
    if (!best || levels < *best) best = levels;
  }
  return best;
}

namespace {

bool placeBoxes(const Graph& g, const std::vector<GridBox>& candidates,
                std::vector<GridBox>& chosen, int v) {
  if (v == g.n) return true;
  for (const GridBox& box : candidates) {
    bool consistent = true;
    for (int u = 0; u < v && consistent; u++)
      if (chosen[u].intersects(box) != g.hasEdge(u, v)) consistent = false;
    if (!consistent) continue;
    chosen[v] = box;
    if (placeBoxes(g, candidates, chosen, v + 1)) return true;
  }
  return false;
}

}  // namespace

bool oracleBoxicityFeasible(const Graph& g, int dim, int side) {
  if (g.n > 4 || side > 4 || dim > 2)
    throw std::invalid_argument("box placement oracle is limited to n <= 4, side <= 4, dim <= 2");
  if (dim < 1 || side < 1) throw std::invalid_argument("box placement oracle needs dim, side >= 1");
  if (g.n == 0) return true;
  std::vector<GridBox> candidates;
  std::vector<std::pair<int, int>> intervals;
  for (int lo = 1; lo <= side; lo++)
    for (int hi = lo; hi <= side; hi++) intervals.push_back({lo, hi});
  std::vector<int> pick(dim, 0);
  while (true) {
    GridBox box;
    for (int k = 0; k < dim; k++) {
      box.lo.push_back(intervals[pick[k]].first);
      box.hi.push_back(intervals[pick[k]].second);
    }
    candidates.push_back(box);
    int k = dim - 1;
    while (k >= 0 && pick[k] + 1 == (int)intervals.size()) pick[k--] = 0;
    if (k < 0) break;
    pick[k]++;
  }
  std::vector<GridBox> chosen(g.n);
  return placeBoxes(g, candidates, chosen, 0);
}

}  // namespace gridsat
