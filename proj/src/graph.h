#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gridsat {

/// Undirected simple graph on vertices 0..n-1.
struct Graph {
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edgeList, std::string name = "");

  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized: u < v, sorted, no duplicates
  std::vector<std::vector<int>> adj;       // sorted neighbor lists
  std::vector<std::string> labels;         // original vertex labels; empty means identity
  std::string name;

  int m() const { return (int)edges.size(); }
  bool hasEdge(int u, int v) const;
  int edgeIndex(int u, int v) const;  // -1 if absent
  int degree(int v) const { return (int)adj[v].size(); }
  int maxDegree() const;
  bool connected() const;

  bool operator==(const Graph& other) const { return n == other.n && edges == other.edges; }
};

/// Parses "u v" lines; '#' comment lines and blank lines are skipped.
/// An optional "n <count>" line pins the vertex count (isolated vertices).
Graph parseEdgeList(const std::string& text, std::string name = "");

/// Parses the structural subset of GML: graph [ node [ id .. ] edge [ source .. target .. ] ].
/// Node ids are remapped to 0..n-1 in file order; originals are kept as labels.
Graph parseGml(const std::string& text, std::string name = "");

std::string toEdgeList(const Graph& g);
std::string toGml(const Graph& g);

/// One biconnected block; vertexIds maps block vertices back to the parent graph.
struct Block {
  Graph graph;
  std::vector<int> vertexIds;
};

/// Blocks in deterministic order; every edge lands in exactly one block.
std::vector<Block> biconnectedComponents(const Graph& g);

}  // namespace gridsat
