#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgering/types.hpp"

namespace edgering {

/// A finite connected simple graph with stable edge indices. Immutable after
/// construction; every derived predicate in this library is a pure function.
class Graph {
 public:
  Graph(int num_vertices, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> vertex_labels = {},
        std::vector<std::string> edge_labels = {});

  int numVertices() const { return num_vertices_; }
  int numEdges() const { return static_cast<int>(edges_.size()); }
  const std::pair<int, int>& edge(int k) const { return edges_.at(k); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// (neighbor, edge index) pairs, sorted by neighbor.
  const std::vector<std::pair<int, int>>& incident(int v) const {
    return adj_.at(v);
  }

  bool hasEdge(int u, int v) const;
  std::string vertexLabel(int v) const;
  std::string edgeLabel(int k) const;
  bool hasCustomLabels() const { return !edge_labels_.empty(); }

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
};

/// Vertex and edge bookkeeping for the triangle-fan family Gn: n triangles
/// x_i = {w, u_i^(1)}, y_i = {w, u_i^(2)}, z_i = {u_i^(1), u_i^(2)} sharing
/// the hub w.
struct GnLabels {
  int n = 0;
  int hub = 0;                // vertex index of w
  std::vector<int> u1, u2;    // vertex indices of u_i^(1), u_i^(2)
  std::vector<int> x, y, z;   // edge indices of x_i, y_i, z_i

  int xVar(int i) const { return x.at(i - 1); }  // 1-based accessors
  int yVar(int i) const { return y.at(i - 1); }
  int zVar(int i) const { return z.at(i - 1); }
};

std::pair<Graph, GnLabels> makeGn(int n);
Graph makeCompleteBipartite(int m, int n);
Graph makeComplete(int m);

/// Builds a graph from a family id ("gn", "completebipartite"/"kmn",
/// "complete"/"km") and its integer parameters. Returns GnLabels only for gn.
std::pair<Graph, std::optional<GnLabels>> buildFamily(
    const std::string& name, const std::vector<int>& params);

struct BipartitenessCertificate {
  bool bipartite = false;
  std::vector<int> coloring;       // per-vertex 0/1 when bipartite
  std::vector<int> odd_cycle;      // vertex cycle (no repeat of start) otherwise
};

BipartitenessCertificate bipartiteness(const Graph& g);

bool isBipartite(const Graph& g);

/// Vertices v such that every connected component of G \ v contains an odd
/// cycle (equivalently, is non-bipartite).
std::vector<int> regularVertices(const Graph& g);

/// All fundamental sets: independent sets T whose bipartite graph on
/// T u N(T) (edges between T and N(T) only) is connected, and whose
/// remainder is empty or has an odd cycle in every component.
/// Exponential in |V|; guarded.
std::vector<std::vector<int>> fundamentalSets(const Graph& g);

struct OddCycleConditionReport {
  bool satisfied = true;
  std::vector<int> cycle_a, cycle_b;  // a violating vertex-disjoint unbridged pair
};

/// Every pair of vertex-disjoint odd cycles must be joined by an edge.
/// Checked over chordless odd cycles, which is equivalent.
OddCycleConditionReport oddCycleCondition(const Graph& g);

/// All chordless cycles of odd length, each as a vertex sequence.
std::vector<std::vector<int>> chordlessOddCycles(const Graph& g);

}  // namespace edgering
