#include "edgering/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace edgering {

namespace {

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Component membership of the subgraph induced on `alive` vertices.
// Returns component id per vertex (-1 for excluded vertices).
std::vector<int> components(const Graph& g, const std::vector<bool>& alive) {
  std::vector<int> comp(g.numVertices(), -1);
  int next = 0;
  for (int s = 0; s < g.numVertices(); ++s) {
    if (!alive[s] || comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [u, e] : g.incident(v)) {
        if (alive[u] && comp[u] < 0) {
          comp[u] = next;
          queue.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

// Two-colorability of the subgraph induced on `alive`; no certificate.
bool inducedBipartite(const Graph& g, const std::vector<bool>& alive) {
  std::vector<int> color(g.numVertices(), -1);
  for (int s = 0; s < g.numVertices(); ++s) {
    if (!alive[s] || color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [u, e] : g.incident(v)) {
        if (!alive[u]) continue;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> vertex_labels,
             std::vector<std::string> edge_labels)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      vertex_labels_(std::move(vertex_labels)),
      edge_labels_(std::move(edge_labels)) {
  if (num_vertices_ <= 0) throw input_error("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
      throw input_error("edge endpoint out of range");
    }
    if (u == v) throw input_error("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw input_error("multi-edges are not allowed");
  }
  if (!vertex_labels_.empty() && static_cast<int>(vertex_labels_.size()) != num_vertices_) {
    throw input_error("vertex_labels length mismatch");
  }
  if (!edge_labels_.empty() && edge_labels_.size() != edges_.size()) {
    throw input_error("edge_labels length mismatch");
  }
  adj_.resize(num_vertices_);
  for (int k = 0; k < numEdges(); ++k) {
    adj_[edges_[k].first].push_back({edges_[k].second, k});
    adj_[edges_[k].second].push_back({edges_[k].first, k});
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  std::vector<bool> alive(num_vertices_, true);
  auto comp = components(*this, alive);
  for (int v = 0; v < num_vertices_; ++v) {
    if (comp[v] != 0) throw input_error("graph must be connected");
  }
}

bool Graph::hasEdge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (auto [w, e] : adj_.at(u)) {
    if (w == v) return true;
  }
  return false;
}

std::string Graph::vertexLabel(int v) const {
  if (!vertex_labels_.empty()) return vertex_labels_.at(v);
  return "v" + std::to_string(v + 1);
}

std::string Graph::edgeLabel(int k) const {
  if (!edge_labels_.empty()) return edge_labels_.at(k);
  return "e" + std::to_string(k + 1);
}

std::pair<Graph, GnLabels> makeGn(int n) {
  if (n < 2) throw input_error("Gn requires n >= 2");
  GnLabels labels;
  labels.n = n;
  labels.hub = 2 * n;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> vlabels(2 * n + 1), elabels;
  for (int i = 0; i < n; ++i) {
    labels.u1.push_back(i);
    labels.u2.push_back(n + i);
    vlabels[i] = "u" + std::to_string(i + 1) + "(1)";
    vlabels[n + i] = "u" + std::to_string(i + 1) + "(2)";
    labels.x.push_back(static_cast<int>(edges.size()));
    edges.push_back({labels.hub, i});
    elabels.push_back("x" + std::to_string(i + 1));
    labels.y.push_back(static_cast<int>(edges.size()));
    edges.push_back({labels.hub, n + i});
    elabels.push_back("y" + std::to_string(i + 1));
    labels.z.push_back(static_cast<int>(edges.size()));
    edges.push_back({i, n + i});
    elabels.push_back("z" + std::to_string(i + 1));
  }
  vlabels[labels.hub] = "w";
  return {Graph(2 * n + 1, std::move(edges), std::move(vlabels), std::move(elabels)),
          labels};
}

Graph makeCompleteBipartite(int m, int n) {
  if (m < 1 || n < 1) throw input_error("K_{m,n} requires m, n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
  }
  return Graph(m + n, std::move(edges));
}

Graph makeComplete(int m) {
  if (m < 3) throw input_error("K_m requires m >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) edges.push_back({i, j});
  }
  return Graph(m, std::move(edges));
}

std::pair<Graph, std::optional<GnLabels>> buildFamily(
    const std::string& name, const std::vector<int>& params) {
  std::string id = lowercase(name);
  if (id == "gn") {
    if (params.size() != 1) throw input_error("family gn takes one parameter n");
    auto [g, labels] = makeGn(params[0]);
    return {std::move(g), labels};
  }
  if (id == "completebipartite" || id == "kmn") {
    if (params.size() != 2) throw input_error("family completebipartite takes m, n");
    return {makeCompleteBipartite(params[0], params[1]), std::nullopt};
  }
  if (id == "complete" || id == "km") {
    if (params.size() != 1) throw input_error("family complete takes one parameter m");
    return {makeComplete(params[0]), std::nullopt};
  }
  throw input_error("unknown family '" + name + "' (gn, completebipartite, complete)");
}

BipartitenessCertificate bipartiteness(const Graph& g) {
  BipartitenessCertificate cert;
  cert.coloring.assign(g.numVertices(), -1);
  std::vector<int> parent(g.numVertices(), -1);
  for (int s = 0; s < g.numVertices(); ++s) {
    if (cert.coloring[s] >= 0) continue;
    cert.coloring[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [u, e] : g.incident(v)) {
        if (cert.coloring[u] < 0) {
          cert.coloring[u] = 1 - cert.coloring[v];
          parent[u] = v;
          queue.push_back(u);
        } else if (cert.coloring[u] == cert.coloring[v]) {
          // Same-color edge closes an odd cycle through the BFS tree.
          std::vector<int> pv{v}, pu{u};
          while (parent[pv.back()] >= 0) pv.push_back(parent[pv.back()]);
          while (parent[pu.back()] >= 0) pu.push_back(parent[pu.back()]);
          // strip the common tail above the meeting point
          while (pv.size() >= 2 && pu.size() >= 2 &&
                 pv[pv.size() - 2] == pu[pu.size() - 2]) {
            pv.pop_back();
            pu.pop_back();
          }
          std::vector<int> cycle(pv.begin(), pv.end());
          for (auto it = pu.rbegin() + 1; it != pu.rend(); ++it) cycle.push_back(*it);
          // drop the duplicated meeting vertex at the end when v-u paths met there
          if (cycle.size() >= 2 && cycle.front() == cycle.back()) cycle.pop_back();
          cert.bipartite = false;
          cert.odd_cycle = std::move(cycle);
          cert.coloring.clear();
          return cert;
        }
      }
    }
  }
  cert.bipartite = true;
  return cert;
}

bool isBipartite(const Graph& g) { return bipartiteness(g).bipartite; }

std::vector<int> regularVertices(const Graph& g) {
  std::vector<int> result;
  for (int v = 0; v < g.numVertices(); ++v) {
    std::vector<bool> alive(g.numVertices(), true);
    alive[v] = false;
    auto comp = components(g, alive);
    int ncomp = 0;
    for (int u = 0; u < g.numVertices(); ++u) ncomp = std::max(ncomp, comp[u] + 1);
    bool regular = true;
    for (int c = 0; c < ncomp && regular; ++c) {
      std::vector<bool> in_comp(g.numVertices(), false);
      for (int u = 0; u < g.numVertices(); ++u) in_comp[u] = (comp[u] == c);
      // a component contains an odd cycle iff it is not bipartite
      if (inducedBipartite(g, in_comp)) regular = false;
    }
    if (ncomp == 0) regular = true;  // vacuous; cannot happen for |V| >= 2
    if (regular) result.push_back(v);
  }
  return result;
}

std::vector<std::vector<int>> fundamentalSets(const Graph& g) {
  int d = g.numVertices();
  if (d > 22) throw resource_error("fundamentalSets: exhaustive mode supports <= 22 vertices");
  std::vector<std::uint64_t> adj(d, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  std::vector<std::vector<int>> result;
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << d); ++t) {
    bool independent = true;
    std::uint64_t nbhd = 0;
    for (int v = 0; v < d && independent; ++v) {
      if (!(t >> v & 1)) continue;
      if (adj[v] & t) independent = false;
      nbhd |= adj[v];
    }
    if (!independent) continue;
    std::uint64_t closure = t | nbhd;

    // connectivity of the bipartite graph on T u N(T), edges T-N(T) only
    std::vector<int> verts;
    for (int v = 0; v < d; ++v) {
      if (closure >> v & 1) verts.push_back(v);
    }
    std::vector<bool> visited(d, false);
    std::deque<int> queue{verts.front()};
    visited[verts.front()] = true;
    int reached = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [u, e] : g.incident(v)) {
        bool crossing = ((t >> v & 1) && (nbhd >> u & 1)) ||
                        ((t >> u & 1) && (nbhd >> v & 1));
        if (crossing && (closure >> u & 1) && !visited[u]) {
          visited[u] = true;
          ++reached;
          queue.push_back(u);
        }
      }
    }
    if (reached != static_cast<int>(verts.size())) continue;

    if (closure != (std::uint64_t{1} << d) - 1) {
      // every remaining component must contain an odd cycle
      std::vector<bool> alive(d, false);
      for (int v = 0; v < d; ++v) alive[v] = !(closure >> v & 1);
      auto comp = components(g, alive);
      int ncomp = 0;
      for (int v = 0; v < d; ++v) ncomp = std::max(ncomp, comp[v] + 1);
      bool ok = true;
      for (int c = 0; c < ncomp && ok; ++c) {
        std::vector<bool> in_comp(d, false);
        for (int v = 0; v < d; ++v) in_comp[v] = (comp[v] == c);
        if (inducedBipartite(g, in_comp)) ok = false;
      }
      if (!ok) continue;
    }
    std::vector<int> set;
    for (int v = 0; v < d; ++v) {
      if (t >> v & 1) set.push_back(v);
    }
    result.push_back(std::move(set));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<int>> chordlessOddCycles(const Graph& g) {
  int d = g.numVertices();
  std::vector<std::uint64_t> adj(d, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  // canonical cycle: starts at its minimum vertex, second < last
  auto extend = [&](auto&& self, int start, std::uint64_t used) -> void {
    int v = path.back();
    for (auto [u, e] : g.incident(v)) {
      if (u == start && path.size() >= 3) {
        if (path.size() % 2 == 1 && path[1] < path.back()) {
          // chordless: induced edge count equals cycle length
          int induced = 0;
          for (size_t i = 0; i < path.size(); ++i) {
            for (size_t j = i + 1; j < path.size(); ++j) {
              if (adj[path[i]] >> path[j] & 1) ++induced;
            }
          }
          if (induced == static_cast<int>(path.size())) cycles.push_back(path);
        }
        continue;
      }
      if (u <= start || (used >> u & 1)) continue;
      path.push_back(u);
      self(self, start, used | (std::uint64_t{1} << u));
      path.pop_back();
    }
  };
  for (int s = 0; s < d; ++s) {
    path = {s};
    extend(extend, s, std::uint64_t{1} << s);
  }
  return cycles;
}

OddCycleConditionReport oddCycleCondition(const Graph& g) {
  OddCycleConditionReport report;
  auto cycles = chordlessOddCycles(g);
  std::vector<std::uint64_t> masks;
  for (auto& c : cycles) {
    std::uint64_t m = 0;
    for (int v : c) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  for (size_t i = 0; i < cycles.size(); ++i) {
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      if (masks[i] & masks[j]) continue;
      bool bridged = false;
      for (int u : cycles[i]) {
        for (int v : cycles[j]) {
          if (g.hasEdge(u, v)) {
            bridged = true;
            break;
          }
        }
        if (bridged) break;
      }
      if (!bridged) {
        report.satisfied = false;
        report.cycle_a = cycles[i];
        report.cycle_b = cycles[j];
        return report;
      }
    }
  }
  return report;
}

}  // namespace edgering
