#include "edgering/json_io.hpp"

#include <fstream>
#include <sstream>

namespace edgering {

namespace {

std::vector<Int> toVector(const IntVec& v) { return {v.begin(), v.end()}; }

}  // namespace

json graphToJson(const Graph& g) {
  json j;
  j["num_vertices"] = g.numVertices();
  auto edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  auto vlabels = json::array(), elabels = json::array();
  for (int v = 0; v < g.numVertices(); ++v) vlabels.push_back(g.vertexLabel(v));
  for (int k = 0; k < g.numEdges(); ++k) elabels.push_back(g.edgeLabel(k));
  j["vertex_labels"] = vlabels;
  j["edge_labels"] = elabels;
  return j;
}

Graph graphFromJson(const json& j) {
  if (!j.is_object() || !j.contains("num_vertices") || !j.contains("edges")) {
    throw input_error("graph JSON needs num_vertices and edges");
  }
  if (!j["num_vertices"].is_number_integer()) {
    throw input_error("graph JSON: num_vertices must be an integer");
  }
  int d = j["num_vertices"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (!j["edges"].is_array()) throw input_error("graph JSON: edges must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw input_error("graph JSON: each edge must be a pair of vertex indices");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  std::vector<std::string> vlabels, elabels;
  if (j.contains("vertex_labels")) {
    for (const auto& s : j["vertex_labels"]) vlabels.push_back(s.get<std::string>());
  }
  if (j.contains("edge_labels")) {
    for (const auto& s : j["edge_labels"]) elabels.push_back(s.get<std::string>());
  }
  return Graph(d, std::move(edges), std::move(vlabels), std::move(elabels));
}

Graph graphFromJsonString(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed graph JSON");
  return graphFromJson(j);
}

Graph graphFromJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return graphFromJsonString(buffer.str());
}

json binomialToJson(const Binomial& b) {
  return json{{"plus", toVector(b.plus)}, {"minus", toVector(b.minus)}};
}

json binomialsToJson(const std::vector<Binomial>& v) {
  auto arr = json::array();
  for (const auto& b : v) arr.push_back(binomialToJson(b));
  return arr;
}

json monomialIdealToJson(const MonomialIdeal& ideal) {
  auto gens = json::array();
  for (const auto& m : ideal.generators) gens.push_back(toVector(m));
  return json{{"generators", gens}, {"squarefree", allSquarefree(ideal)}};
}

json complexToJson(const SimplicialComplex& c) {
  auto facets = json::array();
  for (auto f : c.facets) facets.push_back(facetVertices(f));
  return json{{"num_vertices", c.num_vertices}, {"facets", facets}};
}

json hVectorToJson(const HVector& h) {
  return json{{"h", h.trimmed()}, {"dim", h.dim_ring}};
}

json latticePointToJson(const LatticePoint& p) {
  return json{{"coords", toVector(p.coords)}, {"degree", p.degree}};
}

json canonicalReportToJson(const CanonicalReport& r) {
  auto gens = json::array();
  for (const auto& p : r.generators.generators) gens.push_back(latticePointToJson(p));
  return json{
      {"generators", gens},
      {"cm_type", r.generators.cm_type},
      {"e_tilde", r.e_tilde},
      {"degree_bound", r.degree_bound_used},
      {"certified", r.certified},
      {"verdicts",
       {{"gorenstein", r.verdicts.gorenstein},
        {"almost_gorenstein", r.verdicts.almost_gorenstein},
        {"provisional", r.verdicts.provisional}}}};
}

std::string renderMonomial(const Monomial& m, const Graph& g) {
  std::string out;
  for (int k = 0; k < static_cast<int>(m.size()); ++k) {
    for (Int rep = 0; rep < m[k]; ++rep) {
      if (!out.empty()) out += "*";
      out += g.edgeLabel(k);
    }
  }
  return out.empty() ? "1" : out;
}

std::string renderBinomial(const Binomial& b, const Graph& g) {
  return renderMonomial(b.plus, g) + " - " + renderMonomial(b.minus, g);
}

}  // namespace edgering
