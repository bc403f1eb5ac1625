#include "edgering/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "edgering/cone.hpp"
#include "edgering/graph.hpp"
#include "edgering/hilbert.hpp"
#include "edgering/json_io.hpp"

namespace edgering {

namespace {

struct CommonOptions {
  std::string family;
  int n = 0, m = 0;
  std::string input;
  std::string order_spec;
  int max_walk_len = 0;
  Int max_degree = 0;
  int check_degrees = 2;
  std::string format = "json";
  bool suppress_cone_points = false;
  int threads = 0;
  bool search_shelling = false;
};

int envThreads() {
  const char* env = std::getenv("EDGERING_THREADS");
  if (!env) return 1;
  int value = std::atoi(env);
  return value >= 1 ? value : 1;
}

void addCommonOptions(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--family", o.family, "built-in family: gn | completebipartite | complete");
  cmd->add_option("--n", o.n, "family parameter n");
  cmd->add_option("--m", o.m, "family parameter m");
  cmd->add_option("--input", o.input, "graph JSON file");
  cmd->add_option("--order", o.order_spec,
                  "comma-separated variable list, smallest to largest");
  cmd->add_option("--max-walk-len", o.max_walk_len, "cap for the walk length bound");
  cmd->add_option("--max-degree", o.max_degree, "degree bound for canonical generators");
  cmd->add_option("--check-degrees", o.check_degrees,
                  "verify Hilbert values against the semigroup count up to this degree");
  cmd->add_option("--format", o.format, "json | csv | pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_flag("--suppress-cone-points", o.suppress_cone_points,
                "hide vertices common to all facets when printing complexes");
  cmd->add_option("--threads", o.threads, "worker threads (default EDGERING_THREADS or 1)");
  cmd->add_flag("--search-shelling", o.search_shelling,
                "exhaustive shelling search (<= 8 facets)");
}

struct GraphSetup {
  Graph graph;
  std::optional<GnLabels> gn;
  std::string family;       // empty for --input graphs
  std::vector<int> params;
  int walk_bound = 0;
  bool bound_certified = false;
};

std::vector<int> familyParams(const CommonOptions& o, const std::string& id) {
  if (id == "gn") return {o.n};
  if (id == "completebipartite" || id == "kmn") return {o.m, o.n};
  return {o.m};
}

// Walk length bounds known to cover every primitive walk of the family.
int documentedBound(const std::string& id, const std::vector<int>& params,
                    const Graph& g) {
  if (id == "gn") return 6;
  if (id == "completebipartite" || id == "kmn") {
    return std::max(4, 2 * std::min(params[0], params[1]));
  }
  if ((id == "complete" || id == "km") && params[0] <= 7) return 8;
  return 2 * g.numEdges();
}

GraphSetup resolveGraph(const CommonOptions& o) {
  if (o.family.empty() == o.input.empty()) {
    throw input_error("provide exactly one of --family or --input");
  }
  if (!o.input.empty()) {
    GraphSetup setup{graphFromJsonFile(o.input), std::nullopt, "", {}, 0, false};
    setup.walk_bound = 2 * setup.graph.numEdges();
    setup.bound_certified = true;
    if (o.max_walk_len > 0 && o.max_walk_len < setup.walk_bound) {
      setup.walk_bound = o.max_walk_len;
      setup.bound_certified = false;
    }
    return setup;
  }
  std::string id;
  for (char c : o.family) id += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto params = familyParams(o, id);
  auto [graph, gn] = buildFamily(id, params);
  GraphSetup setup{std::move(graph), gn, id, params, 0, false};
  setup.walk_bound = documentedBound(id, params, setup.graph);
  setup.bound_certified = true;
  if (o.max_walk_len > 0 && o.max_walk_len < setup.walk_bound) {
    setup.walk_bound = o.max_walk_len;
    setup.bound_certified = false;
  }
  return setup;
}

MonomialOrder resolveOrder(const CommonOptions& o, const Graph& g) {
  if (o.order_spec.empty()) return gradedLexOrder(g.numEdges());
  std::vector<int> priority;
  std::stringstream ss(o.order_spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    int found = -1;
    for (int k = 0; k < g.numEdges() && found < 0; ++k) {
      if (g.edgeLabel(k) == token) found = k;
    }
    if (found < 0) {
      try {
        size_t used = 0;
        int idx = std::stoi(token, &used);
        if (used == token.size() && idx >= 0 && idx < g.numEdges()) found = idx;
      } catch (const std::exception&) {
      }
    }
    if (found < 0) throw input_error("--order: unknown variable '" + token + "'");
    priority.push_back(found);
  }
  if (static_cast<int>(priority.size()) != g.numEdges()) {
    throw input_error("--order must list every edge variable exactly once");
  }
  return gradedLexOrder(std::move(priority));
}

PipelineOptions pipelineOptions(const CommonOptions& o, const GraphSetup& setup,
                                const Graph& g) {
  PipelineOptions opts;
  opts.max_walk_length = setup.walk_bound;
  opts.generators_certified = setup.bound_certified;
  opts.order = resolveOrder(o, g);
  opts.threads = o.threads > 0 ? o.threads : envThreads();
  return opts;
}

void flattenJson(const json& j, const std::string& path, std::ostream& out) {
  auto scalarArray = [](const json& a) {
    for (const auto& v : a) {
      if (v.is_structured()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flattenJson(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (j.is_array() && scalarArray(j)) {
    out << path << ",";
    for (size_t i = 0; i < j.size(); ++i) {
      if (i) out << ";";
      out << j[i].dump();
    }
    out << "\n";
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) {
      flattenJson(j[i], path + "." + std::to_string(i), out);
    }
  } else {
    out << path << "," << j.dump() << "\n";
  }
}

void emit(const json& j, const std::string& format, std::ostream& out,
          const std::string& pretty) {
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    flattenJson(j, "", out);
  } else {
    out << pretty;
  }
}

json hilbertChecks(const Graph& g, const HVector& h, int degrees, int threads) {
  auto checks = json::array();
  for (int deg = 0; deg <= degrees; ++deg) {
    Int expected = hilbertFunctionValue(h, deg);
    Int counted = semigroupCount(g, deg, 20'000'000, threads);
    checks.push_back({{"degree", deg},
                      {"hilbert", expected},
                      {"semigroup", counted},
                      {"equal", expected == counted}});
    if (expected != counted) {
      throw invariant_error("Hilbert value disagrees with the semigroup count at degree " +
                            std::to_string(deg));
    }
  }
  return checks;
}

class StageTimer {
 public:
  explicit StageTimer(std::ostream& err) : err_(err) {}
  template <typename F>
  auto run(const std::string& name, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto result = f();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    err_ << "timing " << name << "_ms=" << ms << "\n";
    lines_ += name + ": " + std::to_string(ms) + " ms\n";
    return result;
  }
  const std::string& summary() const { return lines_; }

 private:
  std::ostream& err_;
  std::string lines_;
};

std::string renderHVector(const HVector& h) {
  std::string out = "(";
  auto t = h.trimmed();
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

int cmdFamilies(const CommonOptions& o, std::ostream& out) {
  json j;
  j["families"] = json::array({
      {{"name", "gn"},
       {"parameters", "--n (n >= 2)"},
       {"description", "n triangles sharing one hub vertex; 2n+1 vertices, 3n edges"}},
      {{"name", "completebipartite"},
       {"parameters", "--m --n (m, n >= 1)"},
       {"description", "complete bipartite graph K_{m,n}"}},
      {{"name", "complete"},
       {"parameters", "--m (m >= 3)"},
       {"description", "complete graph K_m"}},
  });
  std::string pretty =
      "gn                 --n (n >= 2)      n triangles sharing one hub vertex\n"
      "completebipartite  --m --n (>= 1)    complete bipartite graph K_{m,n}\n"
      "complete           --m (m >= 3)      complete graph K_m\n";
  emit(j, o.format, out, pretty);
  return 0;
}

int cmdGroebner(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  auto setup = resolveGraph(o);
  const Graph& g = setup.graph;
  auto order = resolveOrder(o, g);
  auto gens = toricGenerators(g, std::max(setup.walk_bound, 4));
  auto gb = buchberger(order, gens);
  auto initial = initialIdeal(order, gb);
  json j;
  j["generators"] = binomialsToJson(gens);
  j["groebner_basis"] = binomialsToJson(gb);
  j["initial_ideal"] = monomialIdealToJson(initial);
  j["walk_bound"] = setup.walk_bound;
  j["bound_certified"] = setup.bound_certified;
  if (!setup.bound_certified) {
    err << "warning: walk bound may miss primitive walks; generators may be incomplete\n";
  }
  std::string pretty;
  pretty += "generators (" + std::to_string(gens.size()) + "):\n";
  for (const auto& b : gens) pretty += "  " + renderBinomial(b, g) + "\n";
  pretty += "reduced Groebner basis (" + std::to_string(gb.size()) + "):\n";
  for (const auto& b : gb) pretty += "  " + renderBinomial(b, g) + "\n";
  pretty += "initial ideal (" + std::to_string(initial.generators.size()) + "):\n";
  for (const auto& m : initial.generators) pretty += "  " + renderMonomial(m, g) + "\n";
  pretty += std::string("squarefree: ") + (allSquarefree(initial) ? "yes" : "no") + "\n";
  emit(j, o.format, out, pretty);
  return 0;
}

int cmdComplex(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  auto setup = resolveGraph(o);
  const Graph& g = setup.graph;
  auto opts = pipelineOptions(o, setup, g);
  auto result = hPolynomialPipeline(g, opts);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  SimplicialComplex shown = result.complex;
  json j;
  if (o.suppress_cone_points) {
    auto split = suppressConePoints(result.complex);
    shown = split.reduced;
    auto renamed = json::array();
    for (int v : split.cone_points) renamed.push_back(v);
    j["suppressed_cone_points"] = renamed;
  }
  j["complex"] = complexToJson(shown);
  j["pure"] = shown.isPure();
  j["dimension"] = shown.dimension();
  if (o.search_shelling) {
    auto found = findShellingExhaustive(shown);
    j["shelling_found"] = found.has_value();
    if (found) j["shelling_order"] = *found;
  }
  std::string pretty = "facets (" + std::to_string(shown.facets.size()) + "):\n";
  for (auto f : shown.facets) {
    pretty += " ";
    for (int v : facetVertices(f)) {
      pretty += " " + (o.suppress_cone_points ? "#" + std::to_string(v) : g.edgeLabel(v));
    }
    pretty += "\n";
  }
  emit(j, o.format, out, pretty);
  return 0;
}

int cmdHVector(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  auto setup = resolveGraph(o);
  const Graph& g = setup.graph;
  auto opts = pipelineOptions(o, setup, g);
  auto result = hPolynomialPipeline(g, opts);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  bool agree = result.sources_agree;
  if (!setup.family.empty()) {
    auto closed = closedFormH(setup.family, setup.params);
    if (!sameHVector(result.h, closed)) {
      throw invariant_error("pipeline h-vector disagrees with the closed form");
    }
  }
  json j;
  j["h"] = result.h.trimmed();
  j["dim"] = result.dim;
  j["sources_agree"] = agree;
  j["shelling_route"] = result.h_shelling.has_value();
  j["hilbert_checks"] =
      hilbertChecks(g, result.h, std::max(0, o.check_degrees), opts.threads);
  std::string pretty = "h = " + renderHVector(result.h) +
                       ", dim = " + std::to_string(result.dim) + "\n";
  emit(j, o.format, out, pretty);
  return 0;
}

int cmdCanonical(const CommonOptions& o, std::ostream& out, std::ostream& err,
                 bool verdicts_only) {
  auto setup = resolveGraph(o);
  const Graph& g = setup.graph;
  if (isBipartite(g)) {
    throw input_error("canonical/verdicts require a non-bipartite graph");
  }
  auto opts = pipelineOptions(o, setup, g);
  auto result = hPolynomialPipeline(g, opts);
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  auto report = makeCanonicalReport(g, result.h, o.max_degree);
  json j;
  if (verdicts_only) {
    j["gorenstein"] = report.verdicts.gorenstein;
    j["almost_gorenstein"] = report.verdicts.almost_gorenstein;
    j["cm_type"] = report.generators.cm_type;
    j["e_tilde"] = report.e_tilde;
  } else {
    j = canonicalReportToJson(report);
    j["h"] = result.h.trimmed();
  }
  std::string pretty;
  pretty += "cm_type = " + std::to_string(report.generators.cm_type) +
            ", e~ = " + std::to_string(report.e_tilde) + "\n";
  pretty += std::string("gorenstein: ") + (report.verdicts.gorenstein ? "yes" : "no") +
            ", almost gorenstein: " +
            (report.verdicts.almost_gorenstein ? "yes" : "no") +
            (report.verdicts.provisional ? " (provisional)" : "") + "\n";
  if (!verdicts_only) {
    pretty += "canonical generators:\n";
    for (const auto& p : report.generators.generators) {
      pretty += "  degree " + std::to_string(p.degree) + ": (";
      for (int v = 0; v < p.coords.size(); ++v) {
        if (v) pretty += ",";
        pretty += std::to_string(p.coords[v]);
      }
      pretty += ")\n";
    }
  }
  emit(j, o.format, out, pretty);
  return 0;
}

int cmdAnalyze(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  auto setup = resolveGraph(o);
  const Graph& g = setup.graph;
  auto opts = pipelineOptions(o, setup, g);
  StageTimer timer(err);

  auto result = timer.run("pipeline", [&] { return hPolynomialPipeline(g, opts); });
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";

  bool agree = result.sources_agree;
  if (!setup.family.empty()) {
    auto closed = closedFormH(setup.family, setup.params);
    if (!sameHVector(result.h, closed)) {
      throw invariant_error("pipeline h-vector disagrees with the closed form");
    }
  }

  json j;
  j["graph"] = {{"num_vertices", g.numVertices()},
                {"num_edges", g.numEdges()},
                {"bipartite", isBipartite(g)},
                {"odd_cycle_condition", oddCycleCondition(g).satisfied}};
  if (!setup.family.empty()) j["graph"]["family"] = setup.family;
  j["generators"] = static_cast<int>(result.generators.size());
  j["groebner_size"] = static_cast<int>(result.groebner_basis.size());
  j["initial_ideal"] = monomialIdealToJson(result.initial);
  j["facet_count"] = static_cast<int>(result.complex.facets.size());
  j["h"] = result.h.trimmed();
  j["dim"] = result.dim;
  j["shelling_route"] = result.h_shelling.has_value();
  j["hilbert_checks"] = timer.run("hilbert_checks", [&] {
    return hilbertChecks(g, result.h, std::max(0, o.check_degrees), opts.threads);
  });

  std::string canonical_pretty;
  if (!isBipartite(g) && oddCycleCondition(g).satisfied) {
    auto report = timer.run("canonical", [&] {
      return makeCanonicalReport(g, result.h, o.max_degree);
    });
    j["canonical"] = canonicalReportToJson(report);
    canonical_pretty = "cm_type = " + std::to_string(report.generators.cm_type) +
                       ", e~ = " + std::to_string(report.e_tilde) +
                       ", gorenstein: " + (report.verdicts.gorenstein ? "yes" : "no") +
                       ", almost gorenstein: " +
                       (report.verdicts.almost_gorenstein ? "yes" : "no") + "\n";
  }
  j["sources_agree"] = agree;
  if (!agree) throw invariant_error("h-vector sources disagree");

  std::string pretty;
  pretty += "graph: " + std::to_string(g.numVertices()) + " vertices, " +
            std::to_string(g.numEdges()) + " edges\n";
  pretty += "h = " + renderHVector(result.h) + ", dim = " + std::to_string(result.dim) + "\n";
  pretty += canonical_pretty;
  pretty += "stage timings:\n" + timer.summary();
  emit(j, o.format, out, pretty);
  return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"edge ring invariants: toric ideal, Groebner basis, initial complex, "
               "h-vector, canonical module"};
  app.require_subcommand(1);
  CommonOptions o;
  addCommonOptions(app.add_subcommand("analyze", "full report"), o);
  addCommonOptions(app.add_subcommand("hvector", "h-vector with Hilbert spot checks"), o);
  addCommonOptions(app.add_subcommand("groebner", "generators, Groebner basis, initial ideal"), o);
  addCommonOptions(app.add_subcommand("complex", "Stanley-Reisner complex of the initial ideal"), o);
  addCommonOptions(app.add_subcommand("canonical", "canonical module generators and type"), o);
  addCommonOptions(app.add_subcommand("verdicts", "Gorenstein / almost Gorenstein verdicts"), o);
  addCommonOptions(app.add_subcommand("families", "list built-in families"), o);

  std::vector<const char*> argv;
  argv.push_back("edgering");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  try {
    if (app.got_subcommand("families")) return cmdFamilies(o, out);
    if (app.got_subcommand("analyze")) return cmdAnalyze(o, out, err);
    if (app.got_subcommand("hvector")) return cmdHVector(o, out, err);
    if (app.got_subcommand("groebner")) return cmdGroebner(o, out, err);
    if (app.got_subcommand("complex")) return cmdComplex(o, out, err);
    if (app.got_subcommand("canonical")) return cmdCanonical(o, out, err, false);
    if (app.got_subcommand("verdicts")) return cmdCanonical(o, out, err, true);
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    err << "resource guard: " << e.what() << "\n";
    return 4;
  } catch (const invariant_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  }
  return 3;
}

}  // namespace edgering
