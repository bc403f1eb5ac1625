#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "edgering/cone.hpp"
#include "edgering/graph.hpp"
#include "edgering/hilbert.hpp"
#include "edgering/simplicial.hpp"
#include "edgering/toric.hpp"

namespace edgering {

// nlohmann::json keeps object keys sorted, which gives the byte-identical
// output the CLI promises.
using json = nlohmann::json;

json graphToJson(const Graph& g);
Graph graphFromJson(const json& j);
Graph graphFromJsonString(const std::string& text);
Graph graphFromJsonFile(const std::string& path);

json binomialToJson(const Binomial& b);
json binomialsToJson(const std::vector<Binomial>& v);

json monomialIdealToJson(const MonomialIdeal& ideal);

json complexToJson(const SimplicialComplex& c);

json hVectorToJson(const HVector& h);

json latticePointToJson(const LatticePoint& p);
json canonicalReportToJson(const CanonicalReport& r);

/// Human-readable monomial/binomial rendering using edge labels.
std::string renderMonomial(const Monomial& m, const Graph& g);
std::string renderBinomial(const Binomial& b, const Graph& g);

}  // namespace edgering
