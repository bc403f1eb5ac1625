#include "edgering/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <set>

namespace edgering {

int edgeRingDimension(const Graph& g) {
  return isBipartite(g) ? g.numVertices() - 1 : g.numVertices();
}

PipelineResult hPolynomialPipeline(const Graph& g, const PipelineOptions& opts) {
  PipelineResult result;
  int m = g.numEdges();
  int bound = opts.max_walk_length > 0 ? opts.max_walk_length : 2 * m;
  result.generators_certified = opts.generators_certified || bound >= 2 * m;
  if (!result.generators_certified) {
    result.warnings.push_back(
        "walk length bound " + std::to_string(bound) +
        " below 2|E|; the generator set may be incomplete");
  }
  result.generators = toricGenerators(g, std::max(bound, 4), opts.walk_step_guard);

  MonomialOrder order = opts.order ? *opts.order : gradedLexOrder(m);
  result.groebner_basis = buchberger(order, result.generators);
  result.initial = initialIdeal(order, result.groebner_basis);
  if (!allSquarefree(result.initial)) {
    throw invariant_error(
        "initial ideal is not squarefree under this order; "
        "no Stanley-Reisner model for the Hilbert series");
  }
  result.complex = complexFromSquarefreeIdeal(result.initial, m);

  result.dim = edgeRingDimension(g);
  if (result.complex.dimension() + 1 != result.dim) {
    throw invariant_error("complex dimension disagrees with the edge ring dimension");
  }

  result.f = fVector(result.complex, opts.threads);
  result.h = hFromF(result.f, result.dim);

  if (result.complex.isPure()) {
    auto perm = lexFacetOrder(result.complex, order);
    auto report = verifyShelling(result.complex, perm);
    if (report.valid) {
      result.shelling = report;
      result.h_shelling = hFromShelling(report, result.dim);
      if (!sameHVector(result.h, *result.h_shelling)) {
        result.sources_agree = false;
        throw invariant_error("shelling h-vector disagrees with the f-vector route");
      }
    } else {
      result.warnings.push_back("lex facet order is not a shelling; shelling route skipped");
    }
  } else {
    result.warnings.push_back("initial complex is not pure; shelling route skipped");
  }
  return result;
}

Int hilbertFunctionValue(const HVector& h, Int deg) {
  Int acc = 0;
  Int d = h.dim_ring;
  for (size_t i = 0; i < h.h.size(); ++i) {
    Int shift = deg - static_cast<Int>(i);
    if (shift < 0) break;
    acc += h.h[i] * binomialCoeff(shift + d - 1, d - 1);
  }
  return acc;
}

Int semigroupCount(const Graph& g, int deg, Int guard, int threads) {
  if (deg < 0) throw input_error("semigroupCount: degree must be >= 0");
  if (deg == 0) return 1;
  int m = g.numEdges();
  Int multisets = binomialCoeff(m + deg - 1, deg);
  if (multisets > guard) {
    throw resource_error("semigroupCount: multiset enumeration exceeds guard");
  }
  std::vector<IntVec> rho;
  for (int k = 0; k < m; ++k) rho.push_back(incidenceVector(g, k));

  auto enumerateFrom = [&](int first_edge) {
    std::set<std::vector<Int>> sums;
    IntVec acc = rho[first_edge];
    auto rec = [&](auto&& self, int min_edge, int left) -> void {
      if (left == 0) {
        sums.insert({acc.begin(), acc.end()});
        return;
      }
      for (int e = min_edge; e < m; ++e) {
        acc += rho[e];
        self(self, e, left - 1);
        acc -= rho[e];
      }
    };
    rec(rec, first_edge, deg - 1);
    return sums;
  };

  std::set<std::vector<Int>> all;
  threads = std::max(1, threads);
  if (threads == 1) {
    for (int e = 0; e < m; ++e) all.merge(enumerateFrom(e));
  } else {
    auto worker = [&](int offset) {
      std::set<std::vector<Int>> sums;
      for (int e = offset; e < m; e += threads) sums.merge(enumerateFrom(e));
      return sums;
    };
    std::vector<std::future<std::set<std::vector<Int>>>> parts;
    for (int t = 0; t < std::min(threads, m); ++t) {
      parts.push_back(std::async(std::launch::async, worker, t));
    }
    for (auto& p : parts) all.merge(p.get());
  }
  return static_cast<Int>(all.size());
}

HVector closedFormGnH(int n) {
  if (n < 2) throw input_error("closedFormGnH requires n >= 2");
  HVector result;
  result.dim_ring = 2 * n + 1;
  result.h.assign(result.dim_ring + 1, 0);
  for (int i = 0; i <= n; ++i) result.h[i] = binomialCoeff(n, i);
  result.h[1] -= 1;  // (1+t)^n - t
  return result;
}

HVector closedFormCompleteBipartiteH(int m, int n) {
  if (m < 1 || n < 1) throw input_error("closedFormCompleteBipartiteH requires m, n >= 1");
  HVector result;
  result.dim_ring = m + n - 1;
  result.h.assign(result.dim_ring + 1, 0);
  for (int i = 0; i <= std::min(m, n) && i <= result.dim_ring; ++i) {
    result.h[i] = binomialCoeff(m - 1, i) * binomialCoeff(n - 1, i);
  }
  return result;
}

HVector closedFormCompleteH(int m) {
  if (m < 3) throw input_error("closedFormCompleteH requires m >= 3");
  HVector result;
  result.dim_ring = m;
  result.h.assign(result.dim_ring + 1, 0);
  result.h[0] = 1;
  result.h[1] = static_cast<Int>(m) * (m - 3) / 2;
  for (int i = 2; i <= m / 2; ++i) result.h[i] = binomialCoeff(m, 2 * i);
  return result;
}

HVector closedFormH(const std::string& family, const std::vector<int>& params) {
  std::string id;
  for (char c : family) id += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (id == "gn") {
    if (params.size() != 1) throw input_error("closedFormH: gn takes one parameter");
    return closedFormGnH(params[0]);
  }
  if (id == "completebipartite" || id == "kmn") {
    if (params.size() != 2) throw input_error("closedFormH: completebipartite takes m, n");
    return closedFormCompleteBipartiteH(params[0], params[1]);
  }
  if (id == "complete" || id == "km") {
    if (params.size() != 1) throw input_error("closedFormH: complete takes one parameter");
    return closedFormCompleteH(params[0]);
  }
  throw input_error("closedFormH: unknown family '" + family + "'");
}

}  // namespace edgering
