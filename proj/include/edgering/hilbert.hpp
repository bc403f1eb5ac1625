#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/groebner.hpp"
#include "edgering/simplicial.hpp"
#include "edgering/toric.hpp"
#include "edgering/types.hpp"

namespace edgering {

/// Krull dimension of the edge ring: |V| for connected non-bipartite input,
/// |V| - 1 for bipartite.
int edgeRingDimension(const Graph& g);

struct PipelineOptions {
  int max_walk_length = 0;   // 0: default 2|E|
  Int walk_step_guard = 50'000'000;
  std::optional<MonomialOrder> order;  // default: identity priority
  bool generators_certified = false;   // caller knows the bound is complete
  int threads = 1;
};

/// Everything the h-polynomial pipeline produces, kept for reporting.
struct PipelineResult {
  std::vector<Binomial> generators;
  bool generators_certified = false;
  std::vector<Binomial> groebner_basis;
  MonomialIdeal initial;
  SimplicialComplex complex;
  std::vector<Int> f;
  HVector h;                            // f-vector route
  std::optional<HVector> h_shelling;    // when the lex facet order shells
  std::optional<ShellingReport> shelling;
  int dim = 0;
  bool sources_agree = true;
  std::vector<std::string> warnings;
};

/// Chains generators -> Groebner basis -> initial ideal -> complex ->
/// f-vector -> h, plus the shelling route when the lex facet order verifies.
/// Throws invariant_error on route disagreement or a non-squarefree initial
/// ideal (no Stanley-Reisner model in that case).
PipelineResult hPolynomialPipeline(const Graph& g, const PipelineOptions& opts = {});

/// H(deg) = sum_i h_i * C(deg - i + d - 1, d - 1).
Int hilbertFunctionValue(const HVector& h, Int deg);

/// Number of distinct vertex-degree vectors of deg-multisets of edges: the
/// dimension of the degree-deg graded piece of the edge ring. Exhaustive.
Int semigroupCount(const Graph& g, int deg, Int guard = 20'000'000, int threads = 1);

HVector closedFormGnH(int n);
HVector closedFormCompleteBipartiteH(int m, int n);
HVector closedFormCompleteH(int m);

/// Closed-form h-vector for a family id, same naming as buildFamily.
HVector closedFormH(const std::string& family, const std::vector<int>& params);

}  // namespace edgering
