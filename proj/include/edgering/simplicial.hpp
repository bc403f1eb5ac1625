#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/groebner.hpp"
#include "edgering/types.hpp"

namespace edgering {

/// Simplicial complex given by its facets as vertex bitsets (at most 63
/// vertices). Facets are pairwise incomparable and sorted canonically.
struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<std::uint64_t> facets;

  int dimension() const;  // max facet size - 1
  bool isPure() const;
};

std::vector<int> facetVertices(std::uint64_t facet);
std::uint64_t facetMask(const std::vector<int>& vertices);

/// The complex whose non-faces are generated by the supports of a squarefree
/// monomial ideal: facets are complements of the minimal transversals of the
/// support hypergraph. Empty ideal gives the full simplex.
SimplicialComplex complexFromSquarefreeIdeal(const MonomialIdeal& ideal,
                                             int num_vars);

/// Closed-form facets of the initial complex of the Gn family, on the 3n
/// edge variables: {w_1..w_{j-1}} u {x_j,y_j,..,x_{n-1},y_{n-1}} u
/// {z_2..z_j} with w_i in {x_i,y_i}, plus the common vertices x_n, y_n, z_1.
SimplicialComplex gnFacets(const GnLabels& labels);

/// f_{-1}, f_0, ..., f_dim by exhaustive face enumeration (guarded at 25
/// vertices). `threads` > 1 splits the subset range with deterministic merge.
std::vector<Int> fVector(const SimplicialComplex& c, int threads = 1);

/// h-vector stored to full ring length (h_0..h_d); reporting trims zeros.
struct HVector {
  std::vector<Int> h;
  int dim_ring = 0;

  std::vector<Int> trimmed() const;
};

bool sameHVector(const HVector& a, const HVector& b);

/// Coefficients of sum_i f_{i-1} t^i (1-t)^{d-i}.
HVector hFromF(const std::vector<Int>& f, int d);

/// Vertices contained in every facet, and the complex with them removed.
struct ConePointSplit {
  std::vector<int> cone_points;
  SimplicialComplex reduced;          // on renumbered remaining vertices
  std::vector<int> vertex_map;        // reduced index -> original index
};

ConePointSplit suppressConePoints(const SimplicialComplex& c);

struct ShellingReport {
  std::vector<int> order;      // facet permutation that was checked
  std::vector<int> r_values;   // r_1 = 0; r_i = |C_i|
  bool valid = false;
  std::optional<int> failure_step;  // 1-based step where the check failed
};

/// Checks the shelling condition step by step: C_i = maximal proper faces of
/// F_i lying in the union of earlier facets; valid iff C_i is nonempty and
/// every earlier intersection F_i n F_j is below some member of C_i.
ShellingReport verifyShelling(const SimplicialComplex& c,
                              const std::vector<int>& order);

/// Facets sorted by their priority-sorted vertex tuples, first differing
/// position decides (smaller variable first).
std::vector<int> lexFacetOrder(const SimplicialComplex& c,
                               const MonomialOrder& order);

/// McMullen: h_i = #{ j : r_j = i }, padded to ring length d.
HVector hFromShelling(const ShellingReport& report, int d);

/// Exhaustive shelling search for complexes with at most 8 facets.
std::optional<std::vector<int>> findShellingExhaustive(
    const SimplicialComplex& c);

}  // namespace edgering
