#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/simplicial.hpp"
#include "edgering/types.hpp"

namespace edgering {

struct ConeInequality {
  enum class Kind { RegularVertex, FundamentalSet };
  IntVec coeffs;          // row a: a . x >= 0 over the vertex space
  Kind kind;
  int vertex = -1;              // for RegularVertex
  std::vector<int> fundamental; // for FundamentalSet
};

/// Inequality description of the cone spanned by the edge incidence vectors:
/// x_u >= 0 per regular vertex u, and sum_{N(T)} x >= sum_T x per
/// fundamental set T.
struct ConeDescription {
  int dim = 0;  // ambient dimension = |V|
  std::vector<ConeInequality> rows;
};

ConeDescription coneInequalities(const Graph& g);

enum class Position { Outside, Boundary, Interior };

/// Interior: all rows strict. Boundary: all rows hold, some tight. Requires
/// the full-dimensional (non-bipartite) case; the caller asserts that.
Position membership(const ConeDescription& cone, const IntVec& p);

/// Lattice ZA_G for connected non-bipartite g: the even-coordinate-sum
/// sublattice. Throws input_error for bipartite input.
bool latticeMember(const Graph& g, const IntVec& p);

struct LatticePoint {
  IntVec coords;
  Int degree = 0;  // (sum of coordinates) / 2
};

/// All points of the relative interior of the cone meeting the lattice, with
/// degree <= max_degree, sorted by (degree, lex).
std::vector<LatticePoint> interiorLatticePoints(const Graph& g,
                                                const ConeDescription& cone,
                                                Int max_degree,
                                                Int guard = 30'000'000);

/// Minimal generators of the canonical module: interior lattice points p
/// such that no p - rho(e) is again one (sufficient by degree-1 generation
/// of the normal semigroup).
struct CanonicalGenerators {
  std::vector<LatticePoint> generators;
  int cm_type = 0;
  Int degree_bound = 0;
};

CanonicalGenerators canonicalGenerators(const Graph& g,
                                        const ConeDescription& cone,
                                        Int max_degree,
                                        Int guard = 30'000'000);

/// e~(R) = sum_{j=0}^{s-1} ((h_s+..+h_{s-j}) - (h_0+..+h_j)).
Int eTilde(const HVector& h);

bool isSymmetric(const HVector& h);

struct Verdicts {
  bool gorenstein = false;        // h symmetric
  bool almost_gorenstein = false; // cm_type - 1 == e~
  bool provisional = false;       // cm_type not certified
};

struct CanonicalReport {
  CanonicalGenerators generators;
  Int e_tilde = 0;
  Verdicts verdicts;
  bool certified = false;
  Int degree_bound_used = 0;
};

/// Requires the odd cycle condition (normality) and non-bipartite input.
/// max_degree <= 0 selects the default bound |V|.
CanonicalReport makeCanonicalReport(const Graph& g, const HVector& h,
                                    Int max_degree = 0,
                                    Int guard = 30'000'000);

/// alpha_j = sum_i (e_{1,i} + e_{2,i}) + 2j e' in the Gn vertex space.
IntVec alphaVector(const GnLabels& labels, int j);

struct AlphaWitnessReport {
  bool interior_ok = false;
  bool irreducible_ok = false;
};

/// Checks that alpha_j lies strictly inside the cone and is irreducible in
/// the canonical-generator sense. Requires 1 <= j <= n-1.
AlphaWitnessReport alphaWitnessChecks(int n, int j);

}  // namespace edgering
