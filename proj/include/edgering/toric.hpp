#pragma once

#include <optional>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/types.hpp"

namespace edgering {

/// A monomial is its exponent vector over the edge variables.
using Monomial = IntVec;

Int totalDegree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
bool isSquarefree(const Monomial& m);
Monomial monomialLcm(const Monomial& a, const Monomial& b);

/// Pure difference plus - minus of two monomials; the only polynomial shape
/// this library ever needs. makeBinomial strips common factors; S-pairs keep
/// theirs (the classical formula) until reduction rewrites them.
struct Binomial {
  Monomial plus;
  Monomial minus;
};

/// Normalizes plus - minus (strips the common monomial factor, orients the
/// lexicographically larger side as plus). Empty result when the difference
/// is zero.
std::optional<Binomial> makeBinomial(Monomial plus, Monomial minus);

bool sameBinomial(const Binomial& a, const Binomial& b);
bool binomialLess(const Binomial& a, const Binomial& b);
void sortBinomials(std::vector<Binomial>& v);

inline bool operator==(const Binomial& a, const Binomial& b) {
  return sameBinomial(a, b);
}

/// 0/1 incidence vector of edge k over the vertex space.
IntVec incidenceVector(const Graph& g, int k);

/// sum_e (plus_e - minus_e) * rho(e); zero iff the binomial is a genuine
/// relation among the edge vectors.
IntVec relationVector(const Graph& g, const Binomial& b);

/// Closed walk given by its edge-index sequence. Valid when the sequence is
/// traversable: consecutive edges (cyclically) meet in the vertex the walk
/// passes through, and the walk returns to its start.
struct EvenClosedWalk {
  std::vector<int> edges;
};

/// The vertex sequence v_0, ..., v_{len-1} realizing the walk, or empty when
/// the sequence is not traversable or has odd length.
std::vector<int> walkVertices(const Graph& g, const EvenClosedWalk& w);

bool isValidWalk(const Graph& g, const EvenClosedWalk& w);

/// Odd-position edges to plus, even-position to minus, gcd-normalized.
/// Empty for degenerate walks (plus == minus). Throws input_error when the
/// walk fails the adjacency invariant.
std::optional<Binomial> walkBinomial(const Graph& g, const EvenClosedWalk& w);

/// All even closed walks of length 4..max_len using each edge at most twice,
/// deduplicated up to rotation, reflection and starting point. Primitive
/// walks never use an edge more than twice, so max_len >= 2|E| is exhaustive
/// for them.
std::vector<EvenClosedWalk> enumerateEvenClosedWalks(const Graph& g,
                                                     int max_len,
                                                     Int step_guard = 50'000'000);

/// Keeps exactly the binomials not side-by-side divided (in either
/// orientation) by a different member of the list.
std::vector<Binomial> primitivityFilter(std::vector<Binomial> binomials);

/// Defining binomials of the toric ideal from bounded walk enumeration:
/// enumerate, convert, drop degenerates and duplicates, filter primitivity,
/// sort canonically. Complete whenever max_walk_length covers all primitive
/// walks of g (always true at 2|E|).
std::vector<Binomial> toricGenerators(const Graph& g, int max_walk_length,
                                      Int step_guard = 50'000'000);

/// Closed-form generators of the Gn toric ideal:
/// x_i y_i z_j - z_i x_j y_j for 1 <= i < j <= n, in (i,j)-lex order.
std::vector<Binomial> gnGenerators(const GnLabels& labels);

}  // namespace edgering
