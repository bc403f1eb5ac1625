#pragma once

#include <optional>
#include <vector>

#include "edgering/toric.hpp"
#include "edgering/types.hpp"

namespace edgering {

/// Graded lexicographic order: total degree first, ties broken by scanning
/// variables from the largest priority downward; the first variable with
/// differing exponents decides (more of a larger variable wins).
struct MonomialOrder {
  // priority[r] = variable with rank r, listed from SMALLEST to LARGEST.
  std::vector<int> priority;
};

/// Identity priority: variable 0 smallest ... variable m-1 largest.
MonomialOrder gradedLexOrder(int num_vars);
MonomialOrder gradedLexOrder(std::vector<int> priority);

enum class Cmp { LT, EQ, GT };

Cmp compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

/// Re-orients so plus is the leading monomial. Throws invariant_error when
/// the sides compare equal (impossible for a valid Binomial).
Binomial orient(const MonomialOrder& order, Binomial b);

Monomial leadingTerm(const MonomialOrder& order, const Binomial& b);

bool coprimeLeadingTerms(const Binomial& f, const Binomial& g);

/// S-polynomial of two oriented pure-difference binomials; again a pure
/// difference or zero, gcd-normalized and oriented.
std::optional<Binomial> sPair(const MonomialOrder& order, const Binomial& f,
                              const Binomial& g);

/// Normal form: repeatedly replaces any monomial whose value is divisible by
/// a basis leading term (first basis element in list order), until zero or
/// irreducible. Deterministic; independent of basis order when the basis is
/// a reduced Groebner basis.
std::optional<Binomial> reduce(const MonomialOrder& order,
                               std::optional<Binomial> b,
                               const std::vector<Binomial>& basis);

/// Buchberger with normal pair selection (lowest lcm degree first) and the
/// coprime-leading-terms criterion, followed by inter- and tail-reduction.
/// Returns the unique reduced Groebner basis, canonically sorted.
std::vector<Binomial> buchberger(const MonomialOrder& order,
                                 std::vector<Binomial> gens);

struct GroebnerCheck {
  bool ok = true;
  std::optional<Binomial> failing_spair;  // irreducible normal form witness
  int pair_i = -1, pair_j = -1;
};

GroebnerCheck isGroebnerBasis(const MonomialOrder& order,
                              const std::vector<Binomial>& gens);

/// Minimal generating set of a monomial ideal (no generator divides
/// another), canonically sorted.
struct MonomialIdeal {
  std::vector<Monomial> generators;
};

MonomialIdeal minimalize(std::vector<Monomial> gens);

bool allSquarefree(const MonomialIdeal& ideal);

/// Leading terms of a verified Groebner basis, minimalized. Throws
/// invariant_error when the Buchberger criterion fails for gb.
MonomialIdeal initialIdeal(const MonomialOrder& order,
                           const std::vector<Binomial>& gb);

}  // namespace edgering
