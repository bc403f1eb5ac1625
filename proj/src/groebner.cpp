#include "edgering/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace edgering {

MonomialOrder gradedLexOrder(int num_vars) {
  MonomialOrder order;
  order.priority.resize(num_vars);
  std::iota(order.priority.begin(), order.priority.end(), 0);
  return order;
}

MonomialOrder gradedLexOrder(std::vector<int> priority) {
  std::vector<bool> seen(priority.size(), false);
  for (int v : priority) {
    if (v < 0 || v >= static_cast<int>(priority.size()) || seen[v]) {
      throw input_error("monomial order priority must be a permutation");
    }
    seen[v] = true;
  }
  return MonomialOrder{std::move(priority)};
}

Cmp compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size() ||
      a.size() != static_cast<Eigen::Index>(order.priority.size())) {
    throw input_error("compare: exponent length mismatch");
  }
  Int da = totalDegree(a), db = totalDegree(b);
  if (da != db) return da < db ? Cmp::LT : Cmp::GT;
  for (auto it = order.priority.rbegin(); it != order.priority.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] < b[*it] ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

Binomial orient(const MonomialOrder& order, Binomial b) {
  Cmp c = compare(order, b.plus, b.minus);
  if (c == Cmp::EQ) throw invariant_error("orient: sides compare equal");
  if (c == Cmp::LT) std::swap(b.plus, b.minus);
  return b;
}

Monomial leadingTerm(const MonomialOrder& order, const Binomial& b) {
  return orient(order, b).plus;
}

bool coprimeLeadingTerms(const Binomial& f, const Binomial& g) {
  return (f.plus.cwiseMin(g.plus).array() == 0).all();
}

std::optional<Binomial> sPair(const MonomialOrder& order, const Binomial& f,
                              const Binomial& g) {
  Monomial lcm = monomialLcm(f.plus, g.plus);
  // S = (lcm/f+)*f - (lcm/g+)*g; the lcm terms cancel and a pure difference
  // of the scaled tails remains. The classical formula keeps any common
  // factor of the two tails; reduction strips it when it rewrites.
  Monomial p = (lcm - g.plus) + g.minus;
  Monomial m = (lcm - f.plus) + f.minus;
  if ((p.array() < 0).any() || (m.array() < 0).any()) {
    throw invariant_error("sPair produced negative exponents");
  }
  if (p == m) return std::nullopt;
  return orient(order, Binomial{std::move(p), std::move(m)});
}

std::optional<Binomial> reduce(const MonomialOrder& order,
                               std::optional<Binomial> b,
                               const std::vector<Binomial>& basis) {
  if (!b) return std::nullopt;
  Binomial cur = orient(order, std::move(*b));
  // leading side first, then the tail; each replacement strictly decreases
  // the rewritten monomial, so this terminates
  bool reducing_plus = true;
  while (true) {
    Monomial& target = reducing_plus ? cur.plus : cur.minus;
    bool stepped = false;
    for (const auto& g : basis) {
      if (!divides(g.plus, target)) continue;
      target = (target - g.plus) + g.minus;
      auto next = makeBinomial(std::move(cur.plus), std::move(cur.minus));
      if (!next) return std::nullopt;
      cur = orient(order, std::move(*next));
      stepped = true;
      break;
    }
    if (!stepped) {
      if (!reducing_plus) return cur;
      reducing_plus = false;
    } else {
      reducing_plus = true;  // re-orientation may have changed the lead
    }
  }
}

namespace {

std::vector<Binomial> orientAll(const MonomialOrder& order,
                                std::vector<Binomial> gens) {
  for (auto& g : gens) g = orient(order, std::move(g));
  return gens;
}

// lcm-degree, then lcm, then indices: the deterministic pair queue order.
struct PairKey {
  Int degree;
  std::vector<Int> lcm;
  int i, j;
  bool operator<(const PairKey& o) const {
    return std::tie(degree, lcm, i, j) < std::tie(o.degree, o.lcm, o.i, o.j);
  }
};

PairKey makePairKey(const std::vector<Binomial>& basis, int i, int j) {
  Monomial lcm = monomialLcm(basis[i].plus, basis[j].plus);
  return PairKey{totalDegree(lcm), {lcm.begin(), lcm.end()}, i, j};
}

}  // namespace

std::vector<Binomial> buchberger(const MonomialOrder& order,
                                 std::vector<Binomial> gens) {
  std::vector<Binomial> basis = orientAll(order, std::move(gens));
  std::map<PairKey, std::pair<int, int>> queue;
  for (size_t j = 1; j < basis.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      queue.emplace(makePairKey(basis, static_cast<int>(i), static_cast<int>(j)),
                    std::make_pair(static_cast<int>(i), static_cast<int>(j)));
    }
  }
  while (!queue.empty()) {
    auto [i, j] = queue.begin()->second;
    queue.erase(queue.begin());
    if (coprimeLeadingTerms(basis[i], basis[j])) continue;
    auto s = sPair(order, basis[i], basis[j]);
    auto r = reduce(order, std::move(s), basis);
    if (!r) continue;
    basis.push_back(std::move(*r));
    int k = static_cast<int>(basis.size()) - 1;
    for (int i2 = 0; i2 < k; ++i2) {
      queue.emplace(makePairKey(basis, i2, k), std::make_pair(i2, k));
    }
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Binomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (!divides(basis[j].plus, basis[i].plus)) continue;
      if (basis[j].plus == basis[i].plus && j > i) continue;  // keep first of ties
      keep = false;
      break;
    }
    if (keep) minimal.push_back(basis[i]);
  }

  // tail-reduce each element against the others
  std::vector<Binomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Binomial> rest;
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) rest.push_back(minimal[j]);
    }
    auto r = reduce(order, minimal[i], rest);
    if (r) reduced.push_back(std::move(*r));
  }
  sortBinomials(reduced);
  return reduced;
}

GroebnerCheck isGroebnerBasis(const MonomialOrder& order,
                              const std::vector<Binomial>& gens) {
  GroebnerCheck check;
  auto basis = orientAll(order, gens);
  for (size_t j = 1; j < basis.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      if (coprimeLeadingTerms(basis[i], basis[j])) continue;
      auto r = reduce(order, sPair(order, basis[i], basis[j]), basis);
      if (r) {
        check.ok = false;
        check.failing_spair = std::move(*r);
        check.pair_i = static_cast<int>(i);
        check.pair_j = static_cast<int>(j);
        return check;
      }
    }
  }
  return check;
}

MonomialIdeal minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j) continue;
      if (!divides(gens[j], gens[i])) continue;
      if (gens[j] == gens[i] && j > i) continue;
      keep = false;
    }
    if (keep) minimal.push_back(gens[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Monomial& a, const Monomial& b) {
    Int da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db;
    return lexLess(a, b);
  });
  return MonomialIdeal{std::move(minimal)};
}

bool allSquarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [](const Monomial& m) { return isSquarefree(m); });
}

MonomialIdeal initialIdeal(const MonomialOrder& order,
                           const std::vector<Binomial>& gb) {
  auto check = isGroebnerBasis(order, gb);
  if (!check.ok) {
    throw invariant_error("initialIdeal: input fails the Buchberger criterion");
  }
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const auto& g : gb) leads.push_back(leadingTerm(order, g));
  return minimalize(std::move(leads));
}

}  // namespace edgering
