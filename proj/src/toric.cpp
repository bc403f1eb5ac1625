#include "edgering/toric.hpp"

#include <algorithm>
#include <set>

namespace edgering {

Int totalDegree(const Monomial& m) { return m.sum(); }

bool divides(const Monomial& a, const Monomial& b) {
  return (a.array() <= b.array()).all();
}

bool isSquarefree(const Monomial& m) { return (m.array() <= 1).all(); }

Monomial monomialLcm(const Monomial& a, const Monomial& b) {
  return a.cwiseMax(b);
}

std::optional<Binomial> makeBinomial(Monomial plus, Monomial minus) {
  if (plus.size() != minus.size()) {
    throw input_error("makeBinomial: exponent length mismatch");
  }
  Monomial common = plus.cwiseMin(minus);
  plus -= common;
  minus -= common;
  int cmp = lexCompare(plus, minus);
  if (cmp == 0) return std::nullopt;
  if (cmp < 0) std::swap(plus, minus);
  return Binomial{std::move(plus), std::move(minus)};
}

bool sameBinomial(const Binomial& a, const Binomial& b) {
  return a.plus == b.plus && a.minus == b.minus;
}

bool binomialLess(const Binomial& a, const Binomial& b) {
  int cmp = lexCompare(a.plus, b.plus);
  if (cmp != 0) return cmp < 0;
  return lexCompare(a.minus, b.minus) < 0;
}

void sortBinomials(std::vector<Binomial>& v) {
  std::sort(v.begin(), v.end(), binomialLess);
}

IntVec incidenceVector(const Graph& g, int k) {
  if (k < 0 || k >= g.numEdges()) throw input_error("edge index out of range");
  IntVec v = IntVec::Zero(g.numVertices());
  v[g.edge(k).first] = 1;
  v[g.edge(k).second] = 1;
  return v;
}

IntVec relationVector(const Graph& g, const Binomial& b) {
  IntVec v = IntVec::Zero(g.numVertices());
  for (int k = 0; k < g.numEdges(); ++k) {
    Int c = b.plus[k] - b.minus[k];
    if (c != 0) v += c * incidenceVector(g, k);
  }
  return v;
}

std::vector<int> walkVertices(const Graph& g, const EvenClosedWalk& w) {
  const auto& seq = w.edges;
  if (seq.size() < 2 || seq.size() % 2 != 0) return {};
  for (int e : seq) {
    if (e < 0 || e >= g.numEdges()) throw input_error("walk edge index out of range");
  }
  // try both orientations of the first edge
  for (int first : {g.edge(seq[0]).first, g.edge(seq[0]).second}) {
    std::vector<int> verts{first};
    int at = first;
    bool ok = true;
    for (int e : seq) {
      auto [a, b] = g.edge(e);
      if (at == a) {
        at = b;
      } else if (at == b) {
        at = a;
      } else {
        ok = false;
        break;
      }
      verts.push_back(at);
    }
    if (ok && at == first) {
      verts.pop_back();  // closing vertex repeats the start
      return verts;
    }
  }
  return {};
}

bool isValidWalk(const Graph& g, const EvenClosedWalk& w) {
  return !walkVertices(g, w).empty();
}

std::optional<Binomial> walkBinomial(const Graph& g, const EvenClosedWalk& w) {
  if (!isValidWalk(g, w)) {
    throw input_error("walk fails the adjacency invariant");
  }
  Monomial plus = Monomial::Zero(g.numEdges());
  Monomial minus = Monomial::Zero(g.numEdges());
  for (size_t i = 0; i < w.edges.size(); ++i) {
    (i % 2 == 0 ? plus : minus)[w.edges[i]] += 1;
  }
  return makeBinomial(std::move(plus), std::move(minus));
}

namespace {

// Lexicographically smallest rotation of seq or of its reversal.
std::vector<int> canonicalCyclic(const std::vector<int>& seq) {
  std::vector<int> best;
  auto consider = [&](const std::vector<int>& s) {
    size_t n = s.size();
    for (size_t shift = 0; shift < n; ++shift) {
      std::vector<int> rot(n);
      for (size_t i = 0; i < n; ++i) rot[i] = s[(shift + i) % n];
      if (best.empty() || rot < best) best = std::move(rot);
    }
  };
  consider(seq);
  std::vector<int> rev(seq.rbegin(), seq.rend());
  consider(rev);
  return best;
}

}  // namespace

std::vector<EvenClosedWalk> enumerateEvenClosedWalks(const Graph& g, int max_len,
                                                     Int step_guard) {
  if (max_len < 4 || max_len % 2 != 0) {
    throw input_error("walk length bound must be even and >= 4");
  }
  std::set<std::vector<int>> canon;
  std::vector<int> use(g.numEdges(), 0);
  std::vector<int> seq;
  Int steps = 0;

  // The first edge of the DFS is the minimum edge index of the walk; every
  // walk is found this way for some base edge, and the canonical form
  // removes the remaining rotation/reflection duplicates.
  auto dfs = [&](auto&& self, int base_edge, int start_vertex, int at) -> void {
    if (++steps > step_guard) {
      throw resource_error("walk enumeration exceeded the step guard");
    }
    if (at == start_vertex && seq.size() >= 4 && seq.size() % 2 == 0) {
      canon.insert(canonicalCyclic(seq));
    }
    if (static_cast<int>(seq.size()) == max_len) return;
    for (auto [next, e] : g.incident(at)) {
      if (e < base_edge || use[e] >= 2) continue;
      use[e] += 1;
      seq.push_back(e);
      self(self, base_edge, start_vertex, next);
      seq.pop_back();
      use[e] -= 1;
    }
  };

  for (int e = 0; e < g.numEdges(); ++e) {
    auto [a, b] = g.edge(e);
    use[e] = 1;
    seq = {e};
    dfs(dfs, e, a, b);  // starting at b covers the a-first reflection too
    use[e] = 0;
  }
  std::vector<EvenClosedWalk> walks;
  walks.reserve(canon.size());
  for (auto& s : canon) walks.push_back({s});
  return walks;
}

std::vector<Binomial> primitivityFilter(std::vector<Binomial> binomials) {
  auto dividesSideBySide = [](const Binomial& f, const Binomial& b) {
    return (divides(f.plus, b.plus) && divides(f.minus, b.minus)) ||
           (divides(f.minus, b.plus) && divides(f.plus, b.minus));
  };
  std::vector<Binomial> kept;
  for (const auto& b : binomials) {
    bool primitive = true;
    for (const auto& f : binomials) {
      if (sameBinomial(f, b)) continue;
      if (dividesSideBySide(f, b)) {
        primitive = false;
        break;
      }
    }
    if (primitive) kept.push_back(b);
  }
  return kept;
}

std::vector<Binomial> toricGenerators(const Graph& g, int max_walk_length,
                                      Int step_guard) {
  auto walks = enumerateEvenClosedWalks(g, max_walk_length, step_guard);
  std::vector<Binomial> binomials;
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> seen;
  for (const auto& w : walks) {
    auto b = walkBinomial(g, w);
    if (!b) continue;
    std::vector<Int> p(b->plus.begin(), b->plus.end());
    std::vector<Int> m(b->minus.begin(), b->minus.end());
    if (seen.insert({std::move(p), std::move(m)}).second) {
      binomials.push_back(std::move(*b));
    }
  }
  auto primitive = primitivityFilter(std::move(binomials));
  sortBinomials(primitive);
  return primitive;
}

std::vector<Binomial> gnGenerators(const GnLabels& labels) {
  if (labels.n < 2) throw input_error("Gn generators require n >= 2");
  int m = 3 * labels.n;
  std::vector<Binomial> gens;
  for (int i = 1; i <= labels.n; ++i) {
    for (int j = i + 1; j <= labels.n; ++j) {
      Monomial plus = Monomial::Zero(m);
      Monomial minus = Monomial::Zero(m);
      plus[labels.xVar(i)] = 1;
      plus[labels.yVar(i)] = 1;
      plus[labels.zVar(j)] = 1;
      minus[labels.zVar(i)] = 1;
      minus[labels.xVar(j)] = 1;
      minus[labels.yVar(j)] = 1;
      gens.push_back(Binomial{std::move(plus), std::move(minus)});
    }
  }
  return gens;
}

}  // namespace edgering
