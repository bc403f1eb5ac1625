#include "edgering/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <thread>

namespace edgering {

int SimplicialComplex::dimension() const {
  int best = -1;
  for (auto f : facets) best = std::max(best, std::popcount(f) - 1);
  return best;
}

bool SimplicialComplex::isPure() const {
  if (facets.empty()) return true;
  int size = std::popcount(facets.front());
  for (auto f : facets) {
    if (std::popcount(f) != size) return false;
  }
  return true;
}

std::vector<int> facetVertices(std::uint64_t facet) {
  std::vector<int> v;
  while (facet) {
    int b = std::countr_zero(facet);
    v.push_back(b);
    facet &= facet - 1;
  }
  return v;
}

std::uint64_t facetMask(const std::vector<int>& vertices) {
  std::uint64_t m = 0;
  for (int v : vertices) m |= std::uint64_t{1} << v;
  return m;
}

namespace {

void checkVertexBudget(int num_vertices) {
  if (num_vertices < 0 || num_vertices > 63) {
    throw resource_error("simplicial complexes support at most 63 vertices");
  }
}

// All minimal transversals of the support hypergraph, by branching on the
// vertices of the first unhit support.
void minimalTransversals(const std::vector<std::uint64_t>& supports,
                         std::uint64_t chosen, std::uint64_t banned,
                         std::vector<std::uint64_t>& out) {
  const std::uint64_t* unhit = nullptr;
  for (const auto& s : supports) {
    if (!(s & chosen)) {
      unhit = &s;
      break;
    }
  }
  if (!unhit) {
    out.push_back(chosen);
    return;
  }
  std::uint64_t candidates = *unhit & ~banned;
  std::uint64_t used = 0;
  while (candidates) {
    std::uint64_t v = candidates & (~candidates + 1);
    candidates ^= v;
    // excluding previously-branched vertices keeps the search duplicate-free
    minimalTransversals(supports, chosen | v, banned | used, out);
    used |= v;
  }
}

}  // namespace

SimplicialComplex complexFromSquarefreeIdeal(const MonomialIdeal& ideal,
                                             int num_vars) {
  checkVertexBudget(num_vars);
  std::vector<std::uint64_t> supports;
  for (const auto& m : ideal.generators) {
    if (!isSquarefree(m)) {
      throw input_error("complexFromSquarefreeIdeal: generator is not squarefree");
    }
    if (m.size() != num_vars) {
      throw input_error("complexFromSquarefreeIdeal: generator length mismatch");
    }
    std::uint64_t s = 0;
    for (int v = 0; v < num_vars; ++v) {
      if (m[v] > 0) s |= std::uint64_t{1} << v;
    }
    if (s == 0) throw input_error("complexFromSquarefreeIdeal: unit generator");
    supports.push_back(s);
  }
  std::uint64_t all = num_vars == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << num_vars) - 1;
  std::vector<std::uint64_t> transversals;
  minimalTransversals(supports, 0, 0, transversals);
  // branching can emit non-minimal hitting sets; keep the minimal ones
  std::vector<std::uint64_t> facets;
  for (size_t i = 0; i < transversals.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < transversals.size() && minimal; ++j) {
      if (i != j && (transversals[j] & ~transversals[i]) == 0 &&
          (transversals[i] != transversals[j] || j < i)) {
        minimal = false;
      }
    }
    if (minimal) facets.push_back(all & ~transversals[i]);
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return SimplicialComplex{num_vars, std::move(facets)};
}

SimplicialComplex gnFacets(const GnLabels& labels) {
  if (labels.n < 2) throw input_error("gnFacets requires n >= 2");
  int n = labels.n;
  std::vector<std::uint64_t> facets;
  std::uint64_t common = facetMask({labels.xVar(n), labels.yVar(n), labels.zVar(1)});
  for (int j = 1; j <= n; ++j) {
    std::uint64_t middle = 0;
    for (int i = j; i <= n - 1; ++i) {
      middle |= facetMask({labels.xVar(i), labels.yVar(i)});
    }
    std::uint64_t zpart = 0;
    for (int k = 2; k <= j; ++k) zpart |= std::uint64_t{1} << labels.zVar(k);
    // one facet per choice of w_i in {x_i, y_i} for i < j
    for (int choice = 0; choice < (1 << (j - 1)); ++choice) {
      std::uint64_t wpart = 0;
      for (int i = 1; i <= j - 1; ++i) {
        int var = (choice >> (i - 1) & 1) ? labels.yVar(i) : labels.xVar(i);
        wpart |= std::uint64_t{1} << var;
      }
      facets.push_back(common | wpart | middle | zpart);
    }
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex{3 * n, std::move(facets)};
}

std::vector<Int> fVector(const SimplicialComplex& c, int threads) {
  if (c.num_vertices > 25) {
    throw resource_error("fVector: exhaustive enumeration supports <= 25 vertices");
  }
  int dim = c.dimension();
  std::uint64_t total = std::uint64_t{1} << c.num_vertices;
  auto countRange = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<Int> f(dim + 2, 0);
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (auto facet : c.facets) {
        if ((s & ~facet) == 0) {
          f[std::popcount(s)] += 1;
          break;
        }
      }
    }
    return f;
  };
  std::vector<Int> f(dim + 2, 0);
  threads = std::max(1, threads);
  if (threads == 1 || total < 4096) {
    f = countRange(0, total);
  } else {
    std::vector<std::future<std::vector<Int>>> parts;
    std::uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      parts.push_back(std::async(std::launch::async, countRange, lo, hi));
    }
    for (auto& p : parts) {
      auto part = p.get();
      for (size_t i = 0; i < part.size(); ++i) f[i] += part[i];
    }
  }
  return f;
}

std::vector<Int> HVector::trimmed() const {
  std::vector<Int> t = h;
  while (t.size() > 1 && t.back() == 0) t.pop_back();
  return t;
}

bool sameHVector(const HVector& a, const HVector& b) {
  return a.dim_ring == b.dim_ring && a.trimmed() == b.trimmed();
}

HVector hFromF(const std::vector<Int>& f, int d) {
  if (static_cast<int>(f.size()) != d + 1) {
    throw input_error("hFromF: need f_{-1}..f_{d-1}, d+1 entries");
  }
  // h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}
  HVector result;
  result.dim_ring = d;
  result.h.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    Int acc = 0;
    for (int i = 0; i <= k; ++i) {
      Int c = binomialCoeff(d - i, k - i) * f[i];
      acc += ((k - i) % 2 == 0) ? c : -c;
    }
    result.h[k] = acc;
  }
  return result;
}

ConePointSplit suppressConePoints(const SimplicialComplex& c) {
  ConePointSplit split;
  if (c.facets.empty()) {
    split.reduced = c;
    return split;
  }
  std::uint64_t common = ~std::uint64_t{0};
  for (auto f : c.facets) common &= f;
  std::vector<int> keep;
  for (int v = 0; v < c.num_vertices; ++v) {
    if (common >> v & 1) {
      split.cone_points.push_back(v);
    } else {
      keep.push_back(v);
    }
  }
  split.vertex_map = keep;
  std::vector<std::uint64_t> facets;
  for (auto f : c.facets) {
    std::uint64_t g = 0;
    for (size_t i = 0; i < keep.size(); ++i) {
      if (f >> keep[i] & 1) g |= std::uint64_t{1} << i;
    }
    facets.push_back(g);
  }
  std::sort(facets.begin(), facets.end());
  split.reduced = SimplicialComplex{static_cast<int>(keep.size()), std::move(facets)};
  return split;
}

ShellingReport verifyShelling(const SimplicialComplex& c,
                              const std::vector<int>& order) {
  if (!c.isPure()) throw input_error("verifyShelling: complex is not pure");
  size_t t = c.facets.size();
  if (order.size() != t) throw input_error("verifyShelling: order size mismatch");
  std::vector<bool> seen(t, false);
  for (int i : order) {
    if (i < 0 || i >= static_cast<int>(t) || seen[i]) {
      throw input_error("verifyShelling: order is not a permutation");
    }
    seen[i] = true;
  }
  ShellingReport report;
  report.order = order;
  report.r_values.assign(t, 0);
  report.valid = true;
  for (size_t step = 1; step < t; ++step) {
    std::uint64_t fi = c.facets[order[step]];
    // C = vertices v of F_i with F_i \ {v} below some earlier facet
    std::uint64_t candidates = 0;
    for (auto vs = fi; vs;) {
      std::uint64_t v = vs & (~vs + 1);
      vs ^= v;
      for (size_t k = 0; k < step; ++k) {
        if (((fi & ~v) & ~c.facets[order[k]]) == 0) {
          candidates |= v;
          break;
        }
      }
    }
    bool covered = candidates != 0;
    for (size_t j = 0; j < step && covered; ++j) {
      // F_i n F_j below F_i \ {v} for some candidate v, i.e. v outside F_j
      if ((candidates & ~c.facets[order[j]]) == 0) covered = false;
    }
    if (!covered) {
      report.valid = false;
      report.failure_step = static_cast<int>(step) + 1;
      report.r_values.clear();
      return report;
    }
    report.r_values[step] = std::popcount(candidates);
  }
  return report;
}

std::vector<int> lexFacetOrder(const SimplicialComplex& c,
                               const MonomialOrder& order) {
  if (static_cast<int>(order.priority.size()) != c.num_vertices) {
    throw input_error("lexFacetOrder: priority length mismatch");
  }
  std::vector<int> rank(c.num_vertices);
  for (int r = 0; r < c.num_vertices; ++r) rank[order.priority[r]] = r;
  auto key = [&](std::uint64_t facet) {
    std::vector<int> tuple;
    for (int v : facetVertices(facet)) tuple.push_back(rank[v]);
    std::sort(tuple.begin(), tuple.end());
    return tuple;
  };
  std::vector<std::vector<int>> keys;
  keys.reserve(c.facets.size());
  for (auto f : c.facets) keys.push_back(key(f));
  std::vector<int> perm(c.facets.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  return perm;
}

HVector hFromShelling(const ShellingReport& report, int d) {
  if (!report.valid) throw input_error("hFromShelling: report is not a shelling");
  HVector result;
  result.dim_ring = d;
  result.h.assign(d + 1, 0);
  for (int r : report.r_values) {
    if (r > d) throw input_error("hFromShelling: r-value exceeds dimension");
    result.h[r] += 1;
  }
  return result;
}

std::optional<std::vector<int>> findShellingExhaustive(
    const SimplicialComplex& c) {
  if (c.facets.size() > 8) {
    throw resource_error("findShellingExhaustive supports at most 8 facets");
  }
  size_t t = c.facets.size();
  std::vector<int> order;
  std::vector<bool> used(t, false);
  auto dfs = [&](auto&& self) -> bool {
    if (order.size() == t) return true;
    for (size_t f = 0; f < t; ++f) {
      if (used[f]) continue;
      order.push_back(static_cast<int>(f));
      // prefix validity: full re-check is cheap at <= 8 facets
      std::vector<int> prefix = order;
      bool ok = true;
      if (order.size() >= 2) {
        std::vector<std::uint64_t> sub;
        for (int i : prefix) sub.push_back(c.facets[i]);
        SimplicialComplex head{c.num_vertices, sub};
        std::vector<int> idorder(prefix.size());
        for (size_t i = 0; i < prefix.size(); ++i) idorder[i] = static_cast<int>(i);
        ok = verifyShelling(head, idorder).valid;
      }
      used[f] = true;
      if (ok && self(self)) return true;
      used[f] = false;
      order.pop_back();
    }
    return false;
  };
  if (dfs(dfs)) return order;
  return std::nullopt;
}

}  // namespace edgering
