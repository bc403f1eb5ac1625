#include "edgering/cone.hpp"

#include <algorithm>
#include <numeric>

#include "edgering/toric.hpp"

namespace edgering {

ConeDescription coneInequalities(const Graph& g) {
  ConeDescription cone;
  cone.dim = g.numVertices();
  for (int v : regularVertices(g)) {
    ConeInequality row;
    row.coeffs = IntVec::Zero(cone.dim);
    row.coeffs[v] = 1;
    row.kind = ConeInequality::Kind::RegularVertex;
    row.vertex = v;
    cone.rows.push_back(std::move(row));
  }
  for (auto& t : fundamentalSets(g)) {
    ConeInequality row;
    row.coeffs = IntVec::Zero(cone.dim);
    std::vector<bool> in_t(cone.dim, false);
    for (int v : t) in_t[v] = true;
    std::vector<bool> in_n(cone.dim, false);
    for (int v : t) {
      for (auto [u, e] : g.incident(v)) in_n[u] = true;
    }
    for (int v = 0; v < cone.dim; ++v) {
      if (in_t[v]) {
        row.coeffs[v] = -1;
      } else if (in_n[v]) {
        row.coeffs[v] = 1;
      }
    }
    row.kind = ConeInequality::Kind::FundamentalSet;
    row.fundamental = t;
    cone.rows.push_back(std::move(row));
  }
  return cone;
}

Position membership(const ConeDescription& cone, const IntVec& p) {
  if (p.size() != cone.dim) throw input_error("membership: dimension mismatch");
  bool tight = false;
  for (const auto& row : cone.rows) {
    Int value = row.coeffs.dot(p);
    if (value < 0) return Position::Outside;
    if (value == 0) tight = true;
  }
  return tight ? Position::Boundary : Position::Interior;
}

bool latticeMember(const Graph& g, const IntVec& p) {
  if (isBipartite(g)) {
    throw input_error("latticeMember: bipartite graphs are not supported here");
  }
  if (p.size() != g.numVertices()) throw input_error("latticeMember: dimension mismatch");
  return p.sum() % 2 == 0;
}

namespace {

void requireNonBipartite(const Graph& g, const char* where) {
  if (isBipartite(g)) {
    throw input_error(std::string(where) +
                      ": the cone is not full-dimensional for bipartite graphs");
  }
}

bool interiorLatticePoint(const ConeDescription& cone, const IntVec& p) {
  // even coordinate sum = lattice membership for the non-bipartite case
  return p.sum() % 2 == 0 && membership(cone, p) == Position::Interior;
}

}  // namespace

std::vector<LatticePoint> interiorLatticePoints(const Graph& g,
                                                const ConeDescription& cone,
                                                Int max_degree, Int guard) {
  requireNonBipartite(g, "interiorLatticePoints");
  if (max_degree < 1) throw input_error("interiorLatticePoints: max_degree must be >= 1");
  int d = cone.dim;
  Int budget = 2 * max_degree;
  // interior points have every coordinate >= 1 (the cone sits inside the
  // nonnegative orthant and is full-dimensional)
  if (budget < d) return {};
  Int candidates = binomialCoeff(budget, d);
  if (candidates > guard) {
    throw resource_error("interiorLatticePoints: candidate count exceeds guard");
  }
  std::vector<LatticePoint> points;
  IntVec p = IntVec::Ones(d);
  auto rec = [&](auto&& self, int coord, Int left) -> void {
    if (coord == d - 1) {
      for (Int extra = 0; extra <= left; ++extra) {
        p[coord] = 1 + extra;
        if (p.sum() % 2 == 0 && membership(cone, p) == Position::Interior) {
          points.push_back({p, p.sum() / 2});
        }
      }
      p[coord] = 1;
      return;
    }
    for (Int extra = 0; extra <= left; ++extra) {
      p[coord] = 1 + extra;
      self(self, coord + 1, left - extra);
    }
    p[coord] = 1;
  };
  rec(rec, 0, budget - d);
  std::sort(points.begin(), points.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return lexLess(a.coords, b.coords);
            });
  return points;
}

CanonicalGenerators canonicalGenerators(const Graph& g,
                                        const ConeDescription& cone,
                                        Int max_degree, Int guard) {
  auto occ = oddCycleCondition(g);
  if (!occ.satisfied) {
    throw input_error(
        "canonicalGenerators: the graph violates the odd cycle condition, "
        "so the edge ring is not normal");
  }
  CanonicalGenerators result;
  result.degree_bound = max_degree;
  auto interior = interiorLatticePoints(g, cone, max_degree, guard);
  for (auto& p : interior) {
    bool reducible = false;
    for (int k = 0; k < g.numEdges() && !reducible; ++k) {
      IntVec q = p.coords - incidenceVector(g, k);
      if ((q.array() >= 0).all() && interiorLatticePoint(cone, q)) {
        reducible = true;
      }
    }
    if (!reducible) result.generators.push_back(p);
  }
  result.cm_type = static_cast<int>(result.generators.size());
  return result;
}

Int eTilde(const HVector& h) {
  auto t = h.trimmed();
  if (t.empty() || t.back() == 0) {
    // trimmed() leaves at least h_0; a zero h-vector has no e~
    throw input_error("eTilde: invalid h-vector");
  }
  Int s = static_cast<Int>(t.size()) - 1;
  Int acc = 0;
  for (Int j = 0; j <= s - 1; ++j) {
    Int tail = 0, head = 0;
    for (Int k = 0; k <= j; ++k) {
      tail += t[s - k];
      head += t[k];
    }
    acc += tail - head;
  }
  return acc;
}

bool isSymmetric(const HVector& h) {
  auto t = h.trimmed();
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] != t[t.size() - 1 - i]) return false;
  }
  return true;
}

CanonicalReport makeCanonicalReport(const Graph& g, const HVector& h,
                                    Int max_degree, Int guard) {
  requireNonBipartite(g, "makeCanonicalReport");
  CanonicalReport report;
  report.degree_bound_used = max_degree > 0 ? max_degree : g.numVertices();
  auto cone = coneInequalities(g);
  report.generators = canonicalGenerators(g, cone, report.degree_bound_used, guard);
  report.e_tilde = eTilde(h);
  Int cm = report.generators.cm_type;
  // r(R) - 1 <= e~(R) holds unconditionally for the true type; a violation
  // here can only mean the degree bound truncated badly or h is wrong.
  report.certified =
      report.degree_bound_used >= g.numVertices() && cm - 1 <= report.e_tilde;
  report.verdicts.gorenstein = isSymmetric(h);
  report.verdicts.almost_gorenstein = (cm - 1 == report.e_tilde);
  report.verdicts.provisional = !report.certified;
  return report;
}

IntVec alphaVector(const GnLabels& labels, int j) {
  if (j < 1 || j > labels.n - 1) {
    throw input_error("alpha_j requires 1 <= j <= n-1");
  }
  IntVec alpha = IntVec::Ones(2 * labels.n + 1);
  alpha[labels.hub] = 2 * j;
  return alpha;
}

AlphaWitnessReport alphaWitnessChecks(int n, int j) {
  auto [g, labels] = makeGn(n);
  IntVec alpha = alphaVector(labels, j);
  auto cone = coneInequalities(g);
  AlphaWitnessReport report;
  report.interior_ok =
      membership(cone, alpha) == Position::Interior && latticeMember(g, alpha);
  report.irreducible_ok = true;
  for (int k = 0; k < g.numEdges(); ++k) {
    IntVec q = alpha - incidenceVector(g, k);
    if ((q.array() >= 0).all() && interiorLatticePoint(cone, q)) {
      report.irreducible_ok = false;
      break;
    }
  }
  return report;
}

}  // namespace edgering
