#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "edgering/simplicial.hpp"
#include "testsupport.hpp"

using namespace edgering;
namespace ts = edgering::testsupport;

namespace {

SimplicialComplex gnInitialComplex(int n) {
  auto [g, labels] = makeGn(n);
  auto order = gradedLexOrder(3 * n);
  auto gb = buchberger(order, gnGenerators(labels));
  return complexFromSquarefreeIdeal(initialIdeal(order, gb), 3 * n);
}

std::multiset<int> deltaMultiset(int n) {
  auto complex = gnInitialComplex(n);
  auto perm = lexFacetOrder(complex, gradedLexOrder(3 * n));
  auto report = verifyShelling(complex, perm);
  REQUIRE(report.valid);
  return {report.r_values.begin() + 1, report.r_values.end()};
}

}  // namespace

TEST_CASE("complex from a squarefree ideal") {
  // single cubic non-face x1*y1*z2 on the 6 variables of the n=2 ring
  MonomialIdeal ideal{{ts::monomialOf(6, {{0, 1}, {1, 1}, {5, 1}})}};
  auto c = complexFromSquarefreeIdeal(ideal, 6);
  REQUIRE(c.facets.size() == 3);
  std::set<std::uint64_t> facets(c.facets.begin(), c.facets.end());
  CHECK(facets.count(facetMask({1, 2, 3, 4, 5})));  // drop x1
  CHECK(facets.count(facetMask({0, 2, 3, 4, 5})));  // drop y1
  CHECK(facets.count(facetMask({0, 1, 2, 3, 4})));  // drop z2

  auto full = complexFromSquarefreeIdeal(MonomialIdeal{}, 3);
  REQUIRE(full.facets.size() == 1);
  CHECK(full.facets[0] == facetMask({0, 1, 2}));

  // {ab, cd}: the four mixed pairs
  MonomialIdeal two{{ts::monomialOf(4, {{0, 1}, {1, 1}}),
                     ts::monomialOf(4, {{2, 1}, {3, 1}})}};
  auto mixed = complexFromSquarefreeIdeal(two, 4);
  std::set<std::uint64_t> expect{facetMask({0, 2}), facetMask({0, 3}),
                                 facetMask({1, 2}), facetMask({1, 3})};
  CHECK(std::set<std::uint64_t>(mixed.facets.begin(), mixed.facets.end()) == expect);

  MonomialIdeal bad{{ts::monomialOf(2, {{0, 2}})}};
  CHECK_THROWS_AS(complexFromSquarefreeIdeal(bad, 2), input_error);
  MonomialIdeal unit{{ts::monomialOf(2, {})}};
  CHECK_THROWS_AS(complexFromSquarefreeIdeal(unit, 2), input_error);
}

TEST_CASE("gn facets match the computed initial complex") {
  for (int n = 2; n <= 6; ++n) {
    auto [g, labels] = makeGn(n);
    auto closed = gnFacets(labels);
    auto computed = gnInitialComplex(n);
    CHECK(closed.num_vertices == computed.num_vertices);
    CHECK(closed.facets == computed.facets);
    CHECK(static_cast<int>(closed.facets.size()) == (1 << n) - 1);
    CHECK(closed.isPure());
    for (auto f : closed.facets) {
      CHECK(std::popcount(f) == 2 * n + 1);
    }
  }
}

TEST_CASE("f-vectors") {
  SimplicialComplex simplex{3, {facetMask({0, 1, 2})}};
  CHECK(fVector(simplex) == std::vector<Int>{1, 3, 3, 1});

  SimplicialComplex boundary{3, {facetMask({0, 1}), facetMask({0, 2}), facetMask({1, 2})}};
  CHECK(fVector(boundary) == std::vector<Int>{1, 3, 3});

  CHECK(fVector(gnInitialComplex(2)) == std::vector<Int>{1, 6, 15, 19, 12, 3});
}

TEST_CASE("f-vector is independent of the thread count") {
  auto c = gnInitialComplex(3);
  auto reference = fVector(c, 1);
  CHECK(fVector(c, 3) == reference);
  CHECK(fVector(c, 8) == reference);
}

TEST_CASE("h from f") {
  CHECK(hFromF({1, 3, 3, 1}, 3).trimmed() == std::vector<Int>{1});
  CHECK(hFromF({1, 3, 3}, 2).h == std::vector<Int>{1, 1, 1});
  CHECK(hFromF({1, 6, 15, 19, 12, 3}, 5).h == std::vector<Int>{1, 1, 1, 0, 0, 0});
  CHECK_THROWS_AS(hFromF({1, 3, 3}, 5), input_error);
}

TEST_CASE("lex facet order on the n=2 complex") {
  auto c = gnInitialComplex(2);
  auto perm = lexFacetOrder(c, gradedLexOrder(6));
  REQUIRE(perm.size() == 3);
  // {x1,y1} < {x1,z2} < {y1,z2}, each carrying the cone points x2,y2,z1
  CHECK(c.facets[perm[0]] == facetMask({0, 1, 2, 3, 4}));
  CHECK(c.facets[perm[1]] == facetMask({0, 2, 3, 4, 5}));
  CHECK(c.facets[perm[2]] == facetMask({1, 2, 3, 4, 5}));

  SimplicialComplex one{3, {facetMask({0, 2})}};
  CHECK(lexFacetOrder(one, gradedLexOrder(3)) == std::vector<int>{0});
}

TEST_CASE("facets split into the x1 block then the y1 block") {
  for (int n = 2; n <= 5; ++n) {
    auto [g, labels] = makeGn(n);
    auto c = gnInitialComplex(n);
    auto perm = lexFacetOrder(c, gradedLexOrder(3 * n));
    int t = static_cast<int>(perm.size());
    REQUIRE(t == (1 << n) - 1);
    std::uint64_t x1 = std::uint64_t{1} << labels.xVar(1);
    std::uint64_t y1 = std::uint64_t{1} << labels.yVar(1);
    // facet bijection: F_{(t+1)/2 + i} = (F_{i+1} \ {x1}) u {y1}
    int half = (t + 1) / 2;
    for (int i = 1; i <= (t - 1) / 2; ++i) {
      std::uint64_t left = c.facets[perm[i]];  // F_{i+1}
      std::uint64_t right = c.facets[perm[half + i - 1]];
      CHECK((left & x1) != 0);
      CHECK(right == ((left & ~x1) | y1));
    }
  }
}

TEST_CASE("shelling verification on the initial complexes") {
  auto c2 = gnInitialComplex(2);
  auto report = verifyShelling(c2, lexFacetOrder(c2, gradedLexOrder(6)));
  CHECK(report.valid);
  CHECK(report.r_values == std::vector<int>{0, 1, 2});

  CHECK(deltaMultiset(3) == std::multiset<int>{1, 1, 2, 2, 2, 3});
}

TEST_CASE("delta recursion and facet counts") {
  std::map<int, std::multiset<int>> delta;
  for (int n = 2; n <= 5; ++n) delta[n] = deltaMultiset(n);
  for (int n = 2; n <= 4; ++n) {
    std::multiset<int> expected{1, 2};
    for (int r : delta[n]) expected.insert(r);
    for (int r : delta[n]) expected.insert(r + 1);
    CHECK(delta[n + 1] == expected);
    // t_{n+1} = 1 + 2 t_n with t_n = 2^n - 1
    CHECK(delta[n + 1].size() + 1 == 2 * (delta[n].size() + 1) + 1);
  }
}

TEST_CASE("shelling failures are reported") {
  SimplicialComplex disjoint{4, {facetMask({0, 1}), facetMask({2, 3})}};
  auto report = verifyShelling(disjoint, {0, 1});
  CHECK_FALSE(report.valid);
  CHECK(report.failure_step == 2);
  auto reversed = verifyShelling(disjoint, {1, 0});
  CHECK_FALSE(reversed.valid);

  SimplicialComplex nonpure{3, {facetMask({0, 1}), facetMask({2})}};
  CHECK_THROWS_AS(verifyShelling(nonpure, {0, 1}), input_error);

  auto c2 = gnInitialComplex(2);
  CHECK_THROWS_AS(verifyShelling(c2, {0, 1}), input_error);     // not a permutation
  CHECK_THROWS_AS(verifyShelling(c2, {0, 0, 1}), input_error);  // repeated entry
}

TEST_CASE("h from shelling") {
  ShellingReport r;
  r.valid = true;
  r.r_values = {0, 1, 2};
  CHECK(hFromShelling(r, 5).h == std::vector<Int>{1, 1, 1, 0, 0, 0});

  ShellingReport single;
  single.valid = true;
  single.r_values = {0};
  CHECK(hFromShelling(single, 3).h == std::vector<Int>{1, 0, 0, 0});

  ShellingReport delta3;
  delta3.valid = true;
  delta3.r_values = {0, 1, 1, 2, 2, 2, 3};
  CHECK(hFromShelling(delta3, 7).trimmed() == std::vector<Int>{1, 2, 3, 1});

  ShellingReport invalid;
  invalid.valid = false;
  CHECK_THROWS_AS(hFromShelling(invalid, 3), input_error);
}

TEST_CASE("both h routes agree on the Gn complexes") {
  for (int n = 2; n <= 6; ++n) {
    auto c = gnInitialComplex(n);
    int d = 2 * n + 1;
    auto via_f = hFromF(fVector(c), d);
    auto report = verifyShelling(c, lexFacetOrder(c, gradedLexOrder(3 * n)));
    REQUIRE(report.valid);
    auto via_shelling = hFromShelling(report, d);
    CHECK(sameHVector(via_f, via_shelling));
  }
}

TEST_CASE("cone points preserve the h-vector") {
  for (int n = 2; n <= 4; ++n) {
    auto [g, labels] = makeGn(n);
    auto c = gnInitialComplex(n);
    auto split = suppressConePoints(c);
    std::set<int> expected{labels.xVar(n), labels.yVar(n), labels.zVar(1)};
    CHECK(std::set<int>(split.cone_points.begin(), split.cone_points.end()) == expected);
    int d = 2 * n + 1;
    auto full = hFromF(fVector(c), d);
    auto reduced = hFromF(fVector(split.reduced), d - 3);
    CHECK(full.trimmed() == reduced.trimmed());
  }
}

TEST_CASE("exhaustive shelling search") {
  SimplicialComplex disjoint{4, {facetMask({0, 1}), facetMask({2, 3})}};
  CHECK_FALSE(findShellingExhaustive(disjoint).has_value());

  auto c2 = gnInitialComplex(2);
  auto found = findShellingExhaustive(c2);
  REQUIRE(found.has_value());
  CHECK(verifyShelling(c2, *found).valid);

  SimplicialComplex big{10, {}};
  for (int i = 0; i < 9; ++i) big.facets.push_back(facetMask({i, i + 1}));
  CHECK_THROWS_AS(findShellingExhaustive(big), resource_error);
}

TEST_CASE("resource guards on large complexes") {
  SimplicialComplex wide{30, {(std::uint64_t{1} << 30) - 1}};
  CHECK_THROWS_AS(fVector(wide), resource_error);
  CHECK_THROWS_AS(complexFromSquarefreeIdeal(MonomialIdeal{}, 70), resource_error);
  CHECK_THROWS_AS(binomialCoeff(1000, 500), resource_error);
}

TEST_CASE("dimension and purity") {
  SimplicialComplex c{4, {facetMask({0, 1, 2}), facetMask({2, 3})}};
  CHECK(c.dimension() == 2);
  CHECK_FALSE(c.isPure());
  CHECK(SimplicialComplex{2, {facetMask({0}), facetMask({1})}}.isPure());
}
