#include "doctest.h"
#include "fixtures.hpp"
#include "group_oracle.hpp"
#include "topolab/enumeration.hpp"
#include "topolab/topgroups.hpp"

using namespace topolab;
using fixtures::S;

using namespace group_oracle;

TEST_CASE("group validation") {
  CHECK_NOTHROW(FiniteGroup({{0, 1}, {1, 0}}, 0));
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}, 0), Error);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 0}}, 1), Error);
  CHECK_THROWS_AS(FiniteGroup({{0, 2}, {1, 0}}, 0), Error);
  // Latin square with identity 0 that is not associative.
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}, 0),
                  Error);
  const auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inverse(1) == 3);
}

TEST_CASE("setwise operations") {
  const auto z4 = FiniteGroup::cyclic(4);
  CHECK(setwise_product(z4, S({0}), S({0})) == S({0}));
  CHECK(setwise_product(z4, S({0, 1}), S({0, 1})) == S({0, 1, 2}));
  CHECK(setwise_inverse(z4, S({1, 3})) == S({1, 3}));
  CHECK(setwise_inverse(z4, S({1})) == S({3}));
}

TEST_CASE("classification examples") {
  const auto z2 = FiniteGroup::cyclic(2);
  CHECK(classify(z2, FiniteSpace::discrete(2)).verdict == GroupVerdict::Topological);
  CHECK(classify(z2, fixtures::sierpinski()).verdict == GroupVerdict::None);
  CHECK(classify(FiniteGroup::cyclic(3), FiniteSpace::trivial(3)).verdict == GroupVerdict::Topological);
  CHECK_THROWS_AS(classify(z2, FiniteSpace::discrete(3)), Error);
}

TEST_CASE("classification matches the preimage oracle on Z2, Z3, Z4 and Z2xZ2") {
  const FiniteGroup klein({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0);
  const std::vector<FiniteGroup> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), klein};
  for (const auto& g : groups) {
    for_each_topology(g.order(), [&](const FiniteSpace& t) {
      const auto c = classify(g, t);
      const auto d = classify_def(g, t);
      REQUIRE(c.left_translations_continuous == d.left_translations_continuous);
      REQUIRE(c.right_translations_continuous == d.right_translations_continuous);
      REQUIRE(c.multiplication_continuous == d.multiplication_continuous);
      REQUIRE(c.inversion_continuous == d.inversion_continuous);
      REQUIRE(c.verdict == d.verdict);
      if (c.verdict == GroupVerdict::Topological) REQUIRE(c.multiplication_continuous);
      if (c.multiplication_continuous) REQUIRE((c.left_translations_continuous && c.right_translations_continuous));
    });
  }
}

TEST_CASE("almost topological examples") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    const auto d = FiniteSpace::discrete(n);
    CHECK(is_almost_topological(g, d, d, {S({0})}).holds);
  }
  const auto z2 = FiniteGroup::cyclic(2);
  const auto r = is_almost_topological(z2, fixtures::sierpinski(), FiniteSpace::discrete(2), {S({0})});
  CHECK_FALSE(r.holds);
  CHECK(r.diagnostic.find("(ii) gamma is not weaker than tau") != std::string::npos);
  CHECK_THROWS_AS(is_almost_topological(z2, FiniteSpace::discrete(2), FiniteSpace::discrete(2), {}), Error);
  CHECK_THROWS_AS(is_almost_topological(z2, FiniteSpace::discrete(2), FiniteSpace::discrete(2), {S({1})}), Error);
}

TEST_CASE("almost topological forces the discrete topology on Z2 and Z3") {
  for (int n : {2, 3}) {
    const auto g = FiniteGroup::cyclic(n);
    const auto all = enumerate_topologies(n);
    for (const auto& t : all) {
      for (const auto& gamma : all) {
        for_each_subset(n, [&](PointSet u) {
          if (!u.contains(0)) return;
          const auto r = is_almost_topological(g, t, gamma, {u});
          if (r.holds) REQUIRE(t == FiniteSpace::discrete(n));
          REQUIRE(r.holds == r.diagnostic.empty());
        });
      }
    }
  }
}

TEST_CASE("group Hattori construction") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    const auto d = FiniteSpace::discrete(n);
    for_each_subset(n, [&](PointSet a) {
      const auto h = group_hattori(g, d, d, {S({0})}, a);
      REQUIRE(h.valid);
      REQUIRE(h.space == d);
    });
    // a = empty reproduces tau, a = G reproduces gamma.
    CHECK(group_hattori(g, d, d, {S({0})}, PointSet()).space == d);
    CHECK(group_hattori(g, d, d, {S({0})}, PointSet::full(n)).space == d);
  }
  const auto z2 = FiniteGroup::cyclic(2);
  CHECK_THROWS_AS(group_hattori(z2, fixtures::sierpinski(), FiniteSpace::discrete(2), {S({0})}, PointSet()), Error);
  const auto forced = group_hattori(z2, FiniteSpace::trivial(2), FiniteSpace::trivial(2), {S({0, 1})}, S({1}), true);
  CHECK(forced.space == FiniteSpace::trivial(2));
}

TEST_CASE("comparison smoke test in the discrete case") {
  const auto g = FiniteGroup::cyclic(3);
  const auto d = FiniteSpace::discrete(3);
  for_each_subset(3, [&](PointSet a1) {
    for_each_subset(3, [&](PointSet a2) {
      if (!a1.subset_of(a2)) return;
      const auto h1 = group_hattori(g, d, d, {S({0})}, a1).space;
      const auto h2 = group_hattori(g, d, d, {S({0})}, a2).space;
      REQUIRE(h2.coarser_or_equal(h1));
    });
  });
}
