#include <algorithm>
#include <vector>

#include "doctest.h"
#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/standard.hpp"

using namespace gpd;

namespace {

bool has_violation(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) {
                       return v.find(needle) != std::string::npos;
                     });
}

// Largest order of an arrow under self-composition (loops only).
int max_arrow_order(const FiniteGroupoid& g) {
  int best = 1;
  for (int a = 0; a < g.num_arrows(); ++a) {
    if (g.src(a) != g.tgt(a)) continue;
    int order = 1;
    int x = a;
    while (!g.is_unit(x)) {
      x = g.comp(a, x);
      ++order;
    }
    best = std::max(best, order);
  }
  return best;
}

}  // namespace

TEST_SUITE("groupoid") {

TEST_CASE("pair groupoid tables") {
  FiniteGroupoid g = pair_groupoid(2);
  REQUIRE(g.num_objects() == 2);
  REQUIRE(g.num_arrows() == 4);
  // Arrow i*2+j runs from i to j.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(g.src(i * 2 + j) == i);
      CHECK(g.tgt(i * 2 + j) == j);
    }
  CHECK(g.unit(0) == 0);
  CHECK(g.unit(1) == 3);
  CHECK(g.inv(1) == 2);
  CHECK(g.inv(2) == 1);
  CHECK(g.inv(0) == 0);
  // comp(a, b) = b then a.
  CHECK(g.comp(3, 1) == 1);
  CHECK(g.comp(2, 1) == 0);
  CHECK(g.comp(1, 2) == 3);
  CHECK(g.comp(1, 0) == 1);
  CHECK(g.comp_or_neg(0, 1) == -1);
  CHECK_THROWS_AS(g.comp(0, 1), ValidationError);
  CHECK(g.hom(0, 1) == std::vector<int>{1});
  CHECK(g.arrows_from(0) == std::vector<int>{0, 1});
  CHECK(validate_groupoid(g).ok());
}

TEST_CASE("null groupoid is unit-only") {
  FiniteGroupoid g = null_groupoid(3);
  CHECK(g.num_objects() == 3);
  CHECK(g.num_arrows() == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(g.is_unit(a));
    CHECK(g.src(a) == a);
  }
  CHECK(validate_groupoid(g).ok());
}

TEST_CASE("cyclic group tables") {
  FiniteGroupoid g = cyclic_group(2);
  CHECK(g.num_objects() == 1);
  CHECK(g.num_arrows() == 2);
  CHECK(g.comp(1, 1) == 0);
  CHECK(validate_groupoid(g).ok());

  FiniteGroupoid z4 = cyclic_group(4);
  CHECK(z4.comp(3, 2) == 1);
  CHECK(z4.inv(1) == 3);
  CHECK(validate_groupoid(z4).ok());
}

TEST_CASE("symmetric group composition is the frozen table") {
  FiniteGroupoid s3 = symmetric_group_3();
  REQUIRE(s3.num_arrows() == 6);
  // Arrows in lexicographic one-line order: 012, 021, 102, 120, 201, 210.
  // comp(a, b) applies b first: (102) after (120) = (021),
  // (120) after (102) = (210).
  CHECK(s3.comp(2, 3) == 1);
  CHECK(s3.comp(3, 2) == 5);
  CHECK(s3.comp(3, 3) == 4);
  CHECK(s3.inv(3) == 4);
  CHECK(s3.inv(2) == 2);
  CHECK(validate_groupoid(s3).ok());
}

TEST_CASE("validator reports a deleted composition entry") {
  FiniteGroupoid g = pair_groupoid(2);
  std::vector<int> comp = g.comp_table();
  comp[3 * 4 + 1] = -1;  // delete the composable entry (3, 1)
  FiniteGroupoid bad(2, g.arrows(), g.units(), g.inverses(), comp);
  ValidationReport r = validate_groupoid(bad);
  CHECK_FALSE(r.ok());
  CHECK(has_violation(r, "comp undefined for composable pair (3, 1)"));
}

TEST_CASE("validator reports a corrupted inverse") {
  FiniteGroupoid g = cyclic_group(4);
  std::vector<int> inv = g.inverses();
  inv[1] = 1;  // true inverse of 1 is 3
  FiniteGroupoid bad(1, g.arrows(), g.units(), inv, g.comp_table());
  ValidationReport r = validate_groupoid(bad);
  CHECK_FALSE(r.ok());
  CHECK(has_violation(r, "inverse law"));
}

TEST_CASE("validator reports a broken unit") {
  FiniteGroupoid g = pair_groupoid(2);
  std::vector<int> units = g.units();
  units[1] = 1;  // arrow 1 is 0 -> 1, not a loop at 1
  FiniteGroupoid bad(2, g.arrows(), units, g.inverses(), g.comp_table());
  CHECK(has_violation(validate_groupoid(bad), "unit endpoints"));
}

TEST_CASE("constructor rejects structural garbage") {
  CHECK_THROWS_AS(FiniteGroupoid(1, {{0, 0}}, {0, 0}, {0}, {0}),
                  ValidationError);
  CHECK_THROWS_AS(FiniteGroupoid(1, {{0, 2}}, {0}, {0}, {0}), ValidationError);
  CHECK_THROWS_AS(FiniteGroupoid(1, {{0, 0}}, {0}, {3}, {0}), ValidationError);
}

TEST_CASE("classification strings") {
  CHECK(classify(pair_groupoid(2)).to_string() ==
        "banal principal transitive");
  CHECK(classify(null_groupoid(2)).to_string() ==
        "null principal plurigroup discrete_plurigroup");
  CHECK(classify(cyclic_group(3)).to_string() ==
        "transitive plurigroup group discrete_plurigroup");
  CHECK(classify(equivalence_relation(4, {0, 0, 1, 1})).to_string() ==
        "principal");
  GroupoidClass u = classify(disjoint_union(cyclic_group(2), pair_groupoid(2)));
  CHECK_FALSE(u.principal);
  CHECK_FALSE(u.transitive);
  CHECK(u.to_string() == "(none)");
  for (const FiniteGroupoid& g :
       {pair_groupoid(3), cyclic_group(4), symmetric_group_3(),
        null_groupoid(1)})
    CHECK(classify(g).lattice_consistent());
}

TEST_CASE("equivalence relation groupoid") {
  FiniteGroupoid g = equivalence_relation(4, {0, 0, 1, 1});
  CHECK(g.num_objects() == 4);
  CHECK(g.num_arrows() == 8);
  Orbits o = compute_orbits(g);
  REQUIRE(o.members.size() == 2);
  CHECK(o.members[0] == std::vector<int>{0, 1});
  CHECK(o.members[1] == std::vector<int>{2, 3});
  CHECK(validate_groupoid(g).ok());
}

TEST_CASE("action groupoid of the swap is the pair groupoid") {
  FiniteGroupoid a =
      action_groupoid(cyclic_group(2), 2, cyclic_action(2, {1, 0}));
  CHECK(a.num_objects() == 2);
  CHECK(a.num_arrows() == 4);
  CHECK(validate_groupoid(a).ok());
  CHECK(find_isomorphism(share(a), share(pair_groupoid(2))).has_value());
}

TEST_CASE("action groupoid on one point recovers the group") {
  FiniteGroupoid a = action_groupoid(cyclic_group(2), 1, {{0}, {0}});
  CHECK(find_isomorphism(share(a), share(cyclic_group(2))).has_value());
  CHECK_THROWS_AS(action_groupoid(cyclic_group(2), 2, {{1, 0}, {0, 1}}),
                  ValidationError);  // unit must act as the identity
  CHECK_THROWS_AS(action_groupoid(cyclic_group(2), 2, {{0, 1}, {0, 0}}),
                  ValidationError);  // not a permutation
}

TEST_CASE("orbits and vertex groups") {
  OrbitsAndVertexGroups p3 = orbits_and_vertex_groups(pair_groupoid(3));
  REQUIRE(p3.orbits.members.size() == 1);
  CHECK(p3.orbits.members[0] == std::vector<int>{0, 1, 2});
  CHECK(p3.vertex_groups[0].group->num_arrows() == 1);

  OrbitsAndVertexGroups z2 = orbits_and_vertex_groups(cyclic_group(2));
  REQUIRE(z2.orbits.members.size() == 1);
  CHECK(z2.vertex_groups[0].group->num_arrows() == 2);

  OrbitsAndVertexGroups u = orbits_and_vertex_groups(
      disjoint_union(cyclic_group(2), pair_groupoid(2)));
  REQUIRE(u.orbits.members.size() == 2);
  CHECK(u.vertex_groups[0].group->num_arrows() == 2);
  CHECK(u.vertex_groups[1].group->num_arrows() == 1);

  VertexGroup v = vertex_group_at(pair_groupoid(3), 1);
  CHECK(v.object == 1);
  CHECK(v.parent_arrows == std::vector<int>{4});  // 1*3+1
}

TEST_CASE("direct product and disjoint union sizes") {
  FiniteGroupoid k4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(k4.num_objects() == 1);
  CHECK(k4.num_arrows() == 4);
  CHECK(validate_groupoid(k4).ok());
  for (int a = 0; a < 4; ++a) CHECK(k4.inv(a) == a);

  FiniteGroupoid u = disjoint_union(cyclic_group(2), pair_groupoid(2));
  CHECK(u.num_objects() == 3);
  CHECK(u.num_arrows() == 6);
  CHECK(validate_groupoid(u).ok());

  FiniteGroupoid prod = direct_product(pair_groupoid(2), cyclic_group(2));
  CHECK(prod.num_objects() == 2);
  CHECK(prod.num_arrows() == 8);
  CHECK(validate_groupoid(prod).ok());
}

TEST_CASE("isomorphism search distinguishes the two groups of order four") {
  GroupoidPtr z4 = share(cyclic_group(4));
  GroupoidPtr k4 = share(direct_product(cyclic_group(2), cyclic_group(2)));
  // Independent census: Z/4 has an element of order 4, the Klein group none.
  CHECK(max_arrow_order(*z4) == 4);
  CHECK(max_arrow_order(*k4) == 2);
  CHECK_FALSE(find_isomorphism(z4, k4).has_value());
  CHECK(find_isomorphism(z4, z4).has_value());
}

TEST_CASE("identity is the unique automorphism search result on a point") {
  GroupoidPtr n1 = share(null_groupoid(1));
  auto iso = find_isomorphism(n1, n1);
  REQUIRE(iso.has_value());
  CHECK(iso->object_map() == std::vector<int>{0});
  CHECK(iso->arrow_map() == std::vector<int>{0});
}

TEST_CASE("set maps") {
  SetMap f(3, 2, {0, 1, 0});
  CHECK_FALSE(f.injective());
  CHECK(f.surjective());
  SetMap g(2, 3, {2, 0});
  CHECK(g.injective());
  CHECK_FALSE(g.surjective());
  CHECK(SetMap::identity(4).bijective());
  CHECK(g.then(f).image() == std::vector<int>{0, 0});
  CHECK_THROWS_AS(SetMap(2, 2, {0}), ValidationError);
  CHECK_THROWS_AS(SetMap(1, 1, {5}), ValidationError);
  CHECK_THROWS_AS(f.then(f), ValidationError);
}

TEST_CASE("orbital atlases") {
  OrbitalAtlas triv = canonical_atlas(share(null_groupoid(1)));
  CHECK(triv.quotient == SetMap::identity(1));

  OrbitalAtlas p2 = canonical_atlas(share(pair_groupoid(2)));
  CHECK(p2.quotient.codomain_size() == 1);

  GroupoidPtr u = share(disjoint_union(cyclic_group(2), pair_groupoid(2)));
  CHECK_NOTHROW(make_orbital_atlas(u, SetMap(3, 2, {0, 1, 1})));
  CHECK_NOTHROW(make_orbital_atlas(u, SetMap(3, 2, {1, 0, 0})));
  // Splitting one orbit across fibres is rejected.
  CHECK_THROWS_AS(make_orbital_atlas(u, SetMap(3, 2, {0, 0, 1})),
                  ValidationError);
  CHECK_THROWS_AS(
      make_orbital_atlas(share(pair_groupoid(2)), SetMap(2, 2, {0, 1})),
      ValidationError);
}

TEST_CASE("groupoid equality is table equality") {
  FiniteGroupoid a = pair_groupoid(2);
  FiniteGroupoid b = pair_groupoid(2);
  CHECK(same_groupoid(a, b));
  CHECK(a == b);
  CHECK_FALSE(same_groupoid(a, pair_groupoid(3)));
  CHECK_FALSE(same_groupoid(a, cyclic_group(4)));
}

}  // TEST_SUITE
