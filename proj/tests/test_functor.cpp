#include <optional>
#include <vector>

#include "doctest.h"
#include "gpd/functor.hpp"
#include "gpd/standard.hpp"

using namespace gpd;

namespace {

bool has_violation(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) {
                       return v.find(needle) != std::string::npos;
                     });
}

GroupoidPtr p2() {
  static GroupoidPtr g = share(pair_groupoid(2));
  return g;
}
GroupoidPtr n1() {
  static GroupoidPtr g = share(null_groupoid(1));
  return g;
}
GroupoidPtr z2() {
  static GroupoidPtr g = share(cyclic_group(2));
  return g;
}
GroupoidPtr z4() {
  static GroupoidPtr g = share(cyclic_group(4));
  return g;
}

Functor collapse_p2() { return Functor(p2(), n1(), {0, 0}, {0, 0, 0, 0}); }
Functor swap_p2() { return Functor(p2(), p2(), {1, 0}, {3, 2, 1, 0}); }
Functor mod2() { return Functor(z4(), z2(), {0}, {0, 1, 0, 1}); }
Functor unit_embedding_p2(int obj) {
  return Functor(n1(), p2(), {obj}, {p2()->unit(obj)});
}
Functor action_projection() {
  GroupoidPtr a = share(
      action_groupoid(cyclic_group(2), 2, cyclic_action(2, {1, 0})));
  // Arrow (a, x) has id a*2+x and projects to the group arrow a.
  return Functor(a, z2(), {0, 0}, {0, 0, 1, 1});
}

}  // namespace

TEST_SUITE("functor") {

TEST_CASE("validation accepts the identity and the swap") {
  CHECK(validate_functor(Functor::identity(p2())).ok());
  CHECK(validate_functor(swap_p2()).ok());
  CHECK(validate_functor(collapse_p2()).ok());
  CHECK(validate_functor(mod2()).ok());
  CHECK(validate_functor(action_projection()).ok());
}

TEST_CASE("validation reports endpoint and composition failures") {
  // Object swap with the arrow map left as the identity.
  Functor bad_ends(p2(), p2(), {1, 0}, {0, 1, 2, 3});
  CHECK(has_violation(validate_functor(bad_ends),
                      "functor does not preserve endpoints at arrow 0"));

  // Endomorphism of Z/4 fixing 1 and 3 but crushing 2: breaks comp(1, 1).
  Functor bad_comp(z4(), z4(), {0}, {0, 1, 0, 3});
  CHECK(has_violation(validate_functor(bad_comp),
                      "composition not preserved at (1, 1, 2)"));

  // Unit sent to a non-unit loop.
  Functor bad_unit(z2(), z2(), {0}, {1, 0});
  CHECK(has_violation(validate_functor(bad_unit),
                      "functor does not preserve the unit at object 0"));

  // Inverse of the order-4 generator sent to itself.
  Functor bad_inv(z4(), z4(), {0}, {0, 1, 2, 1});
  CHECK(has_violation(validate_functor(bad_inv), "inverse"));
}

TEST_CASE("constructor rejects map size mismatches") {
  CHECK_THROWS_AS(Functor(p2(), n1(), {0}, {0, 0, 0, 0}), ValidationError);
  CHECK_THROWS_AS(Functor(p2(), n1(), {0, 0}, {0, 0}), ValidationError);
  CHECK_THROWS_AS(Functor(p2(), n1(), {0, 0}, {0, 0, 0, 7}), ValidationError);
}

TEST_CASE("composition and inversion") {
  Functor s = swap_p2();
  CHECK(compose(s, s) == Functor::identity(p2()));
  CHECK(is_invertible_functor(s));
  CHECK(inverse_functor(s) == s);
  CHECK_FALSE(is_invertible_functor(collapse_p2()));
  CHECK(compose(collapse_p2(), s) == collapse_p2());
  CHECK_THROWS_AS(compose(mod2(), collapse_p2()), PreconditionError);
}

TEST_CASE("identity profile has every strong flag") {
  FunctorProfile p = analyze_functor(Functor::identity(p2()));
  CHECK(p.i_faithful);
  CHECK(p.s_full);
  CHECK(p.inductor);
  CHECK(p.essentially_surjective);
  CHECK(p.equivalence);
  CHECK(p.s_equivalence);
  CHECK(p.actor);
  CHECK(p.inactor);
  CHECK(p.exactor);
  CHECK(p.s_functor);
  CHECK(p.s_extensor);
  CHECK(p.subactor);
  CHECK(p.uniferous);
  CHECK(p.principal_source);
  REQUIRE(p.split.has_value());
  CHECK(*p.split);
  CHECK(p.consistent());
}

TEST_CASE("collapse of the pair groupoid is an s-equivalence but no actor") {
  FunctorProfile p = analyze_functor(collapse_p2());
  CHECK(p.s_equivalence);
  CHECK(p.exactor);
  CHECK_FALSE(p.actor);
  CHECK_FALSE(p.inactor);
  CHECK(p.i_faithful);
  CHECK(p.s_full);
  CHECK(p.inductor);
  CHECK(p.s_functor);
  CHECK(p.subactor);
  CHECK_FALSE(p.uniferous);
  CHECK(p.principal_source);
  REQUIRE(p.split.has_value());
  CHECK(*p.split);
  CHECK(p.consistent());
}

TEST_CASE("action projection is an actor but not an inductor") {
  FunctorProfile p = analyze_functor(action_projection());
  CHECK(p.actor);
  CHECK(p.exactor);
  CHECK(p.inactor);
  CHECK(p.s_functor);
  CHECK_FALSE(p.inductor);
  CHECK_FALSE(p.s_full);
  CHECK_FALSE(p.s_extensor);
  CHECK(p.i_faithful);
  CHECK(p.essentially_surjective);
  CHECK(p.consistent());
}

TEST_CASE("mod-2 projection is a non-split s-extensor") {
  FunctorProfile p = analyze_functor(mod2());
  CHECK(p.s_full);
  CHECK(p.s_functor);
  CHECK(p.s_extensor);
  CHECK(p.exactor);
  CHECK_FALSE(p.i_faithful);
  CHECK_FALSE(p.inactor);
  CHECK_FALSE(p.actor);
  CHECK_FALSE(p.equivalence);
  CHECK(p.uniferous);
  CHECK_FALSE(p.principal_source);
  REQUIRE(p.split.has_value());
  CHECK_FALSE(*p.split);
  CHECK(p.consistent());
}

TEST_CASE("unit embedding is an equivalence that is not surjective") {
  FunctorProfile p = analyze_functor(unit_embedding_p2(0));
  CHECK(p.equivalence);
  CHECK(p.essentially_surjective);
  CHECK_FALSE(p.s_equivalence);
  CHECK(p.inactor);
  CHECK_FALSE(p.exactor);
  CHECK_FALSE(p.s_functor);
  CHECK(p.consistent());
}

TEST_CASE("profile string lists the flags") {
  std::string s = analyze_functor(mod2()).to_string();
  CHECK(s.find("s_extensor") != std::string::npos);
  CHECK(s.find("non_split") != std::string::npos);
  CHECK(s.find("exactor") != std::string::npos);
}

TEST_CASE("kernels") {
  EmbeddedSubgroupoid k_id = kernel(Functor::identity(p2()));
  CHECK(k_id.arrows == std::vector<int>{0, 3});
  CHECK(classify(*k_id.groupoid).is_null);

  EmbeddedSubgroupoid k_col = kernel(collapse_p2());
  CHECK(k_col.arrows == std::vector<int>{0, 1, 2, 3});
  CHECK(same_groupoid(*k_col.groupoid, *p2()));

  EmbeddedSubgroupoid k_mod = kernel(mod2());
  CHECK(k_mod.arrows == std::vector<int>{0, 2});
  CHECK(find_isomorphism(k_mod.groupoid, z2()).has_value());

  EmbeddedSubgroupoid k_act = kernel(action_projection());
  CHECK(static_cast<int>(k_act.arrows.size()) == 2);
  CHECK(classify(*k_act.groupoid).is_null);

  CHECK(validate_functor(k_mod.inclusion).ok());
}

TEST_CASE("embedded subgroupoids validate closure") {
  CHECK_THROWS_AS(make_subgroupoid(z4(), {0, 1}), ValidationError);
  CHECK_THROWS_AS(make_subgroupoid(z4(), {1, 2, 3}), ValidationError);
  EmbeddedSubgroupoid even = make_subgroupoid(z4(), {0, 2});
  CHECK(even.groupoid->num_arrows() == 2);
  CHECK(validate_functor(even.inclusion).ok());

  CHECK(subgroupoid_closure(z4(), {1}).arrows ==
        std::vector<int>{0, 1, 2, 3});
  CHECK(subgroupoid_closure(z4(), {2}).arrows == std::vector<int>{0, 2});
  CHECK(subgroupoid_closure(p2(), {}).arrows == std::vector<int>{0, 3});
}

TEST_CASE("natural transformations between the identity and the swap") {
  auto t = naturally_isomorphic(Functor::identity(p2()), swap_p2());
  REQUIRE(t.has_value());
  CHECK(t->components == std::vector<int>{1, 2});
  CHECK(validate_transformation(*t).ok());

  // Naturality t * 1 = g * t fails when one side collapses to the unit.
  Functor crush(z2(), z2(), {0}, {0, 0});
  CHECK_FALSE(naturally_isomorphic(crush, Functor::identity(z2())).has_value());

  NatTransformation wrong{Functor::identity(p2()), swap_p2(), {1, 1}};
  CHECK_FALSE(validate_transformation(wrong).ok());

  auto self = naturally_isomorphic(Functor::identity(z2()),
                                   Functor::identity(z2()));
  REQUIRE(self.has_value());
  CHECK(validate_transformation(*self).ok());
}

TEST_CASE("sections") {
  auto s = find_section(collapse_p2());
  REQUIRE(s.has_value());
  CHECK(compose(collapse_p2(), *s) == Functor::identity(n1()));
  CHECK(validate_functor(*s).ok());

  CHECK_FALSE(find_section(mod2()).has_value());
  CHECK_FALSE(find_section(unit_embedding_p2(0)).has_value());
}

TEST_CASE("exhaustive functor enumeration with frozen counts") {
  auto all_p2 = try_enumerate_functors(p2(), p2(), 100);
  REQUIRE(all_p2.has_value());
  CHECK(all_p2->size() == 4);  // two automorphisms, two constants

  auto homs_z2_s3 = try_enumerate_functors(z2(), share(symmetric_group_3()), 100);
  REQUIRE(homs_z2_s3.has_value());
  CHECK(homs_z2_s3->size() == 4);  // trivial map and three transpositions

  auto homs_z4_z2 = try_enumerate_functors(z4(), z2(), 100);
  REQUIRE(homs_z4_z2.has_value());
  CHECK(homs_z4_z2->size() == 2);

  auto to_point = try_enumerate_functors(p2(), n1(), 100);
  REQUIRE(to_point.has_value());
  CHECK(to_point->size() == 1);

  CHECK_FALSE(try_enumerate_functors(p2(), p2(), 3).has_value());

  for (const Functor& f : *homs_z2_s3) CHECK(validate_functor(f).ok());
}

TEST_CASE("filtered enumeration and isomorphism search respect predicates") {
  auto diagonal = enumerate_functors_where(
      p2(), p2(), [](int x, int y) { return x == y; },
      [](int, int) { return true; }, 100);
  CHECK(diagonal.size() == 1);  // only the identity fixes both objects

  auto none = find_isomorphism_where(
      p2(), p2(), [](int x, int y) { return x != y; },
      [](int, int) { return true; });
  REQUIRE(none.has_value());
  CHECK(none->object_map() == std::vector<int>{1, 0});
}

}  // TEST_SUITE
