#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

/// A functor between finite groupoids, stored as an object map and an
/// arrow map.  The constructor checks structural well-formedness only;
/// validate_functor checks the functor laws.
class Functor {
 public:
  Functor(GroupoidPtr dom, GroupoidPtr cod, std::vector<int> object_map,
          std::vector<int> arrow_map);
  static Functor identity(GroupoidPtr g);

  const FiniteGroupoid& dom() const { return *dom_; }
  const FiniteGroupoid& cod() const { return *cod_; }
  GroupoidPtr dom_ptr() const { return dom_; }
  GroupoidPtr cod_ptr() const { return cod_; }

  int on_object(int x) const { return object_map_[x]; }
  int on_arrow(int a) const { return arrow_map_[a]; }
  const std::vector<int>& object_map() const { return object_map_; }
  const std::vector<int>& arrow_map() const { return arrow_map_; }

  SetMap objector() const {
    return SetMap(dom().num_objects(), cod().num_objects(), object_map_);
  }
  SetMap arrow_setmap() const {
    return SetMap(dom().num_arrows(), cod().num_arrows(), arrow_map_);
  }

  bool operator==(const Functor& o) const;

 private:
  GroupoidPtr dom_, cod_;
  std::vector<int> object_map_, arrow_map_;
};

/// compose(g, f): f then g.
Functor compose(const Functor& g, const Functor& f);

ValidationReport validate_functor(const Functor& f);

bool is_invertible_functor(const Functor& f);
Functor inverse_functor(const Functor& f);  // pre: invertible

/// Everything the finite model can say about one functor.  All flags except
/// `split` are polynomial table scans; `split` runs the bounded section
/// search and is absent when the domain exceeds the search cap.
struct FunctorProfile {
  bool i_faithful = false;
  bool s_full = false;
  bool inductor = false;
  bool essentially_surjective = false;
  bool equivalence = false;
  bool s_equivalence = false;
  bool actor = false;
  bool inactor = false;
  bool exactor = false;
  bool s_functor = false;
  bool s_extensor = false;
  bool subactor = false;
  bool uniferous = false;
  bool principal_source = false;
  std::optional<bool> split;

  bool s_exactor() const { return exactor && s_functor; }
  /// The derived-flag identities that must hold for any functor.
  bool consistent() const;
  std::string to_string() const;
};

FunctorProfile analyze_functor(const Functor& f, const SizeGuard& guard = {});

/// A wide subgroupoid of `parent` containing every unit, closed under
/// inverse and composition, presented both as an arrow subset and as a
/// relabeled groupoid with its inclusion.
struct EmbeddedSubgroupoid {
  GroupoidPtr parent;
  std::vector<int> arrows;  // sorted parent arrow ids
  GroupoidPtr groupoid;     // same objects, relabeled arrows
  Functor inclusion;        // groupoid -> parent
};

/// Validates closure and the unit requirement.
EmbeddedSubgroupoid make_subgroupoid(GroupoidPtr parent,
                                     std::vector<int> arrow_ids);
/// Smallest uniferous subgroupoid containing the generators.
EmbeddedSubgroupoid subgroupoid_closure(GroupoidPtr parent,
                                        const std::vector<int>& generators);

/// Arrows sent to units of the codomain.
EmbeddedSubgroupoid kernel(const Functor& f);

/// A natural transformation between parallel functors; components[x] is an
/// arrow from.on_object-image to to.on_object-image at object x.  In a
/// groupoid every such transformation is invertible.
struct NatTransformation {
  Functor from, to;
  std::vector<int> components;
};

ValidationReport validate_transformation(const NatTransformation& t);

/// Deterministic bounded search; components tried in increasing arrow id.
std::optional<NatTransformation> naturally_isomorphic(const Functor& f,
                                                      const Functor& g,
                                                      const SizeGuard& = {});

/// Deterministic bounded search for s with f.after(s) = identity.
std::optional<Functor> find_section(const Functor& f, const SizeGuard& = {});

/// Deterministic exhaustive search for an invertible functor g -> h,
/// lexicographic in (object, arrow) ids.
std::optional<Functor> find_isomorphism(GroupoidPtr g, GroupoidPtr h,
                                        const SizeGuard& = {});

/// As find_isomorphism, but every object assignment x -> y must satisfy
/// object_ok(x, y) and every arrow assignment a -> b must satisfy
/// arrow_ok(a, b).
std::optional<Functor> find_isomorphism_where(
    GroupoidPtr g, GroupoidPtr h,
    const std::function<bool(int, int)>& object_ok,
    const std::function<bool(int, int)>& arrow_ok, const SizeGuard& = {});

/// Enumerate functors dom -> cod whose object and arrow assignments satisfy
/// the given predicates, lexicographic in (object map, arrow map), stopping
/// after max_count results.
std::vector<Functor> enumerate_functors_where(
    GroupoidPtr dom, GroupoidPtr cod,
    const std::function<bool(int, int)>& object_ok,
    const std::function<bool(int, int)>& arrow_ok, long long max_count,
    const SizeGuard& = {});

/// Exhaustive enumeration of all functors dom -> cod in lexicographic order
/// of (object map, arrow map).  Returns nullopt once more than max_count
/// functors exist; the search itself is still bounded by the guard.
std::optional<std::vector<Functor>> try_enumerate_functors(
    GroupoidPtr dom, GroupoidPtr cod, long long max_count,
    const SizeGuard& = {});

}  // namespace gpd
