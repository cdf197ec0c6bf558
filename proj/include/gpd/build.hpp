#pragma once

#include <utility>
#include <vector>

#include "gpd/functor.hpp"

namespace gpd {

/// One arrow of an induced groupoid: runs src -> tgt in the new base and
/// carries the parent arrow `via` between the mapped objects.
struct InducedArrow {
  int src = 0;
  int via = 0;
  int tgt = 0;
};

struct InducedGroupoid {
  GroupoidPtr groupoid;
  Functor projection;  // canonical inductor into the parent
  std::vector<InducedArrow> arrows;
};

/// Pullback of g along the object map u (codomain = objects of g).  The
/// projection is always an inductor; it is an s-equivalence iff u is
/// surjective.
InducedGroupoid induce(GroupoidPtr g, const SetMap& u, const SizeGuard& = {});

/// Atlas with groupoid induced along u and quotient composed with u.
OrbitalAtlas refine_atlas(const OrbitalAtlas& a, const SetMap& u,
                          const SizeGuard& = {});

/// A commutative square of g: an arrow of []g from object `from` to object
/// `to` (both arrows of g), with legs k: src from -> src to and
/// l: tgt from -> tgt to satisfying comp(to, k) == comp(l, from).
struct Square {
  int from = 0;
  int to = 0;
  int k = 0;
  int l = 0;
};

struct SquareGroupoid {
  GroupoidPtr parent;
  GroupoidPtr groupoid;  // objects = arrows of the parent
  std::vector<Square> squares;
  Functor pi1;   // square -> l, object gamma -> tgt gamma
  Functor pi2;   // square -> k, object gamma -> src gamma
  Functor iota;  // a -> the square (a, a) between unit objects
  std::vector<int> block_offset;  // (from * arrows + to) -> first arrow id

  /// Arrow id of the square with the given endpoints and k-leg (-1 if none).
  int square_id(int from, int to, int k) const;
};

SquareGroupoid square_groupoid(GroupoidPtr g, const SizeGuard& = {});

struct FibredProduct {
  GroupoidPtr groupoid;
  Functor to_first;   // -> dom(f)
  Functor to_second;  // -> dom(g)
  std::vector<std::pair<int, int>> object_pairs;  // sorted
  std::vector<std::pair<int, int>> arrow_pairs;   // sorted

  int object_id(int x, int y) const;  // -1 when absent
  int arrow_id(int a, int b) const;   // -1 when absent
};

/// Strict fibred product of f and g over their common codomain.
FibredProduct fibred_product(const Functor& f, const Functor& g,
                             const SizeGuard& = {});

/// The canonical fraction attached to a functor f: H -> G, built by pulling
/// f back along pi2 of the square groupoid of G.
struct Holograph {
  SquareGroupoid square;   // of cod(f)
  FibredProduct pullback;  // of (f, square.pi2)
  GroupoidPtr apex;        // = pullback.groupoid
  Functor numerator;       // p = pi1 after the second projection, apex -> G
  Functor denominator;     // q = first projection, apex -> H
  Functor section;         // h -> (h, iota(f h)); q after section = identity
  NatTransformation twist; // f after q => p, component at (b', gamma) = gamma
};

Holograph holograph(const Functor& f, const SizeGuard& = {});

struct Quotient {
  GroupoidPtr groupoid;
  Functor projection;             // parent -> quotient
  std::vector<int> object_class;  // parent object -> quotient object
  std::vector<int> arrow_coset;   // parent arrow -> quotient arrow
};

/// Quotient of s.parent by the uniferous embedded subgroupoid s: objects are
/// s-orbit classes, arrows are two-sided cosets SxS.  Composition is checked
/// for representative independence and the operation fails with "quotient not
/// well-defined" if the check fails.  A principal s always passes (the
/// connector between two end classes is unique), as do the kernel-overlap
/// subgroupoids produced by reduction; the check guards arbitrary input.
Quotient quotient_by_principal(const EmbeddedSubgroupoid& s,
                               const SizeGuard& = {});

struct SubactorDecomposition {
  GroupoidPtr middle;   // action groupoid of cod(f) on base classes of Ker f
  Functor to_middle;    // e: dom(f) -> middle, an s-equivalence
  Functor from_middle;  // a: middle -> cod(f), an actor
};

/// Factors a subactor as actor after s-equivalence.  The profile must report
/// subactor and the kernel must be principal (both checked).
SubactorDecomposition subactor_decompose(const Functor& f,
                                         const FunctorProfile& profile,
                                         const SizeGuard& = {});

enum class TransferDirection { pullback, pushforward };

/// Moves an actor across an s-equivalence u: pullback takes an actor over
/// cod(u) to one over dom(u) via the fibred product; pushforward takes an
/// actor over dom(u) to one over cod(u) via subactor decomposition of the
/// composite.
Functor transfer_actor(const Functor& u, const Functor& a,
                       TransferDirection direction, const SizeGuard& = {});

struct WeakPullback {
  Holograph right_holograph;  // of u
  FibredProduct weak;         // fibred_product(g, right_holograph.numerator)
  GroupoidPtr apex;
  Functor to_first;      // -> dom(g)
  Functor to_second;     // -> dom(u)
  FibredProduct strict;  // fibred_product(g, u)
  Functor comparison;    // strict apex -> weak apex, an injective equivalence
};

/// Weak fibred product of g and u over their common codomain: objects are
/// triples (object of dom g, connecting arrow, object of dom u).
WeakPullback weak_pullback(const Functor& g, const Functor& u,
                           const SizeGuard& = {});

/// Skeleton of g: one object per orbit carrying the vertex group at the
/// orbit's smallest object, with the retraction along lowest-id connecting
/// arrows.  The retraction is an s-equivalence.
struct SkeletonRetraction {
  GroupoidPtr plurigroup;
  Functor retraction;      // g -> plurigroup
  std::vector<int> theta;  // object -> lowest-id arrow to its orbit rep
  OrbitsAndVertexGroups decomposition;
};

SkeletonRetraction skeleton_retraction(GroupoidPtr g);

}  // namespace gpd
