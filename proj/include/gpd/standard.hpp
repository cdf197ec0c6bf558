#pragma once

#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

/// k objects, unit arrows only (arrow i is the unit at object i).
FiniteGroupoid null_groupoid(int k);

/// The banal groupoid on k objects: one arrow i -> j for every pair,
/// numbered src-major (arrow i*k+j runs from i to j).
FiniteGroupoid pair_groupoid(int k);

/// One object, arrows 0..k-1, comp(a, b) = a + b mod k.
FiniteGroupoid cyclic_group(int k);

/// One object, the six permutations of {0,1,2} in lexicographic one-line
/// order (the identity is arrow 0); comp(a, b) applies b first.
FiniteGroupoid symmetric_group_3();

/// The graph of the equivalence relation "same block" on k objects;
/// block_of[i] names the block of object i.  Arrows are the related pairs,
/// src-major.
FiniteGroupoid equivalence_relation(int k, const std::vector<int>& block_of);

/// Action groupoid of a one-object groupoid on {0..set_size-1}.
/// action[a] is the permutation applied by arrow a; it must respect units,
/// composition and inverses.  Arrows are the pairs (a, x), numbered
/// a*set_size + x, with src = x and tgt = action[a][x].
FiniteGroupoid action_groupoid(const FiniteGroupoid& group, int set_size,
                               const std::vector<std::vector<int>>& action);

/// Permutation action of cyclic_group(k) generated by generator_image.
std::vector<std::vector<int>> cyclic_action(int k,
                                            const std::vector<int>& generator_image);

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Objects are pairs (o1*n2 + o2), arrows are pairs (a1*m2 + a2), all maps
/// componentwise.
FiniteGroupoid direct_product(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace gpd
