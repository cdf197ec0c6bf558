#pragma once

#include <optional>

#include "gpd/fraction.hpp"

namespace gpd {

/// Skeletal plurigroup of a groupoid together with the unit meromorphism
/// induced by the retraction.
struct FundamentalPlurigroup {
  SkeletonRetraction skeleton;
  GroupoidPtr plurigroup;  // = skeleton.plurigroup
  Meromorphism unit;       // gamma of the retraction
};

FundamentalPlurigroup fundamental_plurigroup(GroupoidPtr g,
                                             const SizeGuard& = {});

/// Result of exhaustively checking the universal property of the unit
/// against a plurigroup target: every meromorphism into the target should
/// factor through the unit by a unique mediating class.
struct ReflectionReport {
  bool exhaustive = false;       // candidate enumeration completed
  int functors_considered = 0;
  int factorizations_found = 0;  // candidates whose composite matches
  bool factorization_exists = false;
  bool unique = false;           // matching candidates share one class
  std::optional<Functor> mediating;
  bool unit_is_meriedric = false;
};

/// Requires a plurigroup d and a meromorphism m from g to d.  Mediating
/// candidates are all functors from the fundamental plurigroup of g into d
/// (complete here: every meromorphism out of a finite plurigroup is
/// represented by a functor).
ReflectionReport check_reflection_universal(GroupoidPtr g, GroupoidPtr d,
                                            const Meromorphism& m,
                                            const SizeGuard& = {},
                                            long long max_candidates = 4096);

}  // namespace gpd
