#include "gpd/reflect.hpp"

#include <utility>

namespace gpd {

FundamentalPlurigroup fundamental_plurigroup(GroupoidPtr g,
                                             const SizeGuard& guard) {
  SkeletonRetraction sk = skeleton_retraction(std::move(g));
  GroupoidPtr pi = sk.plurigroup;
  Meromorphism unit = gamma(sk.retraction, guard);
  return FundamentalPlurigroup{std::move(sk), std::move(pi), std::move(unit)};
}

ReflectionReport check_reflection_universal(GroupoidPtr g, GroupoidPtr d,
                                            const Meromorphism& m,
                                            const SizeGuard& guard,
                                            long long max_candidates) {
  if (!classify(*d).plurigroup)
    throw PreconditionError(
        "check_reflection_universal: target must be a plurigroup");
  if (!same_groupoid(m.source(), *g) || !same_groupoid(m.target(), *d))
    throw PreconditionError(
        "check_reflection_universal: meromorphism endpoints mismatch");

  FundamentalPlurigroup fp = fundamental_plurigroup(g, guard);
  ReflectionReport rep;
  rep.unit_is_meriedric = is_meriedric_equivalence(fp.unit, guard);

  std::optional<std::vector<Functor>> candidates =
      try_enumerate_functors(fp.plurigroup, d, max_candidates, guard);
  if (!candidates) return rep;
  rep.exhaustive = true;
  rep.functors_considered = static_cast<int>(candidates->size());

  std::vector<Meromorphism> matches;
  for (const Functor& phi : *candidates) {
    Meromorphism mediating = gamma(phi, guard);
    Meromorphism composite = compose_meromorphisms(mediating, fp.unit, guard);
    if (same_meromorphism(composite, m, guard)) {
      ++rep.factorizations_found;
      if (!rep.mediating) rep.mediating = phi;
      matches.push_back(std::move(mediating));
    }
  }
  rep.factorization_exists = rep.factorizations_found > 0;
  rep.unique = rep.factorization_exists;
  for (std::size_t i = 1; i < matches.size(); ++i)
    if (!same_meromorphism(matches[0], matches[i], guard)) {
      rep.unique = false;
      break;
    }
  return rep;
}

}  // namespace gpd
