#pragma once

#include <vector>

#include "gpd/build.hpp"

namespace gpd {

/// Arrow-set intersection of two uniferous embedded subgroupoids of the same
/// parent; always closed, and principal whenever either input is.
EmbeddedSubgroupoid intersect_subgroupoids(const EmbeddedSubgroupoid& m,
                                           const EmbeddedSubgroupoid& n);

enum class Transversality { none, transversal, transverse };
const char* to_string(Transversality t);

/// Status of the divisor map restricted to same-source pairs (x, y) with
/// x from m and y from n: (x, y) -> comp(x, inv(y)).  Surjective onto the
/// parent arrows: transversal; bijective: transverse.
Transversality transversality_status(const EmbeddedSubgroupoid& m,
                                     const EmbeddedSubgroupoid& n);

/// The diagram attached to a pair of functors with common source K:
/// kernels, their intersection, and the restricted legs.
struct Butterfly {
  Functor p;               // K -> G
  Functor q;               // K -> H
  EmbeddedSubgroupoid n;   // Ker p, inclusion j
  EmbeddedSubgroupoid r;   // Ker q, inclusion i
  EmbeddedSubgroupoid s;   // n intersect r
  Functor u;               // p after i : r.groupoid -> G
  Functor v;               // q after j : n.groupoid -> H
};

Butterfly make_butterfly(const Functor& p, const Functor& q);

enum class Cotransversality { none, cotransversal, cotransverse };
const char* to_string(Cotransversality c);

struct CotransversalityReport {
  Cotransversality status = Cotransversality::none;
  Butterfly butterfly;
  FunctorProfile u_profile;
  FunctorProfile v_profile;
};

/// Requires p, q exactors.  Computes the status twice — via the divisor on
/// Ker q x Ker p pairs and via the butterfly leg profiles (both exactors:
/// cotransversal; both actors: cotransverse) — and insists the two agree.
CotransversalityReport cotransversality(const Functor& p, const Functor& q,
                                        const SizeGuard& = {});

/// All uniferous embedded subgroupoids of the parent, by branch-and-prune
/// over non-unit arrows in id order; deterministic output order.
std::vector<EmbeddedSubgroupoid> all_subgroupoids(GroupoidPtr parent,
                                                  const SizeGuard& = {});

/// Exists a uniferous embedded subgroupoid transverse to Ker p.  For
/// surjections of groups this coincides with the existence of a section.
bool is_inessential(const Functor& p, const SizeGuard& = {});

}  // namespace gpd
