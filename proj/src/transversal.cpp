#include "gpd/transversal.hpp"

#include <algorithm>
#include <string>

namespace gpd {

EmbeddedSubgroupoid intersect_subgroupoids(const EmbeddedSubgroupoid& m,
                                           const EmbeddedSubgroupoid& n) {
  if (!same_groupoid(*m.parent, *n.parent))
    throw PreconditionError("intersect_subgroupoids: different parents");
  std::vector<int> common;
  std::set_intersection(m.arrows.begin(), m.arrows.end(), n.arrows.begin(),
                        n.arrows.end(), std::back_inserter(common));
  EmbeddedSubgroupoid s = make_subgroupoid(m.parent, common);
  const bool parent_principal = classify(*m.groupoid).principal ||
                                classify(*n.groupoid).principal;
  if (parent_principal && !classify(*s.groupoid).principal)
    throw Error("internal: intersection of principal subgroupoid not principal");
  return s;
}

const char* to_string(Transversality t) {
  switch (t) {
    case Transversality::transversal: return "transversal";
    case Transversality::transverse: return "transverse";
    default: return "none";
  }
}

const char* to_string(Cotransversality c) {
  switch (c) {
    case Cotransversality::cotransversal: return "cotransversal";
    case Cotransversality::cotransverse: return "cotransverse";
    default: return "none";
  }
}

Transversality transversality_status(const EmbeddedSubgroupoid& m,
                                     const EmbeddedSubgroupoid& n) {
  if (!same_groupoid(*m.parent, *n.parent))
    throw PreconditionError("transversality_status: different parents");
  const FiniteGroupoid& k = *m.parent;
  std::vector<int> hits(static_cast<std::size_t>(k.num_arrows()), 0);
  long long pairs = 0;
  for (int x : m.arrows)
    for (int y : n.arrows) {
      if (k.src(x) != k.src(y)) continue;
      ++pairs;
      ++hits[static_cast<std::size_t>(k.comp(x, k.inv(y)))];
    }
  bool surjective = true;
  bool injective = true;
  for (int h : hits) {
    if (h == 0) surjective = false;
    if (h > 1) injective = false;
  }
  if (!surjective) return Transversality::none;
  if (injective && pairs == k.num_arrows()) return Transversality::transverse;
  return Transversality::transversal;
}

Butterfly make_butterfly(const Functor& p, const Functor& q) {
  if (!same_groupoid(p.dom(), q.dom()))
    throw PreconditionError("make_butterfly: functors have different sources");
  EmbeddedSubgroupoid n = kernel(p);
  EmbeddedSubgroupoid r = kernel(q);
  EmbeddedSubgroupoid s = intersect_subgroupoids(n, r);
  Functor u = compose(p, r.inclusion);
  Functor v = compose(q, n.inclusion);
  return Butterfly{p, q, std::move(n), std::move(r), std::move(s),
                   std::move(u), std::move(v)};
}

CotransversalityReport cotransversality(const Functor& p, const Functor& q,
                                        const SizeGuard& guard) {
  const FunctorProfile pp = analyze_functor(p, guard);
  const FunctorProfile qp = analyze_functor(q, guard);
  if (!pp.exactor || !qp.exactor)
    throw PreconditionError("cotransversality: both functors must be exactors");
  Butterfly bf = make_butterfly(p, q);
  const Transversality via_divisor = transversality_status(bf.r, bf.n);
  FunctorProfile up = analyze_functor(bf.u, guard);
  FunctorProfile vp = analyze_functor(bf.v, guard);
  Cotransversality via_legs = Cotransversality::none;
  if (up.actor && vp.actor)
    via_legs = Cotransversality::cotransverse;
  else if (up.exactor && vp.exactor)
    via_legs = Cotransversality::cotransversal;
  Cotransversality status = Cotransversality::none;
  if (via_divisor == Transversality::transverse)
    status = Cotransversality::cotransverse;
  else if (via_divisor == Transversality::transversal)
    status = Cotransversality::cotransversal;
  if (status != via_legs)
    throw Error(std::string("internal: cotransversality disagreement (divisor: ") +
                to_string(status) + ", legs: " + to_string(via_legs) + ")");
  return CotransversalityReport{status, std::move(bf), up, vp};
}

namespace {

// Close `chosen` under inverses and composition, adding units.  Returns false
// if the closure would pull in an arrow already marked excluded.
bool close_over(const FiniteGroupoid& g, std::vector<char>& chosen,
                const std::vector<char>& excluded, std::vector<int>& work) {
  while (!work.empty()) {
    const int a = work.back();
    work.pop_back();
    const int candidates[2] = {g.inv(a), g.unit(g.src(a))};
    for (int c : candidates)
      if (!chosen[static_cast<std::size_t>(c)]) {
        if (excluded[static_cast<std::size_t>(c)]) return false;
        chosen[static_cast<std::size_t>(c)] = 1;
        work.push_back(c);
      }
    for (int b = 0; b < g.num_arrows(); ++b) {
      if (!chosen[static_cast<std::size_t>(b)]) continue;
      const int both[2] = {g.comp_or_neg(a, b), g.comp_or_neg(b, a)};
      for (int c : both)
        if (c >= 0 && !chosen[static_cast<std::size_t>(c)]) {
          if (excluded[static_cast<std::size_t>(c)]) return false;
          chosen[static_cast<std::size_t>(c)] = 1;
          work.push_back(c);
        }
    }
  }
  return true;
}

void enumerate_closed(const FiniteGroupoid& g, std::vector<char>& chosen,
                      std::vector<char>& excluded, int next,
                      std::vector<std::vector<int>>& out) {
  while (next < g.num_arrows() &&
         (chosen[static_cast<std::size_t>(next)] ||
          excluded[static_cast<std::size_t>(next)]))
    ++next;
  if (next == g.num_arrows()) {
    std::vector<int> arrows;
    for (int a = 0; a < g.num_arrows(); ++a)
      if (chosen[static_cast<std::size_t>(a)]) arrows.push_back(a);
    out.push_back(std::move(arrows));
    if (out.size() > 100000)
      throw SizeGuardError("subgroupoid enumeration exceeds 100000 results");
    return;
  }
  excluded[static_cast<std::size_t>(next)] = 1;
  enumerate_closed(g, chosen, excluded, next + 1, out);
  excluded[static_cast<std::size_t>(next)] = 0;

  std::vector<char> with = chosen;
  with[static_cast<std::size_t>(next)] = 1;
  std::vector<int> work{next};
  if (close_over(g, with, excluded, work))
    enumerate_closed(g, with, excluded, next + 1, out);
}

}  // namespace

std::vector<EmbeddedSubgroupoid> all_subgroupoids(GroupoidPtr parent,
                                                  const SizeGuard& guard) {
  guard.check_search(parent->num_arrows(), "subgroupoid enumeration");
  std::vector<char> chosen(static_cast<std::size_t>(parent->num_arrows()), 0);
  std::vector<char> excluded(chosen.size(), 0);
  for (int b = 0; b < parent->num_objects(); ++b)
    chosen[static_cast<std::size_t>(parent->unit(b))] = 1;
  std::vector<std::vector<int>> arrow_sets;
  enumerate_closed(*parent, chosen, excluded, 0, arrow_sets);
  std::vector<EmbeddedSubgroupoid> result;
  result.reserve(arrow_sets.size());
  for (const auto& arrows : arrow_sets)
    result.push_back(make_subgroupoid(parent, arrows));
  return result;
}

bool is_inessential(const Functor& p, const SizeGuard& guard) {
  // Transverse, not merely transversal: the full subgroupoid is transversal
  // to any kernel, so the weaker reading would be vacuous.  The transverse
  // reading makes "inessential" coincide with "split" for group surjections.
  const EmbeddedSubgroupoid ker = kernel(p);
  for (const EmbeddedSubgroupoid& m : all_subgroupoids(p.dom_ptr(), guard))
    if (transversality_status(m, ker) == Transversality::transverse)
      return true;
  return false;
}

}  // namespace gpd
