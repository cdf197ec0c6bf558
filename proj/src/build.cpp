#include "gpd/build.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace gpd {

namespace {

// pos[x] = index of x within hom(src x, tgt x) of g.
std::vector<int> hom_positions(const FiniteGroupoid& g) {
  std::vector<int> pos(g.num_arrows(), -1);
  for (int x = 0; x < g.num_objects(); ++x)
    for (int y = 0; y < g.num_objects(); ++y) {
      const auto& h = g.hom(x, y);
      for (size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<int>(i);
    }
  return pos;
}

int sorted_pair_index(const std::vector<std::pair<int, int>>& pairs, int a,
                      int b) {
  auto it = std::lower_bound(pairs.begin(), pairs.end(),
                             std::pair<int, int>{a, b});
  if (it == pairs.end() || *it != std::pair<int, int>{a, b}) return -1;
  return static_cast<int>(it - pairs.begin());
}

}  // namespace

InducedGroupoid induce(GroupoidPtr gp, const SetMap& u, const SizeGuard& guard) {
  const auto& g = *gp;
  if (u.codomain_size() != g.num_objects())
    throw ValidationError("induce: object map codomain mismatch");
  const int n = u.domain_size();

  long long total = 0;
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b)
      total += static_cast<long long>(g.hom(u(c), u(b)).size());
  guard.check_build(total, "induced groupoid");

  std::vector<InducedArrow> arrows;
  arrows.reserve(static_cast<size_t>(total));
  std::vector<std::vector<int>> offsets(n, std::vector<int>(n, 0));
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      offsets[c][b] = static_cast<int>(arrows.size());
      for (int x : g.hom(u(c), u(b))) arrows.push_back({c, x, b});
    }
  const std::vector<int> pos = hom_positions(g);
  auto id_of = [&](int c, int x, int b) { return offsets[c][b] + pos[x]; };

  const int m = static_cast<int>(arrows.size());
  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(n), inv(m), comp(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    ends[i] = {arrows[i].src, arrows[i].tgt};
    inv[i] = id_of(arrows[i].tgt, g.inv(arrows[i].via), arrows[i].src);
  }
  for (int c = 0; c < n; ++c) units[c] = id_of(c, g.unit(u(c)), c);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (arrows[i].src == arrows[j].tgt)
        comp[static_cast<size_t>(i) * m + j] =
            id_of(arrows[j].src, g.comp(arrows[i].via, arrows[j].via),
                  arrows[i].tgt);

  GroupoidPtr result = share(FiniteGroupoid(n, std::move(ends),
                                            std::move(units), std::move(inv),
                                            std::move(comp)));
  std::vector<int> obj(n), arr(m);
  for (int c = 0; c < n; ++c) obj[c] = u(c);
  for (int i = 0; i < m; ++i) arr[i] = arrows[i].via;
  Functor proj(result, std::move(gp), std::move(obj), std::move(arr));
  return InducedGroupoid{std::move(result), std::move(proj), std::move(arrows)};
}

OrbitalAtlas refine_atlas(const OrbitalAtlas& a, const SetMap& u,
                          const SizeGuard& guard) {
  if (u.codomain_size() != a.groupoid->num_objects() || !u.surjective())
    throw ValidationError("refine_atlas: map is not onto the atlas objects");
  InducedGroupoid ind = induce(a.groupoid, u, guard);
  return make_orbital_atlas(ind.groupoid, u.then(a.quotient));
}

int SquareGroupoid::square_id(int from, int to, int k) const {
  const auto& g = *parent;
  const auto& h = g.hom(g.src(from), g.src(to));
  auto it = std::find(h.begin(), h.end(), k);
  if (it == h.end()) return -1;
  return block_offset[static_cast<size_t>(from) * g.num_arrows() + to] +
         static_cast<int>(it - h.begin());
}

SquareGroupoid square_groupoid(GroupoidPtr gp, const SizeGuard& guard) {
  const auto& g = *gp;
  const int n = g.num_arrows();  // objects of the square groupoid

  long long total = 0;
  for (int from = 0; from < n; ++from)
    for (int to = 0; to < n; ++to)
      total += static_cast<long long>(g.hom(g.src(from), g.src(to)).size());
  guard.check_build(total, "square groupoid");

  std::vector<Square> squares;
  squares.reserve(static_cast<size_t>(total));
  std::vector<int> block_offset(static_cast<size_t>(n) * n, 0);
  const std::vector<int> pos = hom_positions(g);
  for (int from = 0; from < n; ++from)
    for (int to = 0; to < n; ++to) {
      block_offset[static_cast<size_t>(from) * n + to] =
          static_cast<int>(squares.size());
      for (int k : g.hom(g.src(from), g.src(to))) {
        int l = g.comp(to, g.comp(k, g.inv(from)));
        squares.push_back({from, to, k, l});
      }
    }
  auto sid = [&](int from, int to, int k) {
    return block_offset[static_cast<size_t>(from) * n + to] + pos[k];
  };

  const int m = static_cast<int>(squares.size());
  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(n), inv(m), comp(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    const Square& s = squares[i];
    ends[i] = {s.from, s.to};
    inv[i] = sid(s.to, s.from, g.inv(s.k));
  }
  for (int x = 0; x < n; ++x) units[x] = sid(x, x, g.unit(g.src(x)));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      const Square& sj = squares[j];
      const Square& si = squares[i];
      if (si.from == sj.to)
        comp[static_cast<size_t>(i) * m + j] =
            sid(sj.from, si.to, g.comp(si.k, sj.k));
    }
  GroupoidPtr box = share(FiniteGroupoid(n, std::move(ends), std::move(units),
                                         std::move(inv), std::move(comp)));

  std::vector<int> pi1_obj(n), pi1_arr(m), pi2_obj(n), pi2_arr(m);
  for (int x = 0; x < n; ++x) {
    pi1_obj[x] = g.tgt(x);
    pi2_obj[x] = g.src(x);
  }
  for (int i = 0; i < m; ++i) {
    pi1_arr[i] = squares[i].l;
    pi2_arr[i] = squares[i].k;
  }
  Functor pi1(box, gp, std::move(pi1_obj), std::move(pi1_arr));
  Functor pi2(box, gp, std::move(pi2_obj), std::move(pi2_arr));

  std::vector<int> iota_obj(g.num_objects()), iota_arr(g.num_arrows());
  for (int x = 0; x < g.num_objects(); ++x) iota_obj[x] = g.unit(x);
  for (int a = 0; a < g.num_arrows(); ++a)
    iota_arr[a] = sid(g.unit(g.src(a)), g.unit(g.tgt(a)), a);
  Functor iota(gp, box, std::move(iota_obj), std::move(iota_arr));

  return SquareGroupoid{std::move(gp),      std::move(box),
                        std::move(squares), std::move(pi1),
                        std::move(pi2),     std::move(iota),
                        std::move(block_offset)};
}

int FibredProduct::object_id(int x, int y) const {
  return sorted_pair_index(object_pairs, x, y);
}

int FibredProduct::arrow_id(int a, int b) const {
  return sorted_pair_index(arrow_pairs, a, b);
}

FibredProduct fibred_product(const Functor& f, const Functor& g,
                             const SizeGuard& guard) {
  if (!same_groupoid(f.cod(), g.cod()))
    throw PreconditionError("fibred_product: codomains differ");
  const auto& a = f.dom();
  const auto& b = g.dom();

  std::vector<std::pair<int, int>> object_pairs, arrow_pairs;
  for (int x = 0; x < a.num_objects(); ++x)
    for (int y = 0; y < b.num_objects(); ++y)
      if (f.on_object(x) == g.on_object(y)) object_pairs.push_back({x, y});
  for (int p = 0; p < a.num_arrows(); ++p)
    for (int q = 0; q < b.num_arrows(); ++q)
      if (f.on_arrow(p) == g.on_arrow(q)) arrow_pairs.push_back({p, q});
  guard.check_build(static_cast<long long>(arrow_pairs.size()),
                    "fibred product");

  const int n = static_cast<int>(object_pairs.size());
  const int m = static_cast<int>(arrow_pairs.size());
  auto obj_id = [&](int x, int y) { return sorted_pair_index(object_pairs, x, y); };
  auto arr_id = [&](int p, int q) { return sorted_pair_index(arrow_pairs, p, q); };

  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(n), inv(m), comp(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    auto [p, q] = arrow_pairs[i];
    ends[i] = {obj_id(a.src(p), b.src(q)), obj_id(a.tgt(p), b.tgt(q))};
    inv[i] = arr_id(a.inv(p), b.inv(q));
  }
  for (int o = 0; o < n; ++o) {
    auto [x, y] = object_pairs[o];
    units[o] = arr_id(a.unit(x), b.unit(y));
  }
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (ends[i].src == ends[j].tgt) {
        auto [pi, qi] = arrow_pairs[i];
        auto [pj, qj] = arrow_pairs[j];
        comp[static_cast<size_t>(i) * m + j] =
            arr_id(a.comp(pi, pj), b.comp(qi, qj));
      }
  GroupoidPtr apex = share(FiniteGroupoid(n, std::move(ends), std::move(units),
                                          std::move(inv), std::move(comp)));

  std::vector<int> o1(n), o2(n), a1(m), a2(m);
  for (int o = 0; o < n; ++o) {
    o1[o] = object_pairs[o].first;
    o2[o] = object_pairs[o].second;
  }
  for (int i = 0; i < m; ++i) {
    a1[i] = arrow_pairs[i].first;
    a2[i] = arrow_pairs[i].second;
  }
  Functor to_first(apex, f.dom_ptr(), std::move(o1), std::move(a1));
  Functor to_second(apex, g.dom_ptr(), std::move(o2), std::move(a2));
  return FibredProduct{std::move(apex), std::move(to_first),
                       std::move(to_second), std::move(object_pairs),
                       std::move(arrow_pairs)};
}

Holograph holograph(const Functor& f, const SizeGuard& guard) {
  SquareGroupoid square = square_groupoid(f.cod_ptr(), guard);
  FibredProduct pullback = fibred_product(f, square.pi2, guard);
  GroupoidPtr apex = pullback.groupoid;
  Functor denominator = pullback.to_first;
  Functor numerator = compose(square.pi1, pullback.to_second);

  const auto& dom = f.dom();
  const auto& cod = f.cod();
  std::vector<int> sobj(dom.num_objects()), sarr(dom.num_arrows());
  for (int x = 0; x < dom.num_objects(); ++x)
    sobj[x] = pullback.object_id(x, cod.unit(f.on_object(x)));
  for (int a = 0; a < dom.num_arrows(); ++a)
    sarr[a] = pullback.arrow_id(a, square.iota.on_arrow(f.on_arrow(a)));
  Functor section(f.dom_ptr(), apex, std::move(sobj), std::move(sarr));

  std::vector<int> components(apex->num_objects());
  for (int o = 0; o < apex->num_objects(); ++o)
    components[o] = pullback.object_pairs[o].second;  // the arrow gamma
  NatTransformation twist{compose(f, denominator), numerator,
                          std::move(components)};
  return Holograph{std::move(square),      std::move(pullback),
                   std::move(apex),        std::move(numerator),
                   std::move(denominator), std::move(section),
                   std::move(twist)};
}

Quotient quotient_by_principal(const EmbeddedSubgroupoid& s, const SizeGuard&) {
  const auto& k = *s.parent;

  // Object classes: s-orbits, numbered by smallest member.
  Orbits orbits = compute_orbits(*s.groupoid);
  const std::vector<int>& ocls = orbits.orbit_of;
  const int qn = static_cast<int>(orbits.members.size());

  // Two-sided cosets SxS, numbered by smallest member.
  std::vector<int> coset(k.num_arrows(), -1);
  std::vector<int> rep;
  for (int x = 0; x < k.num_arrows(); ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(x);
    std::vector<int> stack{x};
    coset[x] = id;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int a : s.arrows) {
        if (k.composable(a, y)) {
          int z = k.comp(a, y);
          if (coset[z] < 0) {
            coset[z] = id;
            stack.push_back(z);
          }
        }
        if (k.composable(y, a)) {
          int z = k.comp(y, a);
          if (coset[z] < 0) {
            coset[z] = id;
            stack.push_back(z);
          }
        }
      }
    }
  }
  const int qm = static_cast<int>(rep.size());

  std::vector<ArrowEnds> ends(qm);
  std::vector<int> units(qn), inv(qm), comp(static_cast<size_t>(qm) * qm, -1);
  for (int c = 0; c < qm; ++c) {
    ends[c] = {ocls[k.src(rep[c])], ocls[k.tgt(rep[c])]};
    inv[c] = coset[k.inv(rep[c])];
  }
  for (int o = 0; o < qn; ++o)
    units[o] = coset[k.unit(orbits.representative[o])];

  // Composition by representatives, verified independent of the choice.
  for (int y = 0; y < k.num_arrows(); ++y)
    for (int x : k.arrows_from(k.tgt(y))) {
      int& slot = comp[static_cast<size_t>(coset[x]) * qm + coset[y]];
      int value = coset[k.comp(x, y)];
      if (slot < 0)
        slot = value;
      else if (slot != value)
        throw ValidationError("quotient not well-defined");
    }
  // Every composable coset pair must have been witnessed by a composable
  // representative pair (guaranteed: the end classes are s-connected).
  for (int ci = 0; ci < qm; ++ci)
    for (int cj = 0; cj < qm; ++cj)
      if (ends[ci].src == ends[cj].tgt &&
          comp[static_cast<size_t>(ci) * qm + cj] < 0)
        throw ValidationError("quotient not well-defined");

  GroupoidPtr quot = share(FiniteGroupoid(qn, std::move(ends),
                                          std::move(units), std::move(inv),
                                          std::move(comp)));
  Functor projection(s.parent, quot, ocls, coset);
  return Quotient{std::move(quot), std::move(projection), ocls,
                  std::move(coset)};
}

SubactorDecomposition subactor_decompose(const Functor& f,
                                         const FunctorProfile& profile,
                                         const SizeGuard& guard) {
  if (!profile.subactor)
    throw PreconditionError("subactor_decompose: profile is not a subactor");
  EmbeddedSubgroupoid ker = kernel(f);
  if (!classify(*ker.groupoid).principal)
    throw PreconditionError("subactor_decompose: kernel is not principal");

  const auto& d = f.dom();
  const auto& c = f.cod();
  Orbits classes = compute_orbits(*ker.groupoid);
  const int ne = static_cast<int>(classes.members.size());
  std::vector<int> moment(ne);  // class -> object of cod
  for (int e = 0; e < ne; ++e)
    moment[e] = f.on_object(classes.representative[e]);

  // act[g][e] = class of the target of any arrow over g starting in class e.
  std::vector<std::vector<int>> act(c.num_arrows(), std::vector<int>(ne, -1));
  for (int xi = 0; xi < d.num_arrows(); ++xi) {
    int e = classes.orbit_of[d.src(xi)];
    int g = f.on_arrow(xi);
    int te = classes.orbit_of[d.tgt(xi)];
    if (act[g][e] >= 0 && act[g][e] != te)
      throw Error("subactor_decompose: action is not well-defined");
    act[g][e] = te;
  }

  std::vector<std::pair<int, int>> pairs;  // (e, g), class-major
  std::vector<std::vector<int>> pair_id(c.num_arrows(),
                                        std::vector<int>(ne, -1));
  for (int e = 0; e < ne; ++e)
    for (int g : c.arrows_from(moment[e])) {
      if (act[g][e] < 0)
        throw Error("subactor_decompose: functor is not an exactor");
      pair_id[g][e] = static_cast<int>(pairs.size());
      pairs.push_back({e, g});
    }
  const int m = static_cast<int>(pairs.size());
  guard.check_build(m, "subactor decomposition");

  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(ne), inv(m), comp(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    auto [e, g] = pairs[i];
    ends[i] = {e, act[g][e]};
    inv[i] = pair_id[c.inv(g)][act[g][e]];
  }
  for (int e = 0; e < ne; ++e) units[e] = pair_id[c.unit(moment[e])][e];
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (ends[i].src == ends[j].tgt) {
        auto [ej, gj] = pairs[j];
        int gi = pairs[i].second;
        comp[static_cast<size_t>(i) * m + j] = pair_id[c.comp(gi, gj)][ej];
      }
  GroupoidPtr middle = share(FiniteGroupoid(ne, std::move(ends),
                                            std::move(units), std::move(inv),
                                            std::move(comp)));

  std::vector<int> eobj(d.num_objects()), earr(d.num_arrows());
  for (int x = 0; x < d.num_objects(); ++x) eobj[x] = classes.orbit_of[x];
  for (int xi = 0; xi < d.num_arrows(); ++xi)
    earr[xi] = pair_id[f.on_arrow(xi)][classes.orbit_of[d.src(xi)]];
  Functor e_fun(f.dom_ptr(), middle, std::move(eobj), std::move(earr));

  std::vector<int> aobj(ne), aarr(m);
  for (int e = 0; e < ne; ++e) aobj[e] = moment[e];
  for (int i = 0; i < m; ++i) aarr[i] = pairs[i].second;
  Functor a_fun(middle, f.cod_ptr(), std::move(aobj), std::move(aarr));
  return SubactorDecomposition{std::move(middle), std::move(e_fun),
                               std::move(a_fun)};
}

Functor transfer_actor(const Functor& u, const Functor& a,
                       TransferDirection direction, const SizeGuard& guard) {
  FunctorProfile up = analyze_functor(u, guard);
  if (!up.s_equivalence)
    throw PreconditionError("transfer_actor: u is not an s-equivalence");
  FunctorProfile ap = analyze_functor(a, guard);
  if (!ap.actor) throw PreconditionError("transfer_actor: a is not an actor");

  if (direction == TransferDirection::pullback) {
    if (!same_groupoid(a.cod(), u.cod()))
      throw PreconditionError(
          "transfer_actor: actor does not live over cod(u)");
    return fibred_product(a, u, guard).to_second;
  }
  if (!same_groupoid(a.cod(), u.dom()))
    throw PreconditionError("transfer_actor: actor does not live over dom(u)");
  Functor composite = compose(u, a);
  FunctorProfile cp = analyze_functor(composite, guard);
  if (!cp.subactor)
    throw Error("transfer_actor: composite is unexpectedly not a subactor");
  return subactor_decompose(composite, cp, guard).from_middle;
}

WeakPullback weak_pullback(const Functor& g, const Functor& u,
                           const SizeGuard& guard) {
  if (!same_groupoid(g.cod(), u.cod()))
    throw PreconditionError("weak_pullback: codomains differ");
  Holograph right = holograph(u, guard);
  FibredProduct weak = fibred_product(g, right.numerator, guard);
  GroupoidPtr apex = weak.groupoid;
  Functor to_first = weak.to_first;
  Functor to_second = compose(right.denominator, weak.to_second);
  FibredProduct strict = fibred_product(g, u, guard);

  const Functor& s = right.section;
  const int n = strict.groupoid->num_objects();
  const int m = strict.groupoid->num_arrows();
  std::vector<int> cobj(n), carr(m);
  for (int o = 0; o < n; ++o) {
    auto [x, y] = strict.object_pairs[o];
    cobj[o] = weak.object_id(x, s.on_object(y));
  }
  for (int i = 0; i < m; ++i) {
    auto [p, q] = strict.arrow_pairs[i];
    carr[i] = weak.arrow_id(p, s.on_arrow(q));
  }
  Functor comparison(strict.groupoid, apex, std::move(cobj), std::move(carr));
  return WeakPullback{std::move(right),     std::move(weak),
                      std::move(apex),      std::move(to_first),
                      std::move(to_second), std::move(strict),
                      std::move(comparison)};
}

SkeletonRetraction skeleton_retraction(GroupoidPtr gp) {
  const auto& g = *gp;
  OrbitsAndVertexGroups decomposition = orbits_and_vertex_groups(g);
  const Orbits& orbits = decomposition.orbits;
  const int no = static_cast<int>(orbits.members.size());

  std::vector<int> theta(g.num_objects(), -1);
  for (int b = 0; b < g.num_objects(); ++b) {
    int r = orbits.representative[orbits.orbit_of[b]];
    const auto& h = g.hom(b, r);
    if (h.empty()) throw Error("skeleton_retraction: missing connecting arrow");
    theta[b] = h.front();  // hom lists are in increasing id order
  }

  // Plurigroup: objects = orbits; arrows = the vertex-group loops at each
  // representative, blocks in orbit order.
  std::vector<int> arrow_index(g.num_arrows(), -1);
  std::vector<ArrowEnds> ends;
  std::vector<int> loop_parent;
  for (int o = 0; o < no; ++o)
    for (int a : decomposition.vertex_groups[o].parent_arrows) {
      arrow_index[a] = static_cast<int>(loop_parent.size());
      loop_parent.push_back(a);
      ends.push_back({o, o});
    }
  const int m = static_cast<int>(loop_parent.size());
  std::vector<int> units(no), inv(m), comp(static_cast<size_t>(m) * m, -1);
  for (int o = 0; o < no; ++o)
    units[o] = arrow_index[g.unit(orbits.representative[o])];
  for (int i = 0; i < m; ++i) inv[i] = arrow_index[g.inv(loop_parent[i])];
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (ends[i].src == ends[j].tgt)
        comp[static_cast<size_t>(i) * m + j] =
            arrow_index[g.comp(loop_parent[i], loop_parent[j])];
  GroupoidPtr plurigroup = share(FiniteGroupoid(
      no, std::move(ends), std::move(units), std::move(inv), std::move(comp)));

  std::vector<int> robj(g.num_objects()), rarr(g.num_arrows());
  for (int b = 0; b < g.num_objects(); ++b) robj[b] = orbits.orbit_of[b];
  for (int x = 0; x < g.num_arrows(); ++x)
    rarr[x] = arrow_index[g.comp(theta[g.tgt(x)],
                                 g.comp(x, g.inv(theta[g.src(x)])))];
  Functor retraction(gp, plurigroup, std::move(robj), std::move(rarr));
  return SkeletonRetraction{std::move(plurigroup), std::move(retraction),
                            std::move(theta), std::move(decomposition)};
}

}  // namespace gpd
