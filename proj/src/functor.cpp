#include "gpd/functor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

namespace gpd {

Functor::Functor(GroupoidPtr dom, GroupoidPtr cod, std::vector<int> object_map,
                 std::vector<int> arrow_map)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      object_map_(std::move(object_map)),
      arrow_map_(std::move(arrow_map)) {
  if (static_cast<int>(object_map_.size()) != dom_->num_objects())
    throw ValidationError("functor: object map size mismatch");
  if (static_cast<int>(arrow_map_.size()) != dom_->num_arrows())
    throw ValidationError("functor: arrow map size mismatch");
  for (int v : object_map_)
    if (v < 0 || v >= cod_->num_objects())
      throw ValidationError("functor: object image out of range");
  for (int v : arrow_map_)
    if (v < 0 || v >= cod_->num_arrows())
      throw ValidationError("functor: arrow image out of range");
}

Functor Functor::identity(GroupoidPtr g) {
  std::vector<int> obj(g->num_objects()), arr(g->num_arrows());
  std::iota(obj.begin(), obj.end(), 0);
  std::iota(arr.begin(), arr.end(), 0);
  return Functor(g, g, std::move(obj), std::move(arr));
}

bool Functor::operator==(const Functor& o) const {
  return object_map_ == o.object_map_ && arrow_map_ == o.arrow_map_ &&
         same_groupoid(dom(), o.dom()) && same_groupoid(cod(), o.cod());
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_groupoid(f.cod(), g.dom()))
    throw PreconditionError("functor composition: middle groupoid mismatch");
  std::vector<int> obj(f.dom().num_objects()), arr(f.dom().num_arrows());
  for (int x = 0; x < f.dom().num_objects(); ++x)
    obj[x] = g.on_object(f.on_object(x));
  for (int a = 0; a < f.dom().num_arrows(); ++a)
    arr[a] = g.on_arrow(f.on_arrow(a));
  return Functor(f.dom_ptr(), g.cod_ptr(), std::move(obj), std::move(arr));
}

ValidationReport validate_functor(const Functor& f) {
  ValidationReport r;
  auto fail = [&](const std::string& m) { r.violations.push_back(m); };
  const auto& d = f.dom();
  const auto& c = f.cod();
  for (int a = 0; a < d.num_arrows(); ++a) {
    int fa = f.on_arrow(a);
    if (c.src(fa) != f.on_object(d.src(a)) ||
        c.tgt(fa) != f.on_object(d.tgt(a)))
      fail("functor does not preserve endpoints at arrow " + std::to_string(a));
  }
  for (int x = 0; x < d.num_objects(); ++x)
    if (f.on_arrow(d.unit(x)) != c.unit(f.on_object(x)))
      fail("functor does not preserve the unit at object " + std::to_string(x));
  for (int a = 0; a < d.num_arrows(); ++a)
    if (f.on_arrow(d.inv(a)) != c.inv(f.on_arrow(a)))
      fail("functor does not preserve the inverse at arrow " + std::to_string(a));
  for (int b = 0; b < d.num_arrows(); ++b)
    for (int a : d.arrows_from(d.tgt(b))) {
      int ab = d.comp_or_neg(a, b);
      if (ab < 0) continue;
      int img = c.comp_or_neg(f.on_arrow(a), f.on_arrow(b));
      if (img != f.on_arrow(ab)) {
        fail("composition not preserved at (" + std::to_string(a) + ", " +
             std::to_string(b) + ", " + std::to_string(ab) + ")");
        if (r.violations.size() > 50) return r;
      }
    }
  return r;
}

bool is_invertible_functor(const Functor& f) {
  return f.objector().bijective() && f.arrow_setmap().bijective();
}

Functor inverse_functor(const Functor& f) {
  if (!is_invertible_functor(f))
    throw PreconditionError("inverse_functor: functor is not invertible");
  std::vector<int> obj(f.cod().num_objects()), arr(f.cod().num_arrows());
  for (int x = 0; x < f.dom().num_objects(); ++x) obj[f.on_object(x)] = x;
  for (int a = 0; a < f.dom().num_arrows(); ++a) arr[f.on_arrow(a)] = a;
  return Functor(f.cod_ptr(), f.dom_ptr(), std::move(obj), std::move(arr));
}

bool FunctorProfile::consistent() const {
  if (inductor != (i_faithful && s_full)) return false;
  if (equivalence != (inductor && essentially_surjective)) return false;
  if (s_equivalence != (equivalence && s_functor)) return false;
  if (actor != (inactor && exactor)) return false;
  if (s_extensor != (s_full && s_functor)) return false;
  if (subactor != (exactor && i_faithful)) return false;
  return true;
}

std::string FunctorProfile::to_string() const {
  std::string s;
  auto add = [&](bool f, const char* name) {
    if (f) {
      if (!s.empty()) s += ' ';
      s += name;
    }
  };
  add(i_faithful, "i_faithful");
  add(s_full, "s_full");
  add(inductor, "inductor");
  add(essentially_surjective, "essentially_surjective");
  add(equivalence, "equivalence");
  add(s_equivalence, "s_equivalence");
  add(actor, "actor");
  add(inactor, "inactor");
  add(exactor, "exactor");
  add(s_functor, "s_functor");
  add(s_extensor, "s_extensor");
  add(subactor, "subactor");
  add(uniferous, "uniferous");
  add(principal_source, "principal_source");
  if (split.has_value()) s += std::string(s.empty() ? "" : " ") +
                              (*split ? "split" : "non_split");
  else
    s += std::string(s.empty() ? "" : " ") + "split_unknown";
  return s;
}

FunctorProfile analyze_functor(const Functor& f, const SizeGuard& guard) {
  FunctorProfile p;
  const auto& d = f.dom();
  const auto& c = f.cod();

  // i-faithful: (tgt, src, image) determines the arrow.
  std::set<std::tuple<int, int, int>> triples;
  bool inj = true;
  for (int a = 0; a < d.num_arrows(); ++a)
    if (!triples.insert({d.tgt(a), d.src(a), f.on_arrow(a)}).second) inj = false;
  p.i_faithful = inj;

  // s-full: every arrow between image objects lifts with prescribed ends.
  p.s_full = true;
  for (int cp = 0; cp < d.num_objects() && p.s_full; ++cp)
    for (int bp = 0; bp < d.num_objects() && p.s_full; ++bp)
      for (int g : c.hom(f.on_object(cp), f.on_object(bp))) {
        bool lifted = false;
        for (int x : d.hom(cp, bp))
          if (f.on_arrow(x) == g) {
            lifted = true;
            break;
          }
        if (!lifted) {
          p.s_full = false;
          break;
        }
      }

  // Inductor, computed as bijectivity of the canonical comparison with the
  // pulled-back groupoid (an independent count, cross-checked in
  // FunctorProfile::consistent against i_faithful && s_full).
  long long pullback_size = 0;
  for (int cp = 0; cp < d.num_objects(); ++cp)
    for (int bp = 0; bp < d.num_objects(); ++bp)
      pullback_size +=
          static_cast<long long>(c.hom(f.on_object(cp), f.on_object(bp)).size());
  p.inductor = p.i_faithful && pullback_size == d.num_arrows();

  // Essentially surjective: every codomain object receives an arrow from an
  // image object.
  std::vector<bool> in_image(c.num_objects(), false);
  for (int x = 0; x < d.num_objects(); ++x) in_image[f.on_object(x)] = true;
  std::vector<bool> reached(c.num_objects(), false);
  for (int g = 0; g < c.num_arrows(); ++g)
    if (in_image[c.src(g)]) reached[c.tgt(g)] = true;
  p.essentially_surjective =
      std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });

  p.equivalence = p.inductor && p.essentially_surjective;

  // Action comparison map x -> (image, source).
  std::set<std::pair<int, int>> action_pairs;
  bool act_inj = true;
  for (int a = 0; a < d.num_arrows(); ++a)
    if (!action_pairs.insert({f.on_arrow(a), d.src(a)}).second) act_inj = false;
  long long action_size = 0;
  for (int x = 0; x < d.num_objects(); ++x)
    action_size += static_cast<long long>(c.arrows_from(f.on_object(x)).size());
  p.inactor = act_inj;
  p.exactor = static_cast<long long>(action_pairs.size()) == action_size;
  p.actor = p.inactor && p.exactor;

  p.s_functor = f.arrow_setmap().surjective();
  p.s_extensor = p.s_full && p.s_functor;
  p.s_equivalence = p.equivalence && f.objector().surjective();
  p.subactor = p.exactor && p.i_faithful;
  p.uniferous = d.num_objects() == c.num_objects() &&
                f.objector() == SetMap::identity(d.num_objects());
  p.principal_source = classify(d).principal;

  if (d.num_arrows() <= guard.max_arrows)
    p.split = find_section(f, guard).has_value();
  return p;
}

EmbeddedSubgroupoid make_subgroupoid(GroupoidPtr parent,
                                     std::vector<int> arrow_ids) {
  const auto& g = *parent;
  std::sort(arrow_ids.begin(), arrow_ids.end());
  arrow_ids.erase(std::unique(arrow_ids.begin(), arrow_ids.end()),
                  arrow_ids.end());
  std::vector<int> index(g.num_arrows(), -1);
  for (size_t i = 0; i < arrow_ids.size(); ++i) {
    if (arrow_ids[i] < 0 || arrow_ids[i] >= g.num_arrows())
      throw ValidationError("subgroupoid: arrow id out of range");
    index[arrow_ids[i]] = static_cast<int>(i);
  }
  for (int x = 0; x < g.num_objects(); ++x)
    if (index[g.unit(x)] < 0)
      throw ValidationError("subgroupoid: missing unit at object " +
                            std::to_string(x));
  for (int a : arrow_ids) {
    if (index[g.inv(a)] < 0)
      throw ValidationError("subgroupoid: not closed under inverse at arrow " +
                            std::to_string(a));
    for (int b : arrow_ids)
      if (g.composable(a, b) && index[g.comp(a, b)] < 0)
        throw ValidationError(
            "subgroupoid: not closed under composition at pair (" +
            std::to_string(a) + ", " + std::to_string(b) + ")");
  }

  const int m = static_cast<int>(arrow_ids.size());
  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(g.num_objects()), inv(m),
      comp(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    ends[i] = {g.src(arrow_ids[i]), g.tgt(arrow_ids[i])};
    inv[i] = index[g.inv(arrow_ids[i])];
  }
  for (int x = 0; x < g.num_objects(); ++x) units[x] = index[g.unit(x)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (g.composable(arrow_ids[i], arrow_ids[j]))
        comp[static_cast<size_t>(i) * m + j] =
            index[g.comp(arrow_ids[i], arrow_ids[j])];
  GroupoidPtr sub = share(FiniteGroupoid(g.num_objects(), std::move(ends),
                                         std::move(units), std::move(inv),
                                         std::move(comp)));
  std::vector<int> obj(g.num_objects());
  std::iota(obj.begin(), obj.end(), 0);
  Functor incl(sub, parent, std::move(obj), arrow_ids);
  return EmbeddedSubgroupoid{std::move(parent), std::move(arrow_ids),
                             std::move(sub), std::move(incl)};
}

EmbeddedSubgroupoid subgroupoid_closure(GroupoidPtr parent,
                                        const std::vector<int>& generators) {
  const auto& g = *parent;
  std::set<int> have;
  for (int x = 0; x < g.num_objects(); ++x) have.insert(g.unit(x));
  for (int a : generators) have.insert(a);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(have.begin(), have.end());
    for (int a : cur)
      if (have.insert(g.inv(a)).second) grew = true;
    for (int a : cur)
      for (int b : cur)
        if (g.composable(a, b) && have.insert(g.comp(a, b)).second) grew = true;
  }
  return make_subgroupoid(std::move(parent),
                          std::vector<int>(have.begin(), have.end()));
}

EmbeddedSubgroupoid kernel(const Functor& f) {
  std::vector<int> ids;
  for (int a = 0; a < f.dom().num_arrows(); ++a)
    if (f.cod().is_unit(f.on_arrow(a))) ids.push_back(a);
  return make_subgroupoid(f.dom_ptr(), std::move(ids));
}

ValidationReport validate_transformation(const NatTransformation& t) {
  ValidationReport r;
  auto fail = [&](const std::string& m) { r.violations.push_back(m); };
  const Functor& f = t.from;
  const Functor& g = t.to;
  if (!same_groupoid(f.dom(), g.dom()) || !same_groupoid(f.cod(), g.cod())) {
    fail("transformation: functors are not parallel");
    return r;
  }
  const auto& d = f.dom();
  const auto& c = f.cod();
  if (static_cast<int>(t.components.size()) != d.num_objects()) {
    fail("transformation: one component per object required");
    return r;
  }
  for (int x = 0; x < d.num_objects(); ++x) {
    int cx = t.components[x];
    if (cx < 0 || cx >= c.num_arrows() || c.src(cx) != f.on_object(x) ||
        c.tgt(cx) != g.on_object(x))
      fail("transformation: component at object " + std::to_string(x) +
           " has wrong endpoints");
  }
  if (!r.ok()) return r;
  for (int a = 0; a < d.num_arrows(); ++a) {
    int lhs = c.comp(t.components[d.tgt(a)], f.on_arrow(a));
    int rhs = c.comp(g.on_arrow(a), t.components[d.src(a)]);
    if (lhs != rhs)
      fail("transformation: naturality fails at arrow " + std::to_string(a));
  }
  return r;
}

std::optional<NatTransformation> naturally_isomorphic(const Functor& f,
                                                      const Functor& g,
                                                      const SizeGuard& guard) {
  if (!same_groupoid(f.dom(), g.dom()) || !same_groupoid(f.cod(), g.cod()))
    throw PreconditionError("naturally_isomorphic: functors are not parallel");
  guard.check_search(
      std::max(f.dom().num_arrows(), f.cod().num_arrows()),
      "natural isomorphism search");
  const auto& d = f.dom();
  const auto& c = f.cod();
  const int n = d.num_objects();
  // Arrows become checkable when their later endpoint is assigned.
  std::vector<std::vector<int>> ready(n);
  for (int a = 0; a < d.num_arrows(); ++a)
    ready[std::max(d.src(a), d.tgt(a))].push_back(a);

  std::vector<int> t(n, -1);
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) return true;
    for (int cand : c.hom(f.on_object(x), g.on_object(x))) {
      t[x] = cand;
      bool ok = true;
      for (int a : ready[x]) {
        int lhs = c.comp_or_neg(t[d.tgt(a)], f.on_arrow(a));
        int rhs = c.comp_or_neg(g.on_arrow(a), t[d.src(a)]);
        if (lhs < 0 || lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok && go(x + 1)) return true;
    }
    t[x] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return NatTransformation{f, g, t};
}

namespace {

// Shared backtracking for arrow assignments that must respect composition:
// when the last member of a composable triple is placed, the image triple is
// checked.  `image` is the partial arrow map of the searched functor.
struct CompositionChecker {
  const FiniteGroupoid& dom;
  const FiniteGroupoid& cod;
  std::vector<std::vector<std::pair<int, int>>> pairs_with_product;

  explicit CompositionChecker(const FiniteGroupoid& d, const FiniteGroupoid& c)
      : dom(d), cod(c), pairs_with_product(d.num_arrows()) {
    for (int b = 0; b < d.num_arrows(); ++b)
      for (int a : d.arrows_from(d.tgt(b))) {
        int ab = d.comp_or_neg(a, b);
        if (ab >= 0) pairs_with_product[ab].push_back({a, b});
      }
  }

  bool placing_ok(int k, const std::vector<int>& image) const {
    // Triples where k is a factor.
    for (int b = 0; b < dom.num_arrows(); ++b) {
      if (image[b] < 0) continue;
      if (dom.composable(k, b)) {
        int c = dom.comp_or_neg(k, b);
        if (c >= 0 && image[c] >= 0 &&
            cod.comp_or_neg(image[k], image[b]) != image[c])
          return false;
      }
      if (dom.composable(b, k)) {
        int c = dom.comp_or_neg(b, k);
        if (c >= 0 && image[c] >= 0 &&
            cod.comp_or_neg(image[b], image[k]) != image[c])
          return false;
      }
    }
    // Triples where k is the product.
    for (auto [a, b] : pairs_with_product[k])
      if (image[a] >= 0 && image[b] >= 0 &&
          cod.comp_or_neg(image[a], image[b]) != image[k])
        return false;
    return true;
  }
};

}  // namespace

std::optional<Functor> find_section(const Functor& f, const SizeGuard& guard) {
  guard.check_search(f.dom().num_arrows(), "section search");
  const auto& d = f.dom();
  const auto& c = f.cod();

  std::vector<std::vector<int>> obj_pre(c.num_objects());
  for (int x = 0; x < d.num_objects(); ++x) obj_pre[f.on_object(x)].push_back(x);
  for (int b = 0; b < c.num_objects(); ++b)
    if (obj_pre[b].empty()) return std::nullopt;

  CompositionChecker checker(c, d);  // composition lives in the codomain of s
  std::vector<int> s0(c.num_objects(), -1), s1(c.num_arrows(), -1);

  std::function<bool(int)> assign_arrows = [&](int y) -> bool {
    if (y == c.num_arrows()) return true;
    for (int x : d.hom(s0[c.src(y)], s0[c.tgt(y)])) {
      if (f.on_arrow(x) != y) continue;
      if (c.is_unit(y) && x != d.unit(s0[c.src(y)])) continue;
      int iy = c.inv(y);
      if (s1[iy] >= 0 && s1[iy] != d.inv(x)) continue;
      s1[y] = x;
      if (checker.placing_ok(y, s1) && assign_arrows(y + 1)) return true;
      s1[y] = -1;
    }
    return false;
  };

  std::function<bool(int)> assign_objects = [&](int b) -> bool {
    if (b == c.num_objects()) {
      std::fill(s1.begin(), s1.end(), -1);
      return assign_arrows(0);
    }
    for (int x : obj_pre[b]) {
      s0[b] = x;
      if (assign_objects(b + 1)) return true;
    }
    s0[b] = -1;
    return false;
  };

  if (!assign_objects(0)) return std::nullopt;
  return Functor(f.cod_ptr(), f.dom_ptr(), s0, s1);
}

std::optional<Functor> find_isomorphism_where(
    GroupoidPtr gp, GroupoidPtr hp,
    const std::function<bool(int, int)>& object_ok,
    const std::function<bool(int, int)>& arrow_ok, const SizeGuard& guard) {
  const auto& g = *gp;
  const auto& h = *hp;
  if (g.num_objects() != h.num_objects() || g.num_arrows() != h.num_arrows())
    return std::nullopt;
  guard.check_search(g.num_arrows(), "isomorphism search");
  const int n = g.num_objects();
  const int m = g.num_arrows();

  std::vector<int> obj(n, -1), arr(m, -1);
  std::vector<bool> obj_used(n, false), arr_used(m, false);
  CompositionChecker checker(g, h);

  auto hom_sizes_match = [&](int x, int y) {
    if (g.arrows_from(x).size() != h.arrows_from(y).size()) return false;
    if (g.arrows_to(x).size() != h.arrows_to(y).size()) return false;
    if (g.hom(x, x).size() != h.hom(y, y).size()) return false;
    for (int xp = 0; xp < n; ++xp)
      if (obj[xp] >= 0 && (g.hom(x, xp).size() != h.hom(y, obj[xp]).size() ||
                           g.hom(xp, x).size() != h.hom(obj[xp], y).size()))
        return false;
    return true;
  };

  std::function<bool(int)> assign_arrows = [&](int a) -> bool {
    if (a == m) return true;
    if (g.is_unit(a)) {
      // Units are forced by the object bijection.
      int src = g.src(a);
      int target = h.unit(obj[src]);
      if (arr_used[target] || !arrow_ok(a, target)) return false;
      arr[a] = target;
      arr_used[target] = true;
      bool ok = checker.placing_ok(a, arr) && assign_arrows(a + 1);
      if (ok) return true;
      arr[a] = -1;
      arr_used[target] = false;
      return false;
    }
    for (int cand : h.hom(obj[g.src(a)], obj[g.tgt(a)])) {
      if (arr_used[cand] || h.is_unit(cand) || !arrow_ok(a, cand)) continue;
      int ia = g.inv(a);
      if (arr[ia] >= 0 && arr[ia] != h.inv(cand)) continue;
      arr[a] = cand;
      arr_used[cand] = true;
      if (checker.placing_ok(a, arr) && assign_arrows(a + 1)) return true;
      arr[a] = -1;
      arr_used[cand] = false;
    }
    return false;
  };

  std::function<bool(int)> assign_objects = [&](int x) -> bool {
    if (x == n) {
      std::fill(arr.begin(), arr.end(), -1);
      std::fill(arr_used.begin(), arr_used.end(), false);
      return assign_arrows(0);
    }
    for (int y = 0; y < n; ++y) {
      if (obj_used[y] || !object_ok(x, y) || !hom_sizes_match(x, y)) continue;
      obj[x] = y;
      obj_used[y] = true;
      if (assign_objects(x + 1)) return true;
      obj[x] = -1;
      obj_used[y] = false;
    }
    return false;
  };

  if (!assign_objects(0)) return std::nullopt;
  return Functor(gp, hp, obj, arr);
}

std::optional<Functor> find_isomorphism(GroupoidPtr g, GroupoidPtr h,
                                        const SizeGuard& guard) {
  auto yes = [](int, int) { return true; };
  return find_isomorphism_where(g, h, yes, yes, guard);
}

std::vector<Functor> enumerate_functors_where(
    GroupoidPtr dom, GroupoidPtr cod,
    const std::function<bool(int, int)>& object_ok,
    const std::function<bool(int, int)>& arrow_ok, long long max_count,
    const SizeGuard& guard) {
  const auto& d = *dom;
  const auto& c = *cod;
  guard.check_search(std::max(d.num_arrows(), c.num_arrows()),
                     "functor enumeration");
  const int n = d.num_objects();
  const int m = d.num_arrows();

  std::vector<Functor> out;
  bool full = false;
  long long nodes = 0;
  std::vector<int> obj(n, 0), arr(m, -1);
  CompositionChecker checker(d, c);

  std::function<void(int)> assign_arrows = [&](int a) {
    if (full) return;
    if (++nodes > 20000000)
      throw SizeGuardError("functor enumeration search budget exceeded");
    if (a == m) {
      out.emplace_back(dom, cod, obj, arr);
      if (static_cast<long long>(out.size()) >= max_count) full = true;
      return;
    }
    if (d.is_unit(a)) {
      const int forced = c.unit(obj[d.src(a)]);
      if (!arrow_ok(a, forced)) return;
      arr[a] = forced;
      if (checker.placing_ok(a, arr)) assign_arrows(a + 1);
      arr[a] = -1;
      return;
    }
    const int ia = d.inv(a);
    for (int cand : c.hom(obj[d.src(a)], obj[d.tgt(a)])) {
      if (!arrow_ok(a, cand)) continue;
      if (arr[ia] >= 0 && arr[ia] != c.inv(cand)) continue;
      arr[a] = cand;
      if (checker.placing_ok(a, arr)) assign_arrows(a + 1);
      arr[a] = -1;
      if (full) return;
    }
  };

  std::function<void(int)> assign_objects = [&](int x) {
    if (full) return;
    if (x == n) {
      assign_arrows(0);
      return;
    }
    for (int y = 0; y < c.num_objects() && !full; ++y) {
      if (!object_ok(x, y)) continue;
      obj[x] = y;
      assign_objects(x + 1);
    }
  };

  assign_objects(0);
  return out;
}

std::optional<std::vector<Functor>> try_enumerate_functors(
    GroupoidPtr dom, GroupoidPtr cod, long long max_count,
    const SizeGuard& guard) {
  auto yes = [](int, int) { return true; };
  std::vector<Functor> all =
      enumerate_functors_where(dom, cod, yes, yes, max_count + 1, guard);
  if (static_cast<long long>(all.size()) > max_count) return std::nullopt;
  return all;
}

}  // namespace gpd
