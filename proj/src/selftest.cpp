#include "gpd/selftest.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpd/format.hpp"
#include "gpd/standard.hpp"

namespace gpd {
namespace {

// ------------------------------------------------------------ result helpers

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void pass(const std::string& c, const std::string& d = "") {
    add(c, CaseStatus::pass, d);
  }
  void fail(const std::string& c, const std::string& d = "") {
    add(c, CaseStatus::fail, d);
  }
  void skip(const std::string& c, const std::string& d = "") {
    add(c, CaseStatus::skip, d);
  }
  void check(const std::string& c, bool ok, const std::string& d = "") {
    if (ok)
      pass(c);
    else
      fail(c, d.empty() ? "property violated" : d);
  }

  /// body() -> bool; a size-guard refusal is a deterministic skip, any other
  /// exception is a failure.
  template <typename F>
  void run(const std::string& c, F&& body) {
    try {
      check(c, body());
    } catch (const SizeGuardError& e) {
      skip(c, e.what());
    } catch (const std::exception& e) {
      fail(c, std::string("error: ") + e.what());
    }
  }

  SuiteResult finish() {
    bool effective = false;
    for (const CaseResult& c : cases_)
      if (c.status != CaseStatus::skip) effective = true;
    if (!effective) fail("(zero effective cases)", "every case was skipped");
    std::sort(cases_.begin(), cases_.end(),
              [](const CaseResult& a, const CaseResult& b) {
                return std::tie(a.name, a.detail) < std::tie(b.name, b.detail);
              });
    SuiteResult r;
    r.name = name_;
    r.cases = std::move(cases_);
    return r;
  }

 private:
  void add(const std::string& c, CaseStatus s, const std::string& d) {
    CaseResult r;
    r.name = c;
    r.status = s;
    r.detail = d;
    cases_.push_back(std::move(r));
  }

  std::string name_;
  std::vector<CaseResult> cases_;
};

/// Aggregated check over many generated instances: one report line, first
/// offender named, skips counted.
struct Agg {
  int checked = 0;
  int bad = 0;
  int skipped = 0;
  std::string first;

  void note(const std::string& who, bool good) {
    ++checked;
    if (!good && ++bad == 1) first = who;
  }
  void skip() { ++skipped; }
  void report(Suite& s, const std::string& name) {
    const std::string tail = "checked " + std::to_string(checked) +
                             ", skipped " + std::to_string(skipped);
    if (checked == 0)
      s.skip(name, "no instances (" + tail + ")");
    else if (bad == 0)
      s.pass(name, tail);
    else
      s.fail(name, "failed on " + first + "; " + tail);
  }
};

// ------------------------------------------------------------------- corpus

struct Entry {
  std::string name;
  GroupoidPtr g;
};

struct PoolFunctor {
  std::string name;
  Functor f;
  FunctorProfile profile;
  int dom = 0;
  int cod = 0;
};

struct PoolMero {
  std::string name;
  Meromorphism m;
  int gamma_of = -1;    // functor pool index when built as a holograph class
  int precomp_of = -1;  // mero pool index when built by precomposition
  bool small = false;   // reduced apex within the search cap
};

struct Corpus {
  SelftestOptions opt;
  std::vector<Entry> groupoids;
  std::vector<PoolFunctor> functors;
  std::vector<PoolMero> meros;
  std::vector<std::string> gen_failures;
  int gen_skips = 0;

  GroupoidPtr null1, pair2, cyc2, cyc3, cyc4, k4, sym3, ind2;
  int idx_idcol = -1;  // (identity, collapse) on the banal 2-object groupoid
  int idx_colid = -1;
};

bool same_maps(const Functor& a, const Functor& b) {
  return a.object_map() == b.object_map() && a.arrow_map() == b.arrow_map();
}

Functor collapse_to_point(GroupoidPtr g, GroupoidPtr point) {
  std::vector<int> om(g->num_objects(), 0), am(g->num_arrows(), 0);
  return Functor(g, point, std::move(om), std::move(am));
}

Functor unit_embedding(GroupoidPtr point, GroupoidPtr g, int obj) {
  return Functor(point, g, {obj}, {g->unit(obj)});
}

GroupoidPtr find_entry(const Corpus& c, const std::string& name) {
  for (const Entry& e : c.groupoids)
    if (e.name == name) return e.g;
  return nullptr;
}

void build_catalog(Corpus& c) {
  const int mo = c.opt.max_objects;
  auto add = [&](const std::string& name, FiniteGroupoid g) {
    if (g.num_objects() > mo) return;
    if (static_cast<long long>(g.num_arrows()) > c.opt.guard.max_built_arrows)
      return;
    c.groupoids.push_back({name, share(std::move(g))});
  };

  for (int k = 1; k <= 3; ++k)
    add("null" + std::to_string(k), null_groupoid(k));
  for (int k = 2; k <= 4; ++k)
    add("pair" + std::to_string(k), pair_groupoid(k));
  for (int k = 2; k <= 4; ++k) add("cyc" + std::to_string(k), cyclic_group(k));
  add("sym3", symmetric_group_3());
  add("act-c2-p2",
      action_groupoid(cyclic_group(2), 2, cyclic_action(2, {1, 0})));
  add("act-c3-p3",
      action_groupoid(cyclic_group(3), 3, cyclic_action(3, {1, 2, 0})));
  add("act-c2-p4",
      action_groupoid(cyclic_group(2), 4, cyclic_action(2, {1, 0, 3, 2})));
  add("act-c4-p4",
      action_groupoid(cyclic_group(4), 4, cyclic_action(4, {1, 2, 3, 0})));
  add("uni-null1-cyc2", disjoint_union(null_groupoid(1), cyclic_group(2)));
  add("uni-cyc2-cyc2", disjoint_union(cyclic_group(2), cyclic_group(2)));
  add("uni-pair2-cyc2", disjoint_union(pair_groupoid(2), cyclic_group(2)));
  add("prd-cyc2-cyc2", direct_product(cyclic_group(2), cyclic_group(2)));
  add("prd-pair2-cyc2", direct_product(pair_groupoid(2), cyclic_group(2)));
  add("prd-pair2-pair2", direct_product(pair_groupoid(2), pair_groupoid(2)));
  add("ind-cyc2-00", FiniteGroupoid(*induce(share(cyclic_group(2)),
                                            SetMap(2, 1, {0, 0}))
                                         .groupoid));
  add("ind-cyc3-00", FiniteGroupoid(*induce(share(cyclic_group(3)),
                                            SetMap(2, 1, {0, 0}))
                                         .groupoid));
  add("ind-pair2-001", FiniteGroupoid(*induce(share(pair_groupoid(2)),
                                              SetMap(3, 2, {0, 0, 1}))
                                           .groupoid));
  add("ind-sym3-00", FiniteGroupoid(*induce(share(symmetric_group_3()),
                                            SetMap(2, 1, {0, 0}))
                                         .groupoid));

  c.null1 = find_entry(c, "null1");
  c.pair2 = find_entry(c, "pair2");
  c.cyc2 = find_entry(c, "cyc2");
  c.cyc3 = find_entry(c, "cyc3");
  c.cyc4 = find_entry(c, "cyc4");
  c.k4 = find_entry(c, "prd-cyc2-cyc2");
  c.sym3 = find_entry(c, "sym3");
  c.ind2 = find_entry(c, "ind-cyc2-00");
}

void build_functors(Corpus& c) {
  const int n = static_cast<int>(c.groupoids.size());
  std::mt19937 rng(c.opt.seed);
  std::vector<std::pair<int, int>> order;  // anti-diagonal sweep for coverage
  for (int s = 0; s <= 2 * (n - 1); ++s)
    for (int a = 0; a < n; ++a) {
      const int b = s - a;
      if (b >= 0 && b < n) order.push_back({a, b});
    }

  for (const auto& [ai, bi] : order) {
    if (static_cast<int>(c.functors.size()) >= c.opt.functor_budget) break;
    GroupoidPtr dom = c.groupoids[ai].g, cod = c.groupoids[bi].g;
    std::vector<Functor> got;
    bool exhaustive = false;
    try {
      if (auto all =
              try_enumerate_functors(dom, cod, c.opt.functor_limit, c.opt.guard)) {
        got = std::move(*all);
        exhaustive = true;
      }
    } catch (const SizeGuardError&) {
      ++c.gen_skips;
    }
    if (!exhaustive) {
      std::set<std::vector<int>> seen;
      int added = 0;
      for (int t = 0; t < 3 * c.opt.sample_count && added < c.opt.sample_count;
           ++t) {
        std::vector<int> om(dom->num_objects());
        for (int& v : om) v = static_cast<int>(rng() % cod->num_objects());
        if (!seen.insert(om).second) continue;
        try {
          auto few = enumerate_functors_where(
              dom, cod, [&om](int x, int y) { return om[x] == y; },
              [](int, int) { return true; }, 1, c.opt.guard);
          if (!few.empty()) {
            got.push_back(std::move(few.front()));
            ++added;
          }
        } catch (const SizeGuardError&) {
          ++c.gen_skips;
        }
      }
    }
    int k = 0;
    for (Functor& f : got) {
      FunctorProfile pr = analyze_functor(f, c.opt.guard);
      c.functors.push_back({c.groupoids[ai].name + "->" + c.groupoids[bi].name +
                                "." + std::to_string(k++),
                            std::move(f), pr, ai, bi});
    }
  }
}

void build_meros(Corpus& c) {
  auto push = [&](std::string name, Meromorphism m, int gof, int pof) -> int {
    const bool small =
        m.fraction().apex().num_arrows() <= c.opt.guard.max_arrows;
    c.meros.push_back({std::move(name), std::move(m), gof, pof, small});
    return static_cast<int>(c.meros.size()) - 1;
  };
  auto add = [&](const std::string& name, Fraction fr, int gof,
                 int pof) -> int {
    try {
      return push(name, Meromorphism(std::move(fr), c.opt.guard), gof, pof);
    } catch (const SizeGuardError&) {
      ++c.gen_skips;
    } catch (const ValidationError& e) {
      c.gen_failures.push_back(name + ": " + e.what());
    }
    return -1;
  };

  if (c.pair2 && c.null1) {
    c.idx_idcol = add("idcol-pair2",
                      Fraction(Functor::identity(c.pair2),
                               collapse_to_point(c.pair2, c.null1)),
                      -1, -1);
    c.idx_colid = add("colid-pair2",
                      Fraction(collapse_to_point(c.pair2, c.null1),
                               Functor::identity(c.pair2)),
                      -1, -1);
  }

  int gammas = 0;
  for (int i = 0;
       i < static_cast<int>(c.functors.size()) && gammas < c.opt.gamma_budget;
       ++i) {
    try {
      Meromorphism g = gamma(c.functors[i].f, c.opt.guard);
      push("g." + c.functors[i].name, std::move(g), i, -1);
      ++gammas;
    } catch (const SizeGuardError&) {
      ++c.gen_skips;
    } catch (const ValidationError& e) {
      c.gen_failures.push_back("g." + c.functors[i].name + ": " + e.what());
    }
  }

  std::mt19937 rng(c.opt.seed + 17u);
  const int want = c.opt.target_meromorphisms + 30;
  for (int round = 0;
       round < 3 && static_cast<int>(c.meros.size()) < want; ++round) {
    const int base_count = static_cast<int>(c.meros.size());
    for (int i = 0; i < base_count && static_cast<int>(c.meros.size()) < want;
         ++i) {
      const Fraction& fr = c.meros[i].m.original();
      const int n = fr.apex().num_objects();
      if (fr.apex().num_arrows() > 256) continue;
      const int extra = 1 + static_cast<int>(rng() % 2);
      std::vector<int> img(n + extra);
      for (int x = 0; x < n; ++x) img[x] = x;
      for (int e = 0; e < extra; ++e) img[n + e] = static_cast<int>(rng() % n);
      for (int x = n + extra - 1; x > 0; --x)
        std::swap(img[x], img[rng() % (x + 1)]);
      try {
        InducedGroupoid ind =
            induce(fr.apex_ptr(), SetMap(n + extra, n, img), c.opt.guard);
        Fraction pre(compose(fr.numerator, ind.projection),
                     compose(fr.denominator, ind.projection));
        add("pre" + std::to_string(round) + "." + c.meros[i].name,
            std::move(pre), -1, i);
      } catch (const SizeGuardError&) {
        ++c.gen_skips;
      }
    }
  }

  int inv_budget = 24;
  const int base_count = static_cast<int>(c.meros.size());
  for (int i = 0; i < base_count && inv_budget > 0; ++i) {
    if (!c.meros[i].small) continue;
    try {
      if (!is_meriedric_equivalence(c.meros[i].m, c.opt.guard)) continue;
      push("inv." + c.meros[i].name,
           inverse_meromorphism(c.meros[i].m, c.opt.guard), -1, -1);
      --inv_budget;
    } catch (const SizeGuardError&) {
      ++c.gen_skips;
    } catch (const ValidationError& e) {
      c.gen_failures.push_back("inv." + c.meros[i].name + ": " + e.what());
    }
  }
}

/// Relabeled copy of g under seeded permutations, with the invertible
/// comparison back to g.
std::pair<GroupoidPtr, Functor> shuffled_copy(GroupoidPtr g,
                                              std::mt19937& rng) {
  const int n = g->num_objects(), m = g->num_arrows();
  std::vector<int> po(n), pa(m);
  for (int i = 0; i < n; ++i) po[i] = i;
  for (int i = 0; i < m; ++i) pa[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(po[i], po[rng() % (i + 1)]);
  for (int i = m - 1; i > 0; --i)
    std::swap(pa[i], pa[rng() % (i + 1)]);

  std::vector<ArrowEnds> arrows(m);
  std::vector<int> units(n), inv(m), comp(static_cast<size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a)
    arrows[pa[a]] = {po[g->src(a)], po[g->tgt(a)]};
  for (int x = 0; x < n; ++x) units[po[x]] = pa[g->unit(x)];
  for (int a = 0; a < m; ++a) inv[pa[a]] = pa[g->inv(a)];
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int v = g->comp_or_neg(a, b);
      if (v >= 0) comp[static_cast<size_t>(pa[a]) * m + pa[b]] = pa[v];
    }
  GroupoidPtr copy = share(FiniteGroupoid(n, std::move(arrows),
                                          std::move(units), std::move(inv),
                                          std::move(comp)));
  std::vector<int> om(n), am(m);
  for (int x = 0; x < n; ++x) om[po[x]] = x;
  for (int a = 0; a < m; ++a) am[pa[a]] = a;
  Functor theta(copy, g, std::move(om), std::move(am));
  return {copy, std::move(theta)};
}

/// Restriction of `outer` to the kernel subgroupoids on both sides.
Functor kernel_restriction(const Functor& outer, const EmbeddedSubgroupoid& kd,
                           const EmbeddedSubgroupoid& kc) {
  const FiniteGroupoid& d = *kd.groupoid;
  std::vector<int> om(d.num_objects()), am(d.num_arrows());
  for (int x = 0; x < d.num_objects(); ++x) om[x] = outer.on_object(x);
  for (int a = 0; a < d.num_arrows(); ++a) {
    const int image = outer.on_arrow(kd.arrows[a]);
    const auto it =
        std::lower_bound(kc.arrows.begin(), kc.arrows.end(), image);
    if (it == kc.arrows.end() || *it != image)
      throw Error("internal: kernel image escapes the codomain kernel");
    am[a] = static_cast<int>(it - kc.arrows.begin());
  }
  return Functor(kd.groupoid, kc.groupoid, std::move(om), std::move(am));
}

/// Raw set-theoretic functoriality, independent of the Functor class.
bool raw_functorial(const FiniteGroupoid& d, const FiniteGroupoid& cod,
                    const std::vector<int>& om, const std::vector<int>& am) {
  for (int a = 0; a < d.num_arrows(); ++a) {
    if (cod.src(am[a]) != om[d.src(a)] || cod.tgt(am[a]) != om[d.tgt(a)])
      return false;
  }
  for (int x = 0; x < d.num_objects(); ++x)
    if (am[d.unit(x)] != cod.unit(om[x])) return false;
  for (int a = 0; a < d.num_arrows(); ++a)
    for (int b = 0; b < d.num_arrows(); ++b) {
      const int v = d.comp_or_neg(a, b);
      if (v < 0) continue;
      if (cod.comp_or_neg(am[a], am[b]) != am[v]) return false;
    }
  return true;
}

bool same_ends(const Meromorphism& a, const Meromorphism& b) {
  return same_groupoid(a.source(), b.source()) &&
         same_groupoid(a.target(), b.target());
}

// ------------------------------------------------------------------- suites

SuiteResult suite_corpus(const Corpus& c) {
  Suite s("corpus");
  s.check("catalog nonempty", !c.groupoids.empty());
  s.check("functor pool nonempty", !c.functors.empty());
  s.check("meromorphism pool meets target",
          static_cast<int>(c.meros.size()) >= c.opt.target_meromorphisms,
          "have " + std::to_string(c.meros.size()) + ", need " +
              std::to_string(c.opt.target_meromorphisms));
  s.check("no generation failures", c.gen_failures.empty(),
          c.gen_failures.empty() ? "" : c.gen_failures.front());
  std::mt19937 a(c.opt.seed), b(c.opt.seed);
  bool same = true;
  for (int i = 0; i < 16; ++i) same = same && a() == b();
  s.check("seeded stream reproducible", same);
  return s.finish();
}

SuiteResult suite_axioms(const Corpus& c) {
  Suite s("axioms");
  for (const Entry& e : c.groupoids) {
    const FiniteGroupoid& g = *e.g;
    s.run(e.name + " validates",
          [&] { return validate_groupoid(g).ok(); });
    s.run(e.name + " class lattice",
          [&] { return classify(g).lattice_consistent(); });
    s.run(e.name + " principal agrees with both scans", [&] {
      bool pairwise = true;
      for (int a = 0; a < g.num_arrows() && pairwise; ++a)
        for (int b = a + 1; b < g.num_arrows(); ++b)
          if (g.src(a) == g.src(b) && g.tgt(a) == g.tgt(b)) {
            pairwise = false;
            break;
          }
      bool homs = true;
      for (int x = 0; x < g.num_objects() && homs; ++x)
        for (int y = 0; y < g.num_objects(); ++y)
          if (static_cast<int>(g.hom(x, y).size()) > 1) {
            homs = false;
            break;
          }
      const bool flag = classify(g).principal;
      return flag == pairwise && flag == homs;
    });
    s.run(e.name + " orbits agree with reachability", [&] {
      const Orbits o = compute_orbits(g);
      // independent brute force: repeated relaxation over arrows
      std::vector<int> comp(g.num_objects());
      for (int x = 0; x < g.num_objects(); ++x) comp[x] = x;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int a = 0; a < g.num_arrows(); ++a) {
          const int lo = std::min(comp[g.src(a)], comp[g.tgt(a)]);
          if (comp[g.src(a)] != lo) comp[g.src(a)] = lo, changed = true;
          if (comp[g.tgt(a)] != lo) comp[g.tgt(a)] = lo, changed = true;
        }
      }
      auto canon = [](std::vector<int> v) {
        std::map<int, int> ren;
        for (int& x : v) {
          auto [it, fresh] = ren.try_emplace(x, static_cast<int>(ren.size()));
          x = it->second;
        }
        return v;
      };
      return canon(o.orbit_of) == canon(comp);
    });
    s.run(e.name + " comp-delete detected", [&] {
      const int m = g.num_arrows();
      int aa = -1, bb = -1;
      for (int a = 0; a < m && aa < 0; ++a)
        for (int b = 0; b < m; ++b)
          if (g.comp_or_neg(a, b) >= 0) {
            aa = a;
            bb = b;
            break;
          }
      if (aa < 0) return false;
      std::vector<int> comp = g.comp_table();
      comp[static_cast<size_t>(aa) * m + bb] = -1;
      FiniteGroupoid mut(g.num_objects(), g.arrows(), g.units(), g.inverses(),
                         std::move(comp));
      return !validate_groupoid(mut).ok();
    });
    if (g.num_arrows() < 2) {
      s.skip(e.name + " inverse-corrupt detected", "no alternative arrow id");
    } else {
      s.run(e.name + " inverse-corrupt detected", [&] {
        std::vector<int> inv = g.inverses();
        inv[0] = (g.inv(0) + 1) % g.num_arrows();
        FiniteGroupoid mut(g.num_objects(), g.arrows(), g.units(),
                           std::move(inv), g.comp_table());
        return !validate_groupoid(mut).ok();
      });
    }
  }
  return s.finish();
}

SuiteResult suite_squares(const Corpus& c) {
  Suite s("squares");
  if (c.pair2) {
    s.run("banal 2-object square count is 16", [&] {
      return square_groupoid(c.pair2, c.opt.guard).groupoid->num_arrows() == 16;
    });
  }
  if (c.cyc2) {
    s.run("order-2 group square count is 8", [&] {
      return square_groupoid(c.cyc2, c.opt.guard).groupoid->num_arrows() == 8;
    });
  }
  Agg census, laws;
  for (const Entry& e : c.groupoids) {
    const FiniteGroupoid& g = *e.g;
    if (g.num_arrows() > 36) {
      census.skip();
      laws.skip();
      continue;
    }
    try {
      const SquareGroupoid sq = square_groupoid(e.g, c.opt.guard);
      long long brute = 0;
      const int m = g.num_arrows();
      for (int from = 0; from < m; ++from)
        for (int to = 0; to < m; ++to)
          for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
              const int c1 = g.comp_or_neg(to, k);
              if (c1 < 0) continue;
              if (g.comp_or_neg(l, from) == c1) ++brute;
            }
      census.note(e.name,
                  brute == sq.groupoid->num_arrows() &&
                      brute == static_cast<long long>(sq.squares.size()));
      const Functor idg = Functor::identity(e.g);
      const FunctorProfile p1 = analyze_functor(sq.pi1, c.opt.guard);
      const FunctorProfile p2 = analyze_functor(sq.pi2, c.opt.guard);
      const FunctorProfile pi = analyze_functor(sq.iota, c.opt.guard);
      laws.note(e.name, same_maps(compose(sq.pi1, sq.iota), idg) &&
                            same_maps(compose(sq.pi2, sq.iota), idg) &&
                            p1.s_equivalence && p2.s_equivalence &&
                            pi.equivalence && pi.i_faithful &&
                            sq.iota.objector().injective());
    } catch (const SizeGuardError&) {
      census.skip();
      laws.skip();
    }
  }
  census.report(s, "square census matches brute force");
  laws.report(s, "projections and injection satisfy their laws");
  return s.finish();
}

SuiteResult suite_holograph(const Corpus& c) {
  Suite s("holograph");
  Agg pexact, qsect, twist, p82;
  for (const PoolFunctor& pf : c.functors) {
    try {
      const Holograph h = holograph(pf.f, c.opt.guard);
      const FunctorProfile pp = analyze_functor(h.numerator, c.opt.guard);
      pexact.note(pf.name, pp.exactor);
      qsect.note(pf.name,
                 same_maps(compose(h.denominator, h.section),
                           Functor::identity(pf.f.dom_ptr())));
      twist.note(pf.name,
                 validate_transformation(h.twist).ok() &&
                     same_maps(h.twist.from, compose(pf.f, h.denominator)) &&
                     same_maps(h.twist.to, h.numerator));
      p82.note(pf.name,
               (pp.exactor && pp.s_functor) ==
                       pf.profile.essentially_surjective &&
                   pp.subactor == pf.profile.i_faithful &&
                   pp.s_equivalence == pf.profile.equivalence);
    } catch (const SizeGuardError&) {
      pexact.skip();
      qsect.skip();
      twist.skip();
      p82.skip();
    }
  }
  pexact.report(s, "numerator is an exactor");
  qsect.report(s, "denominator section verifies");
  twist.report(s, "twist certifies numerator iso f after denominator");
  p82.report(s, "expansion profile mirrors the functor profile");

  Agg idh, unith;
  for (const Entry& e : c.groupoids) {
    const FiniteGroupoid& g = *e.g;
    // identity holograph against the square fraction
    try {
      const SquareGroupoid sq = square_groupoid(e.g, c.opt.guard);
      if (sq.groupoid->num_arrows() <= c.opt.guard.max_arrows) {
        const Holograph h = holograph(Functor::identity(e.g), c.opt.guard);
        idh.note(e.name,
                 fraction_isomorphism(as_fraction(h),
                                      Fraction(sq.pi1, sq.pi2), c.opt.guard)
                     .has_value());
      } else {
        idh.skip();
      }
    } catch (const SizeGuardError&) {
      idh.skip();
    }
    // unit-map holograph against the divisor over same-source pairs
    try {
      long long pairs = 0;
      std::vector<int> by_src(g.num_objects(), 0);
      for (int a = 0; a < g.num_arrows(); ++a) ++by_src[g.src(a)];
      for (int x = 0; x < g.num_objects(); ++x)
        pairs += static_cast<long long>(by_src[x]) * by_src[x];
      if (pairs > c.opt.guard.max_arrows) {
        unith.skip();
      } else {
        GroupoidPtr base = share(null_groupoid(g.num_objects()));
        std::vector<int> uo(g.num_objects()), ua(g.num_objects());
        for (int x = 0; x < g.num_objects(); ++x) uo[x] = x, ua[x] = g.unit(x);
        const Functor omega(base, e.g, std::move(uo), std::move(ua));

        std::vector<int> block(g.num_arrows());
        for (int a = 0; a < g.num_arrows(); ++a) block[a] = g.src(a);
        GroupoidPtr delta_apex =
            share(equivalence_relation(g.num_arrows(), block));
        std::vector<int> dom_obj(delta_apex->num_objects());
        std::vector<int> d_arr(delta_apex->num_arrows()),
            w_arr(delta_apex->num_arrows());
        std::vector<int> d_obj(delta_apex->num_objects()),
            w_obj(delta_apex->num_objects());
        for (int i = 0; i < delta_apex->num_objects(); ++i) {
          d_obj[i] = g.tgt(i);
          w_obj[i] = g.src(i);
        }
        for (int a = 0; a < delta_apex->num_arrows(); ++a) {
          const int i = delta_apex->src(a), j = delta_apex->tgt(a);
          d_arr[a] = g.comp(j, g.inv(i));
          w_arr[a] = g.src(i);
        }
        const Functor delta(delta_apex, e.g, d_obj, d_arr);
        const Functor vertex(delta_apex, base, w_obj, w_arr);
        const Holograph h = holograph(omega, c.opt.guard);
        unith.note(e.name, fraction_isomorphism(as_fraction(h),
                                                Fraction(delta, vertex),
                                                c.opt.guard)
                               .has_value());
      }
    } catch (const SizeGuardError&) {
      unith.skip();
    }
  }
  idh.report(s, "identity holograph is the square fraction");
  unith.report(s, "unit-map holograph is the divisor fraction");

  // commuting square of actors against an equivalence pair is a pullback
  Agg veq;
  std::mt19937 rng(c.opt.seed + 23u);
  int used = 0;
  for (const PoolFunctor& fa : c.functors) {
    if (used >= 24) break;
    if (!fa.profile.actor) continue;
    for (const PoolFunctor& fe : c.functors) {
      if (used >= 24) break;
      if (!fe.profile.s_equivalence || fe.cod != fa.cod) continue;
      ++used;
      try {
        const FibredProduct fp = fibred_product(fa.f, fe.f, c.opt.guard);
        auto [w, theta] = shuffled_copy(fp.groupoid, rng);
        const Functor ep = compose(fp.to_first, theta);   // equivalence leg
        const Functor ap = compose(fp.to_second, theta);  // actor leg
        const FunctorProfile epp = analyze_functor(ep, c.opt.guard);
        const FunctorProfile app = analyze_functor(ap, c.opt.guard);
        if (!(epp.equivalence && app.actor)) {
          veq.note(fa.name + " x " + fe.name, false);
          continue;
        }
        std::vector<int> om(w->num_objects()), am(w->num_arrows());
        bool total = true;
        for (int x = 0; x < w->num_objects() && total; ++x) {
          om[x] = fp.object_id(ep.on_object(x), ap.on_object(x));
          total = om[x] >= 0;
        }
        for (int a = 0; a < w->num_arrows() && total; ++a) {
          am[a] = fp.arrow_id(ep.on_arrow(a), ap.on_arrow(a));
          total = am[a] >= 0;
        }
        if (!total) {
          veq.note(fa.name + " x " + fe.name, false);
          continue;
        }
        const Functor pairing(w, fp.groupoid, std::move(om), std::move(am));
        veq.note(fa.name + " x " + fe.name,
                 is_invertible_functor(pairing) && epp.s_equivalence);
      } catch (const SizeGuardError&) {
        veq.skip();
      }
    }
  }
  veq.report(s, "actor/equivalence squares are pullbacks");
  return s.finish();
}

SuiteResult suite_profile_laws(const Corpus& c) {
  Suite s("profile-laws");
  Agg consistent, p73a, p73b, ind_iff, p43a, p43b, remark7;
  for (const PoolFunctor& pf : c.functors) {
    const FunctorProfile& p = pf.profile;
    consistent.note(pf.name, p.consistent());
    if (p.equivalence && p.actor)
      p73a.note(pf.name, is_invertible_functor(pf.f));
    if (p.equivalence && p.exactor && p.inductor)
      p73b.note(pf.name, p.s_equivalence);
    ind_iff.note(pf.name, p.inductor == (p.i_faithful && p.s_full));
    const GroupoidClass cd = classify(pf.f.dom());
    const GroupoidClass cc = classify(pf.f.cod());
    if (p.i_faithful && cc.principal) p43a.note(pf.name, cd.principal);
    if (p.s_full && cc.group) p43b.note(pf.name, cd.transitive);
    remark7.note(pf.name,
                 (!p.s_extensor || (p.exactor && p.s_functor)) &&
                     (!p.inactor || p.i_faithful) &&
                     (!p.exactor ||
                      (p.essentially_surjective == (p.exactor && p.s_functor))));
  }
  consistent.report(s, "profile internally consistent");
  p73a.report(s, "equivalence and actor forces invertibility");
  p73b.report(s, "equivalence that is an exactor-inductor is an s-equivalence");
  ind_iff.report(s, "inductor iff i-faithful and s-full");
  p43a.report(s, "i-faithful pullback of principal is principal");
  p43b.report(s, "s-full functor to a group has transitive source");
  remark7.report(s, "actor-family implications hold");

  // composite laws on composable pool pairs
  Agg c21i, c21ii, c21iii, c21iv, c34i, c34ii, c34iii, c53i, c53ii, c53iiia,
      c53iiib, c74i, c74ii, c74iii, c74iv;
  int used = 0;
  for (const PoolFunctor& ff : c.functors) {
    if (used >= c.opt.pair_budget) break;
    for (const PoolFunctor& fg : c.functors) {
      if (used >= c.opt.pair_budget) break;
      if (ff.cod != fg.dom) continue;
      ++used;
      const FunctorProfile& fp = ff.profile;
      const FunctorProfile& gp = fg.profile;
      const std::string who = fg.name + " after " + ff.name;
      FunctorProfile hp;
      try {
        hp = analyze_functor(compose(fg.f, ff.f), c.opt.guard);
      } catch (const SizeGuardError&) {
        continue;
      }
      c21i.note(who, (!(fp.i_faithful && gp.i_faithful) || hp.i_faithful) &&
                         (!(fp.inductor && gp.inductor) || hp.inductor));
      c21ii.note(who, !hp.i_faithful || fp.i_faithful);
      c21iii.note(who, !(fp.s_functor && fp.inductor) ||
                           ((!hp.i_faithful || gp.i_faithful) &&
                            (!hp.inductor || gp.inductor)));
      c21iv.note(who, !gp.inductor || (fp.s_full == hp.s_full &&
                                       fp.inductor == hp.inductor));
      c34i.note(who, !(fp.s_extensor && gp.s_extensor) || hp.s_extensor);
      c34ii.note(who,
                 !(gp.s_equivalence && ff.f.objector().surjective()) ||
                     ((!hp.s_extensor || fp.s_extensor) &&
                      (!hp.s_equivalence || fp.s_equivalence)));
      c34iii.note(who, !fp.s_extensor ||
                           ((!hp.s_extensor || gp.s_extensor) &&
                            (!hp.s_equivalence || gp.s_equivalence)));
      c53i.note(who,
                (!(fp.equivalence && gp.equivalence) || hp.equivalence) &&
                    (!(fp.essentially_surjective &&
                       gp.essentially_surjective) ||
                     hp.essentially_surjective));
      c53ii.note(who, !gp.equivalence ||
                          ((!hp.essentially_surjective ||
                            fp.essentially_surjective) &&
                           (!hp.equivalence || fp.equivalence)));
      c53iiia.note(who, !(ff.f.objector().surjective() &&
                          hp.essentially_surjective) ||
                            gp.essentially_surjective);
      c53iiib.note(who, !(fp.s_extensor && hp.equivalence) ||
                            (gp.equivalence && fp.s_equivalence));
      c74i.note(who, (!(fp.actor && gp.actor) || hp.actor) &&
                         (!(fp.exactor && gp.exactor) || hp.exactor) &&
                         (!(fp.inactor && gp.inactor) || hp.inactor));
      c74ii.note(who, !gp.actor || ((!hp.actor || fp.actor) &&
                                    (!hp.exactor || fp.exactor)));
      c74iii.note(who, !(fp.exactor && fp.s_functor) ||
                           ((!hp.actor || gp.actor) &&
                            (!hp.exactor || gp.exactor)));
      c74iv.note(who, !hp.inactor || fp.inactor);
    }
  }
  c21i.report(s, "i-faithful and inductor closed under composition");
  c21ii.report(s, "i-faithful composite forces i-faithful first leg");
  c21iii.report(s, "s-inductor first leg transfers composite flags");
  c21iv.report(s, "inductor second leg reflects s-full and inductor");
  c34i.report(s, "s-extensors closed under composition");
  c34ii.report(s, "s-equivalence second leg cancels on surjective base");
  c34iii.report(s, "s-extensor first leg cancels");
  c53i.report(s, "equivalences and essential surjections compose");
  c53ii.report(s, "equivalence second leg cancels");
  c53iiia.report(s, "surjective base cancels essential surjectivity");
  c53iiib.report(s, "s-extensor first leg splits an equivalence composite");
  c74i.report(s, "actors, exactors, inactors closed under composition");
  c74ii.report(s, "actor second leg cancels");
  c74iii.report(s, "s-exactor first leg cancels");
  c74iv.report(s, "inactor composite forces inactor first leg");

  // a set map whose composite with an arrow-surjective functor is functorial
  // is itself functorial
  Agg smooth;
  std::mt19937 rng(c.opt.seed + 31u);
  int tried = 0;
  for (const PoolFunctor& pf : c.functors) {
    if (tried >= 12) break;
    if (!(pf.profile.exactor && pf.profile.s_functor)) continue;
    ++tried;
    const FiniteGroupoid& mid = pf.f.cod();
    const FiniteGroupoid& dom = pf.f.dom();
    GroupoidPtr target = c.cyc2 ? c.cyc2 : pf.f.cod_ptr();
    for (int t = 0; t < 6; ++t) {
      std::vector<int> om(mid.num_objects()), am(mid.num_arrows());
      for (int& v : om) v = static_cast<int>(rng() % target->num_objects());
      for (int& v : am) v = static_cast<int>(rng() % target->num_arrows());
      std::vector<int> com(dom.num_objects()), cam(dom.num_arrows());
      for (int x = 0; x < dom.num_objects(); ++x) com[x] = om[pf.f.on_object(x)];
      for (int a = 0; a < dom.num_arrows(); ++a) cam[a] = am[pf.f.on_arrow(a)];
      if (!raw_functorial(dom, *target, com, cam)) continue;
      smooth.note(pf.name + " sample " + std::to_string(t),
                  raw_functorial(mid, *target, om, am));
    }
    // positive control: an actual functor always passes both sides
    smooth.note(pf.name + " control",
                raw_functorial(mid, mid, Functor::identity(pf.f.cod_ptr())
                                             .object_map(),
                               Functor::identity(pf.f.cod_ptr()).arrow_map()));
  }
  smooth.report(s, "set maps functorial after an arrow surjection are functors");
  return s.finish();
}

SuiteResult suite_coset_law(const Corpus& c) {
  Suite s("coset-law");
  Agg law;
  for (const PoolFunctor& pf : c.functors) {
    if (!pf.profile.s_extensor) continue;
    const FiniteGroupoid& d = pf.f.dom();
    if (d.num_arrows() > c.opt.guard.max_arrows) {
      law.skip();
      continue;
    }
    const EmbeddedSubgroupoid n = kernel(pf.f);
    const int m = d.num_arrows();
    std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
    for (int y = 0; y < m; ++y)
      for (int n1 : n.arrows)
        for (int n2 : n.arrows) {
          const int yn2 = d.comp_or_neg(y, n2);
          if (yn2 < 0) continue;
          const int x = d.comp_or_neg(n1, yn2);
          if (x >= 0) reach[y][x] = 1;
        }
    bool ok = true;
    for (int x = 0; x < m && ok; ++x)
      for (int y = 0; y < m; ++y)
        if ((pf.f.on_arrow(x) == pf.f.on_arrow(y)) != (reach[y][x] != 0)) {
          ok = false;
          break;
        }
    law.note(pf.name, ok);
  }
  law.report(s, "fibres of an s-extensor are two-sided cosets");
  return s.finish();
}

SuiteResult suite_natural_iso(const Corpus& c) {
  Suite s("natural-iso");
  Agg flags, witness;
  std::mt19937 rng(c.opt.seed + 41u);
  int used = 0;
  for (const PoolFunctor& pf : c.functors) {
    if (used >= 60) break;
    ++used;
    const FiniteGroupoid& d = pf.f.dom();
    const FiniteGroupoid& cod = pf.f.cod();
    std::vector<int> comp_at(d.num_objects());
    std::vector<int> gm(d.num_objects()), ga(d.num_arrows());
    for (int x = 0; x < d.num_objects(); ++x) {
      const auto& out = cod.arrows_from(pf.f.on_object(x));
      comp_at[x] = out[rng() % out.size()];
      gm[x] = cod.tgt(comp_at[x]);
    }
    for (int a = 0; a < d.num_arrows(); ++a)
      ga[a] = cod.comp(comp_at[d.tgt(a)],
                       cod.comp(pf.f.on_arrow(a), cod.inv(comp_at[d.src(a)])));
    try {
      const Functor g(pf.f.dom_ptr(), pf.f.cod_ptr(), gm, ga);
      if (!validate_functor(g).ok()) {
        flags.note(pf.name, false);
        continue;
      }
      const FunctorProfile gp = analyze_functor(g, c.opt.guard);
      // Hom-level flags are class invariants; image-level ones (s_functor,
      // s_extensor, s_equivalence) read the literal arrow image and may
      // differ across naturally isomorphic functors.
      flags.note(pf.name,
                 gp.i_faithful == pf.profile.i_faithful &&
                     gp.s_full == pf.profile.s_full &&
                     gp.inductor == pf.profile.inductor &&
                     gp.essentially_surjective ==
                         pf.profile.essentially_surjective &&
                     gp.equivalence == pf.profile.equivalence);
      NatTransformation t{pf.f, g, comp_at};
      witness.note(pf.name,
                   validate_transformation(t).ok() &&
                       naturally_isomorphic(pf.f, g, c.opt.guard).has_value());
    } catch (const SizeGuardError&) {
      flags.skip();
      witness.skip();
    }
  }
  flags.report(s, "profile flags survive conjugation");
  witness.report(s, "conjugates are found naturally isomorphic");
  return s.finish();
}

SuiteResult suite_transversal(const Corpus& c) {
  Suite s("transversal");
  Agg agree, inherit, symmetric;
  for (const PoolMero& pm : c.meros) {
    try {
      const Fraction& fr = pm.m.original();
      const Butterfly bf = make_butterfly(fr.numerator, fr.denominator);
      const Transversality d1 = transversality_status(bf.r, bf.n);
      const Transversality d2 = transversality_status(bf.n, bf.r);
      symmetric.note(pm.name, d1 == d2);
      const FunctorProfile up = analyze_functor(bf.u, c.opt.guard);
      const FunctorProfile vp = analyze_functor(bf.v, c.opt.guard);
      Cotransversality legs = Cotransversality::none;
      if (up.actor && vp.actor)
        legs = Cotransversality::cotransverse;
      else if (up.exactor && vp.exactor)
        legs = Cotransversality::cotransversal;
      Cotransversality viadelta = Cotransversality::none;
      if (d1 == Transversality::transverse)
        viadelta = Cotransversality::cotransverse;
      else if (d1 == Transversality::transversal)
        viadelta = Cotransversality::cotransversal;
      agree.note(pm.name, legs == viadelta);
      const bool np = classify(*bf.n.groupoid).principal;
      const bool rp = classify(*bf.r.groupoid).principal;
      inherit.note(pm.name,
                   !(np || rp) || classify(*bf.s.groupoid).principal);
    } catch (const SizeGuardError&) {
      agree.skip();
      inherit.skip();
      symmetric.skip();
    }
  }
  agree.report(s, "divisor census matches leg profiles");
  inherit.report(s, "kernel intersection inherits principality");
  symmetric.report(s, "divisor census is symmetric");

  Agg split;
  int used = 0;
  for (const PoolFunctor& pf : c.functors) {
    if (used >= 10) break;
    if (!pf.profile.exactor) continue;
    if (pf.f.dom().num_objects() != 1 || pf.f.cod().num_objects() != 1)
      continue;
    if (pf.f.dom().num_arrows() > 12) continue;
    ++used;
    try {
      const bool ines = is_inessential(pf.f, c.opt.guard);
      const bool sec = find_section(pf.f, c.opt.guard).has_value();
      split.note(pf.name, ines == sec);
    } catch (const SizeGuardError&) {
      split.skip();
    }
  }
  split.report(s, "inessential coincides with split on group surjections");
  if (c.cyc4 && c.cyc2) {
    s.run("order-4 mod-2 quotient is essential", [&] {
      const Functor mod2(c.cyc4, c.cyc2, {0}, {0, 1, 0, 1});
      return !is_inessential(mod2, c.opt.guard) &&
             !find_section(mod2, c.opt.guard).has_value();
    });
  }
  if (c.k4 && c.cyc2) {
    s.run("klein projection is inessential", [&] {
      std::vector<int> am(4);
      for (int a = 0; a < 4; ++a) am[a] = a / 2;  // first coordinate
      const Functor pr(c.k4, c.cyc2, {0}, am);
      return is_inessential(pr, c.opt.guard) &&
             find_section(pr, c.opt.guard).has_value();
    });
  }
  return s.finish();
}

SuiteResult suite_irreducibility(const Corpus& c) {
  Suite s("irreducibility");
  Agg agree_orig, agree_red, idem, idem_iso;
  for (const PoolMero& pm : c.meros) {
    try {
      const IrreducibilityReport a = is_irreducible(pm.m.original(), c.opt.guard);
      agree_orig.note(pm.name, a.agree());
    } catch (const SizeGuardError&) {
      agree_orig.skip();
    }
    try {
      const IrreducibilityReport b = is_irreducible(pm.m.fraction(), c.opt.guard);
      agree_red.note(pm.name, b.agree() && b.irreducible());
    } catch (const SizeGuardError&) {
      agree_red.skip();
    }
    try {
      const ReducedFraction again = reduce_fraction(pm.m.fraction(), c.opt.guard);
      idem.note(pm.name,
                again.quotient.projection.objector().bijective() &&
                    again.quotient.projection.arrow_setmap().bijective());
      if (pm.small)
        idem_iso.note(pm.name,
                      fraction_isomorphism(again.fraction, pm.m.fraction(),
                                           c.opt.guard)
                          .has_value());
    } catch (const SizeGuardError&) {
      idem.skip();
      idem_iso.skip();
    }
  }
  agree_orig.report(s, "five conditions agree on originals");
  agree_red.report(s, "reductions are irreducible with agreeing conditions");
  idem.report(s, "second reduction is trivial");
  idem_iso.report(s, "reduce is idempotent up to isomorphism");

  Agg invariant;
  for (const PoolMero& pm : c.meros) {
    if (pm.precomp_of < 0) continue;
    try {
      const MeromorphismCheck a = check_meromorphism(pm.m.original(), c.opt.guard);
      const MeromorphismCheck b =
          check_meromorphism(c.meros[pm.precomp_of].m.original(), c.opt.guard);
      invariant.note(pm.name,
                     a.is_fraction_of_exactors() == b.is_fraction_of_exactors() &&
                         a.q_is_s_equivalence == b.q_is_s_equivalence &&
                         a.cotransversal() == b.cotransversal());
    } catch (const SizeGuardError&) {
      invariant.skip();
    }
  }
  invariant.report(s, "meromorphism conditions invariant across representatives");

  if (c.idx_idcol >= 0 && c.pair2 && c.null1) {
    const Meromorphism& idcol = c.meros[c.idx_idcol].m;
    s.run("identity-collapse fraction is irreducible", [&] {
      return is_irreducible(idcol.original(), c.opt.guard).irreducible();
    });
    s.run("block precomposition is reducible and reduces back", [&] {
      const InducedGroupoid ind =
          induce(c.pair2, SetMap(4, 2, {0, 0, 1, 1}), c.opt.guard);
      const Fraction pre(ind.projection,
                         collapse_to_point(ind.groupoid, c.null1));
      if (is_irreducible(pre, c.opt.guard).irreducible()) return false;
      const Fraction red = reduce(pre, c.opt.guard);
      return fraction_isomorphism(red, idcol.fraction(), c.opt.guard)
          .has_value();
    });
    s.run("reduced representative is terminal in its class", [&] {
      std::vector<Fraction> family;
      family.push_back(idcol.fraction());
      const InducedGroupoid ind =
          induce(c.pair2, SetMap(4, 2, {0, 0, 1, 1}), c.opt.guard);
      family.push_back(Fraction(ind.projection,
                                collapse_to_point(ind.groupoid, c.null1)));
      const InducedGroupoid ind2 =
          induce(c.pair2, SetMap(3, 2, {0, 1, 1}), c.opt.guard);
      family.push_back(Fraction(ind2.projection,
                                collapse_to_point(ind2.groupoid, c.null1)));
      return is_terminal_among(idcol.fraction(), family, c.opt.guard);
    });
    s.run("inflated representative is not terminal", [&] {
      const InducedGroupoid ind =
          induce(c.pair2, SetMap(4, 2, {0, 0, 1, 1}), c.opt.guard);
      const Fraction pre(ind.projection,
                         collapse_to_point(ind.groupoid, c.null1));
      return !is_terminal_among(pre, {idcol.fraction()}, c.opt.guard);
    });
  }
  return s.finish();
}

SuiteResult suite_equivalence(const Corpus& c) {
  Suite s("equivalence");
  Agg decide, verify, precomp;
  int used = 0;
  for (size_t i = 0; i < c.meros.size() && used < c.opt.pair_budget; ++i) {
    if (!c.meros[i].small) continue;
    for (size_t j = i + 1; j < c.meros.size() && used < c.opt.pair_budget;
         ++j) {
      if (!c.meros[j].small) continue;
      if (!same_ends(c.meros[i].m, c.meros[j].m)) continue;
      ++used;
      const std::string who = c.meros[i].name + " vs " + c.meros[j].name;
      try {
        auto w = fractions_equivalent(c.meros[i].m.original(),
                                      c.meros[j].m.original(), c.opt.guard);
        const bool iso =
            fraction_isomorphism(c.meros[i].m.fraction(),
                                 c.meros[j].m.fraction(), c.opt.guard)
                .has_value();
        decide.note(who, w.has_value() == iso);
        if (w)
          verify.note(who,
                      verify_equivalence_witness(*w, c.meros[i].m.original(),
                                                 c.meros[j].m.original(),
                                                 c.opt.guard));
      } catch (const SizeGuardError&) {
        decide.skip();
      }
    }
  }
  decide.report(s, "decision matches reduced-representative isomorphism");
  verify.report(s, "returned witnesses verify verbatim");

  for (const PoolMero& pm : c.meros) {
    if (pm.precomp_of < 0 || !pm.small) continue;
    const PoolMero& base = c.meros[pm.precomp_of];
    if (!base.small) continue;
    try {
      auto w = fractions_equivalent(pm.m.original(), base.m.original(),
                                    c.opt.guard);
      precomp.note(pm.name,
                   w.has_value() &&
                       verify_equivalence_witness(*w, pm.m.original(),
                                                  base.m.original(),
                                                  c.opt.guard));
    } catch (const SizeGuardError&) {
      precomp.skip();
    }
  }
  precomp.report(s, "precompositions stay equivalent");

  // transitivity witnesses chain through the middle apex
  Agg chain;
  std::map<int, std::vector<int>> by_base;
  for (size_t i = 0; i < c.meros.size(); ++i)
    if (c.meros[i].precomp_of >= 0 && c.meros[i].small)
      by_base[c.meros[i].precomp_of].push_back(static_cast<int>(i));
  int chains = 0;
  for (const auto& [bi, pres] : by_base) {
    if (chains >= 8) break;
    if (!c.meros[bi].small) continue;
    ++chains;
    const Fraction& f1 = c.meros[pres[0]].m.original();
    const Fraction& f2 = c.meros[bi].m.original();
    // third representative: a second precomposition when the pool has one,
    // otherwise the irreducible reduction of the base
    const Fraction& f3 = pres.size() >= 2 ? c.meros[pres[1]].m.original()
                                          : c.meros[bi].m.fraction();
    const std::string who = c.meros[pres[0]].name + " ~ " + c.meros[bi].name +
                            (pres.size() >= 2
                                 ? " ~ " + c.meros[pres[1]].name
                                 : " ~ reduction");
    try {
      auto w12 = fractions_equivalent(f1, f2, c.opt.guard);
      auto w23 = fractions_equivalent(f2, f3, c.opt.guard);
      if (!w12 || !w23) {
        chain.note(who, false);
        continue;
      }
      const EquivalenceWitness w13 = chain_witnesses(*w12, *w23, c.opt.guard);
      chain.note(who, verify_equivalence_witness(w13, f1, f3, c.opt.guard));
    } catch (const SizeGuardError&) {
      chain.skip();
    }
  }
  chain.report(s, "chained witnesses verify");

  if (c.idx_idcol >= 0 && c.idx_colid >= 0) {
    s.run("identity-collapse and collapse-identity are not equivalent", [&] {
      return !fractions_equivalent(c.meros[c.idx_idcol].m.original(),
                                   c.meros[c.idx_colid].m.original(),
                                   c.opt.guard)
                  .has_value();
    });
  }
  if (c.pair2) {
    s.run("identity and swap classes coincide", [&] {
      const Functor sw(c.pair2, c.pair2, {1, 0}, {3, 2, 1, 0});
      return same_meromorphism(gamma(Functor::identity(c.pair2), c.opt.guard),
                               gamma(sw, c.opt.guard), c.opt.guard);
    });
  }
  if (c.cyc2) {
    s.run("identity and trivial endomorphism classes differ", [&] {
      const Functor triv(c.cyc2, c.cyc2, {0}, {0, 0});
      return !same_meromorphism(gamma(Functor::identity(c.cyc2), c.opt.guard),
                                gamma(triv, c.opt.guard), c.opt.guard);
    });
  }
  return s.finish();
}

SuiteResult suite_category(const Corpus& c) {
  Suite s("category");
  // gamma indexed by functor pool position
  std::map<int, int> gamma_at;
  for (size_t i = 0; i < c.meros.size(); ++i)
    if (c.meros[i].gamma_of >= 0 && c.meros[i].small)
      gamma_at[c.meros[i].gamma_of] = static_cast<int>(i);

  Agg functorial;
  int used = 0;
  for (const auto& [fi, mi] : gamma_at) {
    if (used >= 20) break;
    for (const auto& [gi, mj] : gamma_at) {
      if (used >= 20) break;
      if (c.functors[fi].cod != c.functors[gi].dom) continue;
      ++used;
      const std::string who =
          c.functors[gi].name + " after " + c.functors[fi].name;
      try {
        const Meromorphism lhs = compose_meromorphisms(
            c.meros[mj].m, c.meros[mi].m, c.opt.guard);
        const Meromorphism rhs =
            gamma(compose(c.functors[gi].f, c.functors[fi].f), c.opt.guard);
        functorial.note(who, same_meromorphism(lhs, rhs, c.opt.guard));
      } catch (const SizeGuardError&) {
        functorial.skip();
      }
    }
  }
  functorial.report(s, "holograph classes compose functorially");

  Agg natiso;
  used = 0;
  for (const auto& [fi, mi] : gamma_at) {
    if (used >= 30) break;
    for (const auto& [gi, mj] : gamma_at) {
      if (used >= 30) break;
      if (fi >= gi) continue;
      if (c.functors[fi].dom != c.functors[gi].dom ||
          c.functors[fi].cod != c.functors[gi].cod)
        continue;
      ++used;
      const std::string who = c.functors[fi].name + " vs " + c.functors[gi].name;
      try {
        const bool cls =
            same_meromorphism(c.meros[mi].m, c.meros[mj].m, c.opt.guard);
        const bool nat = naturally_isomorphic(c.functors[fi].f,
                                              c.functors[gi].f, c.opt.guard)
                             .has_value();
        natiso.note(who, cls == nat);
      } catch (const SizeGuardError&) {
        natiso.skip();
      }
    }
  }
  natiso.report(s, "equal classes iff naturally isomorphic");

  Agg units;
  used = 0;
  for (const PoolMero& pm : c.meros) {
    if (used >= 16) break;
    if (!pm.small) continue;
    ++used;
    try {
      const Meromorphism ids = identity_meromorphism(
          pm.m.fraction().source_ptr(), c.opt.guard);
      const Meromorphism idt = identity_meromorphism(
          pm.m.fraction().target_ptr(), c.opt.guard);
      units.note(pm.name,
                 same_meromorphism(compose_meromorphisms(pm.m, ids, c.opt.guard),
                                   pm.m, c.opt.guard) &&
                     same_meromorphism(
                         compose_meromorphisms(idt, pm.m, c.opt.guard), pm.m,
                         c.opt.guard));
    } catch (const SizeGuardError&) {
      units.skip();
    }
  }
  units.report(s, "identity classes are units");

  Agg assoc;
  used = 0;
  for (size_t i = 0; i < c.meros.size() && used < 8; ++i) {
    if (!c.meros[i].small) continue;
    for (size_t j = 0; j < c.meros.size() && used < 8; ++j) {
      if (!c.meros[j].small) continue;
      if (!same_groupoid(c.meros[i].m.target(), c.meros[j].m.source()))
        continue;
      for (size_t k = 0; k < c.meros.size() && used < 8; ++k) {
        if (!c.meros[k].small) continue;
        if (!same_groupoid(c.meros[j].m.target(), c.meros[k].m.source()))
          continue;
        ++used;
        const std::string who = c.meros[i].name + " ; " + c.meros[j].name +
                                " ; " + c.meros[k].name;
        try {
          const Meromorphism left = compose_meromorphisms(
              compose_meromorphisms(c.meros[k].m, c.meros[j].m, c.opt.guard),
              c.meros[i].m, c.opt.guard);
          const Meromorphism right = compose_meromorphisms(
              c.meros[k].m,
              compose_meromorphisms(c.meros[j].m, c.meros[i].m, c.opt.guard),
              c.opt.guard);
          assoc.note(who, same_meromorphism(left, right, c.opt.guard));
        } catch (const SizeGuardError&) {
          assoc.skip();
        }
      }
    }
  }
  assoc.report(s, "composition is associative");

  // holograph legs: the class of the numerator is the class of the
  // composite of the functor class with the denominator class
  Agg triple;
  used = 0;
  for (const PoolFunctor& pf : c.functors) {
    if (used >= 6) break;
    if (pf.f.dom().num_arrows() > 4 || pf.f.cod().num_arrows() > 4) continue;
    ++used;
    try {
      const Holograph h = holograph(pf.f, c.opt.guard);
      const Meromorphism lhs = compose_meromorphisms(
          gamma(pf.f, c.opt.guard), gamma(h.denominator, c.opt.guard),
          c.opt.guard);
      triple.note(pf.name, same_meromorphism(lhs, gamma(h.numerator, c.opt.guard),
                                             c.opt.guard));
    } catch (const SizeGuardError&) {
      triple.skip();
    }
  }
  triple.report(s, "numerator class is functor class after denominator class");
  return s.finish();
}

SuiteResult suite_localization(const Corpus& c) {
  Suite s("localization");
  Agg meriedric;
  for (const PoolMero& pm : c.meros) {
    if (pm.gamma_of < 0) continue;
    try {
      meriedric.note(pm.name,
                     is_meriedric_equivalence(pm.m, c.opt.guard) ==
                         c.functors[pm.gamma_of].profile.equivalence);
    } catch (const SizeGuardError&) {
      meriedric.skip();
    }
  }
  meriedric.report(s, "meriedric iff the functor is an equivalence");

  Agg cancel;
  int used = 0;
  for (const PoolMero& pm : c.meros) {
    if (used >= 10) break;
    if (!pm.small) continue;
    try {
      if (!is_meriedric_equivalence(pm.m, c.opt.guard)) continue;
      ++used;
      const Meromorphism inv = inverse_meromorphism(pm.m, c.opt.guard);
      const bool left = same_meromorphism(
          compose_meromorphisms(inv, pm.m, c.opt.guard),
          identity_meromorphism(pm.m.fraction().source_ptr(), c.opt.guard),
          c.opt.guard);
      const bool right = same_meromorphism(
          compose_meromorphisms(pm.m, inv, c.opt.guard),
          identity_meromorphism(pm.m.fraction().target_ptr(), c.opt.guard),
          c.opt.guard);
      cancel.note(pm.name, left && right);
    } catch (const SizeGuardError&) {
      cancel.skip();
    }
  }
  cancel.report(s, "meriedric inverses cancel on both sides");

  if (c.pair2 && c.null1) {
    s.run("collapse of a banal groupoid is meriedric", [&] {
      return is_meriedric_equivalence(
          gamma(collapse_to_point(c.pair2, c.null1), c.opt.guard), c.opt.guard);
    });
    s.run("unit embedding into a banal groupoid is meriedric", [&] {
      return is_meriedric_equivalence(
          gamma(unit_embedding(c.null1, c.pair2, 0), c.opt.guard), c.opt.guard);
    });
  }
  if (c.cyc2 && c.null1) {
    s.run("collapse of a group is not meriedric", [&] {
      return !is_meriedric_equivalence(
          gamma(collapse_to_point(c.cyc2, c.null1), c.opt.guard), c.opt.guard);
    });
  }
  if (c.idx_idcol >= 0 && c.idx_colid >= 0 && c.null1 && c.pair2) {
    s.run("banal equivalence pair composes to identities", [&] {
      const Meromorphism& to = c.meros[c.idx_idcol].m;    // point to banal
      const Meromorphism& from = c.meros[c.idx_colid].m;  // banal to point
      return same_meromorphism(
                 compose_meromorphisms(from, to, c.opt.guard),
                 identity_meromorphism(c.null1, c.opt.guard), c.opt.guard) &&
             same_meromorphism(
                 compose_meromorphisms(to, from, c.opt.guard),
                 identity_meromorphism(c.pair2, c.opt.guard), c.opt.guard);
    });
  }

  Agg holo;
  used = 0;
  for (const PoolMero& pm : c.meros) {
    if (used >= 16) break;
    if (pm.gamma_of < 0 || !pm.small) continue;
    ++used;
    try {
      auto rep = is_holomorphism(pm.m, c.opt.guard);
      holo.note(pm.name,
                rep.has_value() &&
                    naturally_isomorphic(*rep, c.functors[pm.gamma_of].f,
                                         c.opt.guard)
                        .has_value());
    } catch (const SizeGuardError&) {
      holo.skip();
    }
  }
  holo.report(s, "split representatives recover the functor");
  return s.finish();
}

SuiteResult suite_morita(const Corpus& c) {
  Suite s("morita");
  for (int k = 2; k <= 4; ++k) {
    s.run("banal " + std::to_string(k) + " is equivalent to a point", [&] {
      return morita_equivalent(share(pair_groupoid(k)),
                               share(null_groupoid(1)), c.opt.guard)
          .has_value();
    });
  }
  if (c.ind2 && c.cyc2) {
    s.run("two-point induced copy is equivalent to its group", [&] {
      return morita_equivalent(c.ind2, c.cyc2, c.opt.guard).has_value();
    });
  }
  if (c.cyc2 && c.null1) {
    s.run("order-2 group is not equivalent to a point", [&] {
      return !morita_equivalent(c.cyc2, c.null1, c.opt.guard).has_value();
    });
  }
  if (c.cyc4 && c.k4) {
    s.run("cyclic 4 is not equivalent to klein 4", [&] {
      return !morita_equivalent(c.cyc4, c.k4, c.opt.guard).has_value();
    });
  }

  Agg principal, transitive;
  for (const Entry& e : c.groupoids) {
    const GroupoidClass cls = classify(*e.g);
    try {
      const Orbits o = compute_orbits(*e.g);
      const bool eq =
          morita_equivalent(e.g,
                            share(null_groupoid(
                                static_cast<int>(o.members.size()))),
                            c.opt.guard)
              .has_value();
      principal.note(e.name, cls.principal == eq);
    } catch (const SizeGuardError&) {
      principal.skip();
    }
    try {
      const VertexGroup v = vertex_group_at(*e.g, 0);
      const bool eq = morita_equivalent(e.g, v.group, c.opt.guard).has_value();
      transitive.note(e.name, cls.transitive == eq);
    } catch (const SizeGuardError&) {
      transitive.skip();
    }
  }
  principal.report(s, "principal iff equivalent to the orbit set");
  transitive.report(s, "transitive iff equivalent to the vertex group");

  Agg witness;
  int used = 0;
  for (const Entry& a : c.groupoids) {
    if (used >= 40) break;
    for (const Entry& b : c.groupoids) {
      if (used >= 40) break;
      ++used;
      try {
        auto w = morita_equivalent(a.g, b.g, c.opt.guard);
        if (!w) {
          witness.note(a.name + " / " + b.name, true);
          continue;
        }
        const FunctorProfile p1 = analyze_functor(w->to_first, c.opt.guard);
        const FunctorProfile p2 = analyze_functor(w->to_second, c.opt.guard);
        witness.note(a.name + " / " + b.name,
                     p1.s_equivalence && p2.s_equivalence &&
                         same_groupoid(w->to_first.cod(), *a.g) &&
                         same_groupoid(w->to_second.cod(), *b.g));
      } catch (const SizeGuardError&) {
        witness.skip();
      }
    }
  }
  witness.report(s, "witness legs are s-equivalences with the right ends");
  return s.finish();
}

SuiteResult suite_gz(const Corpus& c) {
  Suite s("gz");
  Agg cstar;
  int used = 0;
  for (const PoolFunctor& pf : c.functors) {
    if (used >= c.opt.pair_budget) break;
    for (const PoolFunctor& ps : c.functors) {
      if (used >= c.opt.pair_budget) break;
      if (!ps.profile.s_equivalence || ps.cod != pf.cod) continue;
      ++used;
      try {
        cstar.note(pf.name + " / " + ps.name,
                   gz_cstar(pf.f, ps.f, c.opt.guard).holds);
      } catch (const SizeGuardError&) {
        cstar.skip();
      }
    }
  }
  cstar.report(s, "pulled-back test maps stay s-equivalences");

  if (c.pair2 && c.null1) {
    s.run("parallel equal pair admits an equalizing cover", [&] {
      const Functor id = Functor::identity(c.pair2);
      const GzDstarReport r =
          gz_dstar(id, id, collapse_to_point(c.pair2, c.null1), c.opt.guard);
      return r.found && !r.inconclusive;
    });
    s.run("identity vs swap admits no equalizing cover within cap", [&] {
      const Functor id = Functor::identity(c.pair2);
      const Functor sw(c.pair2, c.pair2, {1, 0}, {3, 2, 1, 0});
      const GzDstarReport r =
          gz_dstar(id, sw, collapse_to_point(c.pair2, c.null1), c.opt.guard);
      return !r.found && !r.inconclusive && r.candidates_tested > 0 &&
             r.arrow_cap == c.opt.guard.max_arrows;
    });
  }

  // the refinement notion versus the composite-denominator notion: counted,
  // never reconciled
  int both = 0, hsh_only = 0, gz_only = 0, neither = 0, skipped = 0;
  int pairs = 0;
  for (size_t i = 0; i < c.meros.size() && pairs < 40; ++i) {
    if (!c.meros[i].small) continue;
    for (size_t j = i + 1; j < c.meros.size() && pairs < 40; ++j) {
      if (!c.meros[j].small) continue;
      if (!same_ends(c.meros[i].m, c.meros[j].m)) continue;
      ++pairs;
      try {
        const GzEquivalenceProbe p = gz_equivalence_probe(
            c.meros[i].m.original(), c.meros[j].m.original(), c.opt.guard);
        const bool gz = p.gz_canonical_commutes && p.gz_denominator_ok;
        if (p.hsh_equivalent && gz)
          ++both;
        else if (p.hsh_equivalent)
          ++hsh_only;
        else if (gz)
          ++gz_only;
        else
          ++neither;
      } catch (const SizeGuardError&) {
        ++skipped;
      }
    }
  }
  if (pairs == 0)
    s.skip("notion comparison census", "no comparable pairs");
  else
    s.pass("notion comparison census",
           "both " + std::to_string(both) + ", refinement-only " +
               std::to_string(hsh_only) + ", composite-only " +
               std::to_string(gz_only) + ", neither " +
               std::to_string(neither) + ", skipped " +
               std::to_string(skipped));
  return s.finish();
}

SuiteResult suite_reflector(const Corpus& c) {
  Suite s("reflector");
  Agg idem, invariant, unit;
  for (const Entry& e : c.groupoids) {
    try {
      const FundamentalPlurigroup pi = fundamental_plurigroup(e.g, c.opt.guard);
      const FundamentalPlurigroup pi2 =
          fundamental_plurigroup(pi.plurigroup, c.opt.guard);
      if (pi.plurigroup->num_arrows() <= c.opt.guard.max_arrows)
        idem.note(e.name, find_isomorphism(pi2.plurigroup, pi.plurigroup,
                                           c.opt.guard)
                              .has_value());
      else
        idem.skip();
      unit.note(e.name, is_meriedric_equivalence(pi.unit, c.opt.guard));
    } catch (const SizeGuardError&) {
      idem.skip();
      unit.skip();
    }
  }
  idem.report(s, "reflection is idempotent");
  unit.report(s, "unit class is meriedric (skeleton collapse)");

  int used = 0;
  for (const Entry& a : c.groupoids) {
    if (used >= 20) break;
    for (const Entry& b : c.groupoids) {
      if (used >= 20) break;
      if (&a == &b) continue;
      try {
        if (!morita_equivalent(a.g, b.g, c.opt.guard)) continue;
        ++used;
        const FundamentalPlurigroup pa = fundamental_plurigroup(a.g, c.opt.guard);
        const FundamentalPlurigroup pb = fundamental_plurigroup(b.g, c.opt.guard);
        invariant.note(a.name + " / " + b.name,
                       find_isomorphism(pa.plurigroup, pb.plurigroup,
                                        c.opt.guard)
                           .has_value());
      } catch (const SizeGuardError&) {
        invariant.skip();
      }
    }
  }
  invariant.report(s, "equivalent groupoids share a reflection");

  Agg universal;
  used = 0;
  for (const PoolMero& pm : c.meros) {
    if (used >= 25) break;
    if (!pm.small) continue;
    if (!classify(pm.m.target()).plurigroup) continue;
    ++used;
    try {
      const ReflectionReport r = check_reflection_universal(
          pm.m.fraction().source_ptr(), pm.m.fraction().target_ptr(), pm.m,
          c.opt.guard);
      if (!r.exhaustive) {
        universal.skip();
        continue;
      }
      universal.note(pm.name, r.factorization_exists && r.unique);
    } catch (const SizeGuardError&) {
      universal.skip();
    }
  }
  universal.report(s, "classes into plurigroups factor uniquely");

  if (c.idx_colid >= 0 && c.null1) {
    s.run("banal groupoid reflects onto the point", [&] {
      const ReflectionReport r = check_reflection_universal(
          c.pair2, c.null1, c.meros[c.idx_colid].m, c.opt.guard);
      return r.exhaustive && r.factorization_exists && r.unique;
    });
  }
  if (c.ind2 && c.cyc2) {
    s.run("induced copy reflects onto its group", [&] {
      const InducedGroupoid ind =
          induce(c.cyc2, SetMap(2, 1, {0, 0}), c.opt.guard);
      const Meromorphism m = gamma(ind.projection, c.opt.guard);
      const ReflectionReport r = check_reflection_universal(
          ind.groupoid, c.cyc2, m, c.opt.guard);
      return r.exhaustive && r.factorization_exists && r.unique &&
             r.mediating.has_value() &&
             is_meriedric_equivalence(gamma(*r.mediating, c.opt.guard),
                                      c.opt.guard);
    });
  }
  if (c.cyc4 && c.cyc2) {
    s.run("mod-2 classes factor through the reflection", [&] {
      const Functor mod2(c.cyc4, c.cyc2, {0}, {0, 1, 0, 1});
      const ReflectionReport r = check_reflection_universal(
          c.cyc4, c.cyc2, gamma(mod2, c.opt.guard), c.opt.guard);
      return r.exhaustive && r.factorization_exists && r.unique;
    });
  }
  return s.finish();
}

SuiteResult suite_bibundle(const Corpus& c) {
  Suite s("bibundle");
  Agg valid, roundtrip, principal;
  int used = 0, rt_used = 0;
  for (const PoolMero& pm : c.meros) {
    if (used >= 60) break;
    ++used;
    Bibundle b{nullptr, nullptr, 0, {}, {}, {}, {}};
    try {
      b = to_bibundle(pm.m, c.opt.guard);
      valid.note(pm.name, validate_bibundle(b).ok());
    } catch (const SizeGuardError&) {
      valid.skip();
      continue;
    }
    if (pm.small && rt_used < 16) {
      ++rt_used;
      try {
        const Fraction back = from_bibundle(b, c.opt.guard);
        const Meromorphism m2(back, c.opt.guard);
        roundtrip.note(pm.name, same_meromorphism(pm.m, m2, c.opt.guard));
      } catch (const SizeGuardError&) {
        roundtrip.skip();
      }
    }
    if (classify(pm.m.source()).is_null) {
      // left side trivial: right action must be free and fibre-transitive
      bool ok = true;
      for (int e = 0; e < b.carrier && ok; ++e)
        for (int e2 = 0; e2 < b.carrier && ok; ++e2) {
          if (b.rho[e] != b.rho[e2]) continue;
          bool hit = false;
          for (int g = 0; g < b.right->num_arrows() && !hit; ++g)
            if (b.right_action[e][g] == e2) hit = true;
          ok = hit;
        }
      const FunctorProfile np =
          analyze_functor(pm.m.fraction().numerator, c.opt.guard);
      principal.note(pm.name, ok && np.actor &&
                                  classify(pm.m.fraction().apex()).principal);
    }
  }
  valid.report(s, "two-sided action data validates");
  roundtrip.report(s, "realized fractions recover the class");
  principal.report(s, "null-source classes carry principal bundles");

  if (c.idx_idcol >= 0) {
    s.run("banal equivalence bibundle has two points over one orbit", [&] {
      const Bibundle b = to_bibundle(c.meros[c.idx_idcol].m, c.opt.guard);
      if (b.carrier != 2) return false;
      for (int e = 0; e < b.carrier; ++e)
        if (b.rho[e] != 0) return false;  // single left object
      bool transitive = false;
      for (int g = 0; g < b.right->num_arrows(); ++g)
        if (b.right_action[0][g] == 1) transitive = true;
      for (int h = 0; h < b.left->num_arrows(); ++h)
        for (int e = 0; e < b.carrier; ++e)
          if (b.left_action[h][e] >= 0 && b.left_action[h][e] != e)
            return false;  // trivial left action
      return transitive;
    });
  }
  Agg identity_shape;
  used = 0;
  for (const Entry& e : c.groupoids) {
    if (used >= 8) break;
    if (e.g->num_arrows() > 16) continue;
    ++used;
    try {
      const Meromorphism idm = identity_meromorphism(e.g, c.opt.guard);
      const Bibundle b = to_bibundle(idm, c.opt.guard);
      if (b.carrier != e.g->num_arrows()) {
        identity_shape.note(e.name, false);
        continue;
      }
      // carrier points are the arrows; moments are their endpoints
      bool ok = true;
      std::vector<char> seen(e.g->num_arrows(), 0);
      const Fraction& fr = idm.fraction();
      for (int p = 0; p < b.carrier && ok; ++p) {
        const int src_side = b.rho[p], tgt_side = b.sigma[p];
        bool matched = false;
        for (int a = 0; a < e.g->num_arrows(); ++a)
          if (!seen[a] && e.g->src(a) == src_side && e.g->tgt(a) == tgt_side) {
            seen[a] = 1;
            matched = true;
            break;
          }
        ok = matched;
      }
      (void)fr;
      identity_shape.note(e.name, ok);
    } catch (const SizeGuardError&) {
      identity_shape.skip();
    }
  }
  identity_shape.report(s, "identity bibundle is the arrow set");

  if (c.null1) {
    s.run("one-point bibundle realizes the identity class", [&] {
      Bibundle b{c.null1, c.null1, 1, {0}, {0}, {{0}}, {{0}}};
      const Fraction fr = from_bibundle(b, c.opt.guard);
      return same_meromorphism(Meromorphism(fr, c.opt.guard),
                               identity_meromorphism(c.null1, c.opt.guard),
                               c.opt.guard);
    });
  }
  return s.finish();
}

SuiteResult suite_induce(const Corpus& c) {
  Suite s("induce");
  Agg proj, refine;
  std::mt19937 rng(c.opt.seed + 59u);
  int used = 0;
  for (const Entry& e : c.groupoids) {
    if (used >= 20) break;
    const int n = e.g->num_objects();
    for (int t = 0; t < 2 && used < 20; ++t) {
      ++used;
      const int k = n + static_cast<int>(rng() % 2);
      std::vector<int> img(k);
      for (int x = 0; x < std::min(n, k); ++x) img[x] = x;
      for (int x = n; x < k; ++x) img[x] = static_cast<int>(rng() % n);
      if (t == 1 && n >= 2) img[0] = 1;  // may lose surjectivity
      const SetMap u(k, n, img);
      try {
        const InducedGroupoid ind = induce(e.g, u, c.opt.guard);
        const FunctorProfile p = analyze_functor(ind.projection, c.opt.guard);
        proj.note(e.name + " map " + std::to_string(t),
                  p.inductor && p.s_equivalence == u.surjective());
        if (u.surjective()) {
          const OrbitalAtlas atlas = canonical_atlas(e.g);
          const OrbitalAtlas fine = refine_atlas(atlas, u, c.opt.guard);
          bool ok = fine.quotient == u.then(atlas.quotient);
          make_orbital_atlas(fine.groupoid, fine.quotient);  // revalidates
          refine.note(e.name + " map " + std::to_string(t), ok);
        }
      } catch (const SizeGuardError&) {
        proj.skip();
      }
    }
  }
  proj.report(s, "induced projection is an inductor, s-equivalence iff onto");
  refine.report(s, "refined atlases compose their quotients");

  // pullback stability along one projection, cancellation along the other
  Agg stable, ker_actor, reflect_back;
  used = 0;
  for (const PoolFunctor& fg : c.functors) {
    if (used >= 40) break;
    if (!fg.profile.exactor) continue;
    for (const PoolFunctor& fu : c.functors) {
      if (used >= 40) break;
      if (fu.cod != fg.cod) continue;
      ++used;
      const std::string who = fg.name + " along " + fu.name;
      try {
        const FibredProduct fp = fibred_product(fu.f, fg.f, c.opt.guard);
        const Functor& h = fp.to_first;    // over the test side
        const Functor& up = fp.to_second;  // over the (ex)actor side
        const FunctorProfile hp = analyze_functor(h, c.opt.guard);
        const FunctorProfile upp = analyze_functor(up, c.opt.guard);
        bool ok = hp.exactor;
        if (fg.profile.actor) ok = ok && hp.actor;
        if (fg.profile.s_extensor) ok = ok && hp.s_extensor;
        if (fg.profile.s_equivalence) ok = ok && hp.s_equivalence;
        stable.note(who, ok);
        const EmbeddedSubgroupoid kh = kernel(h);
        const EmbeddedSubgroupoid kg = kernel(fg.f);
        const Functor k = kernel_restriction(up, kh, kg);
        ker_actor.note(who, validate_functor(k).ok() &&
                                analyze_functor(k, c.opt.guard).actor);
        bool back = true;
        if (fu.profile.inactor && !upp.inactor) back = false;
        if (fu.profile.i_faithful && !upp.i_faithful) back = false;
        if (fu.profile.essentially_surjective && !upp.essentially_surjective)
          back = false;
        if (fu.profile.inductor && !upp.inductor) back = false;
        if (fu.profile.equivalence && !upp.equivalence) back = false;
        if (fg.profile.exactor && fg.profile.s_functor) {
          if (upp.actor && !fu.profile.actor) back = false;
          if (upp.inactor && !fu.profile.inactor) back = false;
          if (upp.exactor && !fu.profile.exactor) back = false;
          if (upp.essentially_surjective && !fu.profile.essentially_surjective)
            back = false;
          if (upp.inductor && !fu.profile.inductor) back = false;
          if (upp.equivalence && !fu.profile.equivalence) back = false;
        }
        reflect_back.note(who, back);
      } catch (const SizeGuardError&) {
        stable.skip();
        ker_actor.skip();
        reflect_back.skip();
      }
    }
  }
  stable.report(s, "pullback legs inherit actor-family flags");
  ker_actor.report(s, "kernel comparison is an actor");
  reflect_back.report(s, "pullback legs reflect flags across an s-exactor");

  Agg transfer;
  used = 0;
  for (const PoolFunctor& fu : c.functors) {
    if (used >= 10) break;
    if (!fu.profile.s_equivalence) continue;
    for (const PoolFunctor& fa : c.functors) {
      if (used >= 10) break;
      if (!fa.profile.actor || fa.cod != fu.cod) continue;
      ++used;
      const std::string who = fa.name + " across " + fu.name;
      try {
        const Functor down = transfer_actor(fu.f, fa.f,
                                            TransferDirection::pullback,
                                            c.opt.guard);
        const Functor back = transfer_actor(fu.f, down,
                                            TransferDirection::pushforward,
                                            c.opt.guard);
        auto iso = find_isomorphism_where(
            back.dom_ptr(), fa.f.dom_ptr(),
            [&](int x, int y) { return back.on_object(x) == fa.f.on_object(y); },
            [&](int a, int b) { return back.on_arrow(a) == fa.f.on_arrow(b); },
            c.opt.guard);
        transfer.note(who, analyze_functor(down, c.opt.guard).actor &&
                               iso.has_value());
      } catch (const SizeGuardError&) {
        transfer.skip();
      }
    }
  }
  transfer.report(s, "transfer across an s-equivalence round-trips");

  Agg decomp;
  used = 0;
  for (const PoolFunctor& pf : c.functors) {
    if (used >= 10) break;
    if (!pf.profile.subactor) continue;
    ++used;
    try {
      const SubactorDecomposition d =
          subactor_decompose(pf.f, pf.profile, c.opt.guard);
      decomp.note(pf.name,
                  analyze_functor(d.to_middle, c.opt.guard).s_equivalence &&
                      analyze_functor(d.from_middle, c.opt.guard).actor &&
                      same_maps(compose(d.from_middle, d.to_middle), pf.f));
    } catch (const SizeGuardError&) {
      decomp.skip();
    }
  }
  decomp.report(s, "subactors split as actor after s-equivalence");

  Agg wsq;
  used = 0;
  for (const Entry& e : c.groupoids) {
    if (used >= 6) break;
    if (e.g->num_arrows() > 8) continue;
    ++used;
    try {
      const Functor idg = Functor::identity(e.g);
      const WeakPullback wp = weak_pullback(idg, idg, c.opt.guard);
      const SquareGroupoid sq = square_groupoid(e.g, c.opt.guard);
      wsq.note(e.name,
               find_isomorphism(wp.apex, sq.groupoid, c.opt.guard).has_value());
    } catch (const SizeGuardError&) {
      wsq.skip();
    }
  }
  wsq.report(s, "weak pullback of identities is the square groupoid");

  if (c.pair2 && c.null1) {
    s.run("weak pullback over a point is strict", [&] {
      const Functor col = collapse_to_point(c.pair2, c.null1);
      const WeakPullback wp = weak_pullback(col, col, c.opt.guard);
      return is_invertible_functor(wp.comparison);
    });
  }
  if (c.pair2 && c.cyc2) {
    s.run("weak pullback separates triples from pairs", [&] {
      const Functor flat(c.pair2, c.cyc2, {0, 0}, {0, 1, 1, 0});
      const WeakPullback wp = weak_pullback(flat, flat, c.opt.guard);
      const FunctorProfile cp = analyze_functor(wp.comparison, c.opt.guard);
      return wp.apex->num_objects() == 8 && wp.apex->num_arrows() == 32 &&
             wp.strict.groupoid->num_objects() == 4 &&
             wp.strict.groupoid->num_arrows() == 8 && cp.equivalence &&
             cp.i_faithful && wp.comparison.objector().injective() &&
             !wp.comparison.objector().surjective();
    });
  }
  return s.finish();
}

SuiteResult suite_format(const Corpus& c) {
  Suite s("format");
  s.run("document round trip is exact", [&] {
    Document doc;
    for (const Entry& e : c.groupoids) doc.groupoids.emplace_back(e.name, e.g);
    int added = 0;
    for (const PoolFunctor& pf : c.functors) {
      if (added >= 10) break;
      doc.functors.emplace_back(pf.name, pf.f);
      ++added;
    }
    if (c.idx_idcol >= 0) {
      const Fraction& fr = c.meros[c.idx_idcol].m.original();
      doc.groupoids.emplace_back("idcol-apex", fr.apex_ptr());
      doc.functors.emplace_back("idcol-num", fr.numerator);
      doc.functors.emplace_back("idcol-den", fr.denominator);
      doc.fractions.emplace_back("idcol", fr);
    }
    const Document parsed = parse_document(serialize_document(doc));
    for (const auto& [name, g] : doc.groupoids) {
      const GroupoidPtr* found = parsed.find_groupoid(name);
      if (!found || !(**found == *g)) return false;
    }
    for (const auto& [name, f] : doc.functors) {
      const Functor* found = parsed.find_functor(name);
      if (!found || !same_maps(*found, f)) return false;
    }
    for (const auto& [name, fr] : doc.fractions) {
      const Fraction* found = parsed.find_fraction(name);
      if (!found || !same_maps(found->numerator, fr.numerator) ||
          !same_maps(found->denominator, fr.denominator))
        return false;
    }
    return true;
  });
  s.run("syntax errors carry line positions", [&] {
    try {
      parse_document("groupoid g\n  objects x\nend\n");
    } catch (const ParseError& e) {
      return e.line == 2;
    }
    return false;
  });
  s.run("missing composition entries name the pair", [&] {
    try {
      parse_document(
          "groupoid g\n  objects 1\n  arrow 0 0 0\n  unit 0 0\n  inv 0 0\n"
          "end\n");
    } catch (const ValidationError& e) {
      return std::string(e.what()).find("(0, 0)") != std::string::npos;
    }
    return false;
  });
  s.run("inconsistent functors report the offending triple", [&] {
    try {
      parse_document(
          "std G = cyclic 4\n"
          "functor f : G -> G\n  obj 0 0\n  arr 0 0\n  arr 1 1\n  arr 2 0\n"
          "  arr 3 3\nend\n");
    } catch (const ValidationError& e) {
      return std::string(e.what()).find("composition not preserved") !=
             std::string::npos;
    }
    return false;
  });
  return s.finish();
}

}  // namespace

int SuiteResult::passed() const {
  int n = 0;
  for (const CaseResult& c : cases)
    if (c.status == CaseStatus::pass) ++n;
  return n;
}

int SuiteResult::failed() const {
  int n = 0;
  for (const CaseResult& c : cases)
    if (c.status == CaseStatus::fail) ++n;
  return n;
}

int SuiteResult::skipped() const {
  int n = 0;
  for (const CaseResult& c : cases)
    if (c.status == CaseStatus::skip) ++n;
  return n;
}

bool SelftestReport::all_passed() const {
  int pass_total = 0;
  for (const SuiteResult& s : suites) {
    if (s.failed() > 0) return false;
    pass_total += s.passed();
  }
  return pass_total > 0;
}

std::string SelftestReport::render() const {
  std::ostringstream o;
  o << "selftest report\n";
  o << "seed " << options.seed << "\n";
  o << "max objects " << options.max_objects << "\n";
  o << "search cap " << options.guard.max_arrows << "\n";
  o << "build cap " << options.guard.max_built_arrows << "\n";
  o << "catalog: " << num_groupoids << " groupoids, " << num_functors
    << " functors, " << num_meromorphisms << " meromorphisms\n";
  o << "generation skips: " << generation_skips << "\n\n";
  int p = 0, f = 0, k = 0;
  for (const SuiteResult& s : suites) {
    o << "suite " << s.name << ": " << s.passed() << " passed, " << s.failed()
      << " failed, " << s.skipped() << " skipped\n";
    for (const CaseResult& c : s.cases) {
      if (c.status == CaseStatus::fail)
        o << "  FAIL " << c.name
          << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      else if (c.status == CaseStatus::skip)
        o << "  skip " << c.name
          << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    p += s.passed();
    f += s.failed();
    k += s.skipped();
  }
  o << "\ntotal: " << p << " passed, " << f << " failed, " << k
    << " skipped\n";
  o << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
  return o.str();
}

SelftestReport run_selftest(const SelftestOptions& options) {
  Corpus c;
  c.opt = options;
  build_catalog(c);
  build_functors(c);
  build_meros(c);

  SelftestReport report;
  report.options = options;
  report.num_groupoids = static_cast<int>(c.groupoids.size());
  report.num_functors = static_cast<int>(c.functors.size());
  report.num_meromorphisms = static_cast<int>(c.meros.size());
  report.generation_skips = c.gen_skips;

  report.suites.push_back(suite_corpus(c));
  report.suites.push_back(suite_axioms(c));
  report.suites.push_back(suite_squares(c));
  report.suites.push_back(suite_holograph(c));
  report.suites.push_back(suite_profile_laws(c));
  report.suites.push_back(suite_coset_law(c));
  report.suites.push_back(suite_natural_iso(c));
  report.suites.push_back(suite_transversal(c));
  report.suites.push_back(suite_irreducibility(c));
  report.suites.push_back(suite_equivalence(c));
  report.suites.push_back(suite_category(c));
  report.suites.push_back(suite_localization(c));
  report.suites.push_back(suite_morita(c));
  report.suites.push_back(suite_gz(c));
  report.suites.push_back(suite_reflector(c));
  report.suites.push_back(suite_bibundle(c));
  report.suites.push_back(suite_induce(c));
  report.suites.push_back(suite_format(c));

  std::sort(report.suites.begin(), report.suites.end(),
            [](const SuiteResult& a, const SuiteResult& b) {
              return a.name < b.name;
            });
  return report;
}

}  // namespace gpd
