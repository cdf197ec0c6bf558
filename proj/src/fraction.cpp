#include "gpd/fraction.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>

namespace gpd {

namespace {

// Equal underlying maps; endpoints are compared separately where it matters.
bool same_maps(const Functor& f, const Functor& g) {
  return f.object_map() == g.object_map() && f.arrow_map() == g.arrow_map();
}

// Push a functor that is constant on quotient classes down to the quotient.
Functor induced_on_quotient(const Quotient& q, const Functor& f) {
  const FiniteGroupoid& red = *q.groupoid;
  std::vector<int> obj(static_cast<std::size_t>(red.num_objects()), -1);
  std::vector<int> arr(static_cast<std::size_t>(red.num_arrows()), -1);
  for (int x = 0; x < f.dom().num_objects(); ++x) {
    int& slot = obj[static_cast<std::size_t>(q.object_class[x])];
    const int value = f.on_object(x);
    if (slot == -1)
      slot = value;
    else if (slot != value)
      throw Error("internal: functor is not constant on quotient classes");
  }
  for (int a = 0; a < f.dom().num_arrows(); ++a) {
    int& slot = arr[static_cast<std::size_t>(q.arrow_coset[a])];
    const int value = f.on_arrow(a);
    if (slot == -1)
      slot = value;
    else if (slot != value)
      throw Error("internal: functor is not constant on quotient cosets");
  }
  return Functor(q.groupoid, f.cod_ptr(), std::move(obj), std::move(arr));
}

ReducedFraction reduce_with_butterfly(const Fraction& fr, const Butterfly& bf,
                                      const SizeGuard& guard) {
  Quotient q = quotient_by_principal(bf.s, guard);
  Functor num = induced_on_quotient(q, fr.numerator);
  Functor den = induced_on_quotient(q, fr.denominator);
  return ReducedFraction{Fraction(std::move(num), std::move(den)),
                         std::move(q)};
}

ReducedFraction make_reduced(const Fraction& fr, const SizeGuard& guard) {
  MeromorphismCheck mc = check_meromorphism(fr, guard);
  if (!mc.is_meromorphism())
    throw PreconditionError("fraction is not a meromorphism");
  return reduce_with_butterfly(fr, mc.butterfly, guard);
}

// Number of functors between the apexes commuting with both legs, counted up
// to `cap`.
long long count_commuting(const Fraction& from, const Fraction& to,
                          long long cap, const SizeGuard& guard) {
  if (!same_groupoid(from.source(), to.source()) ||
      !same_groupoid(from.target(), to.target()))
    return 0;
  auto obj_ok = [&](int x, int y) {
    return to.numerator.on_object(y) == from.numerator.on_object(x) &&
           to.denominator.on_object(y) == from.denominator.on_object(x);
  };
  auto arr_ok = [&](int a, int b) {
    return to.numerator.on_arrow(b) == from.numerator.on_arrow(a) &&
           to.denominator.on_arrow(b) == from.denominator.on_arrow(a);
  };
  return static_cast<long long>(
      enumerate_functors_where(from.apex_ptr(), to.apex_ptr(), obj_ok, arr_ok,
                               cap, guard)
          .size());
}

}  // namespace

Fraction::Fraction(Functor num, Functor den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (!same_groupoid(numerator.dom(), denominator.dom()))
    throw PreconditionError("fraction legs must share their apex");
}

Fraction as_fraction(const Holograph& h) {
  return Fraction(h.numerator, h.denominator);
}

MeromorphismCheck check_meromorphism(const Fraction& fr,
                                     const SizeGuard& guard) {
  const FunctorProfile pp = analyze_functor(fr.numerator, guard);
  const FunctorProfile qp = analyze_functor(fr.denominator, guard);
  if (pp.exactor && qp.exactor) {
    CotransversalityReport rep =
        cotransversality(fr.numerator, fr.denominator, guard);
    MeromorphismCheck mc{true, true, qp.s_equivalence, rep.status,
                         std::move(rep.butterfly)};
    if (mc.is_meromorphism()) {
      if (!classify(*mc.butterfly.r.groupoid).principal)
        throw Error(
            "internal: meromorphism with non-principal denominator kernel");
      if (!rep.v_profile.s_exactor())
        throw Error(
            "internal: restricted denominator leg of a meromorphism is not an "
            "s-exactor");
    }
    return mc;
  }
  Butterfly bf = make_butterfly(fr.numerator, fr.denominator);
  const Transversality t = transversality_status(bf.r, bf.n);
  Cotransversality status = Cotransversality::none;
  if (t == Transversality::transverse)
    status = Cotransversality::cotransverse;
  else if (t == Transversality::transversal)
    status = Cotransversality::cotransversal;
  return MeromorphismCheck{pp.exactor, qp.exactor, qp.s_equivalence, status,
                           std::move(bf)};
}

IrreducibilityReport is_irreducible(const Fraction& fr,
                                    const SizeGuard& guard) {
  MeromorphismCheck mc = check_meromorphism(fr, guard);
  if (!mc.is_meromorphism())
    throw PreconditionError("is_irreducible: fraction is not a meromorphism");
  const Butterfly& bf = mc.butterfly;
  IrreducibilityReport rep;
  rep.s_null = classify(*bf.s.groupoid).is_null;
  rep.kernels_transverse =
      transversality_status(bf.n, bf.r) == Transversality::transverse;
  rep.cotransverse = mc.status == Cotransversality::cotransverse;
  rep.u_actor = analyze_functor(bf.u, guard).actor;
  rep.v_actor = analyze_functor(bf.v, guard).actor;
  return rep;
}

bool is_terminal_among(const Fraction& fr, const std::vector<Fraction>& family,
                       const SizeGuard& guard) {
  for (const Fraction& member : family)
    if (count_commuting(member, fr, 2, guard) != 1) return false;
  return true;
}

ReducedFraction reduce_fraction(const Fraction& fr, const SizeGuard& guard) {
  return make_reduced(fr, guard);
}

Fraction reduce(const Fraction& fr, const SizeGuard& guard) {
  return make_reduced(fr, guard).fraction;
}

std::optional<Functor> fraction_isomorphism(const Fraction& a,
                                            const Fraction& b,
                                            const SizeGuard& guard) {
  if (!same_groupoid(a.source(), b.source()) ||
      !same_groupoid(a.target(), b.target()))
    return std::nullopt;
  auto obj_ok = [&](int x, int y) {
    return b.numerator.on_object(y) == a.numerator.on_object(x) &&
           b.denominator.on_object(y) == a.denominator.on_object(x);
  };
  auto arr_ok = [&](int p, int r) {
    return b.numerator.on_arrow(r) == a.numerator.on_arrow(p) &&
           b.denominator.on_arrow(r) == a.denominator.on_arrow(p);
  };
  return find_isomorphism_where(a.apex_ptr(), b.apex_ptr(), obj_ok, arr_ok,
                                guard);
}

bool verify_equivalence_witness(const EquivalenceWitness& w,
                                const Fraction& fr1, const Fraction& fr2,
                                const SizeGuard& guard) {
  if (!same_groupoid(w.to_first.dom(), *w.apex) ||
      !same_groupoid(w.to_second.dom(), *w.apex))
    return false;
  if (!same_groupoid(w.to_first.cod(), fr1.apex()) ||
      !same_groupoid(w.to_second.cod(), fr2.apex()))
    return false;
  if (!validate_functor(w.to_first).ok() || !validate_functor(w.to_second).ok())
    return false;
  if (!analyze_functor(w.to_first, guard).s_equivalence) return false;
  if (!analyze_functor(w.to_second, guard).s_equivalence) return false;
  return same_maps(compose(fr1.numerator, w.to_first),
                   compose(fr2.numerator, w.to_second)) &&
         same_maps(compose(fr1.denominator, w.to_first),
                   compose(fr2.denominator, w.to_second));
}

std::optional<EquivalenceWitness> fractions_equivalent(const Fraction& fr1,
                                                       const Fraction& fr2,
                                                       const SizeGuard& guard) {
  MeromorphismCheck c1 = check_meromorphism(fr1, guard);
  MeromorphismCheck c2 = check_meromorphism(fr2, guard);
  if (!c1.is_meromorphism() || !c2.is_meromorphism())
    throw PreconditionError("fractions_equivalent: inputs must be meromorphisms");
  if (!same_groupoid(fr1.source(), fr2.source()) ||
      !same_groupoid(fr1.target(), fr2.target()))
    return std::nullopt;
  ReducedFraction r1 = reduce_with_butterfly(fr1, c1.butterfly, guard);
  ReducedFraction r2 = reduce_with_butterfly(fr2, c2.butterfly, guard);
  std::optional<Functor> phi =
      fraction_isomorphism(r1.fraction, r2.fraction, guard);
  if (!phi) return std::nullopt;
  FibredProduct k = fibred_product(compose(*phi, r1.quotient.projection),
                                   r2.quotient.projection, guard);
  EquivalenceWitness w{k.groupoid, k.to_first, k.to_second};
  if (!verify_equivalence_witness(w, fr1, fr2, guard))
    throw Error("internal: constructed equivalence witness failed verification");
  return w;
}

EquivalenceWitness chain_witnesses(const EquivalenceWitness& w12,
                                   const EquivalenceWitness& w23,
                                   const SizeGuard& guard) {
  if (!same_groupoid(w12.to_second.cod(), w23.to_first.cod()))
    throw PreconditionError(
        "chain_witnesses: witnesses do not meet over a common fraction");
  FibredProduct c = fibred_product(w12.to_second, w23.to_first, guard);
  Functor k1 = compose(w12.to_first, c.to_first);
  Functor k3 = compose(w23.to_second, c.to_second);
  return EquivalenceWitness{c.groupoid, std::move(k1), std::move(k3)};
}

GzEquivalenceProbe gz_equivalence_probe(const Fraction& fr1,
                                        const Fraction& fr2,
                                        const SizeGuard& guard) {
  GzEquivalenceProbe probe;
  probe.hsh_equivalent = fractions_equivalent(fr1, fr2, guard).has_value();
  if (!same_groupoid(fr1.source(), fr2.source()) ||
      !same_groupoid(fr1.target(), fr2.target()))
    return probe;
  FibredProduct k = fibred_product(fr1.denominator, fr2.denominator, guard);
  probe.gz_canonical_commutes = same_maps(compose(fr1.numerator, k.to_first),
                                          compose(fr2.numerator, k.to_second));
  probe.gz_denominator_ok =
      analyze_functor(compose(fr1.denominator, k.to_first), guard)
          .s_equivalence;
  return probe;
}

Meromorphism::Meromorphism(Fraction fr, const SizeGuard& guard)
    : original_(std::move(fr)), reduced_(make_reduced(original_, guard)) {}

bool same_meromorphism(const Meromorphism& a, const Meromorphism& b,
                       const SizeGuard& guard) {
  if (!same_groupoid(a.source(), b.source()) ||
      !same_groupoid(a.target(), b.target()))
    return false;
  return fraction_isomorphism(a.fraction(), b.fraction(), guard).has_value();
}

Fraction compose_fractions(const Fraction& second, const Fraction& first,
                           const SizeGuard& guard) {
  if (!same_groupoid(first.target(), second.source()))
    throw PreconditionError(
        "compose_fractions: target of the first differs from source of the "
        "second");
  FibredProduct m =
      fibred_product(first.numerator, second.denominator, guard);
  return Fraction(compose(second.numerator, m.to_second),
                  compose(first.denominator, m.to_first));
}

Meromorphism compose_meromorphisms(const Meromorphism& second,
                                   const Meromorphism& first,
                                   const SizeGuard& guard) {
  return Meromorphism(
      compose_fractions(second.fraction(), first.fraction(), guard), guard);
}

Meromorphism gamma(const Functor& f, const SizeGuard& guard) {
  return Meromorphism(as_fraction(holograph(f, guard)), guard);
}

Meromorphism identity_meromorphism(GroupoidPtr g, const SizeGuard& guard) {
  return gamma(Functor::identity(std::move(g)), guard);
}

bool is_meriedric_equivalence(const Meromorphism& m, const SizeGuard& guard) {
  return analyze_functor(m.fraction().numerator, guard).s_equivalence;
}

Meromorphism inverse_meromorphism(const Meromorphism& m,
                                  const SizeGuard& guard) {
  if (!is_meriedric_equivalence(m, guard))
    throw PreconditionError(
        "inverse_meromorphism: requires a meriedric equivalence");
  return Meromorphism(
      Fraction(m.fraction().denominator, m.fraction().numerator), guard);
}

std::optional<MoritaWitness> morita_equivalent(GroupoidPtr g, GroupoidPtr h,
                                               const SizeGuard& guard) {
  SkeletonRetraction sg = skeleton_retraction(g);
  SkeletonRetraction sh = skeleton_retraction(h);
  const auto& vg = sg.decomposition.vertex_groups;
  const auto& vh = sh.decomposition.vertex_groups;

  bool census = vg.size() == vh.size();
  if (census) {
    std::vector<char> used(vh.size(), 0);
    for (const VertexGroup& a : vg) {
      bool matched = false;
      for (std::size_t j = 0; j < vh.size() && !matched; ++j) {
        if (used[j]) continue;
        if (find_isomorphism(a.group, vh[j].group, guard)) {
          used[j] = 1;
          matched = true;
        }
      }
      if (!matched) {
        census = false;
        break;
      }
    }
  }

  std::optional<Functor> phi =
      find_isomorphism(sg.plurigroup, sh.plurigroup, guard);
  if (census != phi.has_value())
    throw Error("internal: Morita census and witness verdicts disagree");
  if (!phi) return std::nullopt;

  FibredProduct k =
      fibred_product(compose(*phi, sg.retraction), sh.retraction, guard);
  if (!analyze_functor(k.to_first, guard).s_equivalence ||
      !analyze_functor(k.to_second, guard).s_equivalence)
    throw Error("internal: Morita witness legs are not s-equivalences");
  return MoritaWitness{k.groupoid, k.to_first, k.to_second};
}

ValidationReport validate_bibundle(const Bibundle& b) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    if (report.violations.size() < 50) report.violations.push_back(std::move(msg));
  };
  const FiniteGroupoid& lg = *b.left;
  const FiniteGroupoid& rg = *b.right;
  const int ne = b.carrier;

  if (static_cast<int>(b.rho.size()) != ne ||
      static_cast<int>(b.sigma.size()) != ne) {
    fail("bibundle: moment map size mismatch");
    return report;
  }
  if (static_cast<int>(b.left_action.size()) != lg.num_arrows() ||
      static_cast<int>(b.right_action.size()) != ne) {
    fail("bibundle: action table size mismatch");
    return report;
  }
  for (const auto& row : b.left_action)
    if (static_cast<int>(row.size()) != ne) {
      fail("bibundle: left action row size mismatch");
      return report;
    }
  for (const auto& row : b.right_action)
    if (static_cast<int>(row.size()) != rg.num_arrows()) {
      fail("bibundle: right action row size mismatch");
      return report;
    }
  for (int e = 0; e < ne; ++e) {
    if (b.rho[e] < 0 || b.rho[e] >= lg.num_objects())
      fail("bibundle: rho out of range at " + std::to_string(e));
    if (b.sigma[e] < 0 || b.sigma[e] >= rg.num_objects())
      fail("bibundle: sigma out of range at " + std::to_string(e));
  }
  if (!report.ok()) return report;

  auto lact = [&](int h, int e) { return b.left_action[h][e]; };
  auto ract = [&](int e, int g) { return b.right_action[e][g]; };

  for (int h = 0; h < lg.num_arrows(); ++h)
    for (int e = 0; e < ne; ++e) {
      const int value = lact(h, e);
      const bool should = lg.src(h) == b.rho[e];
      if (should && (value < 0 || value >= ne))
        fail("bibundle: left action undefined at (" + std::to_string(h) +
             ", " + std::to_string(e) + ")");
      else if (!should && value != -1)
        fail("bibundle: left action defined off its domain at (" +
             std::to_string(h) + ", " + std::to_string(e) + ")");
      else if (should) {
        if (b.rho[value] != lg.tgt(h))
          fail("bibundle: rho not equivariant at (" + std::to_string(h) +
               ", " + std::to_string(e) + ")");
        if (b.sigma[value] != b.sigma[e])
          fail("bibundle: sigma not invariant under the left action at (" +
               std::to_string(h) + ", " + std::to_string(e) + ")");
      }
    }
  for (int e = 0; e < ne; ++e)
    for (int g = 0; g < rg.num_arrows(); ++g) {
      const int value = ract(e, g);
      const bool should = b.sigma[e] == rg.tgt(g);
      if (should && (value < 0 || value >= ne))
        fail("bibundle: right action undefined at (" + std::to_string(e) +
             ", " + std::to_string(g) + ")");
      else if (!should && value != -1)
        fail("bibundle: right action defined off its domain at (" +
             std::to_string(e) + ", " + std::to_string(g) + ")");
      else if (should) {
        if (b.sigma[value] != rg.src(g))
          fail("bibundle: sigma not antiequivariant at (" + std::to_string(e) +
               ", " + std::to_string(g) + ")");
        if (b.rho[value] != b.rho[e])
          fail("bibundle: rho not invariant under the right action at (" +
               std::to_string(e) + ", " + std::to_string(g) + ")");
      }
    }
  if (!report.ok()) return report;

  for (int e = 0; e < ne; ++e) {
    if (lact(lg.unit(b.rho[e]), e) != e)
      fail("bibundle: left unit law fails at " + std::to_string(e));
    if (ract(e, rg.unit(b.sigma[e])) != e)
      fail("bibundle: right unit law fails at " + std::to_string(e));
  }
  for (int h2 = 0; h2 < lg.num_arrows(); ++h2)
    for (int h1 = 0; h1 < lg.num_arrows(); ++h1) {
      if (!lg.composable(h2, h1)) continue;
      const int h21 = lg.comp(h2, h1);
      for (int e = 0; e < ne; ++e) {
        if (lg.src(h1) != b.rho[e]) continue;
        if (lact(h2, lact(h1, e)) != lact(h21, e))
          fail("bibundle: left action law fails at (" + std::to_string(h2) +
               ", " + std::to_string(h1) + ", " + std::to_string(e) + ")");
      }
    }
  for (int g = 0; g < rg.num_arrows(); ++g)
    for (int gp = 0; gp < rg.num_arrows(); ++gp) {
      if (!rg.composable(g, gp)) continue;
      const int ggp = rg.comp(g, gp);
      for (int e = 0; e < ne; ++e) {
        if (b.sigma[e] != rg.tgt(g)) continue;
        if (ract(ract(e, g), gp) != ract(e, ggp))
          fail("bibundle: right action law fails at (" + std::to_string(e) +
               ", " + std::to_string(g) + ", " + std::to_string(gp) + ")");
      }
    }
  for (int h = 0; h < lg.num_arrows(); ++h)
    for (int e = 0; e < ne; ++e) {
      if (lg.src(h) != b.rho[e]) continue;
      for (int g = 0; g < rg.num_arrows(); ++g) {
        if (b.sigma[e] != rg.tgt(g)) continue;
        if (lact(h, ract(e, g)) != ract(lact(h, e), g))
          fail("bibundle: actions do not commute at (" + std::to_string(h) +
               ", " + std::to_string(e) + ", " + std::to_string(g) + ")");
      }
    }
  for (int e = 0; e < ne; ++e) {
    std::vector<char> seen(static_cast<std::size_t>(ne), 0);
    for (int g = 0; g < rg.num_arrows(); ++g) {
      if (b.sigma[e] != rg.tgt(g)) continue;
      const int value = ract(e, g);
      if (value < 0) continue;
      if (seen[static_cast<std::size_t>(value)])
        fail("bibundle: right action not free at " + std::to_string(e));
      seen[static_cast<std::size_t>(value)] = 1;
    }
  }
  if (!report.ok()) return report;

  // rho must induce a bijection from right orbits onto the objects of `left`.
  std::vector<int> orbit(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) orbit[static_cast<std::size_t>(e)] = e;
  std::function<int(int)> root = [&](int e) {
    while (orbit[static_cast<std::size_t>(e)] != e)
      e = orbit[static_cast<std::size_t>(e)] =
          orbit[static_cast<std::size_t>(orbit[static_cast<std::size_t>(e)])];
    return e;
  };
  for (int e = 0; e < ne; ++e)
    for (int g = 0; g < rg.num_arrows(); ++g) {
      const int value = ract(e, g);
      if (value >= 0) orbit[static_cast<std::size_t>(root(e))] = root(value);
    }
  std::vector<int> seen_object(static_cast<std::size_t>(lg.num_objects()), -1);
  for (int e = 0; e < ne; ++e) {
    const int r = root(e);
    int& slot = seen_object[static_cast<std::size_t>(b.rho[e])];
    if (slot == -1)
      slot = r;
    else if (slot != r)
      fail("bibundle: rho identifies distinct right orbits");
  }
  for (int x = 0; x < lg.num_objects(); ++x)
    if (seen_object[static_cast<std::size_t>(x)] == -1)
      fail("bibundle: rho misses object " + std::to_string(x));
  return report;
}

Bibundle to_bibundle(const Meromorphism& m, const SizeGuard& guard) {
  const Fraction& fr = m.fraction();
  const FiniteGroupoid& k = fr.apex();
  const FiniteGroupoid& lg = fr.source();
  const FiniteGroupoid& rg = fr.target();
  Butterfly bf = make_butterfly(fr.numerator, fr.denominator);
  (void)guard;

  Bibundle b;
  b.left = fr.source_ptr();
  b.right = fr.target_ptr();
  b.carrier = k.num_objects();
  b.rho.resize(static_cast<std::size_t>(b.carrier));
  b.sigma.resize(static_cast<std::size_t>(b.carrier));
  for (int e = 0; e < b.carrier; ++e) {
    b.rho[static_cast<std::size_t>(e)] = fr.denominator.on_object(e);
    b.sigma[static_cast<std::size_t>(e)] = fr.numerator.on_object(e);
  }
  b.left_action.assign(static_cast<std::size_t>(lg.num_arrows()),
                       std::vector<int>(static_cast<std::size_t>(b.carrier), -1));
  b.right_action.assign(static_cast<std::size_t>(b.carrier),
                        std::vector<int>(static_cast<std::size_t>(rg.num_arrows()), -1));
  for (int a : bf.n.arrows) {
    const int h = fr.denominator.on_arrow(a);
    int& slot = b.left_action[static_cast<std::size_t>(h)]
                             [static_cast<std::size_t>(k.src(a))];
    if (slot != -1 && slot != k.tgt(a))
      throw Error("internal: left bibundle action is not single-valued");
    slot = k.tgt(a);
  }
  for (int a : bf.r.arrows) {
    const int g = rg.inv(fr.numerator.on_arrow(a));
    int& slot = b.right_action[static_cast<std::size_t>(k.src(a))]
                              [static_cast<std::size_t>(g)];
    if (slot != -1 && slot != k.tgt(a))
      throw Error("internal: right bibundle action is not single-valued");
    slot = k.tgt(a);
  }
  for (int h = 0; h < lg.num_arrows(); ++h)
    for (int e = 0; e < b.carrier; ++e)
      if (lg.src(h) == b.rho[static_cast<std::size_t>(e)] &&
          b.left_action[static_cast<std::size_t>(h)]
                       [static_cast<std::size_t>(e)] < 0)
        throw Error("internal: left bibundle action misses a defined pair");
  for (int e = 0; e < b.carrier; ++e)
    for (int g = 0; g < rg.num_arrows(); ++g)
      if (b.sigma[static_cast<std::size_t>(e)] == rg.tgt(g) &&
          b.right_action[static_cast<std::size_t>(e)]
                        [static_cast<std::size_t>(g)] < 0)
        throw Error("internal: right bibundle action misses a defined pair");
  return b;
}

Fraction from_bibundle(const Bibundle& b, const SizeGuard& guard) {
  ValidationReport rep = validate_bibundle(b);
  if (!rep.ok()) throw ValidationError("from_bibundle: " + rep.violations.front());
  const FiniteGroupoid& lg = *b.left;
  const FiniteGroupoid& rg = *b.right;
  const int ne = b.carrier;

  long long count = 0;
  for (int h = 0; h < lg.num_arrows(); ++h)
    for (int e = 0; e < ne; ++e) {
      if (lg.src(h) != b.rho[static_cast<std::size_t>(e)]) continue;
      for (int g = 0; g < rg.num_arrows(); ++g)
        if (b.sigma[static_cast<std::size_t>(e)] == rg.tgt(g)) ++count;
    }
  guard.check_build(count, "bibundle realization");

  std::vector<std::array<int, 3>> triples;
  triples.reserve(static_cast<std::size_t>(count));
  std::vector<int> id_of(static_cast<std::size_t>(lg.num_arrows()) *
                             static_cast<std::size_t>(ne) *
                             static_cast<std::size_t>(rg.num_arrows()),
                         -1);
  auto flat = [&](int h, int e, int g) {
    return (static_cast<std::size_t>(h) * static_cast<std::size_t>(ne) +
            static_cast<std::size_t>(e)) *
               static_cast<std::size_t>(rg.num_arrows()) +
           static_cast<std::size_t>(g);
  };
  for (int h = 0; h < lg.num_arrows(); ++h)
    for (int e = 0; e < ne; ++e) {
      if (lg.src(h) != b.rho[static_cast<std::size_t>(e)]) continue;
      for (int g = 0; g < rg.num_arrows(); ++g) {
        if (b.sigma[static_cast<std::size_t>(e)] != rg.tgt(g)) continue;
        id_of[flat(h, e, g)] = static_cast<int>(triples.size());
        triples.push_back({h, e, g});
      }
    }

  const int m = static_cast<int>(triples.size());
  std::vector<ArrowEnds> ends(static_cast<std::size_t>(m));
  std::vector<int> units(static_cast<std::size_t>(ne));
  std::vector<int> inverses(static_cast<std::size_t>(m));
  std::vector<int> comp(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  auto lact = [&](int h, int e) { return b.left_action[h][e]; };
  auto ract = [&](int e, int g) { return b.right_action[e][g]; };

  for (int a = 0; a < m; ++a) {
    const auto [h, e, g] = triples[static_cast<std::size_t>(a)];
    ends[static_cast<std::size_t>(a)] = ArrowEnds{ract(e, g), lact(h, e)};
    inverses[static_cast<std::size_t>(a)] =
        id_of[flat(lg.inv(h), ract(lact(h, e), g), rg.inv(g))];
  }
  for (int e = 0; e < ne; ++e)
    units[static_cast<std::size_t>(e)] =
        id_of[flat(lg.unit(b.rho[static_cast<std::size_t>(e)]), e,
                   rg.unit(b.sigma[static_cast<std::size_t>(e)]))];
  for (int a2 = 0; a2 < m; ++a2) {
    const auto [h2, e2, g2] = triples[static_cast<std::size_t>(a2)];
    for (int a1 = 0; a1 < m; ++a1) {
      const auto [h1, e1, g1] = triples[static_cast<std::size_t>(a1)];
      if (ract(e2, g2) != lact(h1, e1)) continue;
      comp[static_cast<std::size_t>(a2) * static_cast<std::size_t>(m) +
           static_cast<std::size_t>(a1)] =
          id_of[flat(lg.comp(h2, h1), ract(e1, rg.inv(g2)), rg.comp(g2, g1))];
    }
  }
  GroupoidPtr apex = share(FiniteGroupoid(ne, std::move(ends), std::move(units),
                                          std::move(inverses), std::move(comp)));
  std::vector<int> p_obj(b.sigma.begin(), b.sigma.end());
  std::vector<int> q_obj(b.rho.begin(), b.rho.end());
  std::vector<int> p_arr(static_cast<std::size_t>(m));
  std::vector<int> q_arr(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    p_arr[static_cast<std::size_t>(a)] = triples[static_cast<std::size_t>(a)][2];
    q_arr[static_cast<std::size_t>(a)] = triples[static_cast<std::size_t>(a)][0];
  }
  Functor p(apex, b.right, std::move(p_obj), std::move(p_arr));
  Functor q(apex, b.left, std::move(q_obj), std::move(q_arr));
  return Fraction(std::move(p), std::move(q));
}

std::optional<Functor> is_holomorphism(const Meromorphism& m,
                                       const SizeGuard& guard) {
  std::optional<Functor> s = find_section(m.fraction().denominator, guard);
  if (!s) return std::nullopt;
  Functor f = compose(m.fraction().numerator, *s);
  if (!same_meromorphism(gamma(f, guard), m, guard))
    throw Error("internal: holomorphism witness does not represent the class");
  return f;
}

GzCstarReport gz_cstar(const Functor& f, const Functor& s,
                       const SizeGuard& guard) {
  if (!same_groupoid(f.cod(), s.cod()))
    throw PreconditionError("gz_cstar: functors must share their codomain");
  if (!analyze_functor(s, guard).s_equivalence)
    throw PreconditionError("gz_cstar: second argument must be an s-equivalence");
  FibredProduct pb = fibred_product(f, s, guard);
  FunctorProfile prof = analyze_functor(pb.to_first, guard);
  const bool holds = prof.s_equivalence;
  return GzCstarReport{std::move(pb), prof, holds};
}

GzDstarReport gz_dstar(const Functor& f, const Functor& g, const Functor& s,
                       const SizeGuard& guard) {
  if (!same_groupoid(f.dom(), g.dom()) || !same_groupoid(f.cod(), g.cod()))
    throw PreconditionError("gz_dstar: functors must be parallel");
  if (!same_groupoid(s.dom(), f.cod()))
    throw PreconditionError("gz_dstar: coequalising functor must compose");
  if (!analyze_functor(s, guard).s_equivalence)
    throw PreconditionError("gz_dstar: third argument must be an s-equivalence");
  if (!same_maps(compose(s, f), compose(s, g)))
    throw PreconditionError("gz_dstar: s does not coequalise f and g");

  GzDstarReport rep;
  rep.arrow_cap = guard.max_arrows;
  GroupoidPtr ap = f.dom_ptr();
  const FiniteGroupoid& a = *ap;
  const int n = a.num_objects();
  if (n == 0) {
    rep.candidates_tested = 1;
    rep.found = true;
    rep.witness = GzDstarWitness{ap, Functor::identity(ap)};
    return rep;
  }

  std::vector<std::vector<long long>> hom_size(
      static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      hom_size[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<long long>(a.hom(i, j).size());

  std::vector<int> fib(static_cast<std::size_t>(n), 1);
  for (int total = n;; ++total) {
    bool any_buildable = false;
    // All fibre-size vectors with the given total, lexicographically.
    std::function<bool(int, int)> walk = [&](int index, int remaining) -> bool {
      if (index == n - 1) {
        fib[static_cast<std::size_t>(index)] = remaining;
        long long arrows = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            arrows += static_cast<long long>(fib[static_cast<std::size_t>(i)]) *
                      fib[static_cast<std::size_t>(j)] *
                      hom_size[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (arrows > guard.max_arrows) return false;
        any_buildable = true;
        ++rep.candidates_tested;
        rep.max_objects_reached = total;
        std::vector<int> images;
        for (int i = 0; i < n; ++i)
          images.insert(images.end(), static_cast<std::size_t>(fib[static_cast<std::size_t>(i)]), i);
        InducedGroupoid d = induce(ap, SetMap(total, n, std::move(images)), guard);
        if (same_maps(compose(f, d.projection), compose(g, d.projection))) {
          rep.found = true;
          rep.witness = GzDstarWitness{d.groupoid, d.projection};
          return true;
        }
        return false;
      }
      for (int size = 1; size <= remaining - (n - 1 - index); ++size) {
        fib[static_cast<std::size_t>(index)] = size;
        if (walk(index + 1, remaining - size)) return true;
      }
      return false;
    };
    if (walk(0, total)) return rep;
    if (!any_buildable) break;
  }
  rep.inconclusive = rep.candidates_tested == 0;
  return rep;
}

}  // namespace gpd
