#pragma once

#include <optional>
#include <vector>

#include "gpd/transversal.hpp"

namespace gpd {

/// A span numerator/denominator with a shared apex: numerator : K -> target,
/// denominator : K -> source.  The constructor checks the shared apex.
struct Fraction {
  Fraction(Functor num, Functor den);

  Functor numerator;
  Functor denominator;

  const FiniteGroupoid& apex() const { return numerator.dom(); }
  GroupoidPtr apex_ptr() const { return numerator.dom_ptr(); }
  const FiniteGroupoid& source() const { return denominator.cod(); }
  GroupoidPtr source_ptr() const { return denominator.cod_ptr(); }
  const FiniteGroupoid& target() const { return numerator.cod(); }
  GroupoidPtr target_ptr() const { return numerator.cod_ptr(); }
};

/// View a holograph as the fraction (numerator, denominator).
Fraction as_fraction(const Holograph& h);

struct MeromorphismCheck {
  bool numerator_exactor = false;
  bool denominator_exactor = false;
  bool q_is_s_equivalence = false;
  Cotransversality status = Cotransversality::none;
  Butterfly butterfly;

  bool is_fraction_of_exactors() const {
    return numerator_exactor && denominator_exactor;
  }
  bool cotransversal() const {
    return is_fraction_of_exactors() && status != Cotransversality::none;
  }
  bool is_meromorphism() const { return cotransversal() && q_is_s_equivalence; }
};

/// Decide whether the fraction is a meromorphism: both legs exactors, the
/// denominator an s-equivalence, and the legs cotransversal.  When it is,
/// additionally insists that Ker(denominator) is principal and the restricted
/// denominator leg is an s-exactor.
MeromorphismCheck check_meromorphism(const Fraction& fr, const SizeGuard& = {});

/// The five pointwise-equivalent irreducibility conditions, evaluated
/// independently.
struct IrreducibilityReport {
  bool s_null = false;             // Ker p intersect Ker q is null
  bool kernels_transverse = false; // Ker p transverse to Ker q
  bool cotransverse = false;       // legs cotransverse
  bool u_actor = false;
  bool v_actor = false;

  bool agree() const {
    return s_null == kernels_transverse && s_null == cotransverse &&
           s_null == u_actor && s_null == v_actor;
  }
  bool irreducible() const { return s_null; }
};

/// Requires a meromorphism.
IrreducibilityReport is_irreducible(const Fraction& fr, const SizeGuard& = {});

/// fr is terminal among the given family of fractions with the same
/// endpoints: for every member exactly one functor between the apexes
/// commutes with both legs.
bool is_terminal_among(const Fraction& fr, const std::vector<Fraction>& family,
                       const SizeGuard& = {});

struct ReducedFraction {
  Fraction fraction;   // the irreducible representative
  Quotient quotient;   // of the original apex by Ker p intersect Ker q
};

/// Quotient a meromorphism by the intersection of the kernels of its legs;
/// the result is irreducible and the projection commutes with both legs.
ReducedFraction reduce_fraction(const Fraction& fr, const SizeGuard& = {});
Fraction reduce(const Fraction& fr, const SizeGuard& = {});

/// Invertible functor between the apexes commuting with both legs.
std::optional<Functor> fraction_isomorphism(const Fraction& a,
                                            const Fraction& b,
                                            const SizeGuard& = {});

/// Common refinement witnessing equivalence of two fractions: both legs are
/// s-equivalences and both triangle pairs commute strictly.
struct EquivalenceWitness {
  GroupoidPtr apex;
  Functor to_first;
  Functor to_second;
};

bool verify_equivalence_witness(const EquivalenceWitness& w,
                                const Fraction& fr1, const Fraction& fr2,
                                const SizeGuard& = {});

/// Requires both fractions to be meromorphisms.  Returns a verified witness
/// when they are equivalent, nullopt when endpoints differ or the reduced
/// representatives are not isomorphic over their legs.
std::optional<EquivalenceWitness> fractions_equivalent(const Fraction& fr1,
                                                       const Fraction& fr2,
                                                       const SizeGuard& = {});

/// Transitivity constructively: from witnesses fr1 ~ fr2 ~ fr3 build a
/// witness fr1 ~ fr3 by the fibred product over the middle apex.
EquivalenceWitness chain_witnesses(const EquivalenceWitness& w12,
                                   const EquivalenceWitness& w23,
                                   const SizeGuard& = {});

/// Compare the refinement-style equivalence against the weaker variant that
/// only constrains the composite denominator, probing the latter with the
/// canonical candidate (the fibred product over the denominators).  The
/// canonical square can fail to commute strictly even for two copies of one
/// fraction whenever the denominator folds arrows together.  The two
/// verdicts are reported, never reconciled.
struct GzEquivalenceProbe {
  bool hsh_equivalent = false;
  bool gz_canonical_commutes = false;
  bool gz_denominator_ok = false;  // composite denominator is an s-equivalence
};

GzEquivalenceProbe gz_equivalence_probe(const Fraction& fr1,
                                        const Fraction& fr2,
                                        const SizeGuard& = {});

/// A meromorphism held together with its irreducible reduction; the
/// constructor validates and reduces.
class Meromorphism {
 public:
  explicit Meromorphism(Fraction fr, const SizeGuard& = {});

  const Fraction& original() const { return original_; }
  const ReducedFraction& reduction() const { return reduced_; }
  const Fraction& fraction() const { return reduced_.fraction; }
  const FiniteGroupoid& source() const { return fraction().source(); }
  GroupoidPtr source_ptr() const { return fraction().source_ptr(); }
  const FiniteGroupoid& target() const { return fraction().target(); }
  GroupoidPtr target_ptr() const { return fraction().target_ptr(); }

 private:
  Fraction original_;
  ReducedFraction reduced_;
};

/// Same reduced class: endpoints agree and the irreducible representatives
/// are isomorphic over their legs.
bool same_meromorphism(const Meromorphism& a, const Meromorphism& b,
                       const SizeGuard& = {});

/// Raw span composite over the fibred product of first.numerator against
/// second.denominator; neither validated nor reduced.
Fraction compose_fractions(const Fraction& second, const Fraction& first,
                           const SizeGuard& = {});

/// Composite meromorphism (validated and reduced).
Meromorphism compose_meromorphisms(const Meromorphism& second,
                                   const Meromorphism& first,
                                   const SizeGuard& = {});

/// The fraction of the holograph of f, as a meromorphism.
Meromorphism gamma(const Functor& f, const SizeGuard& = {});

Meromorphism identity_meromorphism(GroupoidPtr g, const SizeGuard& = {});

/// The reduced numerator is an s-equivalence.
bool is_meriedric_equivalence(const Meromorphism& m, const SizeGuard& = {});

/// Requires a meriedric equivalence: swap numerator and denominator.
Meromorphism inverse_meromorphism(const Meromorphism& m, const SizeGuard& = {});

/// Common refinement by two s-equivalence legs.
struct MoritaWitness {
  GroupoidPtr apex;
  Functor to_first;
  Functor to_second;
};

/// Decides Morita equivalence two ways — orbit/vertex-group census and an
/// explicit witness through the skeletal plurigroups — and insists the two
/// verdicts agree.
std::optional<MoritaWitness> morita_equivalent(GroupoidPtr g, GroupoidPtr h,
                                               const SizeGuard& = {});

/// Two-sided action data on a finite carrier: `left` acts from the left via
/// moment map rho, `right` acts from the right via moment map sigma.
/// Actions are partial tables with -1 for undefined.
struct Bibundle {
  GroupoidPtr left;    // source side
  GroupoidPtr right;   // target side
  int carrier = 0;
  std::vector<int> rho;    // carrier -> objects(left)
  std::vector<int> sigma;  // carrier -> objects(right)
  std::vector<std::vector<int>> left_action;   // [h][e], defined iff src(h) = rho[e]
  std::vector<std::vector<int>> right_action;  // [e][g], defined iff sigma[e] = tgt(g)
};

/// Action laws, moment compatibility, freeness of the right action, and the
/// bijection carrier/right-orbits -> objects(left) induced by rho.
ValidationReport validate_bibundle(const Bibundle& b);

/// Carrier = objects of the reduced apex; left action through the restricted
/// denominator leg, right action through the restricted numerator leg.
Bibundle to_bibundle(const Meromorphism& m, const SizeGuard& = {});

/// Rebuild a fraction from bibundle data: arrows are triples (h, e, g)
/// running e.g -> h.e; the validation report of the input is checked first.
Fraction from_bibundle(const Bibundle& b, const SizeGuard& = {});

/// Split the reduced denominator and compose with the numerator; returns the
/// single functor representing m when the split exists.
std::optional<Functor> is_holomorphism(const Meromorphism& m,
                                       const SizeGuard& = {});

/// Pulling an s-equivalence back along an arbitrary functor yields an
/// s-equivalence; reported, expected to hold always.
struct GzCstarReport {
  FibredProduct pullback;
  FunctorProfile pulled_profile;
  bool holds = false;
};

GzCstarReport gz_cstar(const Functor& f, const Functor& s,
                       const SizeGuard& = {});

/// Bounded honest search for an s-equivalence lambda with f.lambda = g.lambda
/// among canonical induced-groupoid candidates, complete up to isomorphism
/// within the arrow cap.
struct GzDstarWitness {
  GroupoidPtr domain;
  Functor lambda;
};

struct GzDstarReport {
  bool found = false;
  std::optional<GzDstarWitness> witness;
  int candidates_tested = 0;
  int max_objects_reached = 0;
  int arrow_cap = 0;
  bool inconclusive = false;  // guard refused every candidate
};

/// Requires parallel f, g and an s-equivalence s with s.f = s.g.
GzDstarReport gz_dstar(const Functor& f, const Functor& g, const Functor& s,
                       const SizeGuard& = {});

}  // namespace gpd
