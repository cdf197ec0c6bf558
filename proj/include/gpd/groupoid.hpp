#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpd/error.hpp"

namespace gpd {

/// A map between finite sets {0..n-1} -> {0..m-1}.
class SetMap {
 public:
  SetMap(int domain_size, int codomain_size, std::vector<int> image);
  static SetMap identity(int n);

  int domain_size() const { return domain_size_; }
  int codomain_size() const { return codomain_size_; }
  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  /// g.after(*this): first this, then g.
  SetMap then(const SetMap& g) const;

  bool operator==(const SetMap& o) const = default;

 private:
  int domain_size_;
  int codomain_size_;
  std::vector<int> image_;
};

struct ArrowEnds {
  int src = 0;
  int tgt = 0;
  bool operator==(const ArrowEnds&) const = default;
};

/// A finite groupoid over objects 0..num_objects-1 with densely numbered
/// arrows.  comp(a, b) means "b then a" and is defined iff src(a) == tgt(b).
/// The constructor enforces structural well-formedness (sizes, id ranges)
/// but not the groupoid axioms; see validate_groupoid.
class FiniteGroupoid {
 public:
  FiniteGroupoid(int num_objects, std::vector<ArrowEnds> arrows,
                 std::vector<int> units, std::vector<int> inverses,
                 std::vector<int> comp_table);

  int num_objects() const { return num_objects_; }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  int src(int a) const { return arrows_[a].src; }
  int tgt(int a) const { return arrows_[a].tgt; }
  int unit(int x) const { return units_[x]; }
  int inv(int a) const { return inverses_[a]; }
  bool is_unit(int a) const { return unit_flag_[a]; }

  bool composable(int a, int b) const { return src(a) == tgt(b); }
  /// Table entry, -1 when undefined.
  int comp_or_neg(int a, int b) const {
    return comp_[static_cast<size_t>(a) * arrows_.size() + b];
  }
  /// Defined composition; throws ValidationError on an undefined pair.
  int comp(int a, int b) const;

  const std::vector<ArrowEnds>& arrows() const { return arrows_; }
  const std::vector<int>& units() const { return units_; }
  const std::vector<int>& inverses() const { return inverses_; }
  const std::vector<int>& comp_table() const { return comp_; }

  /// Arrows with the given source / target / (source, target).
  const std::vector<int>& arrows_from(int obj) const { return from_[obj]; }
  const std::vector<int>& arrows_to(int obj) const { return to_[obj]; }
  const std::vector<int>& hom(int src_obj, int tgt_obj) const {
    return hom_[static_cast<size_t>(src_obj) * num_objects_ + tgt_obj];
  }

  bool operator==(const FiniteGroupoid& o) const;

 private:
  int num_objects_;
  std::vector<ArrowEnds> arrows_;
  std::vector<int> units_;
  std::vector<int> inverses_;
  std::vector<int> comp_;
  std::vector<bool> unit_flag_;
  std::vector<std::vector<int>> from_, to_, hom_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

GroupoidPtr share(FiniteGroupoid g);
bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every groupoid axiom on the finite tables; reports each violation
/// with the offending instance.
ValidationReport validate_groupoid(const FiniteGroupoid& g);

/// The special classes that keep content in the finite model.
struct GroupoidClass {
  bool is_null = false;        // every arrow is a unit
  bool banal = false;          // transitor bijective
  bool principal = false;      // transitor injective
  bool transitive = false;     // transitor surjective
  bool plurigroup = false;     // src == tgt for every arrow
  bool group = false;          // plurigroup with one object
  bool discrete_plurigroup = false;  // coincides with plurigroup here

  bool lattice_consistent() const;
  std::string to_string() const;
};

GroupoidClass classify(const FiniteGroupoid& g);

struct Orbits {
  std::vector<int> orbit_of;                // object -> orbit index
  std::vector<std::vector<int>> members;    // orbit -> sorted objects
  std::vector<int> representative;          // orbit -> smallest object
};

/// Connected components of the transitor relation.
Orbits compute_orbits(const FiniteGroupoid& g);

struct VertexGroup {
  int object = 0;                  // base point in the parent
  std::vector<int> parent_arrows;  // loop arrows at the base point, sorted
  GroupoidPtr group;               // one-object groupoid on those loops
};

VertexGroup vertex_group_at(const FiniteGroupoid& g, int object);

struct OrbitsAndVertexGroups {
  Orbits orbits;
  std::vector<VertexGroup> vertex_groups;  // one per orbit, at representative
};

OrbitsAndVertexGroups orbits_and_vertex_groups(const FiniteGroupoid& g);

/// A groupoid together with a quotient map of its objects whose fibres are
/// exactly the orbits.
struct OrbitalAtlas {
  GroupoidPtr groupoid;
  SetMap quotient;
};

/// Validates the fibres-are-orbits invariant.
OrbitalAtlas make_orbital_atlas(GroupoidPtr g, SetMap quotient);
OrbitalAtlas canonical_atlas(GroupoidPtr g);

}  // namespace gpd
