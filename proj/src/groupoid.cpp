#include "gpd/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace gpd {

SetMap::SetMap(int domain_size, int codomain_size, std::vector<int> image)
    : domain_size_(domain_size),
      codomain_size_(codomain_size),
      image_(std::move(image)) {
  if (domain_size_ < 0 || codomain_size_ < 0 ||
      static_cast<int>(image_.size()) != domain_size_)
    throw ValidationError("set map: image size does not match domain");
  for (int v : image_)
    if (v < 0 || v >= codomain_size_)
      throw ValidationError("set map: image value out of range");
}

SetMap SetMap::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return SetMap(n, n, std::move(img));
}

bool SetMap::injective() const {
  std::vector<bool> seen(codomain_size_, false);
  for (int v : image_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool SetMap::surjective() const {
  std::vector<bool> seen(codomain_size_, false);
  for (int v : image_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

SetMap SetMap::then(const SetMap& g) const {
  if (g.domain_size_ != codomain_size_)
    throw ValidationError("set map composition: domain mismatch");
  std::vector<int> img(domain_size_);
  for (int x = 0; x < domain_size_; ++x) img[x] = g(image_[x]);
  return SetMap(domain_size_, g.codomain_size_, std::move(img));
}

FiniteGroupoid::FiniteGroupoid(int num_objects, std::vector<ArrowEnds> arrows,
                               std::vector<int> units,
                               std::vector<int> inverses,
                               std::vector<int> comp_table)
    : num_objects_(num_objects),
      arrows_(std::move(arrows)),
      units_(std::move(units)),
      inverses_(std::move(inverses)),
      comp_(std::move(comp_table)) {
  const int m = static_cast<int>(arrows_.size());
  if (num_objects_ < 0) throw ValidationError("groupoid: negative object count");
  if (static_cast<int>(units_.size()) != num_objects_)
    throw ValidationError("groupoid: unit table size mismatch");
  if (static_cast<int>(inverses_.size()) != m)
    throw ValidationError("groupoid: inverse table size mismatch");
  if (comp_.size() != static_cast<size_t>(m) * m)
    throw ValidationError("groupoid: composition table size mismatch");
  for (const auto& e : arrows_)
    if (e.src < 0 || e.src >= num_objects_ || e.tgt < 0 || e.tgt >= num_objects_)
      throw ValidationError("groupoid: arrow endpoint out of range");
  for (int u : units_)
    if (u < 0 || u >= m) throw ValidationError("groupoid: unit id out of range");
  for (int v : inverses_)
    if (v < 0 || v >= m)
      throw ValidationError("groupoid: inverse id out of range");
  for (int v : comp_)
    if (v < -1 || v >= m)
      throw ValidationError("groupoid: composition id out of range");

  unit_flag_.assign(m, false);
  for (int u : units_) unit_flag_[u] = true;
  from_.assign(num_objects_, {});
  to_.assign(num_objects_, {});
  hom_.assign(static_cast<size_t>(num_objects_) * num_objects_, {});
  for (int a = 0; a < m; ++a) {
    from_[arrows_[a].src].push_back(a);
    to_[arrows_[a].tgt].push_back(a);
    hom_[static_cast<size_t>(arrows_[a].src) * num_objects_ + arrows_[a].tgt]
        .push_back(a);
  }
}

int FiniteGroupoid::comp(int a, int b) const {
  int c = comp_or_neg(a, b);
  if (c < 0)
    throw ValidationError("composition undefined for pair (" +
                          std::to_string(a) + ", " + std::to_string(b) + ")");
  return c;
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& o) const {
  return num_objects_ == o.num_objects_ && arrows_ == o.arrows_ &&
         units_ == o.units_ && inverses_ == o.inverses_ && comp_ == o.comp_;
}

GroupoidPtr share(FiniteGroupoid g) {
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  return &a == &b || a == b;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) os << "\n  " << v;
  return os.str();
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport r;
  auto fail = [&](const std::string& m) { r.violations.push_back(m); };
  const int m = g.num_arrows();

  for (int x = 0; x < g.num_objects(); ++x) {
    int u = g.unit(x);
    if (g.src(u) != x || g.tgt(u) != x)
      fail("unit endpoints: unit(" + std::to_string(x) + ") = " +
           std::to_string(u) + " is not a loop at " + std::to_string(x));
  }

  for (int a = 0; a < m; ++a) {
    int ia = g.inv(a);
    if (g.src(ia) != g.tgt(a) || g.tgt(ia) != g.src(a))
      fail("inverse endpoints: inv(" + std::to_string(a) + ")");
    if (g.inv(ia) != a)
      fail("inverse not involutive at arrow " + std::to_string(a));
  }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int c = g.comp_or_neg(a, b);
      if (g.composable(a, b) && c < 0)
        fail("comp undefined for composable pair (" + std::to_string(a) +
             ", " + std::to_string(b) + ")");
      if (!g.composable(a, b) && c >= 0)
        fail("comp defined for non-composable pair (" + std::to_string(a) +
             ", " + std::to_string(b) + ")");
      if (c >= 0 && g.composable(a, b) &&
          (g.src(c) != g.src(b) || g.tgt(c) != g.tgt(a)))
        fail("composite endpoints wrong for pair (" + std::to_string(a) +
             ", " + std::to_string(b) + ")");
    }

  for (int a = 0; a < m; ++a) {
    int ru = g.comp_or_neg(a, g.unit(g.src(a)));
    int lu = g.comp_or_neg(g.unit(g.tgt(a)), a);
    if (ru != a) fail("right unit law fails at arrow " + std::to_string(a));
    if (lu != a) fail("left unit law fails at arrow " + std::to_string(a));
    int li = g.comp_or_neg(g.inv(a), a);
    int ri = g.comp_or_neg(a, g.inv(a));
    if (li != g.unit(g.src(a)))
      fail("inverse law (left) fails at arrow " + std::to_string(a));
    if (ri != g.unit(g.tgt(a)))
      fail("inverse law (right) fails at arrow " + std::to_string(a));
  }

  // Associativity over all honestly composable triples.
  for (int b = 0; b < m; ++b) {
    for (int a : g.arrows_from(g.tgt(b))) {
      int ab = g.comp_or_neg(a, b);
      if (ab < 0) continue;
      for (int c : g.arrows_to(g.src(b))) {
        int bc = g.comp_or_neg(b, c);
        if (bc < 0) continue;
        int left = g.comp_or_neg(ab, c);
        int right = g.comp_or_neg(a, bc);
        if (left != right || left < 0) {
          fail("associativity fails on triple (" + std::to_string(a) + ", " +
               std::to_string(b) + ", " + std::to_string(c) + ")");
          if (r.violations.size() > 50) return r;  // enough evidence
        }
      }
    }
  }
  return r;
}

bool GroupoidClass::lattice_consistent() const {
  if (is_null && !principal) return false;
  if (banal && !(principal && transitive)) return false;
  if (group && !plurigroup) return false;
  if (discrete_plurigroup != plurigroup) return false;
  return true;
}

std::string GroupoidClass::to_string() const {
  std::string s;
  auto add = [&](bool f, const char* name) {
    if (f) {
      if (!s.empty()) s += ' ';
      s += name;
    }
  };
  add(is_null, "null");
  add(banal, "banal");
  add(principal, "principal");
  add(transitive, "transitive");
  add(plurigroup, "plurigroup");
  add(group, "group");
  add(discrete_plurigroup, "discrete_plurigroup");
  if (s.empty()) s = "(none)";
  return s;
}

GroupoidClass classify(const FiniteGroupoid& g) {
  GroupoidClass c;
  const int n = g.num_objects();
  const int m = g.num_arrows();

  c.is_null = true;
  for (int a = 0; a < m; ++a)
    if (!g.is_unit(a)) {
      c.is_null = false;
      break;
    }

  std::set<std::pair<int, int>> transitor_image;
  bool injective = true;
  for (int a = 0; a < m; ++a)
    if (!transitor_image.insert({g.tgt(a), g.src(a)}).second) injective = false;
  c.principal = injective;
  c.transitive =
      static_cast<long long>(transitor_image.size()) ==
      static_cast<long long>(n) * n;
  c.banal = c.principal && c.transitive;

  c.plurigroup = true;
  for (int a = 0; a < m; ++a)
    if (g.src(a) != g.tgt(a)) {
      c.plurigroup = false;
      break;
    }
  c.group = c.plurigroup && n == 1;
  c.discrete_plurigroup = c.plurigroup;
  return c;
}

Orbits compute_orbits(const FiniteGroupoid& g) {
  const int n = g.num_objects();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < g.num_arrows(); ++a) {
    int u = find(g.src(a)), v = find(g.tgt(a));
    if (u != v) parent[std::max(u, v)] = std::min(u, v);
  }
  Orbits o;
  o.orbit_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int root = find(x);
    if (o.orbit_of[root] < 0) {
      o.orbit_of[root] = static_cast<int>(o.members.size());
      o.members.push_back({});
      o.representative.push_back(root);
    }
    o.orbit_of[x] = o.orbit_of[root];
    o.members[o.orbit_of[x]].push_back(x);
  }
  return o;
}

VertexGroup vertex_group_at(const FiniteGroupoid& g, int object) {
  VertexGroup vg;
  vg.object = object;
  for (int a : g.hom(object, object)) vg.parent_arrows.push_back(a);
  const int m = static_cast<int>(vg.parent_arrows.size());
  std::vector<int> index(g.num_arrows(), -1);
  for (int i = 0; i < m; ++i) index[vg.parent_arrows[i]] = i;

  std::vector<ArrowEnds> ends(m, ArrowEnds{0, 0});
  std::vector<int> units = {index[g.unit(object)]};
  std::vector<int> inv(m), comp(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) inv[i] = index[g.inv(vg.parent_arrows[i])];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      comp[static_cast<size_t>(i) * m + j] =
          index[g.comp(vg.parent_arrows[i], vg.parent_arrows[j])];
  vg.group = share(FiniteGroupoid(1, std::move(ends), std::move(units),
                                  std::move(inv), std::move(comp)));
  return vg;
}

OrbitsAndVertexGroups orbits_and_vertex_groups(const FiniteGroupoid& g) {
  OrbitsAndVertexGroups out;
  out.orbits = compute_orbits(g);
  for (int rep : out.orbits.representative)
    out.vertex_groups.push_back(vertex_group_at(g, rep));
  return out;
}

OrbitalAtlas make_orbital_atlas(GroupoidPtr g, SetMap quotient) {
  if (quotient.domain_size() != g->num_objects())
    throw ValidationError("orbital atlas: quotient domain is not the base");
  Orbits o = compute_orbits(*g);
  // Fibres must be exactly the orbits: same partition of the base.
  for (int x = 0; x < g->num_objects(); ++x)
    for (int y = x + 1; y < g->num_objects(); ++y)
      if ((quotient(x) == quotient(y)) != (o.orbit_of[x] == o.orbit_of[y]))
        throw ValidationError(
            "orbital atlas: quotient fibres do not match orbits at objects " +
            std::to_string(x) + ", " + std::to_string(y));
  if (!quotient.surjective())
    throw ValidationError("orbital atlas: quotient not surjective");
  return OrbitalAtlas{std::move(g), std::move(quotient)};
}

OrbitalAtlas canonical_atlas(GroupoidPtr g) {
  Orbits o = compute_orbits(*g);
  SetMap q(g->num_objects(), static_cast<int>(o.members.size()), o.orbit_of);
  return OrbitalAtlas{std::move(g), std::move(q)};
}

}  // namespace gpd
