#include "gpd/standard.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace gpd {

namespace {

std::vector<int> dense(int m) { return std::vector<int>(static_cast<size_t>(m) * m, -1); }

}  // namespace

FiniteGroupoid null_groupoid(int k) {
  if (k <= 0) throw ValidationError("null groupoid needs k >= 1");
  std::vector<ArrowEnds> ends(k);
  std::vector<int> units(k), inv(k), comp = dense(k);
  for (int i = 0; i < k; ++i) {
    ends[i] = {i, i};
    units[i] = i;
    inv[i] = i;
    comp[static_cast<size_t>(i) * k + i] = i;
  }
  return FiniteGroupoid(k, std::move(ends), std::move(units), std::move(inv),
                        std::move(comp));
}

FiniteGroupoid pair_groupoid(int k) {
  if (k <= 0) throw ValidationError("pair groupoid needs k >= 1");
  const int m = k * k;
  auto id = [k](int i, int j) { return i * k + j; };
  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(k), inv(m), comp = dense(m);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ends[id(i, j)] = {i, j};
      inv[id(i, j)] = id(j, i);
    }
  for (int i = 0; i < k; ++i) units[i] = id(i, i);
  // comp(a, b) with a = (i2 -> j2), b = (i1 -> j1), defined iff i2 == j1.
  for (int i2 = 0; i2 < k; ++i2)
    for (int j2 = 0; j2 < k; ++j2)
      for (int i1 = 0; i1 < k; ++i1)
        comp[static_cast<size_t>(id(i2, j2)) * m + id(i1, i2)] = id(i1, j2);
  return FiniteGroupoid(k, std::move(ends), std::move(units), std::move(inv),
                        std::move(comp));
}

FiniteGroupoid cyclic_group(int k) {
  if (k <= 0) throw ValidationError("cyclic group needs k >= 1");
  std::vector<ArrowEnds> ends(k, ArrowEnds{0, 0});
  std::vector<int> units = {0}, inv(k), comp = dense(k);
  for (int a = 0; a < k; ++a) {
    inv[a] = (k - a) % k;
    for (int b = 0; b < k; ++b)
      comp[static_cast<size_t>(a) * k + b] = (a + b) % k;
  }
  return FiniteGroupoid(1, std::move(ends), std::move(units), std::move(inv),
                        std::move(comp));
}

FiniteGroupoid symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                              {0, 2, 1},
                                              {1, 0, 2},
                                              {1, 2, 0},
                                              {2, 0, 1},
                                              {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw ValidationError("sym3: internal permutation lookup failed");
  };
  std::vector<ArrowEnds> ends(6, ArrowEnds{0, 0});
  std::vector<int> units = {0}, inv(6), comp = dense(6);
  for (int a = 0; a < 6; ++a) {
    std::array<int, 3> ia{};
    for (int x = 0; x < 3; ++x) ia[perms[a][x]] = x;
    inv[a] = index_of(ia);
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];  // b first
      comp[static_cast<size_t>(a) * 6 + b] = index_of(ab);
    }
  }
  return FiniteGroupoid(1, std::move(ends), std::move(units), std::move(inv),
                        std::move(comp));
}

FiniteGroupoid equivalence_relation(int k, const std::vector<int>& block_of) {
  if (k <= 0) throw ValidationError("equivalence relation needs k >= 1");
  if (static_cast<int>(block_of.size()) != k)
    throw ValidationError("equivalence relation: block list size mismatch");
  std::vector<std::pair<int, int>> pairs;  // (src, tgt), src-major
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (block_of[i] == block_of[j]) pairs.push_back({i, j});
  const int m = static_cast<int>(pairs.size());
  auto id = [&](int i, int j) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(i, j));
    return static_cast<int>(it - pairs.begin());
  };
  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(k), inv(m), comp = dense(m);
  for (int a = 0; a < m; ++a) {
    ends[a] = {pairs[a].first, pairs[a].second};
    inv[a] = id(pairs[a].second, pairs[a].first);
  }
  for (int i = 0; i < k; ++i) units[i] = id(i, i);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (pairs[a].first == pairs[b].second)
        comp[static_cast<size_t>(a) * m + b] =
            id(pairs[b].first, pairs[a].second);
  return FiniteGroupoid(k, std::move(ends), std::move(units), std::move(inv),
                        std::move(comp));
}

FiniteGroupoid action_groupoid(const FiniteGroupoid& group, int set_size,
                               const std::vector<std::vector<int>>& action) {
  if (group.num_objects() != 1)
    throw ValidationError("action groupoid: acting groupoid must have one object");
  if (set_size <= 0) throw ValidationError("action groupoid: empty set");
  const int n = group.num_arrows();
  if (static_cast<int>(action.size()) != n)
    throw ValidationError("action groupoid: one permutation per group arrow required");
  for (const auto& p : action) {
    if (static_cast<int>(p.size()) != set_size)
      throw ValidationError("action groupoid: permutation size mismatch");
    if (!SetMap(set_size, set_size, p).bijective())
      throw ValidationError("action groupoid: action map is not a permutation");
  }
  // Functoriality of the action.
  for (int x = 0; x < set_size; ++x)
    if (action[group.unit(0)][x] != x)
      throw ValidationError("action groupoid: unit must act as identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < set_size; ++x)
        if (action[group.comp(a, b)][x] != action[a][action[b][x]])
          throw ValidationError("action groupoid: action does not respect composition");

  const int m = n * set_size;
  auto id = [set_size](int a, int x) { return a * set_size + x; };
  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(set_size), inv(m), comp = dense(m);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < set_size; ++x) {
      ends[id(a, x)] = {x, action[a][x]};
      inv[id(a, x)] = id(group.inv(a), action[a][x]);
    }
  for (int x = 0; x < set_size; ++x) units[x] = id(group.unit(0), x);
  for (int a2 = 0; a2 < n; ++a2)
    for (int a1 = 0; a1 < n; ++a1)
      for (int x = 0; x < set_size; ++x)
        comp[static_cast<size_t>(id(a2, action[a1][x])) * m + id(a1, x)] =
            id(group.comp(a2, a1), x);
  return FiniteGroupoid(set_size, std::move(ends), std::move(units),
                        std::move(inv), std::move(comp));
}

std::vector<std::vector<int>> cyclic_action(int k,
                                            const std::vector<int>& generator_image) {
  const int m = static_cast<int>(generator_image.size());
  if (!SetMap(m, m, generator_image).bijective())
    throw ValidationError("cyclic action: generator image is not a permutation");
  std::vector<std::vector<int>> action(k);
  std::vector<int> cur(m);
  std::iota(cur.begin(), cur.end(), 0);
  for (int a = 0; a < k; ++a) {
    action[a] = cur;
    std::vector<int> next(m);
    for (int x = 0; x < m; ++x) next[x] = generator_image[cur[x]];
    cur = next;
  }
  // The generator must have order dividing k.
  std::vector<int> identity(m);
  std::iota(identity.begin(), identity.end(), 0);
  if (cur != identity)
    throw ValidationError("cyclic action: generator order does not divide k");
  return action;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int n = a.num_objects() + b.num_objects();
  const int ma = a.num_arrows(), mb = b.num_arrows(), m = ma + mb;
  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(n), inv(m), comp = dense(m);
  for (int x = 0; x < ma; ++x) {
    ends[x] = {a.src(x), a.tgt(x)};
    inv[x] = a.inv(x);
  }
  for (int x = 0; x < mb; ++x) {
    ends[ma + x] = {a.num_objects() + b.src(x), a.num_objects() + b.tgt(x)};
    inv[ma + x] = ma + b.inv(x);
  }
  for (int x = 0; x < a.num_objects(); ++x) units[x] = a.unit(x);
  for (int x = 0; x < b.num_objects(); ++x)
    units[a.num_objects() + x] = ma + b.unit(x);
  for (int i = 0; i < ma; ++i)
    for (int j = 0; j < ma; ++j)
      comp[static_cast<size_t>(i) * m + j] = a.comp_or_neg(i, j);
  for (int i = 0; i < mb; ++i)
    for (int j = 0; j < mb; ++j) {
      int c = b.comp_or_neg(i, j);
      comp[static_cast<size_t>(ma + i) * m + (ma + j)] = c < 0 ? -1 : ma + c;
    }
  return FiniteGroupoid(n, std::move(ends), std::move(units), std::move(inv),
                        std::move(comp));
}

FiniteGroupoid direct_product(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int n = a.num_objects() * b.num_objects();
  const int m = a.num_arrows() * b.num_arrows();
  const int n2 = b.num_objects(), m2 = b.num_arrows();
  auto obj = [n2](int x, int y) { return x * n2 + y; };
  auto id = [m2](int x, int y) { return x * m2 + y; };
  std::vector<ArrowEnds> ends(m);
  std::vector<int> units(n), inv(m), comp = dense(m);
  for (int x = 0; x < a.num_arrows(); ++x)
    for (int y = 0; y < m2; ++y) {
      ends[id(x, y)] = {obj(a.src(x), b.src(y)), obj(a.tgt(x), b.tgt(y))};
      inv[id(x, y)] = id(a.inv(x), b.inv(y));
    }
  for (int x = 0; x < a.num_objects(); ++x)
    for (int y = 0; y < n2; ++y) units[obj(x, y)] = id(a.unit(x), b.unit(y));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int c1 = a.comp_or_neg(i / m2, j / m2);
      int c2 = b.comp_or_neg(i % m2, j % m2);
      if (c1 >= 0 && c2 >= 0)
        comp[static_cast<size_t>(i) * m + j] = id(c1, c2);
    }
  return FiniteGroupoid(n, std::move(ends), std::move(units), std::move(inv),
                        std::move(comp));
}

}  // namespace gpd
