#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cohomlim/common.hpp"

namespace cohomlim {

/// A finite group on the index set {0, ..., order-1} given by its full
/// multiplication table. Element 0 is always the identity; validate_group
/// re-indexes its input to guarantee this. Immutable after construction.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> mul;  // mul[x][y] = x*y
  std::vector<int> inv;               // inv[x] = x^-1

  int op(int x, int y) const { return mul[x][y]; }
  int inverse(int x) const { return inv[x]; }

  bool abelian() const {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < x; ++y)
        if (mul[x][y] != mul[y][x]) return false;
    return true;
  }

  /// Least k >= 1 with x^k = 1.
  int element_order(int x) const {
    int k = 1, p = x;
    while (p != 0) {
      p = mul[p][x];
      ++k;
    }
    return k;
  }

  bool operator==(const FiniteGroup& other) const {
    return order == other.order && mul == other.mul;
  }
};

/// A homomorphism between two groups held elsewhere; image[x] is the index
/// of the image of x in the target. Source/target are passed alongside
/// wherever the tables are needed.
struct GroupHom {
  std::vector<int> image;

  int operator()(int x) const { return image[x]; }
  bool operator==(const GroupHom& other) const { return image == other.image; }
  bool operator<(const GroupHom& other) const { return image < other.image; }
};

/// A subgroup of a parent group, as a sorted member list.
struct Subgroup {
  std::vector<int> members;  // sorted ascending, contains 0

  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const Subgroup& other) const { return members == other.members; }
};

inline constexpr int kDefaultOrderCap = 64;

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Validates a raw multiplication table and returns the group, re-indexed so
/// that the identity sits at 0. Errors name the first witness in the order:
/// shape, NoIdentity, NoInverse(x), NotAssociative(x,y,z).
inline FiniteGroup validate_group(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw validation_error("EmptyTable", "group table has no rows");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw validation_error("NotSquare", "row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n; ++y)
      if (table[x][y] < 0 || table[x][y] >= n)
        throw validation_error("EntryOutOfRange", witness(x, y));
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (table[e][x] != x || table[x][e] != x) ok = false;
    if (ok) identity = e;
  }
  if (identity < 0) throw validation_error("NoIdentity", "no two-sided identity element");

  // Re-index so the identity is element 0 (swap 0 <-> identity).
  std::vector<int> perm(n);  // perm[old] = new
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[identity]);

  FiniteGroup g;
  g.order = n;
  g.mul.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.mul[perm[x]][perm[y]] = perm[table[x][y]];

  g.inv.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g.mul[x][y] == 0 && g.mul[y][x] == 0) {
        g.inv[x] = y;
        break;
      }
    if (g.inv[x] < 0) {
      // report the witness in the caller's indexing
      int orig = (x == 0) ? identity : (x == identity ? 0 : x);
      throw validation_error("NoInverse", witness(orig));
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul[g.mul[x][y]][z] != g.mul[x][g.mul[y][z]])
          throw validation_error("NotAssociative", witness(x, y, z));

  return g;
}

/// image[src.op(x,y)] == tgt.op(image[x], image[y]) and image[0] == 0.
inline void validate_hom(const FiniteGroup& src, const FiniteGroup& tgt, const GroupHom& h) {
  if (static_cast<int>(h.image.size()) != src.order)
    throw validation_error("NotHomomorphism", "image table has wrong length");
  for (int x : h.image)
    if (x < 0 || x >= tgt.order) throw validation_error("NotHomomorphism", "image out of range");
  if (h.image[0] != 0) throw validation_error("NotHomomorphism", "identity not preserved");
  for (int x = 0; x < src.order; ++x)
    for (int y = 0; y < src.order; ++y)
      if (h.image[src.op(x, y)] != tgt.op(h.image[x], h.image[y]))
        throw validation_error("NotHomomorphism", witness(x, y));
}

inline bool is_hom(const FiniteGroup& src, const FiniteGroup& tgt, const GroupHom& h) {
  try {
    validate_hom(src, tgt, h);
    return true;
  } catch (const validation_error&) {
    return false;
  }
}

inline GroupHom identity_hom(const FiniteGroup& g) {
  GroupHom h;
  h.image.resize(g.order);
  std::iota(h.image.begin(), h.image.end(), 0);
  return h;
}

inline GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner) {
  GroupHom h;
  h.image.reserve(inner.image.size());
  for (int x : inner.image) h.image.push_back(outer.image[x]);
  return h;
}

inline void validate_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.members.empty() || s.members[0] != 0)
    throw validation_error("NotSubgroup", "missing identity");
  for (int x : s.members) {
    if (x < 0 || x >= g.order) throw validation_error("NotSubgroup", "member out of range");
    if (!s.contains(g.inverse(x))) throw validation_error("NotSubgroup", "inverse of " + std::to_string(x) + " missing");
    for (int y : s.members)
      if (!s.contains(g.op(x, y))) throw validation_error("NotSubgroup", witness(x, y));
  }
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

inline FiniteGroup make_cyclic(int n, int cap = kDefaultOrderCap) {
  if (n < 1) throw validation_error("BadOrder", "n must be >= 1");
  if (n > cap) throw validation_error("SizeLimit", witness(n, cap));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return validate_group(t);
}

/// Dihedral group of order 2n: indices 0..n-1 are rotations, n..2n-1 are
/// reflections.
inline FiniteGroup make_dihedral(int n, int cap = kDefaultOrderCap) {
  if (n < 1) throw validation_error("BadOrder", "n must be >= 1");
  if (2 * n > cap) throw validation_error("SizeLimit", witness(2 * n, cap));
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x < n && y < n) t[x][y] = (x + y) % n;
      else if (x < n) t[x][y] = (y - n + x) % n + n;
      else if (y < n) t[x][y] = (x - n - y + n) % n + n;
      else t[x][y] = (x - y + n) % n;
    }
  return validate_group(t);
}

/// Symmetric group on n letters; permutations are indexed in lexicographic
/// order, so the identity permutation lands at index 0.
inline FiniteGroup make_symmetric(int n, int cap = kDefaultOrderCap) {
  if (n < 1) throw validation_error("BadOrder", "n must be >= 1");
  if (n > 5) throw validation_error("SizeLimit", "symmetric group capped at n=5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  if (m > cap) throw validation_error("SizeLimit", witness(m, cap));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;

  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      std::vector<int> c(n);  // (p_x . p_y)(i) = p_x(p_y(i))
      for (int i = 0; i < n; ++i) c[i] = perms[x][perms[y][i]];
      t[x][y] = index[c];
    }
  return validate_group(t);
}

/// Direct product; element (x, y) is indexed as x*|H| + y.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  int cap = kDefaultOrderCap) {
  const int m = g.order * h.order;
  if (m > cap) throw validation_error("SizeLimit", witness(m, cap));
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x1 = 0; x1 < g.order; ++x1)
    for (int y1 = 0; y1 < h.order; ++y1)
      for (int x2 = 0; x2 < g.order; ++x2)
        for (int y2 = 0; y2 < h.order; ++y2)
          t[x1 * h.order + y1][x2 * h.order + y2] = g.op(x1, x2) * h.order + h.op(y1, y2);
  return validate_group(t);
}

// ---------------------------------------------------------------------------
// Subgroup machinery
// ---------------------------------------------------------------------------

/// Smallest subgroup containing the given seed elements.
inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& seed) {
  std::set<int> members{0};
  std::vector<int> queue{0};
  for (int x : seed)
    if (members.insert(x).second) queue.push_back(x);
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    if (members.insert(g.inverse(x)).second) queue.push_back(g.inverse(x));
    for (int y : std::vector<int>(members.begin(), members.end())) {
      for (int z : {g.op(x, y), g.op(y, x)})
        if (members.insert(z).second) queue.push_back(z);
    }
  }
  return Subgroup{std::vector<int>(members.begin(), members.end())};
}

inline Subgroup trivial_subgroup(const FiniteGroup&) { return Subgroup{{0}}; }

inline Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.order);
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

/// Commutators x^-1 y^-1 x y over a member set, closed into a subgroup.
inline Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& within) {
  std::vector<int> comms;
  for (int x : within.members)
    for (int y : within.members)
      comms.push_back(g.op(g.op(g.inverse(x), g.inverse(y)), g.op(x, y)));
  return generated_subgroup(g, comms);
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
  return commutator_subgroup(g, full_subgroup(g));
}

/// A(0) = G, A(i+1) = [A(i), A(i)], listed until the chain is stationary.
/// The last entry is trivial iff the group is solvable.
inline std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back());
    if (next == series.back()) break;
    series.push_back(next);
  }
  return series;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& n, int* wx = nullptr, int* wn = nullptr) {
  for (int x = 0; x < g.order; ++x)
    for (int m : n.members)
      if (!n.contains(g.op(g.op(x, m), g.inverse(x)))) {
        if (wx) *wx = x;
        if (wn) *wn = m;
        return false;
      }
  return true;
}

/// Quotient by a normal subgroup. Cosets are represented by their minimal
/// element index and sorted by that representative, which puts the identity
/// coset at index 0. Returns the quotient and the projection hom.
inline std::pair<FiniteGroup, GroupHom> quotient_group(const FiniteGroup& g, const Subgroup& n) {
  validate_subgroup(g, n);
  int wx = -1, wn = -1;
  if (!is_normal(g, n, &wx, &wn)) throw validation_error("NotNormal", witness(wx, wn));

  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);  // x is minimal in its coset: smaller members were already swept
    for (int m : n.members) coset_of[g.op(x, m)] = idx;
  }

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[i][j] = coset_of[g.op(reps[i], reps[j])];

  FiniteGroup quot = validate_group(t);
  GroupHom proj{coset_of};
  return {quot, proj};
}

// ---------------------------------------------------------------------------
// Automorphisms
// ---------------------------------------------------------------------------

/// Small generating set found greedily, scanning elements by decreasing
/// order. Not guaranteed minimal in cardinality, but small enough to keep
/// the automorphism backtracking tractable.
inline std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> elems(g.order);
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<int> gens;
  Subgroup span = trivial_subgroup(g);
  for (int x : elems) {
    if (span.size() == g.order) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    std::vector<int> seed = gens;
    span = generated_subgroup(g, seed);
  }
  return gens;
}

inline constexpr int kAutomorphismCap = 24;

namespace detail {

/// Extends generator images to a full map by closing products from the
/// identity; returns false on conflict or if the result is not a bijective
/// endomorphism.
inline bool build_endo(const FiniteGroup& g, const std::vector<int>& gens,
                       const std::vector<int>& images, std::vector<int>& out) {
  out.assign(g.order, -1);
  out[0] = 0;
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = g.op(x, gens[k]);
      int fy = g.op(out[x], images[k]);
      if (out[y] < 0) {
        out[y] = fy;
        queue.push_back(y);
      } else if (out[y] != fy) {
        return false;
      }
    }
  }
  for (int v : out)
    if (v < 0) return false;  // generators did not reach everything
  std::vector<bool> seen(g.order, false);
  for (int v : out) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (out[g.op(x, y)] != g.op(out[x], out[y])) return false;
  return true;
}

}  // namespace detail

/// All automorphisms, by backtracking over images of a generating set with
/// element-order pruning. Exhaustive, so capped.
inline std::vector<GroupHom> automorphisms(const FiniteGroup& g, int cap = kAutomorphismCap) {
  if (g.order > cap) throw validation_error("SizeLimit", witness(g.order, cap));
  std::vector<int> gens = generating_set(g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int ord = g.element_order(gens[k]);
    for (int x = 0; x < g.order; ++x)
      if (g.element_order(x) == ord) candidates[k].push_back(x);
  }

  std::vector<GroupHom> result;
  std::vector<int> images(gens.size(), 0);
  std::vector<int> full;
  // odometer over candidate tuples; the closure check rejects non-homs
  std::vector<std::size_t> pos(gens.size(), 0);
  if (gens.empty()) {
    result.push_back(identity_hom(g));  // trivial group
    return result;
  }
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][pos[k]];
    if (detail::build_endo(g, gens, images, full)) result.push_back(GroupHom{full});
    std::size_t k = 0;
    while (k < gens.size() && ++pos[k] == candidates[k].size()) {
      pos[k] = 0;
      ++k;
    }
    if (k == gens.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// N is characteristic iff every automorphism maps it onto itself.
inline bool is_characteristic(const FiniteGroup& g, const Subgroup& n, int cap = kAutomorphismCap) {
  validate_subgroup(g, n);
  for (const GroupHom& sigma : automorphisms(g, cap)) {
    for (int m : n.members)
      if (!n.contains(sigma(m))) return false;
  }
  return true;
}

/// All subgroups, by closing joins of cyclic subgroups. Exhaustive, capped.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int cap = kAutomorphismCap) {
  if (g.order > cap) throw validation_error("SizeLimit", witness(g.order, cap));
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> queue;
  auto push = [&](const Subgroup& s) {
    if (seen.insert(s.members).second) queue.push_back(s);
  };
  push(trivial_subgroup(g));
  for (int x = 0; x < g.order; ++x) push(generated_subgroup(g, {x}));
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int x = 0; x < g.order; ++x) {
      if (queue[i].contains(x)) continue;
      std::vector<int> seed = queue[i].members;
      seed.push_back(x);
      push(generated_subgroup(g, seed));
    }
  std::sort(queue.begin(), queue.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return queue;
}

}  // namespace cohomlim
