#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cohomlim/cochain.hpp"
#include "cohomlim/cocycle.hpp"

namespace cohomlim {

// ---------------------------------------------------------------------------
// Directed posets
// ---------------------------------------------------------------------------

struct DirectedPoset {
  int size = 1;
  std::vector<std::vector<bool>> leq;  // leq[i][j] means i <= j

  bool le(int i, int j) const { return leq[i][j]; }
};

inline void validate_poset(const DirectedPoset& p) {
  const int n = p.size;
  if (n < 1 || static_cast<int>(p.leq.size()) != n)
    throw validation_error("ShapeMismatch", "poset relation has wrong dimensions");
  for (const auto& row : p.leq)
    if (static_cast<int>(row.size()) != n)
      throw validation_error("ShapeMismatch", "poset relation has wrong dimensions");
  for (int i = 0; i < n; ++i)
    if (!p.le(i, i)) throw validation_error("NotReflexive", witness(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.le(i, j) && p.le(j, i)) throw validation_error("NotAntisymmetric", witness(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (p.le(i, j) && p.le(j, k) && !p.le(i, k))
          throw validation_error("NotTransitive", witness(i, j, k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool bounded = false;
      for (int u = 0; u < n && !bounded; ++u)
        if (p.le(i, u) && p.le(j, u)) bounded = true;
      if (!bounded) throw validation_error("NotDirected", witness(i, j));
    }
}

/// Total order 0 <= 1 <= ... <= n-1.
inline DirectedPoset chain_poset(int n) {
  DirectedPoset p;
  p.size = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

inline bool is_chain(const DirectedPoset& p) {
  for (int i = 0; i < p.size; ++i)
    for (int j = 0; j < p.size; ++j)
      if (!p.le(i, j) && !p.le(j, i)) return false;
  return true;
}

/// A finite directed poset always has a greatest element.
inline int greatest_element(const DirectedPoset& p) {
  for (int m = 0; m < p.size; ++m) {
    bool top = true;
    for (int i = 0; i < p.size && top; ++i)
      if (!p.le(i, m)) top = false;
    if (top) return m;
  }
  throw validation_error("NotDirected", "no greatest element");
}

// ---------------------------------------------------------------------------
// Inverse systems
// ---------------------------------------------------------------------------

/// Objects A_r over a directed poset, all acted on by the same G, with an
/// equivariant transition hom A_r -> A_t for every pair r >= t (diagonal
/// included as the identity).
struct InverseSystem {
  DirectedPoset poset;
  std::vector<GAction> objects;
  std::map<std::pair<int, int>, GroupHom> transitions;  // key (r, t) with t <= r

  const GroupHom& transition(int r, int t) const { return transitions.at({r, t}); }
};

/// Functoriality, equivariance and shape checks, exhaustive on elements.
inline void validate_system(const InverseSystem& sys) {
  validate_poset(sys.poset);
  const int n = sys.poset.size;
  if (static_cast<int>(sys.objects.size()) != n)
    throw validation_error("ShapeMismatch", "one object per poset index required");
  for (int r = 1; r < n; ++r)
    if (!(sys.objects[r].g == sys.objects[0].g))
      throw validation_error("ShapeMismatch", "all objects must share the acting group");

  for (int r = 0; r < n; ++r)
    for (int t = 0; t < n; ++t) {
      if (!sys.poset.le(t, r)) continue;
      auto it = sys.transitions.find({r, t});
      if (it == sys.transitions.end())
        throw validation_error("MissingTransition", witness(r, t));
      validate_hom(sys.objects[r].a, sys.objects[t].a, it->second);
      int ws = -1, wx = -1;
      if (!is_equivariant(sys.objects[r], sys.objects[t], it->second, &ws, &wx))
        throw validation_error("NotEquivariant", witness(r, t, ws, wx));
      if (r == t) {
        for (int x = 0; x < sys.objects[r].a.order; ++x)
          if (it->second(x) != x) throw validation_error("NotFunctorial", witness(r, r, r, x));
      }
    }

  for (int r = 0; r < n; ++r)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) {
        if (!(sys.poset.le(u, t) && sys.poset.le(t, r))) continue;
        const GroupHom& rt = sys.transition(r, t);
        const GroupHom& tu = sys.transition(t, u);
        const GroupHom& ru = sys.transition(r, u);
        for (int x = 0; x < sys.objects[r].a.order; ++x)
          if (tu(rt(x)) != ru(x)) throw validation_error("NotFunctorial", witness(r, t, u, x));
      }
}

/// Builds a linear tower from bottom (index 0) to top (index n-1).
/// steps[k] is the transition from level k+1 down to level k; longer
/// transitions are filled in by composition.
inline InverseSystem make_tower(std::vector<GAction> levels, const std::vector<GroupHom>& steps) {
  const int n = static_cast<int>(levels.size());
  if (n == 0) throw validation_error("ShapeMismatch", "tower needs at least one level");
  if (static_cast<int>(steps.size()) != n - 1)
    throw validation_error("ShapeMismatch", "tower needs exactly one step per adjacent pair");
  InverseSystem sys;
  sys.poset = chain_poset(n);
  sys.objects = std::move(levels);
  for (int r = 0; r < n; ++r) {
    sys.transitions[{r, r}] = identity_hom(sys.objects[r].a);
    for (int t = r - 1; t >= 0; --t)
      sys.transitions[{r, t}] = compose_homs(steps[t], sys.transitions.at({r, t + 1}));
  }
  validate_system(sys);
  return sys;
}

// ---------------------------------------------------------------------------
// Limits
// ---------------------------------------------------------------------------

/// The limit as the group of compatible tuples, with componentwise structure,
/// componentwise G-action, and one projection per level. Tuples are sorted,
/// which puts the identity tuple at index 0.
struct LimitGroup {
  std::vector<std::vector<int>> tuples;
  std::map<std::vector<int>, int> index;
  GAction action;  // action.a is the limit group itself
  std::vector<GroupHom> projections;

  int order() const { return static_cast<int>(tuples.size()); }
};

/// Computes the limit through the greatest element of the poset (which pins
/// every component of a compatible tuple), then rebuilds the group, action
/// and projections honestly from the tuples and re-checks compatibility.
inline LimitGroup limit(const InverseSystem& sys, const Budget& budget = {}) {
  validate_system(sys);
  const int n = sys.poset.size;
  const int m = greatest_element(sys.poset);
  const FiniteGroup& top = sys.objects[m].a;
  require_budget(top.order, budget);

  LimitGroup lg;
  for (int x = 0; x < top.order; ++x) {
    std::vector<int> tuple(n);
    for (int r = 0; r < n; ++r) tuple[r] = sys.transition(m, r)(x);
    lg.tuples.push_back(std::move(tuple));
  }
  std::sort(lg.tuples.begin(), lg.tuples.end());
  lg.tuples.erase(std::unique(lg.tuples.begin(), lg.tuples.end()), lg.tuples.end());
  for (int i = 0; i < static_cast<int>(lg.tuples.size()); ++i) lg.index[lg.tuples[i]] = i;

  // tuple compatibility under all comparable pairs
  for (const auto& tuple : lg.tuples)
    for (int r = 0; r < n; ++r)
      for (int t = 0; t < n; ++t)
        if (sys.poset.le(t, r) && sys.transition(r, t)(tuple[r]) != tuple[t])
          throw validation_error("NotCompatible", witness(r, t));

  const int sz = static_cast<int>(lg.tuples.size());
  std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      std::vector<int> prod(n);
      for (int r = 0; r < n; ++r) prod[r] = sys.objects[r].a.op(lg.tuples[i][r], lg.tuples[j][r]);
      auto it = lg.index.find(prod);
      if (it == lg.index.end()) throw validation_error("NotClosed", witness(i, j));
      mul[i][j] = it->second;
    }
  FiniteGroup group = validate_group(mul);

  const FiniteGroup& g = sys.objects[0].g;
  std::vector<std::vector<int>> act_table(g.order, std::vector<int>(sz));
  for (int s = 0; s < g.order; ++s)
    for (int i = 0; i < sz; ++i) {
      std::vector<int> img(n);
      for (int r = 0; r < n; ++r) img[r] = sys.objects[r].apply(s, lg.tuples[i][r]);
      auto it = lg.index.find(img);
      if (it == lg.index.end()) throw validation_error("NotClosed", witness(s, i));
      act_table[s][i] = it->second;
    }
  lg.action = validate_action(g, group, act_table);

  for (int r = 0; r < n; ++r) {
    GroupHom proj;
    proj.image.reserve(sz);
    for (int i = 0; i < sz; ++i) proj.image.push_back(lg.tuples[i][r]);
    validate_equivariant_hom(lg.action, sys.objects[r], proj);
    lg.projections.push_back(std::move(proj));
  }
  return lg;
}

/// The unique hom u with proj_r(u(x)) = cone_r(x) for all r, or an error if
/// the pinned-down candidate is not a valid equivariant hom.
inline GroupHom mediating_hom(const InverseSystem& sys, const LimitGroup& lim,
                              const GAction& cone_src, const std::vector<GroupHom>& cone) {
  const int n = sys.poset.size;
  if (static_cast<int>(cone.size()) != n)
    throw validation_error("ShapeMismatch", "one cone leg per poset index required");
  for (int r = 0; r < n; ++r) validate_equivariant_hom(cone_src, sys.objects[r], cone[r]);
  GroupHom u;
  u.image.reserve(cone_src.a.order);
  for (int x = 0; x < cone_src.a.order; ++x) {
    std::vector<int> tuple(n);
    for (int r = 0; r < n; ++r) tuple[r] = cone[r](x);
    auto it = lim.index.find(tuple);
    if (it == lim.index.end()) throw validation_error("NoMediatingHom", witness(x));
    u.image.push_back(it->second);
  }
  validate_equivariant_hom(cone_src, lim.action, u);
  return u;
}

// ---------------------------------------------------------------------------
// Theta: H(G, lim A_r)  ->  lim H(G, A_r)
// ---------------------------------------------------------------------------

/// Outcome of comparing the two independently computed sides of the limit
/// commutation map. The left side enumerates cohomology over the limit group
/// directly; the right side never touches the limit group.
struct ThetaReport {
  int degree = 1;
  int left_classes = 0;
  std::vector<int> level_classes;
  int right_limit_classes = 0;
  std::vector<std::vector<int>> map;  // left class -> class tuple, one per level
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool natural = false;
  bool group_hom = true;  // meaningful for abelian degrees only
  std::vector<std::string> notes;

  bool bijective() const { return well_defined && injective && surjective; }
  bool pass() const { return bijective() && natural && group_hom; }
};

inline std::vector<std::string> finite_scale_notes() {
  return {
      "finite directed poset: a greatest element exists, so agreement of the two sides is "
      "expected; both sides are still computed by independent code paths and compared",
      "even continuity: automatic for finite discrete coefficients (constant maps aside, "
      "every relevant map set is evenly continuous); recorded as a satisfied hypothesis, "
      "not a runtime check"};
}

namespace detail {

/// Enumerates compatible tuples of class indices for an inverse system of
/// finite pointed sets given levelwise class counts and induced maps.
inline std::vector<std::vector<int>> compatible_class_tuples(
    const DirectedPoset& poset, const std::vector<int>& counts,
    const std::map<std::pair<int, int>, std::vector<int>>& induced,
    const Budget& budget = {}) {
  const int n = poset.size;
  long long product = 1;
  for (int c : counts) product = std::min(product * c, budget.max_candidates + 1);
  require_budget(product, budget);
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(n, 0);
  while (true) {
    bool ok = true;
    for (int r = 0; r < n && ok; ++r)
      for (int t = 0; t < n && ok; ++t)
        if (t != r && poset.le(t, r) && induced.at({r, t})[tuple[r]] != tuple[t]) ok = false;
    if (ok) out.push_back(tuple);
    int k = 0;
    while (k < n && ++tuple[k] == counts[k]) {
      tuple[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

}  // namespace detail

/// Degree-1 limit commutation: computes H^1 of the limit, the levelwise H^1
/// system with its induced maps, the limit of that system, and the class map
/// between them; reports well-definedness, bijectivity and naturality.
inline ThetaReport theta_1(const InverseSystem& sys, const Budget& budget = {}) {
  const int n = sys.poset.size;
  LimitGroup lim = limit(sys, budget);
  H1Set left = h1(lim.action, budget);

  std::vector<H1Set> level(n);
  for (int r = 0; r < n; ++r) level[r] = h1(sys.objects[r], budget);

  std::map<std::pair<int, int>, std::vector<int>> induced;
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < n; ++t)
      if (t != r && sys.poset.le(t, r))
        induced[{r, t}] = pushforward_classes(sys.objects[r], sys.objects[t],
                                              sys.transition(r, t), level[r], level[t]);

  ThetaReport rep;
  rep.degree = 1;
  rep.left_classes = left.num_classes();
  for (int r = 0; r < n; ++r) rep.level_classes.push_back(level[r].num_classes());
  std::vector<int> counts = rep.level_classes;
  auto right = detail::compatible_class_tuples(sys.poset, counts, induced, budget);
  rep.right_limit_classes = static_cast<int>(right.size());

  rep.well_defined = true;
  rep.natural = true;
  rep.map.assign(left.num_classes(), {});
  for (int c = 0; c < left.num_classes(); ++c) {
    std::vector<int> tuple;
    for (const Cocycle& a : left.classes[c]) {
      std::vector<int> this_tuple(n);
      for (int r = 0; r < n; ++r) {
        Cocycle pushed(a.size());
        for (std::size_t s = 0; s < a.size(); ++s) pushed[s] = lim.projections[r](a[s]);
        auto it = level[r].class_of.find(pushed);
        if (it == level[r].class_of.end())
          throw validation_error("NotCocycle", "projected cocycle missing at level " + std::to_string(r));
        this_tuple[r] = it->second;
      }
      if (tuple.empty()) tuple = this_tuple;
      else if (tuple != this_tuple) rep.well_defined = false;  // also a naturality failure
    }
    rep.map[c] = tuple;
  }

  // naturality of the square: project-then-classify equals classify-then-map,
  // pointwise over every cocycle of the limit
  for (const auto& [a, c] : left.class_of) {
    for (int r = 0; r < n; ++r) {
      Cocycle pushed(a.size());
      for (std::size_t s = 0; s < a.size(); ++s) pushed[s] = lim.projections[r](a[s]);
      if (level[r].class_of.at(pushed) != rep.map[c][r]) rep.natural = false;
    }
  }

  std::set<std::vector<int>> image(rep.map.begin(), rep.map.end());
  rep.injective = static_cast<int>(image.size()) == rep.left_classes;
  std::set<std::vector<int>> target(right.begin(), right.end());
  rep.surjective = image == target;
  rep.notes = finite_scale_notes();
  return rep;
}

/// Degree-n limit commutation for abelian coefficients; additionally checks
/// the map is a group homomorphism.
inline ThetaReport theta_n(const InverseSystem& sys, int degree, const Budget& budget = {}) {
  const int n = sys.poset.size;
  for (const GAction& obj : sys.objects) require_abelian(obj.a);
  LimitGroup lim = limit(sys, budget);
  require_abelian(lim.action.a);
  CohomologyGroup left = h_n(lim.action, degree, budget);

  std::vector<CohomologyGroup> level;
  level.reserve(n);
  for (int r = 0; r < n; ++r) level.push_back(h_n(sys.objects[r], degree, budget));

  auto push_class = [&](int r, int t, int cls) {
    int out = -1;
    for (const Cochain& f : level[r].classes[cls]) {
      Cochain pushed = pushforward_cochain(sys.transition(r, t), f);
      auto it = level[t].class_of.find(pushed);
      if (it == level[t].class_of.end())
        throw validation_error("NotCocycle", "pushed cochain missing at level " + std::to_string(t));
      if (out < 0) out = it->second;
      else if (out != it->second)
        throw validation_error("NotWellDefined", "induced class map depends on representative");
    }
    return out;
  };

  std::map<std::pair<int, int>, std::vector<int>> induced;
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < n; ++t)
      if (t != r && sys.poset.le(t, r)) {
        std::vector<int> img(level[r].classes.size());
        for (std::size_t c = 0; c < level[r].classes.size(); ++c)
          img[c] = push_class(r, t, static_cast<int>(c));
        induced[{r, t}] = img;
      }

  ThetaReport rep;
  rep.degree = degree;
  rep.left_classes = static_cast<int>(left.classes.size());
  for (int r = 0; r < n; ++r) rep.level_classes.push_back(static_cast<int>(level[r].classes.size()));
  auto right = detail::compatible_class_tuples(sys.poset, rep.level_classes, induced, budget);
  rep.right_limit_classes = static_cast<int>(right.size());

  rep.well_defined = true;
  rep.natural = true;
  rep.map.assign(left.classes.size(), {});
  for (std::size_t c = 0; c < left.classes.size(); ++c) {
    std::vector<int> tuple;
    for (const Cochain& f : left.classes[c]) {
      std::vector<int> this_tuple(n);
      for (int r = 0; r < n; ++r) {
        Cochain pushed = pushforward_cochain(lim.projections[r], f);
        this_tuple[r] = level[r].class_of.at(pushed);
      }
      if (tuple.empty()) tuple = this_tuple;
      else if (tuple != this_tuple) rep.well_defined = false;
    }
    rep.map[c] = tuple;
  }

  for (const auto& [f, c] : left.class_of) {
    for (int r = 0; r < n; ++r) {
      Cochain pushed = pushforward_cochain(lim.projections[r], f);
      if (level[r].class_of.at(pushed) != rep.map[c][r]) rep.natural = false;
    }
  }

  std::set<std::vector<int>> image(rep.map.begin(), rep.map.end());
  rep.injective = static_cast<int>(image.size()) == rep.left_classes;
  std::set<std::vector<int>> target(right.begin(), right.end());
  rep.surjective = image == target;

  rep.group_hom = true;
  for (std::size_t c1 = 0; c1 < left.classes.size() && rep.group_hom; ++c1)
    for (std::size_t c2 = 0; c2 < left.classes.size() && rep.group_hom; ++c2) {
      int sum = left.add_classes(lim.action.a, static_cast<int>(c1), static_cast<int>(c2));
      for (int r = 0; r < n; ++r) {
        int level_sum = level[r].add_classes(sys.objects[r].a, rep.map[c1][r], rep.map[c2][r]);
        if (rep.map[sum][r] != level_sum) rep.group_hom = false;
      }
    }

  rep.notes = finite_scale_notes();
  return rep;
}

// ---------------------------------------------------------------------------
// lim^1 for towers of finite abelian groups
// ---------------------------------------------------------------------------

/// A plain tower of abelian groups, bottom (index 0) to top; maps[k] goes
/// from level k+1 down to level k.
struct AbelianTower {
  std::vector<FiniteGroup> groups;
  std::vector<GroupHom> maps;
};

inline void validate_abelian_tower(const AbelianTower& t) {
  if (t.groups.empty()) throw validation_error("ShapeMismatch", "tower needs at least one level");
  if (t.maps.size() + 1 != t.groups.size())
    throw validation_error("ShapeMismatch", "tower needs one map per adjacent pair");
  for (const FiniteGroup& g : t.groups) require_abelian(g);
  for (std::size_t k = 0; k < t.maps.size(); ++k)
    validate_hom(t.groups[k + 1], t.groups[k], t.maps[k]);
}

/// Drops the action data of a linear system, keeping groups and adjacent maps.
inline AbelianTower coefficient_tower(const InverseSystem& sys) {
  if (!is_chain(sys.poset)) throw validation_error("NotChain", "lim^1 is defined for towers");
  AbelianTower t;
  for (const GAction& obj : sys.objects) t.groups.push_back(obj.a);
  for (int k = 0; k + 1 < sys.poset.size; ++k) t.maps.push_back(sys.transition(k + 1, k));
  validate_abelian_tower(t);
  return t;
}

/// lim^1 of a finite tower, as the cokernel of the shifted difference
///   Delta(a)_k = a_k - maps_k(a_{k+1}),   k = 0..N-2,
/// from the full product onto the product truncated below the top. Its
/// kernel is the compatible-tuple group; for finite groups the map is onto
/// (Mittag-Leffler), which is verified both by back-substitution for every
/// target and by an independent kernel count over the whole domain.
struct Lim1Report {
  long long domain_size = 1;
  long long codomain_size = 1;
  long long kernel_size = 1;
  long long cokernel_size = 1;
  bool trivial = true;
  bool back_substitution_ok = true;
};

inline Lim1Report lim1_tower(const AbelianTower& t, const Budget& budget = {}) {
  validate_abelian_tower(t);
  const int n = static_cast<int>(t.groups.size());
  Lim1Report rep;
  for (int k = 0; k < n; ++k) rep.domain_size *= t.groups[k].order;
  for (int k = 0; k + 1 < n; ++k) rep.codomain_size *= t.groups[k].order;
  require_budget(rep.domain_size, budget);

  if (n == 1) return rep;  // empty codomain: nothing to hit

  auto delta = [&](const std::vector<int>& a) {
    std::vector<int> d(n - 1);
    for (int k = 0; k + 1 < n; ++k)
      d[k] = t.groups[k].op(a[k], t.groups[k].inverse(t.maps[k](a[k + 1])));
    return d;
  };

  // kernel count over the whole domain
  rep.kernel_size = 0;
  {
    std::vector<int> a(n, 0);
    const std::vector<int> zero(n - 1, 0);
    while (true) {
      if (delta(a) == zero) ++rep.kernel_size;
      int k = 0;
      while (k < n && ++a[k] == t.groups[k].order) {
        a[k] = 0;
        ++k;
      }
      if (k == n) break;
    }
  }

  // back-substitution: solve Delta(a) = b for every b, top component zero
  {
    std::vector<int> b(n - 1, 0);
    while (true) {
      std::vector<int> a(n, 0);
      for (int k = n - 2; k >= 0; --k) a[k] = t.groups[k].op(b[k], t.maps[k](a[k + 1]));
      if (delta(a) != b) rep.back_substitution_ok = false;
      int k = 0;
      while (k < n - 1 && ++b[k] == t.groups[k].order) {
        b[k] = 0;
        ++k;
      }
      if (k == n - 1) break;
    }
  }

  long long image = rep.domain_size / rep.kernel_size;
  rep.cokernel_size = rep.codomain_size / image;
  rep.trivial = rep.cokernel_size == 1 && rep.back_substitution_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Towers of cohomology groups, and the exact-sequence instance
// ---------------------------------------------------------------------------

/// Re-packages a subgroup as a standalone group, keeping the sorted member
/// order (the identity stays at index 0).
inline FiniteGroup subgroup_as_group(const FiniteGroup& parent, const Subgroup& s) {
  std::map<int, int> pos;
  for (int i = 0; i < s.size(); ++i) pos[s.members[i]] = i;
  std::vector<std::vector<int>> mul(s.size(), std::vector<int>(s.size()));
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) mul[i][j] = pos.at(parent.op(s.members[i], s.members[j]));
  return validate_group(mul);
}

/// H^degree(G, A_r) along a linear system, as a tower of finite abelian
/// groups with the induced maps. Degree 0 is the fixed-subgroup tower;
/// higher degrees use the coset quotients (base class is the identity).
inline AbelianTower cohomology_tower(const InverseSystem& sys, int degree,
                                     const Budget& budget = {}) {
  if (!is_chain(sys.poset)) throw validation_error("NotChain", "cohomology towers need a chain");
  const int n = sys.poset.size;
  AbelianTower t;

  if (degree == 0) {
    std::vector<Subgroup> fixed(n);
    for (int r = 0; r < n; ++r) {
      fixed[r] = fixed_points(sys.objects[r]);
      t.groups.push_back(subgroup_as_group(sys.objects[r].a, fixed[r]));
      require_abelian(t.groups.back());
    }
    for (int k = 0; k + 1 < n; ++k) {
      const GroupHom& phi = sys.transition(k + 1, k);
      GroupHom restricted;
      for (int x : fixed[k + 1].members) {
        int y = phi(x);
        auto it = std::lower_bound(fixed[k].members.begin(), fixed[k].members.end(), y);
        if (it == fixed[k].members.end() || *it != y)
          throw validation_error("NotEquivariant", "transition does not preserve fixed points");
        restricted.image.push_back(static_cast<int>(it - fixed[k].members.begin()));
      }
      t.maps.push_back(restricted);
    }
  } else {
    std::vector<CohomologyGroup> level;
    for (int r = 0; r < n; ++r) level.push_back(h_n(sys.objects[r], degree, budget));
    for (int r = 0; r < n; ++r) {
      const CohomologyGroup& h = level[r];
      const int sz = static_cast<int>(h.classes.size());
      std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
      for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) mul[i][j] = h.add_classes(sys.objects[r].a, i, j);
      t.groups.push_back(validate_group(mul));
    }
    for (int k = 0; k + 1 < n; ++k) {
      GroupHom induced;
      for (const auto& cls : level[k + 1].classes) {
        int out = -1;
        for (const Cochain& f : cls) {
          Cochain pushed = pushforward_cochain(sys.transition(k + 1, k), f);
          int c = level[k].class_of.at(pushed);
          if (out < 0) out = c;
          else if (out != c)
            throw validation_error("NotWellDefined", "induced map depends on representative");
        }
        induced.image.push_back(out);
      }
      t.maps.push_back(induced);
    }
  }
  validate_abelian_tower(t);
  return t;
}

/// The finite-scale instance of the exact sequence
///   1 -> lim^1 H^{i-1}(G, A_r) -> H^i(G, lim A_r) -> lim H^i(G, A_r) -> 1:
/// the lim^1 term must vanish and the middle map must be bijective.
struct ExactnessReport {
  int degree = 1;
  Lim1Report lim1;
  ThetaReport theta;

  bool pass() const { return lim1.trivial && theta.pass(); }
};

inline ExactnessReport exact_sequence_check(const InverseSystem& sys, int i,
                                            const Budget& budget = {}) {
  if (i < 1) throw validation_error("BadDegree", "i must be >= 1");
  ExactnessReport rep;
  rep.degree = i;
  rep.lim1 = lim1_tower(cohomology_tower(sys, i - 1, budget), budget);
  rep.theta = (i == 1) ? theta_1(sys, budget) : theta_n(sys, i, budget);
  return rep;
}

}  // namespace cohomlim
