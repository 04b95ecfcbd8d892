#pragma once

#include <map>
#include <set>
#include <vector>

#include "cohomlim/action.hpp"

namespace cohomlim {

/// A 1-cocycle is stored as its value table: values[s] in A, with
/// values[0] = 0 (forced by the cocycle identity at s = t = 1). Lexicographic
/// vector order doubles as the deterministic ordering everywhere.
using Cocycle = std::vector<int>;

using CocycleSet = std::set<Cocycle>;

inline Cocycle trivial_cocycle(const GAction& act) { return Cocycle(act.g.order, 0); }

/// values[s*t] == values[s] * (s . values[t]) over all |G|^2 pairs.
inline bool is_cocycle(const GAction& act, const Cocycle& values) {
  if (static_cast<int>(values.size()) != act.g.order) return false;
  for (int v : values)
    if (v < 0 || v >= act.a.order) return false;
  for (int s = 0; s < act.g.order; ++s)
    for (int t = 0; t < act.g.order; ++t)
      if (values[act.g.op(s, t)] != act.a.op(values[s], act.apply(s, values[t]))) return false;
  return true;
}

/// Brute-force enumeration of Z^1: all |A|^(|G|-1) assignments with the
/// identity pinned to 0, filtered through is_cocycle. This is the oracle the
/// backtracking enumerator is checked against.
inline CocycleSet enumerate_z1_bruteforce(const GAction& act, const Budget& budget = {}) {
  const int n = act.g.order, m = act.a.order;
  require_budget(checked_pow(m, n - 1, budget.max_candidates), budget);
  CocycleSet out;
  Cocycle values(n, 0);
  while (true) {
    if (is_cocycle(act, values)) out.insert(values);
    int k = 1;
    while (k < n && ++values[k] == m) {
      values[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

/// Scalable enumerator: assigns values on a generating set, propagates along
/// a BFS order of the Cayley graph via a_{st} = a_s * (s . a_t), and keeps
/// the candidates that satisfy the full cocycle identity. Agrees with the
/// brute-force set by construction of the propagation (every cocycle is
/// determined by its generator values).
inline CocycleSet enumerate_z1_backtracking(const GAction& act, std::vector<int> generators,
                                            const Budget& budget = {}) {
  const int n = act.g.order, m = act.a.order;
  if (generators.empty()) generators = generating_set(act.g);
  for (int g : generators)
    if (g < 0 || g >= n) throw validation_error("NotGenerating", "generator index out of range");

  // BFS of the right Cayley graph; parent[x] = (p, k) with x = p * gen_k.
  std::vector<int> order{0};
  std::vector<std::pair<int, int>> parent(n, {-1, -1});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int p = order[head];
    for (std::size_t k = 0; k < generators.size(); ++k) {
      int x = act.g.op(p, generators[k]);
      if (!seen[x]) {
        seen[x] = true;
        parent[x] = {p, static_cast<int>(k)};
        order.push_back(x);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw validation_error("NotGenerating", "generators do not span G");

  require_budget(checked_pow(m, static_cast<long long>(generators.size()), budget.max_candidates),
                 budget);

  CocycleSet out;
  std::vector<int> assign(generators.size(), 0);
  Cocycle values(n, 0);
  while (true) {
    values.assign(n, 0);
    for (int x : order) {
      auto [p, k] = parent[x];
      if (p < 0) continue;
      values[x] = act.a.op(values[p], act.apply(p, assign[k]));
    }
    bool ok = true;
    for (std::size_t k = 0; k < generators.size() && ok; ++k)
      if (values[generators[k]] != assign[k]) ok = false;  // conflict with a tree edge
    if (ok && is_cocycle(act, values)) out.insert(values);
    std::size_t k = 0;
    while (k < assign.size() && ++assign[k] == m) {
      assign[k] = 0;
      ++k;
    }
    if (k == assign.size()) break;
  }
  return out;
}

enum class Z1Method { backtracking, bruteforce };

inline CocycleSet enumerate_z1(const GAction& act, Z1Method method, const Budget& budget = {}) {
  return method == Z1Method::bruteforce ? enumerate_z1_bruteforce(act, budget)
                                        : enumerate_z1_backtracking(act, {}, budget);
}

/// The coboundary action: (a.x)_s = x^-1 * a_s * (s . x). A right action of
/// A on Z^1 whose orbits are the cohomology classes.
inline Cocycle cb_act(const GAction& act, const Cocycle& a, int x) {
  Cocycle out(a.size());
  for (int s = 0; s < act.g.order; ++s)
    out[s] = act.a.op(act.a.inverse(x), act.a.op(a[s], act.apply(s, x)));
  return out;
}

inline CocycleSet orbit(const GAction& act, const Cocycle& a) {
  CocycleSet out;
  for (int x = 0; x < act.a.order; ++x) out.insert(cb_act(act, a, x));
  return out;
}

inline Subgroup stabilizer(const GAction& act, const Cocycle& a) {
  std::vector<int> members;
  for (int x = 0; x < act.a.order; ++x)
    if (cb_act(act, a, x) == a) members.push_back(x);
  Subgroup s{members};
  validate_subgroup(act.a, s);
  return s;
}

/// H^1 as the orbit partition of Z^1, pointed at the class of the trivial
/// cocycle. Classes are sorted by their lexicographically minimal member, so
/// the base class is always index 0.
struct H1Set {
  std::vector<std::vector<Cocycle>> classes;  // each sorted ascending
  int base_class = 0;
  std::map<Cocycle, int> class_of;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int z1_size() const { return static_cast<int>(class_of.size()); }
  const Cocycle& representative(int c) const { return classes[c].front(); }
};

inline H1Set h1_from_z1(const GAction& act, const CocycleSet& z1) {
  H1Set h;
  std::set<Cocycle> remaining = z1;
  while (!remaining.empty()) {
    Cocycle seed = *remaining.begin();
    CocycleSet orb = orbit(act, seed);
    int idx = static_cast<int>(h.classes.size());
    h.classes.emplace_back(orb.begin(), orb.end());
    for (const Cocycle& c : orb) {
      h.class_of[c] = idx;
      remaining.erase(c);
    }
  }
  // classes are discovered in order of their minimal member, and the trivial
  // cocycle (all zeros) is minimal overall
  h.base_class = h.class_of.at(trivial_cocycle(act));
  return h;
}

inline H1Set h1(const GAction& act, const Budget& budget = {},
                Z1Method method = Z1Method::backtracking) {
  return h1_from_z1(act, enumerate_z1(act, method, budget));
}

/// Pushes a cocycle forward along an equivariant hom A -> A'.
inline Cocycle pushforward(const GAction& src, const GAction& tgt, const GroupHom& phi,
                           const Cocycle& a) {
  validate_equivariant_hom(src, tgt, phi);
  Cocycle out(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) out[s] = phi(a[s]);
  return out;
}

/// Class-level pushforward: [a] -> [phi(a)]. Verifies representative
/// independence by pushing every member of every class.
inline std::vector<int> pushforward_classes(const GAction& src, const GAction& tgt,
                                            const GroupHom& phi, const H1Set& hs,
                                            const H1Set& ht) {
  validate_equivariant_hom(src, tgt, phi);
  std::vector<int> image(hs.classes.size(), -1);
  for (std::size_t c = 0; c < hs.classes.size(); ++c) {
    for (const Cocycle& a : hs.classes[c]) {
      Cocycle b(a.size());
      for (std::size_t s = 0; s < a.size(); ++s) b[s] = phi(a[s]);
      auto it = ht.class_of.find(b);
      if (it == ht.class_of.end())
        throw validation_error("NotCocycle", "pushforward left the cocycle set");
      if (image[c] < 0) image[c] = it->second;
      else if (image[c] != it->second)
        throw validation_error("NotWellDefined", "class pushforward depends on representative");
    }
  }
  return image;
}

/// Restricts the coefficients along a hom psi : H -> G, giving the H-action
/// t.x = psi(t).x.
inline GAction restrict_action(const GAction& act, const FiniteGroup& h, const GroupHom& psi) {
  validate_hom(h, act.g, psi);
  std::vector<std::vector<int>> t(h.order);
  for (int s = 0; s < h.order; ++s) t[s] = act.table[psi(s)];
  return validate_action(h, act.a, t);
}

/// Pulls a cocycle back along psi : H -> G, landing in Z^1(H, A) for the
/// restricted action: b_t = a_{psi(t)}.
inline Cocycle pullback(const FiniteGroup& h, const GroupHom& psi, const Cocycle& a) {
  Cocycle out(h.order);
  for (int t = 0; t < h.order; ++t) out[t] = a[psi(t)];
  return out;
}

}  // namespace cohomlim
