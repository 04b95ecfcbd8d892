#pragma once

#include <optional>
#include <vector>

#include "cohomlim/cocycle.hpp"

namespace cohomlim {

/// A set carrying a left G-action and a simply transitive right A-action
/// that commute. The point set is identified with A's index set; any
/// abstract torsor is brought into this form by choosing a base point.
struct Torsor {
  GAction act;                             // the ambient G-action on A
  std::vector<std::vector<int>> g_table;   // |G| x |P|
  std::vector<std::vector<int>> a_table;   // |P| x |A|

  int points() const { return act.a.order; }
  int g_apply(int s, int p) const { return g_table[s][p]; }
  int a_apply(int p, int x) const { return a_table[p][x]; }
};

/// Checks the three torsor invariants exhaustively: left action laws, right
/// action laws with simple transitivity, and compatibility s.(p.x) = (s.p).(s.x).
inline void validate_torsor(const Torsor& t) {
  const int ng = t.act.g.order, np = t.points(), na = t.act.a.order;
  if (static_cast<int>(t.g_table.size()) != ng || static_cast<int>(t.a_table.size()) != np)
    throw validation_error("ShapeMismatch", "torsor tables have wrong dimensions");

  for (int p = 0; p < np; ++p)
    if (t.g_table[0][p] != p) throw validation_error("GActionIdentity", witness(p));
  for (int s = 0; s < ng; ++s)
    for (int u = 0; u < ng; ++u)
      for (int p = 0; p < np; ++p)
        if (t.g_apply(t.act.g.op(s, u), p) != t.g_apply(s, t.g_apply(u, p)))
          throw validation_error("GActionComposition", witness(s, u, p));

  for (int p = 0; p < np; ++p)
    if (t.a_apply(p, 0) != p) throw validation_error("AActionIdentity", witness(p));
  for (int p = 0; p < np; ++p)
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < na; ++y)
        if (t.a_apply(t.a_apply(p, x), y) != t.a_apply(p, t.act.a.op(x, y)))
          throw validation_error("AActionComposition", witness(p, x, y));

  // simple transitivity: each pair (p, q) is connected by exactly one x
  for (int p = 0; p < np; ++p) {
    std::vector<int> hit(np, 0);
    for (int x = 0; x < na; ++x) ++hit[t.a_apply(p, x)];
    for (int q = 0; q < np; ++q)
      if (hit[q] != 1) throw validation_error("NotSimplyTransitive", witness(p, q));
  }

  for (int s = 0; s < ng; ++s)
    for (int p = 0; p < np; ++p)
      for (int x = 0; x < na; ++x)
        if (t.g_apply(s, t.a_apply(p, x)) != t.a_apply(t.g_apply(s, p), t.act.apply(s, x)))
          throw validation_error("NotCompatible", witness(s, p, x));
}

/// The twisted torsor of a cocycle: points are A, G acts by s.p = a_s * (s.p)
/// and A acts by right multiplication.
inline Torsor torsor_from_cocycle(const GAction& act, const Cocycle& a) {
  Torsor t;
  t.act = act;
  t.g_table.assign(act.g.order, std::vector<int>(act.a.order));
  for (int s = 0; s < act.g.order; ++s)
    for (int p = 0; p < act.a.order; ++p) t.g_table[s][p] = act.a.op(a[s], act.apply(s, p));
  t.a_table = act.a.mul;
  validate_torsor(t);
  return t;
}

/// Reads a cocycle off a torsor at a base point: a_s is the unique element
/// with s.p0 = p0 . a_s. For a twisted torsor with p0 = 0 this recovers the
/// original cocycle exactly.
inline Cocycle cocycle_from_torsor(const Torsor& t, int p0) {
  const int na = t.act.a.order;
  Cocycle a(t.act.g.order, -1);
  for (int s = 0; s < t.act.g.order; ++s) {
    int target = t.g_apply(s, p0);
    for (int x = 0; x < na; ++x)
      if (t.a_apply(p0, x) == target) {
        a[s] = x;
        break;
      }
  }
  if (!is_cocycle(t.act, a)) throw validation_error("NotCocycle", "torsor did not yield a cocycle");
  return a;
}

/// Searches for an isomorphism t1 -> t2 commuting with both actions. Every
/// such map is left multiplication by a single element, so only |A|
/// candidates need checking. Returns the point bijection, or nullopt.
inline std::optional<std::vector<int>> are_isomorphic(const Torsor& t1, const Torsor& t2) {
  if (!(t1.act == t2.act)) throw validation_error("ActionMismatch", "torsors over different actions");
  const int ng = t1.act.g.order, np = t1.points(), na = t1.act.a.order;
  for (int c = 0; c < na; ++c) {
    std::vector<int> alpha(np);
    for (int p = 0; p < np; ++p) alpha[p] = t1.act.a.op(c, p);
    bool ok = true;
    for (int s = 0; s < ng && ok; ++s)
      for (int p = 0; p < np && ok; ++p)
        if (alpha[t1.g_apply(s, p)] != t2.g_apply(s, alpha[p])) ok = false;
    for (int p = 0; p < np && ok; ++p)
      for (int x = 0; x < na && ok; ++x)
        if (alpha[t1.a_apply(p, x)] != t2.a_apply(alpha[p], x)) ok = false;
    if (ok) return alpha;
  }
  return std::nullopt;
}

}  // namespace cohomlim
