#pragma once

#include <vector>

#include "cohomlim/group.hpp"

namespace cohomlim {

/// A left action of G on the group A by automorphisms, stored as a full
/// |G| x |A| lookup table: table[s][x] is the image of x under s. Rows are
/// automorphisms of A; row 0 is the identity map.
struct GAction {
  FiniteGroup g;
  FiniteGroup a;
  std::vector<std::vector<int>> table;

  int apply(int s, int x) const { return table[s][x]; }

  bool operator==(const GAction& other) const {
    return g == other.g && a == other.a && table == other.table;
  }
};

/// Checks the three action axioms, naming the first witness found. Checked
/// in the order: identity row, rows are endomorphisms, composition.
inline GAction validate_action(const FiniteGroup& g, const FiniteGroup& a,
                               const std::vector<std::vector<int>>& table) {
  if (static_cast<int>(table.size()) != g.order)
    throw validation_error("ShapeMismatch", "expected " + std::to_string(g.order) + " rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != a.order)
      throw validation_error("ShapeMismatch", "expected rows of length " + std::to_string(a.order));
    for (int v : row)
      if (v < 0 || v >= a.order) throw validation_error("ShapeMismatch", "entry out of range");
  }
  for (int x = 0; x < a.order; ++x)
    if (table[0][x] != x) throw validation_error("IdentityAxiom", witness(x));
  for (int s = 0; s < g.order; ++s)
    for (int x = 0; x < a.order; ++x)
      for (int y = 0; y < a.order; ++y)
        if (table[s][a.op(x, y)] != a.op(table[s][x], table[s][y]))
          throw validation_error("AutomorphismAxiom", witness(s, x, y));
  for (int s = 0; s < g.order; ++s)
    for (int t = 0; t < g.order; ++t)
      for (int x = 0; x < a.order; ++x)
        if (table[g.op(s, t)][x] != table[s][table[t][x]])
          throw validation_error("CompositionAxiom", witness(s, t, x));
  return GAction{g, a, table};
}

inline GAction trivial_action(const FiniteGroup& g, const FiniteGroup& a) {
  std::vector<int> id(a.order);
  std::iota(id.begin(), id.end(), 0);
  return validate_action(g, a, std::vector<std::vector<int>>(g.order, id));
}

/// The order-2 group acting on an abelian group by x -> x^-1.
inline GAction inversion_action(const FiniteGroup& g, const FiniteGroup& a) {
  if (g.order != 2) throw validation_error("BadActingGroup", "inversion action needs |G| = 2");
  if (!a.abelian()) throw validation_error("NotAbelian", "inversion is not an automorphism here");
  std::vector<std::vector<int>> t(2, std::vector<int>(a.order));
  for (int x = 0; x < a.order; ++x) {
    t[0][x] = x;
    t[1][x] = a.inverse(x);
  }
  return validate_action(g, a, t);
}

/// G acting on itself by s.x = s x s^-1.
inline GAction conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<int>> t(g.order, std::vector<int>(g.order));
  for (int s = 0; s < g.order; ++s)
    for (int x = 0; x < g.order; ++x) t[s][x] = g.op(g.op(s, x), g.inverse(s));
  return validate_action(g, g, t);
}

/// Builds the action table from a homomorphism G -> Aut(A) given as one
/// automorphism per element of G.
inline GAction action_from_hom(const FiniteGroup& g, const FiniteGroup& a,
                               const std::vector<GroupHom>& rho) {
  if (static_cast<int>(rho.size()) != g.order)
    throw validation_error("ShapeMismatch", "need one automorphism per element of G");
  std::vector<std::vector<int>> t(g.order);
  for (int s = 0; s < g.order; ++s) t[s] = rho[s].image;
  return validate_action(g, a, t);
}

/// Inverse of action_from_hom: reads the rows back as automorphisms.
inline std::vector<GroupHom> hom_from_action(const GAction& act) {
  std::vector<GroupHom> rho;
  rho.reserve(act.g.order);
  for (int s = 0; s < act.g.order; ++s) rho.push_back(GroupHom{act.table[s]});
  return rho;
}

/// The fixed subgroup A^G = {x : s.x = x for all s}. This is H^0(G, A).
inline Subgroup fixed_points(const GAction& act) {
  std::vector<int> members;
  for (int x = 0; x < act.a.order; ++x) {
    bool fixed = true;
    for (int s = 0; s < act.g.order && fixed; ++s)
      if (act.apply(s, x) != x) fixed = false;
    if (fixed) members.push_back(x);
  }
  Subgroup fix{members};
  validate_subgroup(act.a, fix);
  return fix;
}

/// phi : A -> A' commutes with both actions.
inline bool is_equivariant(const GAction& src, const GAction& tgt, const GroupHom& phi,
                           int* ws = nullptr, int* wx = nullptr) {
  for (int s = 0; s < src.g.order; ++s)
    for (int x = 0; x < src.a.order; ++x)
      if (phi(src.apply(s, x)) != tgt.apply(s, phi(x))) {
        if (ws) *ws = s;
        if (wx) *wx = x;
        return false;
      }
  return true;
}

inline void validate_equivariant_hom(const GAction& src, const GAction& tgt, const GroupHom& phi) {
  validate_hom(src.a, tgt.a, phi);
  int ws = -1, wx = -1;
  if (!is_equivariant(src, tgt, phi, &ws, &wx))
    throw validation_error("NotEquivariant", witness(ws, wx));
}

/// Result of dividing a G-group by a preserved normal subgroup: the action
/// on A/N together with the (equivariant) projection.
struct QuotientAction {
  GAction act;
  GroupHom proj;
};

/// Descends the action to A/N. Requires N normal and preserved by every
/// row of the action; NotPreserved(s) names the first offending row.
inline QuotientAction induced_action_on_quotient(const GAction& act, const Subgroup& n) {
  for (int s = 0; s < act.g.order; ++s)
    for (int m : n.members)
      if (!n.contains(act.apply(s, m))) throw validation_error("NotPreserved", witness(s));
  auto [quot, proj] = quotient_group(act.a, n);
  std::vector<int> reps(quot.order, -1);
  for (int x = act.a.order - 1; x >= 0; --x) reps[proj(x)] = x;  // minimal representative
  std::vector<std::vector<int>> t(act.g.order, std::vector<int>(quot.order));
  for (int s = 0; s < act.g.order; ++s)
    for (int c = 0; c < quot.order; ++c) t[s][c] = proj(act.apply(s, reps[c]));
  return QuotientAction{validate_action(act.g, quot, t), proj};
}

}  // namespace cohomlim
