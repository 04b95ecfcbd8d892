#pragma once

#include <vector>

#include "cohomlim/inverse_system.hpp"

namespace cohomlim {

/// A decreasing chain of characteristic subgroups N_0 >= N_1 >= ... >= N_k.
/// With trivial bottom the quotient tower presents A as its own limit.
struct Filtration {
  std::vector<Subgroup> chain;
};

/// A quotient tower remembering where it came from: the source action and
/// the canonical projections q_r : A -> A/N_r, one per level.
struct PresentationTower {
  GAction base;
  InverseSystem system;            // level r is A/N_r; bottom r = 0, top r = k
  std::vector<GroupHom> canonical;
};

namespace detail {

/// Characteristic when the automorphism group is enumerable; otherwise fall
/// back to normality plus preservation under the rows of the given action.
inline bool chain_member_ok(const GAction& act, const Subgroup& n) {
  if (act.a.order <= kAutomorphismCap) return is_characteristic(act.a, n);
  if (!is_normal(act.a, n)) return false;
  for (int s = 0; s < act.g.order; ++s)
    for (int m : n.members)
      if (!n.contains(act.apply(s, m))) return false;
  return true;
}

}  // namespace detail

/// Builds the tower of quotients A/N_r with induced actions and canonical
/// transitions. Requires the chain nested, each member characteristic, and
/// the bottom trivial.
inline PresentationTower filtration_tower(const GAction& act, const Filtration& f) {
  const int k = static_cast<int>(f.chain.size());
  if (k == 0) throw validation_error("EmptyChain", "filtration needs at least one subgroup");
  for (int i = 0; i < k; ++i) validate_subgroup(act.a, f.chain[i]);
  for (int i = 0; i + 1 < k; ++i)
    for (int m : f.chain[i + 1].members)
      if (!f.chain[i].contains(m)) throw validation_error("NotNested", witness(i));
  for (int i = 0; i < k; ++i)
    if (!detail::chain_member_ok(act, f.chain[i])) throw validation_error("NotCharacteristic", witness(i));
  if (f.chain.back().size() != 1)
    throw validation_error("NotTrivialBottom", "last chain member must be the trivial subgroup");

  PresentationTower pt;
  pt.base = act;
  std::vector<GAction> levels;
  std::vector<std::vector<int>> reps;  // minimal representative per coset, per level
  for (int r = 0; r < k; ++r) {
    QuotientAction qa = induced_action_on_quotient(act, f.chain[r]);
    levels.push_back(qa.act);
    pt.canonical.push_back(qa.proj);
    std::vector<int> rep(qa.act.a.order, -1);
    for (int x = act.a.order - 1; x >= 0; --x) rep[qa.proj(x)] = x;
    reps.push_back(std::move(rep));
  }

  // step from level r+1 (mod N_{r+1}) down to level r (mod N_r): lift a coset
  // to its representative and project again; well defined since N_{r+1} <= N_r
  std::vector<GroupHom> steps;
  for (int r = 0; r + 1 < k; ++r) {
    GroupHom step;
    step.image.reserve(levels[r + 1].a.order);
    for (int c = 0; c < levels[r + 1].a.order; ++c)
      step.image.push_back(pt.canonical[r](reps[r + 1][c]));
    steps.push_back(std::move(step));
  }
  pt.system = make_tower(std::move(levels), steps);
  return pt;
}

/// Quotient tower along the derived series: levels A/A(1), ..., A/A(len)
/// with A(len) trivial. Derived subgroups are characteristic, so the actions
/// descend. Fails with NotSolvable when the series stalls above 1.
inline PresentationTower derived_tower(const GAction& act) {
  std::vector<Subgroup> series = derived_series(act.a);
  if (series.back().size() != 1)
    throw validation_error("NotSolvable", "derived series is stationary at order " +
                                              std::to_string(series.back().size()));
  Filtration f;
  for (std::size_t i = 1; i < series.size(); ++i) f.chain.push_back(series[i]);
  if (f.chain.empty()) f.chain.push_back(trivial_subgroup(act.a));  // A already trivial
  return filtration_tower(act, f);
}

/// Checks that the canonical map A -> lim of the tower is an equivariant
/// group isomorphism, that the degree-1 limit commutation holds on the
/// tower, and that the tower's limit cohomology agrees with H^1(G, A)
/// computed directly on the source.
struct PresentationReport {
  bool canonical_total = false;      // every x lands on a compatible tuple
  bool canonical_bijective = false;
  bool canonical_equivariant_hom = false;
  ThetaReport theta1;
  std::optional<ThetaReport> theta_extra;  // filled when a higher degree is requested
  bool classes_match = false;        // H^1(G, A) transported equals H^1(G, lim)
  int direct_h1_classes = 0;

  bool pass() const {
    return canonical_total && canonical_bijective && canonical_equivariant_hom &&
           theta1.pass() && classes_match && (!theta_extra || theta_extra->pass());
  }
};

/// extra_degree > 1 additionally runs the degree-n comparison on the tower
/// (abelian coefficients only).
inline PresentationReport verify_presentation(const PresentationTower& pt,
                                              const Budget& budget = {}, int extra_degree = 0) {
  PresentationReport rep;
  LimitGroup lim = limit(pt.system, budget);
  const int n = pt.system.poset.size;

  GroupHom canonical;
  canonical.image.reserve(pt.base.a.order);
  rep.canonical_total = true;
  for (int x = 0; x < pt.base.a.order; ++x) {
    std::vector<int> tuple(n);
    for (int r = 0; r < n; ++r) tuple[r] = pt.canonical[r](x);
    auto it = lim.index.find(tuple);
    if (it == lim.index.end()) {
      rep.canonical_total = false;
      return rep;
    }
    canonical.image.push_back(it->second);
  }

  std::set<int> seen(canonical.image.begin(), canonical.image.end());
  rep.canonical_bijective = static_cast<int>(seen.size()) == pt.base.a.order &&
                            pt.base.a.order == lim.order();
  rep.canonical_equivariant_hom = is_hom(pt.base.a, lim.action.a, canonical) &&
                                  is_equivariant(pt.base, lim.action, canonical);

  rep.theta1 = theta_1(pt.system, budget);
  if (extra_degree > 1) rep.theta_extra = theta_n(pt.system, extra_degree, budget);

  H1Set direct = h1(pt.base, budget);
  rep.direct_h1_classes = direct.num_classes();
  if (rep.canonical_bijective && rep.canonical_equivariant_hom) {
    H1Set lifted = h1(lim.action, budget);
    if (direct.num_classes() == lifted.num_classes()) {
      std::vector<int> image =
          pushforward_classes(pt.base, lim.action, canonical, direct, lifted);
      std::set<int> distinct(image.begin(), image.end());
      rep.classes_match = static_cast<int>(distinct.size()) == direct.num_classes();
    }
  }
  return rep;
}

}  // namespace cohomlim
