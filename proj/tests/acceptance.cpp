// Acceptance suite: runs every gate criterion against the shipped demo
// configuration and prints one PASS/FAIL line per criterion. Exits nonzero
// when any criterion fails. Expected values are pinned from the built-in
// brute-force oracles (enumeration, kernels, back-substitution).

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "cohomlim/verify.hpp"

using namespace cohomlim;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("criterion %02d  %-58s %s%s%s\n", num, name.c_str(), pass ? "PASS" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  if (!pass) ++g_failures;
}

std::vector<GAction> all_small_actions(const FiniteGroup& g, const FiniteGroup& a) {
  // every valid action table with |G|, |A| <= 3: identity row pinned, the
  // rest enumerated as arbitrary functions and filtered by the axioms
  std::vector<GAction> out;
  std::vector<int> id(a.order);
  std::iota(id.begin(), id.end(), 0);
  const long long rows = g.order - 1;
  const long long row_space = checked_pow(a.order, a.order, 1 << 30);
  std::vector<long long> odo(rows, 0);
  while (true) {
    std::vector<std::vector<int>> table{id};
    for (long long r = 0; r < rows; ++r) {
      std::vector<int> row(a.order);
      long long code = odo[r];
      for (int x = 0; x < a.order; ++x) {
        row[x] = static_cast<int>(code % a.order);
        code /= a.order;
      }
      table.push_back(row);
    }
    try {
      out.push_back(validate_action(g, a, table));
    } catch (const validation_error&) {
    }
    long long k = 0;
    while (k < rows && ++odo[k] == row_space) {
      odo[k] = 0;
      ++k;
    }
    if (k == rows || rows == 0) break;
  }
  return out;
}

// x -> x, or x -> x^-1 on the odd coset of an index-2 subgroup
GAction sign_inversion_action(const FiniteGroup& g, const std::vector<int>& parity,
                              const FiniteGroup& a) {
  std::vector<std::vector<int>> t(g.order, std::vector<int>(a.order));
  for (int s = 0; s < g.order; ++s)
    for (int x = 0; x < a.order; ++x) t[s][x] = parity[s] ? a.inverse(x) : x;
  return validate_action(g, a, t);
}

bool partition_of_h1_matches_quotient(const GAction& act, const Budget& budget) {
  H1Set orbits = h1(act, budget);
  CohomologyGroup quot = h_n(act, 1, budget);
  if (orbits.num_classes() != quot.h_size) return false;
  std::set<std::set<std::vector<int>>> a_part, b_part;
  for (const auto& cls : orbits.classes)
    a_part.insert(std::set<std::vector<int>>(cls.begin(), cls.end()));
  for (const auto& cls : quot.classes) {
    std::set<std::vector<int>> one;
    for (const Cochain& f : cls) one.insert(f.values);
    b_part.insert(one);
  }
  return a_part == b_part;
}

}  // namespace

int main() {
  Config cfg = parse_config(DEMO_CONFIG_PATH);
  const Budget& budget = cfg.budget;

  // 1. Cochain complex law: exhaustive over every valid action with
  //    |G| <= 3, |A| <= 3 and every cochain at n <= 2, then 1000 seeded
  //    random cochains with |G| <= 6, |A| <= 8, n <= 3. Exact equality.
  {
    bool pass = true;
    long long checked = 0;
    for (int ng = 1; ng <= 3; ++ng)
      for (int na = 1; na <= 3; ++na)
        for (const GAction& act : all_small_actions(make_cyclic(ng), make_cyclic(na)))
          for (int n = 1; n <= 2; ++n) {
            const Cochain zero = zero_cochain(act.g, n + 1);
            detail::for_each_cochain(act, n - 1, budget, [&](const Cochain& f) {
              if (differential(act, differential(act, f)) != zero) pass = false;
              ++checked;
            });
          }

    std::vector<GAction> random_pool;
    for (const FiniteGroup& g : {make_cyclic(6), make_symmetric(3)}) {
      std::vector<int> parity(g.order);
      for (int s = 0; s < g.order; ++s) parity[s] = g.element_order(s) % 2 == 0 ? 1 : 0;
      // parity map works when the even-order elements form the odd coset
      for (const FiniteGroup& a :
           {make_cyclic(8), make_cyclic(7), direct_product(make_cyclic(2), make_cyclic(4))}) {
        random_pool.push_back(trivial_action(g, a));
        try {
          random_pool.push_back(sign_inversion_action(g, parity, a));
        } catch (const validation_error&) {
        }
      }
    }
    SplitMix64 rng(20260808);
    for (int trial = 0; trial < 1000; ++trial) {
      const GAction& act = random_pool[rng.below(static_cast<int>(random_pool.size()))];
      int n = 1 + rng.below(3);
      Cochain f = zero_cochain(act.g, n - 1);
      for (int& v : f.values) v = rng.below(act.a.order);
      if (differential(act, differential(act, f)) != zero_cochain(act.g, n + 1)) pass = false;
      ++checked;
    }
    criterion(1, "cochain complex law d(d(f)) = 0", pass,
              std::to_string(checked) + " cochains");
  }

  // 2. Backtracking Z^1 equals brute-force Z^1 on >= 10 configured triples,
  //    with S3 and D4 coefficient groups among them. Exact set equality.
  {
    bool pass = true;
    int triples = 0;
    bool has_s3 = false, has_d4 = false;
    for (const auto& [name, act] : cfg.actions) {
      if (checked_pow(act.a.order, act.g.order - 1, budget.max_candidates) >
          budget.max_candidates)
        continue;
      if (enumerate_z1_bruteforce(act, budget) != enumerate_z1_backtracking(act, {}, budget))
        pass = false;
      if (act.a == make_symmetric(3)) has_s3 = true;
      if (act.a == make_dihedral(4)) has_d4 = true;
      ++triples;
    }
    pass = pass && triples >= 10 && has_s3 && has_d4;
    criterion(2, "enumerator equivalence (backtracking vs brute force)", pass,
              std::to_string(triples) + " triples");
  }

  // 3. Classical values, oracle-confirmed.
  {
    bool pass = true;
    pass &= h1(detail::find_action(cfg, "inv23"), budget, Z1Method::bruteforce).num_classes() == 1;
    pass &= h1(detail::find_action(cfg, "triv22"), budget, Z1Method::bruteforce).num_classes() == 2;
    pass &= h_n(detail::find_action(cfg, "triv22"), 2, budget).h_size == 2;
    for (const auto& [name, act] : cfg.actions) {
      Subgroup fixed = fixed_points(act);
      if (act.a.abelian()) {
        // independent route: H^0 as the kernel of the first differential
        CohomologyGroup h0 = h_n(act, 0, budget);
        if (h0.h_size != fixed.size()) pass = false;
        for (const auto& cls : h0.classes)
          if (!fixed.contains(cls.front().values[0])) pass = false;
      }
      if (!(stabilizer(act, trivial_cocycle(act)) == fixed)) pass = false;
    }
    criterion(3, "classical values |H1|, |H2|, H0 = fixed subgroup", pass);
  }

  // 4. Orbit-stabilizer in degree 1 for every configured action, and the
  //    degree-n analog on the enumerable abelian cases.
  {
    bool pass = true;
    int checked = 0;
    for (const auto& [name, act] : cfg.actions) {
      if (checked_pow(act.a.order, act.g.order - 1, budget.max_candidates) >
          budget.max_candidates)
        continue;
      for (const Cocycle& a : enumerate_z1_backtracking(act, {}, budget)) {
        if (orbit(act, a).size() * stabilizer(act, a).size() !=
            static_cast<std::size_t>(act.a.order))
          pass = false;
        ++checked;
      }
      if (!act.a.abelian()) continue;
      for (int n = 1; n <= 2; ++n) {
        if (checked_pow(act.a.order, cochain_size(act.g, n), 20000) > 20000) continue;
        CochainSet lower = z_n(act, n - 1, budget);
        long long lower_space =
            checked_pow(act.a.order, cochain_size(act.g, n - 1), 1LL << 40);
        for (const Cochain& a : z_n(act, n, budget)) {
          CochainSet orb = orbit_n(act, n, a, budget);
          CochainSet st = stab_n(act, n, a, budget);
          if (static_cast<long long>(orb.size()) * static_cast<long long>(st.size()) !=
              lower_space)
            pass = false;
          ++checked;
        }
      }
    }
    criterion(4, "orbit-stabilizer identities, degree 1 and n", pass,
              std::to_string(checked) + " cocycles");
  }

  // 5. The stabilizer of the trivial cocycle is the fixed subgroup,
  //    exact set equality on every configured action.
  {
    bool pass = true;
    for (const auto& [name, act] : cfg.actions)
      if (!(stabilizer(act, trivial_cocycle(act)) == fixed_points(act))) pass = false;
    criterion(5, "stabilizer of trivial cocycle = fixed points", pass,
              std::to_string(cfg.actions.size()) + " actions");
  }

  // 6. Torsor correspondence: isomorphism classes biject with cohomology
  //    classes, and isomorphic iff cohomologous, exhaustively.
  {
    bool pass = true;
    int actions = 0;
    for (const auto& [name, act] : cfg.actions) {
      if (checked_pow(act.a.order, act.g.order - 1, budget.max_candidates) >
          budget.max_candidates)
        continue;
      H1Set h = h1(act, budget);
      if (h.z1_size() > 1000) continue;
      std::vector<Cocycle> all;
      for (const auto& [c, idx] : h.class_of) all.push_back(c);
      std::vector<Torsor> torsors;
      for (const Cocycle& a : all) torsors.push_back(torsor_from_cocycle(act, a));
      int iso_classes = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        bool fresh = true;
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (i == j) continue;
          bool iso = are_isomorphic(torsors[i], torsors[j]).has_value();
          bool coh = h.class_of.at(all[i]) == h.class_of.at(all[j]);
          if (iso != coh) pass = false;
          if (iso && j < i) fresh = false;
        }
        if (fresh) ++iso_classes;
      }
      if (iso_classes != h.num_classes()) pass = false;
      ++actions;
    }
    criterion(6, "torsor classes biject with H1 classes", pass,
              std::to_string(actions) + " actions");
  }

  // 7. Degree-1 limit commutation on the configured towers, both sides
  //    computed independently; reports must state the finite-scale
  //    expectation.
  {
    bool pass = true;
    int towers = 0;
    for (const char* name : {"two_adic", "two_adic_inv", "s3_derived", "const_z3"}) {
      ThetaReport th = theta_1(detail::find_system(cfg, name), budget);
      if (!(th.well_defined && th.bijective() && th.natural)) pass = false;
      bool stated = false;
      for (const std::string& note : th.notes)
        if (note.find("finite directed poset") != std::string::npos) stated = true;
      if (!stated) pass = false;
      ++towers;
    }
    criterion(7, "degree-1 limit commutation on towers", pass,
              std::to_string(towers) + " towers");
  }

  // 8. Degree-2 limit commutation: bijective group isomorphism on the
  //    Z/4 -> Z/2 towers with trivial and inversion actions.
  {
    bool pass = true;
    for (const char* name : {"four_two", "four_two_inv"}) {
      ThetaReport th = theta_n(detail::find_system(cfg, name), 2, budget);
      if (!(th.bijective() && th.group_hom && th.natural)) pass = false;
    }
    criterion(8, "degree-2 limit commutation is a group isomorphism", pass);
  }

  // 9. Presentation verification: the canonical map onto the limit of the
  //    quotient tower is an equivariant isomorphism.
  {
    bool pass = true;
    for (const auto& [name, pt] : cfg.presentations)
      if (!verify_presentation(pt, budget).pass()) pass = false;
    pass = pass && cfg.presentations.count("two_adic_chain") == 1 &&
           cfg.presentations.count("s3_derived_tower") == 1;
    criterion(9, "presentations: canonical map A -> lim is an isomorphism", pass,
              std::to_string(cfg.presentations.size()) + " towers");
  }

  // 10. lim^1 vanishes for every configured abelian tower, and the exact
  //     sequence holds at i = 1, 2 over the Z/4 -> Z/2 towers.
  {
    bool pass = true;
    int towers = 0;
    for (const auto& [name, sys] : cfg.systems) {
      bool abelian = true;
      for (const GAction& obj : sys.objects)
        if (!obj.a.abelian()) abelian = false;
      if (!abelian || !is_chain(sys.poset)) continue;
      if (!lim1_tower(coefficient_tower(sys), budget).trivial) pass = false;
      ++towers;
    }
    for (const char* name : {"four_two", "four_two_inv"})
      for (int i = 1; i <= 2; ++i)
        if (!exact_sequence_check(detail::find_system(cfg, name), i, budget).pass()) pass = false;
    criterion(10, "lim^1 vanishing and exactness at i = 1, 2", pass,
              std::to_string(towers) + " abelian towers");
  }

  // 11. For abelian coefficients the orbit partition of Z^1 equals the
  //     coset partition from the degree-1 quotient.
  {
    bool pass = true;
    int actions = 0;
    for (const auto& [name, act] : cfg.actions) {
      if (!act.a.abelian()) continue;
      if (checked_pow(act.a.order, cochain_size(act.g, 1), 20000) > 20000) continue;
      if (!partition_of_h1_matches_quotient(act, budget)) pass = false;
      ++actions;
    }
    criterion(11, "abelian/nonabelian degree-1 agreement", pass,
              std::to_string(actions) + " abelian actions");
  }

  // 12. Determinism: two full verification runs render byte-identically.
  {
    Report a = verify_all(cfg, 12345);
    Report b = verify_all(cfg, 12345);
    a.deterministic = b.deterministic = true;
    bool pass = a.render_table() == b.render_table() &&
                a.to_json().dump(2) == b.to_json().dump(2) && a.ok() && b.ok();
    criterion(12, "deterministic verification reports", pass);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
