#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cohomlim/config.hpp"
#include "cohomlim/torsor.hpp"

namespace cohomlim {

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// The structured result of one command: a data payload, optional pass/fail
/// check lines, and hypothesis notes. Rendering is deterministic given the
/// config; timing is omitted in deterministic mode.
struct Report {
  std::string command;
  json data = json::object();
  std::vector<CheckLine> checks;
  std::vector<std::string> notes;
  bool deterministic = false;
  long long elapsed_us = 0;

  bool ok() const {
    for (const CheckLine& c : checks)
      if (!c.pass) return false;
    return true;
  }

  json to_json() const {
    json j;
    j["command"] = command;
    j["data"] = data;
    if (!checks.empty()) {
      j["checks"] = json::array();
      for (const CheckLine& c : checks)
        j["checks"].push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["notes"] = notes;
    j["pass"] = ok();
    if (!deterministic) j["elapsed_us"] = elapsed_us;
    return j;
  }

  std::string render_table() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    if (!data.empty()) os << "data: " << data.dump() << "\n";
    for (const CheckLine& c : checks)
      os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
         << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    for (const std::string& n : notes) os << "note: " << n << "\n";
    os << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
    if (!deterministic) os << "elapsed_us: " << elapsed_us << "\n";
    return os.str();
  }
};

namespace detail {

inline const GAction& find_action(const Config& cfg, const std::string& name) {
  auto it = cfg.actions.find(name);
  if (it == cfg.actions.end()) throw validation_error("UnknownReference", name);
  return it->second;
}

inline const InverseSystem& find_system(const Config& cfg, const std::string& name) {
  auto it = cfg.systems.find(name);
  if (it == cfg.systems.end()) throw validation_error("UnknownReference", name);
  return it->second;
}

inline json theta_to_json(const ThetaReport& th) {
  json j;
  j["degree"] = th.degree;
  j["left_classes"] = th.left_classes;
  j["level_classes"] = th.level_classes;
  j["right_limit_classes"] = th.right_limit_classes;
  j["well_defined"] = th.well_defined;
  j["injective"] = th.injective;
  j["surjective"] = th.surjective;
  j["bijective"] = th.bijective();
  j["natural"] = th.natural;
  j["group_hom"] = th.group_hom;
  j["map"] = th.map;
  return j;
}

inline json lim1_to_json(const Lim1Report& rep) {
  return json{{"domain", rep.domain_size},     {"codomain", rep.codomain_size},
              {"kernel", rep.kernel_size},     {"cokernel", rep.cokernel_size},
              {"trivial", rep.trivial},        {"back_substitution_ok", rep.back_substitution_ok}};
}

inline long long z1_estimate(const GAction& act) {
  return checked_pow(act.a.order, act.g.order - 1, 1LL << 40);
}

inline long long cochain_space(const GAction& act, int degree, long long limit) {
  return checked_pow(act.a.order, cochain_size(act.g, degree), limit);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Command runners (shared by the CLI and the test suites)
// ---------------------------------------------------------------------------

inline Report run_validate(const Config& cfg) {
  Report rep;
  rep.command = "validate";
  // parsing already validated everything; re-run the exhaustive checks anyway
  for (const auto& [name, g] : cfg.groups) {
    validate_group(g.mul);
    rep.checks.push_back({"group " + name, true, "order " + std::to_string(g.order)});
  }
  for (const auto& [name, a] : cfg.actions) {
    validate_action(a.g, a.a, a.table);
    rep.checks.push_back({"action " + name, true,
                          "|G|=" + std::to_string(a.g.order) + " |A|=" + std::to_string(a.a.order)});
  }
  for (const auto& [name, s] : cfg.systems) {
    validate_system(s);
    rep.checks.push_back({"system " + name, true,
                          std::to_string(s.poset.size) + " levels"});
  }
  rep.data["groups"] = cfg.groups.size();
  rep.data["actions"] = cfg.actions.size();
  rep.data["systems"] = cfg.systems.size();
  rep.data["filtrations"] = cfg.presentations.size();
  return rep;
}

inline Report run_h1(const Config& cfg, const std::string& action, bool oracle) {
  const GAction& act = detail::find_action(cfg, action);
  Report rep;
  rep.command = "h1 --action " + action;
  H1Set h = h1(act, cfg.budget, oracle ? Z1Method::bruteforce : Z1Method::backtracking);
  if (oracle) {
    H1Set other = h1(act, cfg.budget, Z1Method::backtracking);
    rep.checks.push_back({"enumerators agree", other.class_of == h.class_of, ""});
  }
  rep.data["z1_size"] = h.z1_size();
  rep.data["base_class"] = h.base_class;
  rep.data["h0_size"] = fixed_points(act).size();
  json classes = json::array();
  for (int c = 0; c < h.num_classes(); ++c) {
    const Cocycle& repc = h.representative(c);
    classes.push_back(json{{"size", h.classes[c].size()},
                           {"stab_size", stabilizer(act, repc).size()},
                           {"rep", repc}});
  }
  rep.data["classes"] = classes;
  return rep;
}

inline Report run_hn(const Config& cfg, const std::string& action, int n, bool oracle) {
  const GAction& act = detail::find_action(cfg, action);
  Report rep;
  rep.command = "hn --action " + action + " --n " + std::to_string(n);
  CohomologyGroup h = h_n(act, n, cfg.budget);
  rep.data["n"] = n;
  rep.data["z"] = h.z_size;
  rep.data["b"] = h.b_size;
  rep.data["h"] = h.h_size;
  rep.data["orders"] = h.element_orders;
  if (oracle && n == 1) {
    // cross-check the degree-1 quotient against the orbit computation
    H1Set orbits = h1(act, cfg.budget, Z1Method::bruteforce);
    rep.checks.push_back(
        {"degree-1 quotient matches orbit partition", orbits.num_classes() == h.h_size, ""});
  }
  if (oracle && n == 0) {
    rep.checks.push_back({"H^0 equals the fixed subgroup",
                          h.h_size == fixed_points(act).size(), ""});
  }
  return rep;
}

inline Report run_torsors(const Config& cfg, const std::string& action) {
  const GAction& act = detail::find_action(cfg, action);
  Report rep;
  rep.command = "torsors --action " + action;
  H1Set h = h1(act, cfg.budget);
  CocycleSet z1;
  for (const auto& [c, idx] : h.class_of) z1.insert(c);

  // classify torsors built from every cocycle, by exhaustive isomorphism
  std::vector<Cocycle> iso_reps;
  json classes = json::array();
  bool equivalence_ok = true;
  for (const Cocycle& a : z1) {
    Torsor ta = torsor_from_cocycle(act, a);
    bool found = false;
    for (const Cocycle& r : iso_reps) {
      bool iso = are_isomorphic(torsor_from_cocycle(act, r), ta).has_value();
      bool cohomologous = h.class_of.at(r) == h.class_of.at(a);
      if (iso != cohomologous) equivalence_ok = false;
      if (iso) found = true;
    }
    if (!found) {
      iso_reps.push_back(a);
      classes.push_back(json{{"rep", a}});
    }
  }
  rep.data["iso_classes"] = iso_reps.size();
  rep.data["h1_classes"] = h.num_classes();
  rep.data["classes"] = classes;
  rep.checks.push_back({"iso classes = cohomology classes",
                        static_cast<int>(iso_reps.size()) == h.num_classes(), ""});
  rep.checks.push_back({"isomorphic iff cohomologous", equivalence_ok, ""});
  return rep;
}

inline Report run_theta(const Config& cfg, const std::string& system, int n) {
  const InverseSystem& sys = detail::find_system(cfg, system);
  Report rep;
  rep.command = "theta --system " + system + (n > 1 ? " --n " + std::to_string(n) : "");
  ThetaReport th = (n <= 1) ? theta_1(sys, cfg.budget) : theta_n(sys, n, cfg.budget);
  rep.data = detail::theta_to_json(th);
  rep.notes = th.notes;
  rep.checks.push_back({"well-defined", th.well_defined, ""});
  rep.checks.push_back({"bijective", th.bijective(), ""});
  rep.checks.push_back({"natural", th.natural, ""});
  if (n > 1) rep.checks.push_back({"group homomorphism", th.group_hom, ""});
  return rep;
}

/// i = 0 (default): lim^1 of the coefficient tower itself.
/// i >= 1: lim^1 of the tower of H^{i-1}(G, A_r), the term appearing in the
/// exact sequence at degree i.
inline Report run_lim1(const Config& cfg, const std::string& system, int i) {
  const InverseSystem& sys = detail::find_system(cfg, system);
  Report rep;
  rep.command = "lim1 --system " + system + (i > 0 ? " --i " + std::to_string(i) : "");
  AbelianTower tower = (i == 0) ? coefficient_tower(sys) : cohomology_tower(sys, i - 1, cfg.budget);
  Lim1Report l = lim1_tower(tower, cfg.budget);
  rep.data = detail::lim1_to_json(l);
  rep.checks.push_back({"lim1 trivial", l.trivial, "cokernel " + std::to_string(l.cokernel_size)});
  rep.notes.push_back("towers of finite groups satisfy the Mittag-Leffler condition, "
                      "so a trivial cokernel is the expected outcome");
  return rep;
}

inline Report run_exactness(const Config& cfg, const std::string& system, int i) {
  const InverseSystem& sys = detail::find_system(cfg, system);
  Report rep;
  rep.command = "exactness --system " + system + " --i " + std::to_string(i);
  ExactnessReport ex = exact_sequence_check(sys, i, cfg.budget);
  rep.data["degree"] = ex.degree;
  rep.data["lim1"] = detail::lim1_to_json(ex.lim1);
  rep.data["theta"] = detail::theta_to_json(ex.theta);
  rep.notes = ex.theta.notes;
  rep.checks.push_back({"lim1 of lower cohomology trivial", ex.lim1.trivial, ""});
  rep.checks.push_back({"middle map bijective", ex.theta.bijective(), ""});
  rep.checks.push_back({"exact", ex.pass(), ""});
  return rep;
}

namespace detail {

inline json presentation_to_json(const PresentationReport& pr) {
  json j;
  j["canonical_total"] = pr.canonical_total;
  j["canonical_bijective"] = pr.canonical_bijective;
  j["canonical_equivariant_hom"] = pr.canonical_equivariant_hom;
  j["direct_h1_classes"] = pr.direct_h1_classes;
  j["classes_match"] = pr.classes_match;
  j["theta"] = theta_to_json(pr.theta1);
  if (pr.theta_extra) j["theta_extra"] = theta_to_json(*pr.theta_extra);
  j["pass"] = pr.pass();
  return j;
}

inline void add_presentation_checks(Report& rep, const PresentationReport& pr) {
  rep.checks.push_back({"canonical map is an equivariant isomorphism",
                        pr.canonical_total && pr.canonical_bijective && pr.canonical_equivariant_hom,
                        ""});
  rep.checks.push_back({"limit commutation on the tower", pr.theta1.pass(), ""});
  rep.checks.push_back({"limit cohomology matches the direct computation", pr.classes_match, ""});
}

}  // namespace detail

inline Report run_derived_tower(const Config& cfg, const std::string& action, bool verify) {
  const GAction& act = detail::find_action(cfg, action);
  Report rep;
  rep.command = "derived-tower --action " + action + (verify ? " --verify" : "");
  PresentationTower pt = derived_tower(act);
  json levels = json::array();
  for (const GAction& obj : pt.system.objects) levels.push_back(obj.a.order);
  rep.data["levels"] = levels;  // bottom to top
  if (verify) {
    PresentationReport pr = verify_presentation(pt, cfg.budget);
    rep.data["presentation"] = detail::presentation_to_json(pr);
    rep.notes = pr.theta1.notes;
    detail::add_presentation_checks(rep, pr);
  }
  return rep;
}

inline Report run_present(const Config& cfg, const std::string& action,
                          const std::vector<int>& orders) {
  const GAction& act = detail::find_action(cfg, action);
  Report rep;
  rep.command = "present --action " + action;
  json chain_spec = json{{"action", action}, {"orders", orders}};
  PresentationTower pt = filtration_tower(act, parse_chain(chain_spec, act));
  json levels = json::array();
  for (const GAction& obj : pt.system.objects) levels.push_back(obj.a.order);
  rep.data["levels"] = levels;
  // degree-2 comparison comes along when the coefficients allow it
  int extra = act.a.abelian() && detail::cochain_space(act, 2, 20000) <= 20000 ? 2 : 0;
  PresentationReport pr = verify_presentation(pt, cfg.budget, extra);
  rep.data["presentation"] = detail::presentation_to_json(pr);
  rep.notes = pr.theta1.notes;
  detail::add_presentation_checks(rep, pr);
  return rep;
}

// ---------------------------------------------------------------------------
// verify-all: every invariant suite across every configured object,
// summarized per claim
// ---------------------------------------------------------------------------

inline Report verify_all(const Config& cfg, std::uint64_t seed = 12345) {
  Report rep;
  rep.command = "verify-all";
  const Budget& budget = cfg.budget;
  const long long exhaustive_limit = 20000;

  if (cfg.groups.empty() && cfg.actions.empty() && cfg.systems.empty() &&
      cfg.presentations.empty()) {
    rep.checks.push_back({"empty config", true, "nothing to verify (warning)"});
    rep.notes.push_back("warning: the configuration defines no objects");
    return rep;
  }

  {  // group axioms, re-checked exhaustively
    int n = 0;
    for (const auto& [name, g] : cfg.groups) {
      validate_group(g.mul);
      ++n;
    }
    rep.checks.push_back({"group axioms", true, std::to_string(n) + " groups"});
  }

  {  // action axioms
    int n = 0;
    for (const auto& [name, a] : cfg.actions) {
      validate_action(a.g, a.a, a.table);
      ++n;
    }
    rep.checks.push_back({"action axioms", true, std::to_string(n) + " actions"});
  }

  {  // backtracking enumerator against the brute-force oracle
    bool pass = true;
    int n = 0;
    std::string bad;
    for (const auto& [name, act] : cfg.actions) {
      if (detail::z1_estimate(act) > budget.max_candidates) continue;
      if (enumerate_z1_bruteforce(act, budget) != enumerate_z1_backtracking(act, {}, budget)) {
        pass = false;
        bad = name;
      }
      ++n;
    }
    rep.checks.push_back({"cocycle enumerators agree", pass,
                          pass ? std::to_string(n) + " actions" : "mismatch on " + bad});
  }

  {  // coboundary closure, action laws, orbit-stabilizer, fixed points
    bool closure = true, laws = true, orbstab = true, fixed = true;
    int n = 0;
    for (const auto& [name, act] : cfg.actions) {
      if (detail::z1_estimate(act) > budget.max_candidates) continue;
      CocycleSet z1 = enumerate_z1_backtracking(act, {}, budget);
      const int na = act.a.order;
      for (const Cocycle& a : z1) {
        if (cb_act(act, a, 0) != a) laws = false;
        for (int x = 0; x < na; ++x) {
          Cocycle ax = cb_act(act, a, x);
          if (!z1.count(ax)) closure = false;
          for (int y = 0; y < na; ++y)
            if (cb_act(act, ax, y) != cb_act(act, a, act.a.op(x, y))) laws = false;
        }
        if (static_cast<int>(orbit(act, a).size()) * stabilizer(act, a).size() != na)
          orbstab = false;
      }
      if (!(stabilizer(act, trivial_cocycle(act)) == fixed_points(act))) fixed = false;
      ++n;
    }
    std::string detail = std::to_string(n) + " actions";
    rep.checks.push_back({"coboundary action closes on the cocycle set", closure, detail});
    rep.checks.push_back({"coboundary right-action laws", laws, detail});
    rep.checks.push_back({"orbit-stabilizer, degree 1", orbstab, detail});
    rep.checks.push_back({"fixed points = stabilizer of the trivial cocycle", fixed, detail});
  }

  {  // torsor classification against cohomology classes
    bool pass = true;
    int n = 0;
    for (const auto& [name, act] : cfg.actions) {
      if (detail::z1_estimate(act) > budget.max_candidates) continue;
      H1Set h = h1(act, budget);
      if (h.z1_size() > 1000) continue;
      std::vector<Cocycle> all;
      for (const auto& [c, idx] : h.class_of) all.push_back(c);
      std::vector<Torsor> torsors;
      for (const Cocycle& a : all) torsors.push_back(torsor_from_cocycle(act, a));
      int iso_classes = 0;
      std::vector<int> rep_of(all.size(), -1);
      for (std::size_t i = 0; i < all.size(); ++i) {
        bool fresh = true;
        for (std::size_t j = 0; j < i; ++j) {
          bool iso = are_isomorphic(torsors[j], torsors[i]).has_value();
          bool coh = h.class_of.at(all[j]) == h.class_of.at(all[i]);
          if (iso != coh) pass = false;
          if (iso) fresh = false;
        }
        if (fresh) ++iso_classes;
      }
      if (iso_classes != h.num_classes()) pass = false;
      ++n;
    }
    rep.checks.push_back({"torsor classes biject with degree-1 classes", pass,
                          std::to_string(n) + " actions"});
  }

  {  // complex law and additivity, exhaustive small / randomized large
    bool complex_law = true, additive = true;
    int exhaustive = 0, randomized = 0;
    SplitMix64 rng(seed);
    for (const auto& [name, entry] : cfg.actions) {
      const GAction& act = entry;  // clang 14 rejects capturing structured bindings in lambdas
      if (!act.a.abelian()) continue;
      for (int n = 1; n <= 2; ++n) {
        if (detail::cochain_space(act, n - 1, exhaustive_limit) <= exhaustive_limit &&
            cochain_size(act.g, n + 1) <= 4096) {
          detail::for_each_cochain(act, n - 1, budget, [&](const Cochain& f) {
            Cochain df = differential(act, f);
            if (differential(act, df) != zero_cochain(act.g, n + 1)) complex_law = false;
          });
          ++exhaustive;
        }
      }
      for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + rng.below(3);
        if (cochain_size(act.g, n + 1) > 100000) continue;
        Cochain f = zero_cochain(act.g, n - 1), g2 = zero_cochain(act.g, n - 1);
        for (auto& v : f.values) v = rng.below(act.a.order);
        for (auto& v : g2.values) v = rng.below(act.a.order);
        Cochain df = differential(act, f);
        if (differential(act, df) != zero_cochain(act.g, n + 1)) complex_law = false;
        Cochain sum = differential(act, add_cochains(act.a, f, g2));
        if (sum != add_cochains(act.a, df, differential(act, g2))) additive = false;
        ++randomized;
      }
    }
    rep.checks.push_back({"complex law d(d(f)) = 0", complex_law,
                          std::to_string(exhaustive) + " exhaustive tiers, " +
                              std::to_string(randomized) + " random cochains"});
    rep.checks.push_back({"differential is additive", additive, ""});
  }

  {  // degree-1 quotient partition equals the orbit partition
    bool pass = true;
    int n = 0;
    for (const auto& [name, act] : cfg.actions) {
      if (!act.a.abelian()) continue;
      if (detail::cochain_space(act, 1, exhaustive_limit) > exhaustive_limit) continue;
      if (detail::z1_estimate(act) > budget.max_candidates) continue;
      H1Set orbits = h1(act, budget);
      CohomologyGroup quot = h_n(act, 1, budget);
      std::set<std::set<std::vector<int>>> a_part, b_part;
      for (const auto& cls : orbits.classes)
        a_part.insert(std::set<std::vector<int>>(cls.begin(), cls.end()));
      for (const auto& cls : quot.classes) {
        std::set<std::vector<int>> one;
        for (const Cochain& f : cls) one.insert(f.values);
        b_part.insert(one);
      }
      if (a_part != b_part) pass = false;
      ++n;
    }
    rep.checks.push_back({"degree-1 partitions agree (orbits vs cosets)", pass,
                          std::to_string(n) + " abelian actions"});
  }

  {  // stabilizers equal the lower cocycle group; degree-n orbit-stabilizer
    bool stab_ok = true, orbstab_ok = true;
    int n = 0;
    for (const auto& [name, act] : cfg.actions) {
      if (!act.a.abelian()) continue;
      for (int deg = 1; deg <= 2; ++deg) {
        if (detail::cochain_space(act, deg, exhaustive_limit) > exhaustive_limit) continue;
        CochainSet zn = z_n(act, deg, budget);
        CochainSet lower = z_n(act, deg - 1, budget);
        long long lower_space = detail::cochain_space(act, deg - 1, 1LL << 40);
        for (const Cochain& a : zn) {
          CochainSet st = stab_n(act, deg, a, budget);
          if (st != lower) stab_ok = false;
          CochainSet orb = orbit_n(act, deg, a, budget);
          if (static_cast<long long>(orb.size()) * static_cast<long long>(st.size()) !=
              lower_space)
            orbstab_ok = false;
        }
        ++n;
      }
    }
    std::string detail = std::to_string(n) + " (action, degree) pairs";
    rep.checks.push_back({"stabilizer equals the lower cocycle group", stab_ok, detail});
    rep.checks.push_back({"orbit-stabilizer, higher degrees", orbstab_ok, detail});
  }

  {  // limit commutation per system
    bool d1 = true, d2 = true;
    int n1 = 0, n2 = 0;
    for (const auto& [name, sys] : cfg.systems) {
      ThetaReport th = theta_1(sys, budget);
      if (!th.pass()) d1 = false;
      ++n1;
      bool abelian = true;
      for (const GAction& obj : sys.objects)
        if (!obj.a.abelian()) abelian = false;
      if (abelian && detail::cochain_space(sys.objects.back(), 2, exhaustive_limit) <= exhaustive_limit) {
        ThetaReport th2 = theta_n(sys, 2, budget);
        if (!th2.pass()) d2 = false;
        ++n2;
      }
    }
    rep.checks.push_back({"limit commutation, degree 1", d1, std::to_string(n1) + " systems"});
    rep.checks.push_back({"limit commutation, degree 2", d2, std::to_string(n2) + " systems"});
  }

  {  // lim1 vanishing and exactness on abelian towers
    bool lim1_ok = true, exact_ok = true;
    int n1 = 0, n2 = 0;
    for (const auto& [name, sys] : cfg.systems) {
      bool abelian = true;
      for (const GAction& obj : sys.objects)
        if (!obj.a.abelian()) abelian = false;
      if (!abelian || !is_chain(sys.poset)) continue;
      if (!lim1_tower(coefficient_tower(sys), budget).trivial) lim1_ok = false;
      ++n1;
      for (int i = 1; i <= 2; ++i) {
        if (i == 2 &&
            detail::cochain_space(sys.objects.back(), 2, exhaustive_limit) > exhaustive_limit)
          continue;
        if (!exact_sequence_check(sys, i, budget).pass()) exact_ok = false;
        ++n2;
      }
    }
    rep.checks.push_back({"lim1 vanishing (Mittag-Leffler at finite scale)", lim1_ok,
                          std::to_string(n1) + " towers"});
    rep.checks.push_back({"exact sequence instances", exact_ok,
                          std::to_string(n2) + " (tower, degree) pairs"});
  }

  {  // presentation towers
    bool pass = true;
    int n = 0;
    for (const auto& [name, pt] : cfg.presentations) {
      if (!verify_presentation(pt, budget).pass()) pass = false;
      ++n;
    }
    rep.checks.push_back({"presentation towers", pass, std::to_string(n) + " filtrations"});
  }

  rep.notes = finite_scale_notes();
  return rep;
}

}  // namespace cohomlim
