#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomlim/filtration.hpp"

namespace cohomlim {

using json = nlohmann::json;

/// A fully resolved and validated object graph: every named group, action,
/// system and presentation tower in the file, constructed and checked.
struct Config {
  Budget budget;
  int cap = kDefaultOrderCap;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, GAction> actions;
  std::map<std::string, InverseSystem> systems;
  std::map<std::string, PresentationTower> presentations;
};

// ---------------------------------------------------------------------------
// Group references: "cyclic:8", "dihedral:4", "symmetric:3",
// "product:(<ref>,<ref>)", a name from the groups section, or an inline
// {"order": n, "mul": [[...]]} object.
// ---------------------------------------------------------------------------

namespace detail {

inline std::pair<std::string, std::string> split_product_args(const std::string& body) {
  // body is "(lhs,rhs)" with the comma at paren depth 1
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw validation_error("ParseError", "product wants (lhs,rhs), got '" + body + "'");
  int depth = 0;
  for (std::size_t i = 1; i + 1 < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    else if (body[i] == ')') --depth;
    else if (body[i] == ',' && depth == 0)
      return {body.substr(1, i - 1), body.substr(i + 1, body.size() - i - 2)};
  }
  throw validation_error("ParseError", "product wants (lhs,rhs), got '" + body + "'");
}

}  // namespace detail

inline FiniteGroup resolve_group_name(const std::string& ref,
                                      const std::map<std::string, FiniteGroup>& named, int cap) {
  auto colon = ref.find(':');
  if (colon == std::string::npos) {
    auto it = named.find(ref);
    if (it == named.end()) throw validation_error("UnknownReference", ref);
    return it->second;
  }
  const std::string kind = ref.substr(0, colon);
  const std::string arg = ref.substr(colon + 1);
  if (kind == "cyclic") return make_cyclic(std::stoi(arg), cap);
  if (kind == "dihedral") return make_dihedral(std::stoi(arg), cap);
  if (kind == "symmetric") return make_symmetric(std::stoi(arg), cap);
  if (kind == "product") {
    auto [lhs, rhs] = detail::split_product_args(arg);
    return direct_product(resolve_group_name(lhs, named, cap),
                          resolve_group_name(rhs, named, cap), cap);
  }
  throw validation_error("UnknownReference", ref);
}

inline FiniteGroup parse_group(const json& j, const std::map<std::string, FiniteGroup>& named,
                               int cap) {
  if (j.is_string()) return resolve_group_name(j.get<std::string>(), named, cap);
  if (j.is_object() && j.contains("order") && j.contains("mul")) {
    auto table = j.at("mul").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != j.at("order").get<int>())
      throw validation_error("ParseError", "order field does not match table size");
    if (static_cast<int>(table.size()) > cap)
      throw validation_error("SizeLimit", witness(table.size(), cap));
    return validate_group(table);
  }
  throw validation_error("ParseError", "expected a group reference or {order, mul}");
}

inline json group_to_json(const FiniteGroup& g) {
  return json{{"order", g.order}, {"mul", g.mul}};
}

// ---------------------------------------------------------------------------
// Actions: {"g": <groupref>, "a": <groupref>,
//           "kind": "trivial" | "inversion" | "conjugation" | {"table": [[...]]}}
// ---------------------------------------------------------------------------

inline GAction parse_action(const json& j, const std::map<std::string, FiniteGroup>& named,
                            int cap) {
  FiniteGroup g = parse_group(j.at("g"), named, cap);
  FiniteGroup a = parse_group(j.at("a"), named, cap);
  const json& kind = j.at("kind");
  if (kind.is_string()) {
    const std::string k = kind.get<std::string>();
    if (k == "trivial") return trivial_action(g, a);
    if (k == "inversion") return inversion_action(g, a);
    if (k == "conjugation") {
      if (!(g == a)) throw validation_error("ParseError", "conjugation needs a = g");
      return conjugation_action(g);
    }
    throw validation_error("UnknownReference", "action kind '" + k + "'");
  }
  if (kind.is_object() && kind.contains("table"))
    return validate_action(g, a, kind.at("table").get<std::vector<std::vector<int>>>());
  throw validation_error("ParseError", "bad action kind");
}

inline json action_to_json(const GAction& act) {
  return json{{"g", group_to_json(act.g)}, {"a", group_to_json(act.a)},
              {"kind", json{{"table", act.table}}}};
}

// ---------------------------------------------------------------------------
// Systems. Towers are written top-first, the way they are drawn:
//   {"tower": [{"a": "cyclic:8", "action": "inversion"}, ...],
//    "g": "cyclic:2",
//    "maps": ["reduce", ...]}          // maps[j]: tower[j] -> tower[j+1]
// or {"derived": "<action name>"} or {"filtration": {...}}.
// ---------------------------------------------------------------------------

namespace detail {

inline GAction parse_level_action(const FiniteGroup& g, const FiniteGroup& a, const json& kind) {
  if (kind.is_string()) {
    const std::string k = kind.get<std::string>();
    if (k == "trivial") return trivial_action(g, a);
    if (k == "inversion") return inversion_action(g, a);
    if (k == "conjugation") return conjugation_action(g);
    throw validation_error("UnknownReference", "action kind '" + k + "'");
  }
  if (kind.is_object() && kind.contains("table"))
    return validate_action(g, a, kind.at("table").get<std::vector<std::vector<int>>>());
  throw validation_error("ParseError", "bad action kind");
}

inline GroupHom parse_map(const json& j, const FiniteGroup& from, const FiniteGroup& to) {
  GroupHom h;
  if (j.is_string()) {
    const std::string k = j.get<std::string>();
    if (k == "reduce") {
      for (int x = 0; x < from.order; ++x) h.image.push_back(x % to.order);
    } else if (k == "id" || k == "identity") {
      h = identity_hom(from);
    } else {
      throw validation_error("UnknownReference", "map kind '" + k + "'");
    }
  } else if (j.is_object() && j.contains("image")) {
    h.image = j.at("image").get<std::vector<int>>();
  } else {
    throw validation_error("ParseError", "bad transition map");
  }
  validate_hom(from, to, h);
  return h;
}

}  // namespace detail

struct ResolvedFiltration {
  std::string action;
  PresentationTower tower;
};

inline Filtration parse_chain(const json& j, const GAction& act) {
  Filtration f;
  if (j.contains("orders")) {
    std::vector<Subgroup> subs = all_subgroups(act.a);
    for (int order : j.at("orders").get<std::vector<int>>()) {
      std::vector<Subgroup> hits;
      for (const Subgroup& s : subs)
        if (s.size() == order && is_characteristic(act.a, s)) hits.push_back(s);
      if (hits.empty())
        throw validation_error("NoSuchSubgroup", "no characteristic subgroup of order " + std::to_string(order));
      if (hits.size() > 1)
        throw validation_error("AmbiguousSubgroup", "several characteristic subgroups of order " + std::to_string(order));
      f.chain.push_back(hits.front());
    }
  } else if (j.contains("chain")) {
    for (const auto& members : j.at("chain").get<std::vector<std::vector<int>>>())
      f.chain.push_back(Subgroup{members});
  } else {
    throw validation_error("ParseError", "filtration wants 'orders' or 'chain'");
  }
  return f;
}

inline PresentationTower parse_presentation(const json& j,
                                            const std::map<std::string, GAction>& actions) {
  const std::string name = j.at("action").get<std::string>();
  auto it = actions.find(name);
  if (it == actions.end()) throw validation_error("UnknownReference", name);
  if (j.value("derived", false)) return derived_tower(it->second);
  return filtration_tower(it->second, parse_chain(j, it->second));
}

inline InverseSystem parse_system(const json& j, const std::map<std::string, FiniteGroup>& groups,
                                  const std::map<std::string, GAction>& actions, int cap) {
  if (j.contains("derived")) {
    const std::string name = j.at("derived").get<std::string>();
    auto it = actions.find(name);
    if (it == actions.end()) throw validation_error("UnknownReference", name);
    return derived_tower(it->second).system;
  }
  if (j.contains("filtration")) return parse_presentation(j.at("filtration"), actions).system;

  FiniteGroup g = parse_group(j.at("g"), groups, cap);
  const json& tower = j.at("tower");
  if (!tower.is_array() || tower.empty())
    throw validation_error("ParseError", "tower must be a nonempty array");
  std::vector<GAction> top_first;
  for (const auto& level : tower) {
    FiniteGroup a = parse_group(level.at("a"), groups, cap);
    top_first.push_back(detail::parse_level_action(g, a, level.at("action")));
  }
  const json& maps = j.at("maps");
  if (static_cast<int>(maps.size()) + 1 != static_cast<int>(top_first.size()))
    throw validation_error("ParseError", "need one map per adjacent tower pair");

  // internal order is bottom-first; config map j goes tower[j] -> tower[j+1]
  std::vector<GAction> levels(top_first.rbegin(), top_first.rend());
  const int n = static_cast<int>(levels.size());
  std::vector<GroupHom> steps;
  for (int k = 0; k + 1 < n; ++k) {
    int cfg = n - 2 - k;  // config index whose map lands on internal level k
    steps.push_back(detail::parse_map(maps.at(cfg), levels[k + 1].a, levels[k].a));
  }
  return make_tower(std::move(levels), steps);
}

inline json system_to_json(const InverseSystem& sys) {
  json tower = json::array();
  json maps = json::array();
  const int n = sys.poset.size;
  for (int r = n - 1; r >= 0; --r) {
    tower.push_back(json{{"a", group_to_json(sys.objects[r].a)},
                         {"action", json{{"table", sys.objects[r].table}}}});
    if (r > 0) maps.push_back(json{{"image", sys.transition(r, r - 1).image}});
  }
  return json{{"g", group_to_json(sys.objects[0].g)}, {"tower", tower}, {"maps", maps}};
}

// ---------------------------------------------------------------------------
// Whole config files
// ---------------------------------------------------------------------------

inline Config parse_config_json(const json& j) {
  Config cfg;
  if (j.contains("budget")) cfg.budget.max_candidates = j.at("budget").get<long long>();
  if (j.contains("cap")) cfg.cap = j.at("cap").get<int>();

  if (j.contains("groups"))
    for (const auto& [name, entry] : j.at("groups").items())
      cfg.groups.emplace(name, parse_group(entry, cfg.groups, cfg.cap));

  if (j.contains("actions"))
    for (const auto& [name, entry] : j.at("actions").items())
      cfg.actions.emplace(name, parse_action(entry, cfg.groups, cfg.cap));

  if (j.contains("systems"))
    for (const auto& [name, entry] : j.at("systems").items())
      cfg.systems.emplace(name, parse_system(entry, cfg.groups, cfg.actions, cfg.cap));

  if (j.contains("filtrations"))
    for (const auto& [name, entry] : j.at("filtrations").items())
      cfg.presentations.emplace(name, parse_presentation(entry, cfg.actions));

  return cfg;
}

inline Config parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("ParseError", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw validation_error("ParseError", e.what());
  }
  return parse_config_json(j);
}

/// Canonical serialization: every object is written out explicitly (tables,
/// not constructor names), so parse(serialize(cfg)) rebuilds the same graph.
inline json config_to_json(const Config& cfg) {
  json j;
  j["budget"] = cfg.budget.max_candidates;
  j["cap"] = cfg.cap;
  j["groups"] = json::object();
  for (const auto& [name, g] : cfg.groups) j["groups"][name] = group_to_json(g);
  j["actions"] = json::object();
  for (const auto& [name, a] : cfg.actions) j["actions"][name] = action_to_json(a);
  j["systems"] = json::object();
  for (const auto& [name, s] : cfg.systems) j["systems"][name] = system_to_json(s);
  j["filtrations"] = json::object();
  for (const auto& [name, p] : cfg.presentations) {
    json chain = json::array();
    // recover the chain as the kernels of the canonical projections
    for (std::size_t r = 0; r < p.canonical.size(); ++r) {
      std::vector<int> members;
      for (int x = 0; x < p.base.a.order; ++x)
        if (p.canonical[r](x) == 0) members.push_back(x);
      chain.push_back(members);
    }
    // the action is inlined: find its name if it matches a configured one
    std::string action_name;
    for (const auto& [an, act] : cfg.actions)
      if (act == p.base) {
        action_name = an;
        break;
      }
    j["filtrations"][name] = json{{"action", action_name}, {"chain", chain}};
  }
  return j;
}

}  // namespace cohomlim
