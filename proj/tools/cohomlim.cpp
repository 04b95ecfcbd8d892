// Command-line front end: loads a config file, dispatches to the library,
// renders reports as a table or JSON. Exit codes: 0 all assertions hold,
// 1 a mathematical assertion failed, 2 input or validation error,
// 3 enumeration budget exceeded.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cohomlim/verify.hpp"

namespace {

struct GlobalFlags {
  std::string format = "table";
  bool oracle = false;
  bool deterministic = false;
  long long budget = 0;  // 0 = keep the config's budget
  std::uint64_t seed = 12345;
};

void add_common(CLI::App* cmd, GlobalFlags& flags) {
  cmd->add_option("--format", flags.format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_flag("--oracle", flags.oracle, "force brute-force cross-checks");
  cmd->add_flag("--deterministic", flags.deterministic, "omit timing from reports");
  cmd->add_option("--budget", flags.budget, "enumeration budget (candidate count)");
  cmd->add_option("--seed", flags.seed, "seed for randomized check tiers");
}

int emit(cohomlim::Report rep, const GlobalFlags& flags, long long elapsed_us) {
  rep.deterministic = flags.deterministic;
  rep.elapsed_us = elapsed_us;
  if (flags.format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.render_table();
  return rep.ok() ? 0 : 1;
}

std::vector<int> parse_orders(const std::string& chain) {
  std::string body = chain;
  if (body.rfind("orders=", 0) == 0) body = body.substr(7);
  std::vector<int> orders;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) orders.push_back(std::stoi(item));
  if (orders.empty()) throw cohomlim::validation_error("ParseError", "empty --chain");
  return orders;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-scale group cohomology: degree-1 classes, torsors, "
               "higher degrees, inverse limits and their commutation checks"};
  app.require_subcommand(1);

  GlobalFlags flags;
  std::string config_path, action, system, chain;
  int degree_n = 1, degree_i = 1;
  bool verify_flag = false;

  auto* validate = app.add_subcommand("validate", "validate every configured object");
  validate->add_option("config", config_path)->required();
  add_common(validate, flags);

  auto* h1cmd = app.add_subcommand("h1", "degree-1 cohomology classes of an action");
  h1cmd->add_option("config", config_path)->required();
  h1cmd->add_option("--action", action)->required();
  add_common(h1cmd, flags);

  auto* hncmd = app.add_subcommand("hn", "degree-n cohomology of an abelian action");
  hncmd->add_option("config", config_path)->required();
  hncmd->add_option("--action", action)->required();
  hncmd->add_option("--n", degree_n, "degree")->required();
  add_common(hncmd, flags);

  auto* torsors = app.add_subcommand("torsors", "classify torsors under an action");
  torsors->add_option("config", config_path)->required();
  torsors->add_option("--action", action)->required();
  torsors->add_flag("--classify", verify_flag, "accepted for compatibility; always classifies");
  add_common(torsors, flags);

  auto* theta = app.add_subcommand("theta", "limit commutation map of a system");
  theta->add_option("config", config_path)->required();
  theta->add_option("--system", system)->required();
  theta->add_option("--n", degree_n, "degree (default 1)");
  add_common(theta, flags);

  auto* lim1 = app.add_subcommand("lim1", "lim^1 of a tower (--i K for the H^{K-1} tower)");
  lim1->add_option("config", config_path)->required();
  lim1->add_option("--system", system)->required();
  lim1->add_option("--i", degree_i, "0 = coefficient tower (default)");
  add_common(lim1, flags);

  auto* exactness = app.add_subcommand("exactness", "exact-sequence instance at degree i");
  exactness->add_option("config", config_path)->required();
  exactness->add_option("--system", system)->required();
  exactness->add_option("--i", degree_i)->required();
  add_common(exactness, flags);

  auto* derived = app.add_subcommand("derived-tower", "quotient tower along the derived series");
  derived->add_option("config", config_path)->required();
  derived->add_option("--action", action)->required();
  derived->add_flag("--verify", verify_flag, "also verify the presentation");
  add_common(derived, flags);

  auto* present = app.add_subcommand("present", "present a group as the limit of a quotient tower");
  present->add_option("config", config_path)->required();
  present->add_option("--action", action)->required();
  present->add_option("--chain", chain, "orders=8,4,2,1")->required();
  add_common(present, flags);

  auto* verify_all_cmd = app.add_subcommand("verify-all", "run every invariant suite");
  verify_all_cmd->add_option("config", config_path)->required();
  add_common(verify_all_cmd, flags);

  CLI11_PARSE(app, argc, argv);

  degree_i = lim1->parsed() && !lim1->count("--i") ? 0 : degree_i;

  try {
    auto start = std::chrono::steady_clock::now();
    cohomlim::Config cfg = cohomlim::parse_config(config_path);
    if (const char* env = std::getenv("COHOMLIM_BUDGET"))
      cfg.budget.max_candidates = std::atoll(env);
    if (flags.budget > 0) cfg.budget.max_candidates = flags.budget;

    cohomlim::Report rep;
    if (validate->parsed()) rep = cohomlim::run_validate(cfg);
    else if (h1cmd->parsed()) rep = cohomlim::run_h1(cfg, action, flags.oracle);
    else if (hncmd->parsed()) rep = cohomlim::run_hn(cfg, action, degree_n, flags.oracle);
    else if (torsors->parsed()) rep = cohomlim::run_torsors(cfg, action);
    else if (theta->parsed()) rep = cohomlim::run_theta(cfg, system, degree_n);
    else if (lim1->parsed()) rep = cohomlim::run_lim1(cfg, system, degree_i);
    else if (exactness->parsed()) rep = cohomlim::run_exactness(cfg, system, degree_i);
    else if (derived->parsed()) rep = cohomlim::run_derived_tower(cfg, action, verify_flag);
    else if (present->parsed()) rep = cohomlim::run_present(cfg, action, parse_orders(chain));
    else if (verify_all_cmd->parsed()) rep = cohomlim::verify_all(cfg, flags.seed);

    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return emit(std::move(rep), flags, elapsed);
  } catch (const cohomlim::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cohomlim::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
