#include "hdlab/report/scenarios.hpp"

#include <chrono>

#include "hdlab/error.hpp"
#include "scenario_impl.hpp"

namespace hdlab::report {

using detail::Entry;
using nlohmann::json;

namespace {

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"zp2-ppower", "procyclic subgroups of Z_p^2 under the p-power series; keys: p, window, lambdas, mus",
       {{"p", 3}, {"window", 24}, {"lambdas", {"0", "1", "p"}}, {"mus", {"p"}}},
       detail::validate_zp2, detail::run_zp2},
      {"apartment", "realize and recover an apartment spectrum; keys: p, xi, eta, zeta, levels, reject",
       {{"p", 2}, {"xi", "1/5"}, {"eta", "1/4"}, {"zeta", "3/4"}, {"levels", 30},
        {"reject", {{"1/3", "1/2", "3/4"}}}},
       detail::validate_apartment, detail::run_apartment},
      {"prop34", "procyclic subgroup of prescribed density nu; keys: p, nu, window, f_budget",
       {{"p", 3}, {"nu", "2/5"}, {"window", 82}, {"f_budget", 1u << 20}},
       detail::validate_prop34, detail::run_prop34},
      {"lift", "lift the prop34 filtration along Z_p^n -> Z_p^2; keys: p, nu, window, n, samples, seed",
       {{"p", 3}, {"nu", "2/5"}, {"window", 8}, {"n", 3}, {"samples", 4}, {"seed", 1}, {"f_budget", 1u << 20}},
       detail::validate_lift, detail::run_lift},
      {"cyclotomic-lowerp", "lower p-series of Z_p^d x| Z_p[zeta]; keys: p, m, d, k",
       {{"p", 3}, {"m", 1}, {"d", 1}, {"k", 4}},
       detail::validate_cyclotomic, detail::run_cyclotomic},
      {"sl3-product", "SL_3^1(F_p[[t]]) x SL_3^1(Z_p) under the lower p-series; keys: p, levels, seed",
       {{"p", 2}, {"levels", 12}, {"seed", 7}},
       detail::validate_sl3, detail::run_sl3},
      {"heisenberg-pfd", "p-power, Frattini and dimension subgroup densities in the Heisenberg group; keys: p, k",
       {{"p", 3}, {"k", 3}},
       detail::validate_heisenberg, detail::run_heisenberg},
      {"lowerp-bound", "lower bound dim(H)/dim(G)^2 on the cyclotomic family; keys: p, m, d, k",
       {{"p", 3}, {"m", 1}, {"d", 1}, {"k", 4}},
       detail::validate_cyclotomic, detail::run_lowerp_bound},
      {"chain-eta", "ascending chain of prescribed density in prod Z/p; keys: p, depth, etas, policy",
       {{"p", 2}, {"depth", 64}, {"etas", {"1/3", "1/2", "2/3"}}, {"policy", "largest"}},
       detail::validate_chain, detail::run_chain},
      {"interval-sample", "densities in (0, 1/2] inside the even-level subproduct; keys: p, depth, thetas, policy",
       {{"p", 2}, {"depth", 64}, {"thetas", {"1/4", "3/8", "1/2"}}, {"policy", "largest"}},
       detail::validate_interval, detail::run_interval},
      {"compare-series", "p-power against thinned dimension subgroup series, Heisenberg group; keys: p, k",
       {{"p", 3}, {"k", 3}},
       detail::validate_heisenberg, detail::run_compare},
  };
  return list;
}

const Entry& entry(const std::string& name) {
  for (const auto& e : entries()) {
    if (name == e.name) return e;
  }
  throw InvalidArgument("unknown scenario '" + name + "'");
}

std::string joined(const std::vector<ConfigError>& errs) {
  std::string out;
  for (const auto& e : errs) out += "\n  " + e.pointer + ": " + e.message;
  return out;
}

}  // namespace

const std::vector<ScenarioInfo>& registered_scenarios() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> out;
    for (const auto& e : entries()) out.push_back({e.name, e.summary, e.defaults});
    return out;
  }();
  return infos;
}

const ScenarioInfo& scenario_info(const std::string& name) {
  for (const auto& s : registered_scenarios()) {
    if (s.name == name) return s;
  }
  throw InvalidArgument("unknown scenario '" + name + "'");
}

json resolve_config(const json& cfg) {
  if (!cfg.is_object() || !cfg.contains("scenario") || !cfg.at("scenario").is_string()) {
    throw InvalidArgument("config needs a \"scenario\" string");
  }
  json out = entry(cfg.at("scenario").get<std::string>()).defaults;
  out.merge_patch(cfg);
  return out;
}

std::vector<ConfigError> validate(const json& cfg, bool strict) {
  Validator top(cfg);
  if (!cfg.is_object()) {
    top.fail("", "config must be a JSON object");
    return top.errors();
  }
  if (!top.require("/scenario")) return top.errors();
  const Entry* e = nullptr;
  try {
    e = &entry(cfg.at("scenario").get<std::string>());
  } catch (const std::exception&) {
    top.fail("/scenario", "unknown scenario");
    return top.errors();
  }
  if (strict) top.require("/p");
  json merged = e->defaults;
  merged.merge_patch(cfg);
  Validator v(merged);
  if (v.prime("/p")) e->validate(v, merged);
  auto errs = top.errors();
  for (const auto& x : v.errors()) {
    const bool dup = std::any_of(errs.begin(), errs.end(), [&](const ConfigError& y) { return y.pointer == x.pointer; });
    if (!dup) errs.push_back(x);
  }
  return errs;
}

RunReport run(const json& cfg) {
  const json resolved = resolve_config(cfg);
  const auto errs = validate(resolved, false);
  if (!errs.empty()) throw InvalidArgument("invalid config:" + joined(errs));
  const Entry& e = entry(resolved.at("scenario").get<std::string>());
  RunReport r;
  r.scenario = e.name;
  r.p = detail::prime_value(resolved);
  r.config = resolved;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    e.run(resolved, r);
  } catch (const std::exception& ex) {
    r.assertions.push_back({"completed", false, {{"error", ex.what()}}});
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace hdlab::report
