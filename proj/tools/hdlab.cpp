#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "hdlab/error.hpp"
#include "hdlab/report/scenarios.hpp"

namespace {

using nlohmann::json;
namespace rep = hdlab::report;

int cmd_list() {
  for (const auto& s : rep::registered_scenarios()) {
    std::cout << s.name << "\n  " << s.summary << "\n  defaults: " << s.defaults.dump() << "\n";
  }
  return 0;
}

int cmd_validate(const std::string& path) {
  const auto errs = rep::validate(rep::load_config(path));
  if (errs.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const auto& e : errs) std::cerr << (e.pointer.empty() ? "/" : e.pointer) << ": " << e.message << "\n";
  return 1;
}

int cmd_run(const std::string& name, const std::string& config, const std::vector<std::string>& sets,
            const std::string& out, const std::string& format) {
  json cfg = config.empty() ? json::object() : rep::load_config(config);
  if (cfg.contains("scenario") && cfg.at("scenario") != name) {
    throw hdlab::InvalidArgument("config is for scenario " + cfg.at("scenario").dump() + ", not '" + name + "'");
  }
  cfg["scenario"] = name;
  for (const auto& s : sets) rep::apply_override(cfg, s);
  const auto fmt = rep::parse_format(format);
  const auto r = rep::run(cfg);
  for (const auto& path : rep::export_report(r, out, fmt)) std::cerr << "wrote " << path.string() << "\n";
  for (const auto& a : r.assertions) std::cout << (a.pass ? "PASS " : "FAIL ") << a.name << "\n";
  std::cerr << "wall time " << r.wall_seconds << " s\n";
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hausdorff dimension experiments for pro-p groups"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a registered scenario");
  std::string name, config, out = "out", format = "both";
  std::vector<std::string> sets;
  run->add_option("scenario", name, "scenario name")->required();
  run->add_option("--config", config, "JSON config file");
  run->add_option("--set", sets, "override path=value")->take_all();
  run->add_option("--out", out, "output directory");
  run->add_option("--format", format, "json, csv or both")->check(CLI::IsMember({"json", "csv", "both"}));

  auto* val = app.add_subcommand("validate", "check a config without running it");
  std::string vconfig;
  val->add_option("--config", vconfig, "JSON config file")->required();

  app.add_subcommand("list", "registered scenarios and their parameters");

  CLI11_PARSE(app, argc, argv);
  try {
    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand("validate")) return cmd_validate(vconfig);
    return cmd_run(name, config, sets, out, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
