#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hdlab/error.hpp"
#include "hdlab/report/config.hpp"
#include "hdlab/report/report.hpp"
#include "hdlab/report/scenarios.hpp"

using namespace hdlab;
using namespace hdlab::report;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_error(const json& cfg) {
  const auto errs = validate(cfg);
  return errs.empty() ? "" : errs.front().pointer;
}

}  // namespace

TEST(Report, EmptyReportCsvIsHeaderOnly) {
  RunReport r;
  r.scenario = "empty";
  r.p = 2;
  const auto dir = std::filesystem::temp_directory_path() / "hdlab_report_empty";
  std::filesystem::create_directories(dir);
  export_report(r, dir, Format::kBoth);
  EXPECT_EQ(slurp(dir / "empty.csv"), "scenario,label,i,num,den,ratio_decimal_20dp\n");
  const auto j = json::parse(slurp(dir / "empty.json"));
  EXPECT_TRUE(j.at("sequences").empty());
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(Report, DuplicateAssertionThrows) {
  RunReport r;
  r.check("a", true);
  EXPECT_THROW(r.check("a", true), Error);
}

TEST(Report, RunsAreByteIdentical) {
  const auto cfg = resolve_config({{"scenario", "zp2-ppower"}, {"p", 3}, {"window", 10}});
  const auto dir = std::filesystem::temp_directory_path() / "hdlab_report_det";
  std::string out[2];
  for (int k = 0; k < 2; ++k) {
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto r = run(cfg);
    EXPECT_TRUE(r.all_pass());
    export_report(r, dir, Format::kBoth);
    out[k] = slurp(dir / "zp2-ppower.json") + slurp(dir / "zp2-ppower.csv");
  }
  EXPECT_EQ(out[0], out[1]);
  const auto j = json::parse(slurp(dir / "zp2-ppower.json"));
  for (const char* key : {"scenario", "p", "config", "horizon", "sequences", "assertions", "pass"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Config, Validation) {
  EXPECT_EQ(first_error({{"scenario", "prop34"}, {"nu", "2/5"}}), "/p");
  EXPECT_EQ(first_error({{"scenario", "prop34"}, {"p", 3}, {"nu", "3/4"}}), "/nu");
  EXPECT_EQ(first_error({{"scenario", "prop34"}, {"p", 4}, {"nu", "2/5"}}), "/p");
  EXPECT_EQ(first_error({{"scenario", "nope"}, {"p", 3}}), "/scenario");
  EXPECT_EQ(first_error({{"scenario", "prop34"}, {"p", 3}, {"nu", "2/5"}}), "");
}

TEST(Config, Overrides) {
  json cfg = {{"scenario", "prop34"}, {"p", 3}};
  apply_override(cfg, "nu=\"1/4\"");
  apply_override(cfg, "group.k=5");
  apply_override(cfg, "/window=12");
  apply_override(cfg, "label=plain");
  EXPECT_EQ(cfg.at("nu"), "1/4");
  EXPECT_EQ(cfg.at("group").at("k"), 5);
  EXPECT_EQ(cfg.at("window"), 12);
  EXPECT_EQ(cfg.at("label"), "plain");
  EXPECT_THROW(apply_override(cfg, "novalue"), InvalidArgument);
}

TEST(Scenarios, RegistryIsComplete) {
  std::vector<std::string> names;
  for (const auto& s : registered_scenarios()) names.push_back(s.name);
  for (const char* n : {"zp2-ppower", "apartment", "prop34", "lift", "cyclotomic-lowerp", "lowerp-bound",
                        "sl3-product", "heisenberg-pfd", "compare-series", "chain-eta", "interval-sample"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
}
