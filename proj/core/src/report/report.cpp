#include "hdlab/report/report.hpp"

#include <algorithm>
#include <fstream>

#include "hdlab/error.hpp"

namespace hdlab::report {

std::string rat(const Rational& q) { return q.to_string(); }

SequenceRecord& RunReport::add_sequence(std::string label, DensitySequence seq, std::uint64_t tail_start,
                                        std::optional<Rational> exact) {
  SequenceRecord rec;
  rec.label = std::move(label);
  if (!seq.empty()) rec.window_min = arith::liminf_estimate(seq, tail_start).window_min;
  rec.sequence = std::move(seq);
  rec.exact = std::move(exact);
  sequences.push_back(std::move(rec));
  return sequences.back();
}

bool RunReport::check(std::string name, bool pass, nlohmann::json data) {
  for (const auto& a : assertions) {
    if (a.name == name) throw Error("duplicate assertion '" + name + "'");
  }
  assertions.push_back({std::move(name), pass, std::move(data)});
  return pass;
}

bool RunReport::all_pass() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "both") return Format::kBoth;
  throw InvalidArgument("unknown format '" + s + "' (json, csv or both)");
}

nlohmann::json to_json(const RunReport& r) {
  using nlohmann::json;
  json seqs = json::array();
  for (const auto& s : r.sequences) {
    json levels = json::array();
    for (const auto& lv : s.sequence.levels()) {
      levels.push_back({{"i", lv.i}, {"num", lv.num.get_str()}, {"den", lv.den.get_str()}});
    }
    json js = {{"label", s.label}, {"levels", std::move(levels)}};
    if (!s.sequence.empty()) {
      js["window_min"] = rat(s.window_min);
      js["window_min_decimal"] = s.window_min.to_decimal(20);
    }
    if (s.exact) js["exact"] = rat(*s.exact);
    seqs.push_back(std::move(js));
  }
  json asserts = json::array();
  for (const auto& a : r.assertions) asserts.push_back({{"name", a.name}, {"pass", a.pass}, {"data", a.data}});
  json out = {{"scenario", r.scenario}, {"p", r.p}, {"config", r.config}};
  out["horizon"] = r.horizon ? json(*r.horizon) : json(nullptr);
  out["sequences"] = std::move(seqs);
  out["assertions"] = std::move(asserts);
  out["pass"] = r.all_pass();
  return out;
}

void write_json(const RunReport& r, std::ostream& os) { os << to_json(r).dump(2) << '\n'; }

void write_csv(const RunReport& r, std::ostream& os) {
  os << "scenario,label,i,num,den,ratio_decimal_20dp\n";
  for (const auto& s : r.sequences) {
    for (const auto& lv : s.sequence.levels()) {
      os << r.scenario << ',' << s.label << ',' << lv.i << ',' << lv.num.get_str() << ',' << lv.den.get_str() << ','
         << lv.ratio().to_decimal(20) << '\n';
    }
  }
}

std::vector<std::filesystem::path> export_report(const RunReport& r, const std::filesystem::path& dir, Format f) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> out;
  auto emit = [&](const char* ext, auto&& writer) {
    const auto path = dir / (r.scenario + ext);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot write " + path.string());
    writer(r, os);
    if (!os) throw Error("write failed for " + path.string());
    out.push_back(path);
  };
  if (f != Format::kCsv) emit(".json", write_json);
  if (f != Format::kJson) emit(".csv", write_csv);
  return out;
}

}  // namespace hdlab::report
