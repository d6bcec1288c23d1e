#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdlab/arith/density.hpp"

namespace hdlab::report {

using arith::DensitySequence;
using arith::Rational;

struct Assertion {
  std::string name;
  bool pass = false;
  nlohmann::json data;
};

struct SequenceRecord {
  std::string label;
  DensitySequence sequence{2, {}};
  Rational window_min;
  std::optional<Rational> exact;
};

struct RunReport {
  std::string scenario;
  std::uint32_t p = 2;
  std::optional<std::uint64_t> horizon;
  nlohmann::json config;
  std::vector<SequenceRecord> sequences;
  std::vector<Assertion> assertions;
  double wall_seconds = 0;  // never serialized

  /// Adds a sequence with window_min taken over levels >= tail_start (all levels when 0).
  SequenceRecord& add_sequence(std::string label, DensitySequence seq, std::uint64_t tail_start = 0,
                               std::optional<Rational> exact = std::nullopt);
  /// Records an assertion; names must be unique within a report.
  bool check(std::string name, bool pass, nlohmann::json data = nlohmann::json::object());
  bool all_pass() const;
};

enum class Format { kJson, kCsv, kBoth };
Format parse_format(const std::string& s);

nlohmann::json to_json(const RunReport& r);
void write_json(const RunReport& r, std::ostream& os);
/// scenario,label,i,num,den,ratio_decimal_20dp
void write_csv(const RunReport& r, std::ostream& os);
/// Writes <dir>/<scenario>.json and/or <dir>/<scenario>.csv; returns the paths written.
std::vector<std::filesystem::path> export_report(const RunReport& r, const std::filesystem::path& dir, Format f);

/// Exact rational as a JSON string "a/b" (or "a").
std::string rat(const Rational& q);

}  // namespace hdlab::report
