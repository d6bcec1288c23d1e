#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdlab/arith/rational.hpp"

namespace hdlab::report {

struct ConfigError {
  std::string pointer;
  std::string message;
};

nlohmann::json load_config(const std::filesystem::path& path);

/// Applies "path=value" where path is a JSON pointer ("/a/0/b") or dotted
/// ("a.0.b").  The value is parsed as JSON when possible, otherwise taken as a
/// string.
void apply_override(nlohmann::json& cfg, const std::string& assignment);

/// Collects schema errors keyed by JSON pointer.
class Validator {
 public:
  explicit Validator(const nlohmann::json& cfg) : cfg_(cfg) {}

  const nlohmann::json* find(const std::string& pointer) const;
  void fail(const std::string& pointer, std::string message);
  bool require(const std::string& pointer);

  std::optional<std::uint64_t> natural(const std::string& pointer, std::uint64_t lo, std::uint64_t hi);
  std::optional<std::uint32_t> prime(const std::string& pointer);
  std::optional<arith::Rational> rational(const std::string& pointer, const arith::Rational& lo,
                                          const arith::Rational& hi);
  std::vector<arith::Rational> rationals(const std::string& pointer, const arith::Rational& lo,
                                         const arith::Rational& hi);
  std::optional<std::string> choice(const std::string& pointer, const std::set<std::string>& allowed);

  const std::vector<ConfigError>& errors() const { return errors_; }

 private:
  const nlohmann::json& cfg_;
  std::vector<ConfigError> errors_;
};

/// Value parsing for already validated configs.
arith::Rational rational_value(const nlohmann::json& v);
std::uint64_t natural_value(const nlohmann::json& cfg, const char* key);

}  // namespace hdlab::report
