#include "hdlab/report/config.hpp"

#include <fstream>

#include "hdlab/error.hpp"

namespace hdlab::report {

using nlohmann::json;

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("config " + path.string() + " is not valid JSON: " + e.what());
  }
}

namespace {

std::string to_pointer(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  std::string out = "/";
  for (char c : path) out += c == '.' ? '/' : c;
  return out;
}

}  // namespace

void apply_override(json& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw InvalidArgument("override '" + assignment + "' is not path=value");
  const std::string path = to_pointer(assignment.substr(0, eq));
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  try {
    cfg[json::json_pointer(path)] = std::move(value);
  } catch (const json::exception& e) {
    throw InvalidArgument("override path '" + path + "': " + e.what());
  }
}

const json* Validator::find(const std::string& pointer) const {
  const json::json_pointer ptr(pointer);
  return cfg_.contains(ptr) ? &cfg_.at(ptr) : nullptr;
}

void Validator::fail(const std::string& pointer, std::string message) {
  errors_.push_back({pointer, std::move(message)});
}

bool Validator::require(const std::string& pointer) {
  if (find(pointer)) return true;
  fail(pointer, "required");
  return false;
}

std::optional<std::uint64_t> Validator::natural(const std::string& pointer, std::uint64_t lo, std::uint64_t hi) {
  const json* v = find(pointer);
  if (!v) {
    fail(pointer, "required");
    return std::nullopt;
  }
  if (!v->is_number_integer() || v->get<std::int64_t>() < 0) {
    fail(pointer, "expected a natural number");
    return std::nullopt;
  }
  const auto x = v->get<std::uint64_t>();
  if (x < lo || x > hi) {
    fail(pointer, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return std::nullopt;
  }
  return x;
}

std::optional<std::uint32_t> Validator::prime(const std::string& pointer) {
  const auto p = natural(pointer, 2, 1u << 16);
  if (!p) return std::nullopt;
  for (std::uint64_t q = 2; q * q <= *p; ++q) {
    if (*p % q == 0) {
      fail(pointer, std::to_string(*p) + " is not prime");
      return std::nullopt;
    }
  }
  return static_cast<std::uint32_t>(*p);
}

arith::Rational rational_value(const json& v) {
  if (v.is_number_integer()) return arith::Rational(v.get<long>());
  if (v.is_string()) return arith::Rational::parse(v.get<std::string>());
  throw InvalidArgument("expected a rational as \"a/b\" or an integer");
}

std::uint64_t natural_value(const json& cfg, const char* key) { return cfg.at(key).get<std::uint64_t>(); }

std::optional<arith::Rational> Validator::rational(const std::string& pointer, const arith::Rational& lo,
                                                   const arith::Rational& hi) {
  const json* v = find(pointer);
  if (!v) {
    fail(pointer, "required");
    return std::nullopt;
  }
  arith::Rational q;
  try {
    q = rational_value(*v);
  } catch (const Error& e) {
    fail(pointer, e.what());
    return std::nullopt;
  }
  if (q < lo || q > hi) {
    fail(pointer, "must lie in [" + lo.to_string() + ", " + hi.to_string() + "]");
    return std::nullopt;
  }
  return q;
}

std::vector<arith::Rational> Validator::rationals(const std::string& pointer, const arith::Rational& lo,
                                                  const arith::Rational& hi) {
  std::vector<arith::Rational> out;
  const json* v = find(pointer);
  if (!v) {
    fail(pointer, "required");
    return out;
  }
  if (!v->is_array() || v->empty()) {
    fail(pointer, "expected a nonempty array");
    return out;
  }
  for (std::size_t i = 0; i < v->size(); ++i) {
    if (auto q = rational(pointer + "/" + std::to_string(i), lo, hi)) out.push_back(*q);
  }
  return out;
}

std::optional<std::string> Validator::choice(const std::string& pointer, const std::set<std::string>& allowed) {
  const json* v = find(pointer);
  if (!v) {
    fail(pointer, "required");
    return std::nullopt;
  }
  if (!v->is_string() || !allowed.count(v->get<std::string>())) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
    fail(pointer, "expected one of: " + list);
    return std::nullopt;
  }
  return v->get<std::string>();
}

}  // namespace hdlab::report
