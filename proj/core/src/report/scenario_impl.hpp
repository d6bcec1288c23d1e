#pragma once

#include <nlohmann/json.hpp>

#include "hdlab/report/config.hpp"
#include "hdlab/report/report.hpp"

namespace hdlab::report::detail {

using nlohmann::json;

struct Entry {
  const char* name;
  const char* summary;
  json defaults;
  void (*validate)(Validator&, const json&);
  void (*run)(const json&, RunReport&);
};

void validate_zp2(Validator&, const json&);
void run_zp2(const json&, RunReport&);
void validate_apartment(Validator&, const json&);
void run_apartment(const json&, RunReport&);
void validate_prop34(Validator&, const json&);
void run_prop34(const json&, RunReport&);
void validate_lift(Validator&, const json&);
void run_lift(const json&, RunReport&);

void validate_cyclotomic(Validator&, const json&);
void run_cyclotomic(const json&, RunReport&);
void run_lowerp_bound(const json&, RunReport&);
void validate_sl3(Validator&, const json&);
void run_sl3(const json&, RunReport&);
void validate_heisenberg(Validator&, const json&);
void run_heisenberg(const json&, RunReport&);
void run_compare(const json&, RunReport&);

void validate_chain(Validator&, const json&);
void run_chain(const json&, RunReport&);
void validate_interval(Validator&, const json&);
void run_interval(const json&, RunReport&);

inline std::uint32_t prime_value(const json& c) { return c.at("p").get<std::uint32_t>(); }

}  // namespace hdlab::report::detail
