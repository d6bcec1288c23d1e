// One PASS/FAIL line per acceptance criterion.  Usage: hdlab_acceptance <unit-test-binary>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdlab/report/scenarios.hpp"

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t assertions = 0;
  double seconds = 0;
  std::string failed;
};

void run_into(Outcome& o, const json& cfg) {
  const auto t0 = Clock::now();
  try {
    const auto r = hdlab::report::run(cfg);
    for (const auto& a : r.assertions) {
      ++o.assertions;
      if (!a.pass) {
        o.pass = false;
        if (o.failed.empty()) o.failed = r.scenario + ": " + a.name;
      }
    }
    if (r.assertions.empty()) {
      o.pass = false;
      o.failed = r.scenario + ": no assertions";
    }
  } catch (const std::exception& e) {
    o.pass = false;
    o.failed = cfg.value("scenario", "?") + ": " + e.what();
  }
  o.seconds += std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report(int n, const std::string& what, const Outcome& o, double limit) {
  const bool ok = o.pass && o.seconds < limit;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " (";
  if (o.assertions > 0) std::cout << o.assertions << " assertions, ";
  std::cout << o.seconds << " s, limit " << limit << " s)";
  if (!o.failed.empty()) std::cout << " first failure: " << o.failed;
  if (o.pass && o.seconds >= limit) std::cout << " over time";
  std::cout << std::endl;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: hdlab_acceptance <unit-test-binary>\n";
    return 2;
  }
  std::cout.precision(3);
  bool all = true;

  {
    Outcome o;
    run_into(o, {{"scenario", "zp2-ppower"}, {"p", 3}});
    all &= report(1, "zp2-ppower spectrum {0, 1/2, 1}", o, 1);
  }
  {
    Outcome o;
    run_into(o, {{"scenario", "apartment"}, {"p", 2}});
    all &= report(2, "apartment round trip and rejection", o, 1);
  }
  {
    Outcome o;
    for (const char* nu : {"1/4", "2/5", "1/2"}) run_into(o, {{"scenario", "prop34"}, {"p", 3}, {"nu", nu}});
    all &= report(3, "prop34 for nu in {1/4, 2/5, 1/2}", o, 10);
  }
  Outcome lowerp;
  {
    Outcome o;
    run_into(o, {{"scenario", "cyclotomic-lowerp"}, {"p", 3}, {"m", 1}, {"d", 1}, {"k", 4}});
    all &= report(4, "cyclotomic-lowerp index steps, tails and closed form", o, 120);
    lowerp.seconds = o.seconds;
  }
  {
    Outcome o;
    run_into(o, {{"scenario", "sl3-product"}, {"p", 2}, {"levels", 12}});
    all &= report(5, "sl3-product densities of H_1 and H_2", o, 10);
  }
  {
    Outcome o;
    run_into(o, {{"scenario", "heisenberg-pfd"}, {"p", 3}, {"k", 3}});
    all &= report(6, "heisenberg-pfd series agreement and D_{pi} = D_i^p", o, 300);
  }
  {
    run_into(lowerp, {{"scenario", "lowerp-bound"}, {"p", 3}, {"m", 1}, {"d", 1}, {"k", 4}});
    all &= report(7, "lowerp-bound for <s_0>, <a_0> and G", lowerp, 120);
  }
  {
    Outcome o;
    run_into(o, {{"scenario", "chain-eta"}, {"p", 2}, {"depth", 64}, {"etas", {"1/3", "1/2", "2/3"}}});
    all &= report(8, "chain-eta conditions (i), (ii) and window_min", o, 5);
  }
  {
    Outcome o;
    run_into(o, {{"scenario", "interval-sample"}, {"p", 2}, {"thetas", {"1/4", "3/8", "1/2"}}});
    all &= report(9, "interval-sample factorization and final density", o, 10);
  }
  {
    Outcome o;
    run_into(o, {{"scenario", "lift"}, {"p", 3}});
    all &= report(10, "lift image condition, kernel decay and samples", o, 10);
  }
  {
    Outcome o;
    const auto t0 = Clock::now();
    const std::string cmd = std::string("\"") + argv[1] + "\" --gtest_brief=1 > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    o.pass = rc == 0;
    if (!o.pass) o.failed = "unit suite exit status " + std::to_string(rc);
    all &= report(11, "property suites", o, 120);
  }
  return all ? 0 : 1;
}
