#include "hdlab/error.hpp"
#include "hdlab/estimator/chain.hpp"
#include "scenario_impl.hpp"

namespace hdlab::report::detail {

using arith::BigInt;
using arith::Rational;
using estimator::CoordinateTower;
using estimator::TieBreak;

namespace {

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

TieBreak policy(const json& c) { return c.at("policy").get<std::string>() == "smallest" ? TieBreak::kSmallest : TieBreak::kLargest; }

Rational frac(std::uint64_t a, std::uint64_t b) {
  return Rational(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(b)));
}

}  // namespace

void validate_chain(Validator& v, const json&) {
  v.natural("/depth", 4, 4096);
  v.rationals("/etas", 0, 1);
  v.choice("/policy", {"largest", "smallest"});
}

void run_chain(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto depth = natural_value(c, "depth");
  const auto tower = CoordinateTower::unit(p, depth);
  r.horizon = depth;
  for (const auto& e : c.at("etas")) {
    const Rational eta = rational_value(e);
    const std::string tag = "eta=" + eta.to_string();
    const auto res = estimator::chain_build(tower, eta, depth, policy(c));
    const auto& s = res.state;

    // Conditions (i) and (ii) re-read from the finished chain.
    bool cond = true;
    json first_bad = nullptr;
    for (std::uint64_t i = 1; i <= depth && cond; ++i) {
      const auto ci = s.subgroups[i].count(tower, i);
      const Rational mi(static_cast<long>(tower.m(i)));
      cond = ci == s.subgroups.back().count(tower, i) && frac(ci, tower.m(i)) >= eta - Rational(1) / mi;
      if (!cond) first_bad = i;
    }
    r.check(tag + " conditions (i) and (ii) hold at every level", cond,
            {{"steps", s.steps.size()}, {"first_failure", first_bad}});

    bool checkpoints = !s.checkpoints.empty();
    for (auto k : s.checkpoints) checkpoints = checkpoints && frac(s.counts[k], tower.m(k)) <= eta;
    r.check(tag + " ratio <= eta at every checkpoint", checkpoints, {{"checkpoints", s.checkpoints.size()}});

    const std::uint64_t tail = (3 * depth + 3) / 4;
    const auto est = arith::liminf_estimate(res.sequence, tail);
    const Rational tol(BigInt(1), BigInt(static_cast<unsigned long>(tower.m(depth))));
    r.check(tag + " window_min within 1/m(depth) of eta", abs(est.window_min - eta) <= tol,
            {{"window_min", rat(est.window_min)}, {"tail_start", tail}});

    if (eta == Rational(BigInt(1), BigInt(2)) && depth >= 4 && tower.m(4) == 4) {
      const auto& st = s.steps[3];
      const Rational em = eta * Rational(4);
      const BigInt lo = std::max(BigInt(static_cast<unsigned long>(st.l_low)), arith::ceil(em - Rational(1)));
      const BigInt hi = std::min(BigInt(static_cast<unsigned long>(st.l_high)), arith::floor(em));
      const bool ok = st.level == 4 && lo == 1 && hi == 2 &&
                      st.l == (policy(c) == TieBreak::kLargest ? 2u : 1u);
      r.check(tag + " level 4 admits l in {1, 2} and the policy picks its end", ok,
              {{"low", lo.get_str()}, {"high", hi.get_str()}, {"l", st.l}});
    }
    r.add_sequence(tag, res.sequence, tail, eta);
  }
}

void validate_interval(Validator& v, const json&) {
  v.natural("/depth", 4, 4096);
  v.rationals("/thetas", Rational(BigInt(1), BigInt(1u << 30)), Rational(BigInt(1), BigInt(2)));
  v.choice("/policy", {"largest", "smallest"});
}

void run_interval(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto depth = natural_value(c, "depth");
  const auto tower = CoordinateTower::unit(p, depth);
  r.horizon = depth;
  std::vector<std::size_t> even;
  for (std::size_t k = 0; k < tower.size(); ++k) {
    if (tower.level(k) % 2 == 0) even.push_back(k);
  }
  const estimator::ProperLimit xi{Rational(BigInt(1), BigInt(2)), "floor(i/2)/i"};
  {
    estimator::CoordinateSubgroup h(tower);
    for (auto k : even) h.insert(k);
    r.add_sequence("H", estimator::coordinate_density(tower, h, 1, depth), 0, xi.value);
  }
  for (const auto& t : c.at("thetas")) {
    const Rational theta = rational_value(t);
    const std::string tag = "theta=" + theta.to_string();
    const auto s = estimator::interval_sample(tower, even, xi, theta, depth, policy(c));
    bool exact = !s.levels.empty();
    for (const auto& lv : s.levels) exact = exact && lv.exact && lv.b_in_g == lv.h_in_g * lv.b_in_h;
    r.check(tag + " factorization exact at every level", exact,
            {{"levels", s.levels.size()}, {"chain_target", rat(s.target)}});
    r.check(tag + " final density within 1/m(depth) of theta", s.within_tolerance,
            {{"final", rat(s.final_value)}, {"final_decimal", s.final_value.to_decimal(20)}});
    r.add_sequence(tag, s.sequence, 0, theta);
  }
}

}  // namespace hdlab::report::detail
