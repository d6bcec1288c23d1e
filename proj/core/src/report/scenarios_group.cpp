#include <cmath>
#include <random>

#include "hdlab/error.hpp"
#include "hdlab/estimator/compare.hpp"
#include "hdlab/estimator/experiments.hpp"
#include "hdlab/group/analysis.hpp"
#include "hdlab/group/congruence.hpp"
#include "hdlab/group/families.hpp"
#include "scenario_impl.hpp"

namespace hdlab::report::detail {

using arith::BigInt;
using arith::Rational;
using group::Element;
using group::SeriesKind;

namespace {

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

std::uint64_t ipow(std::uint64_t p, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= p;
  return r;
}

struct CyclotomicRun {
  std::shared_ptr<const group::CyclotomicSemidirect> g;
  group::HorizonRun run;
};

CyclotomicRun cyclotomic_run(const json& c) {
  const auto p = prime_value(c);
  const auto m = static_cast<std::uint32_t>(natural_value(c, "m"));
  const auto d = static_cast<std::uint32_t>(natural_value(c, "d"));
  const auto k = static_cast<std::uint32_t>(natural_value(c, "k"));
  auto family = [=](std::uint32_t depth) -> std::shared_ptr<const group::GroupOracle> {
    return std::make_shared<group::CyclotomicSemidirect>(p, m, d, depth);
  };
  CyclotomicRun out;
  out.run = group::stability_horizon({SeriesKind::kLowerP, 2ull * k + 1}, family, k - 1);
  out.g = std::dynamic_pointer_cast<const group::CyclotomicSemidirect>(out.run.deep_group);
  return out;
}

// Element of A with psi = pi^e.
Element pi_power(const group::CyclotomicSemidirect& g, std::size_t e) {
  const auto& ring = g.ring();
  std::vector<group::Coord> x(ring.width()), u(ring.width()), t(ring.width());
  ring.one(x.data());
  ring.uniformizer(u.data());
  for (std::size_t i = 0; i < e; ++i) {
    ring.mul(x.data(), u.data(), t.data());
    x = t;
  }
  Element out(g.coords(), 0);
  std::copy(x.begin(), x.end(), out.begin() + g.d());
  return out;
}

estimator::DensitySequence series_density(const group::GroupOracle& g, const group::SeriesTerms& terms,
                                          const std::vector<Element>& gens, std::uint64_t last) {
  return estimator::density(group::closure(gens, g), terms, g, 1, last);
}

}  // namespace

void validate_cyclotomic(Validator& v, const json&) {
  v.natural("/m", 1, 2);
  v.natural("/d", 1, 2);
  v.natural("/k", 3, 6);
}

void run_cyclotomic(const json& c, RunReport& r) {
  const auto cr = cyclotomic_run(c);
  const auto& g = *cr.g;
  const auto& deep = cr.run.deep;
  const auto h = cr.run.horizon;
  const std::uint64_t d = g.d(), phi = g.phi(), p = g.p();
  r.horizon = h;

  json idx = json::array();
  for (std::size_t i = 0; i < deep.size(); ++i) idx.push_back(deep.log_index(i));
  r.check("stability horizon >= 3", h >= 3, {{"horizon", h}, {"deep_log_indices", idx}});

  bool steps = true;
  json step_data = json::array();
  for (std::uint64_t i = 1; i < h; ++i) {
    const auto step = deep.log_index(i + 1) - deep.log_index(i);
    step_data.push_back(step);
    steps = steps && step == d + 1;
  }
  r.check("log_p |P_i : P_{i+1}| = d + 1 within the horizon", steps, {{"steps", step_data}});

  bool closed = true;
  json mismatch = nullptr;
  for (std::uint64_t i = 1; i <= h; ++i) {
    std::vector<Element> gens;
    for (std::size_t j = 0; j < d; ++j) gens.push_back(g.power(g.s(j), ipow(p, i - 1)));
    for (std::size_t e = 0; e < phi; ++e) gens.push_back(pi_power(g, i - 1 + e));
    if (!group::same_subgroup(group::closure(gens, g), deep[i])) {
      closed = false;
      mismatch = i;
      break;
    }
  }
  r.check("closed-form P_i agree with the generic recursion", closed, {{"first_mismatch", mismatch}});

  const Rational tol(BigInt(1), BigInt(20));
  const Rational es(BigInt(1), BigInt(d + 1)), ea(BigInt(1), BigInt((d + 1) * phi));
  for (const auto& [label, x, expect] : {std::tuple{"<s_0>", g.s(0), es}, std::tuple{"<a_0>", g.a(0), ea}}) {
    auto seq = series_density(g, deep, {x}, h);
    // Lower-limit estimate over the levels up to the horizon.
    const Rational wmin = arith::liminf_estimate(seq, 0).window_min;
    r.check(std::string(label) + " density tail within 0.05 of " + expect.to_string() + " at the horizon",
            abs(wmin - expect) <= tol,
            {{"window_min", rat(wmin)}, {"horizon_level", seq.back().i}, {"value_at_horizon", rat(seq.back().ratio())}});
    r.add_sequence(label, std::move(seq), 0, expect);
  }
}

void run_lowerp_bound(const json& c, RunReport& r) {
  const auto cr = cyclotomic_run(c);
  const auto& g = *cr.g;
  const auto h = cr.run.horizon;
  r.horizon = h;
  const std::uint64_t dim_g = g.d() + g.phi();
  std::vector<std::tuple<std::string, std::vector<Element>, std::uint64_t>> targets = {
      {"<s_0>", {g.s(0)}, 1}, {"<a_0>", {g.a(0)}, 1}, {"G", g.generators(), dim_g}};
  for (const auto& [label, gens, dim_h] : targets) {
    auto seq = series_density(g, cr.run.deep, gens, h);
    const auto b = estimator::lowerp_bound_check(seq, dim_h, dim_g, h);
    r.check(label + " density >= dim(H)/dim(G)^2 - 1/m(horizon)", b.pass,
            {{"bound", rat(b.bound)}, {"slack", rat(b.slack)}, {"observed", rat(b.observed)}});
    r.add_sequence(label, std::move(seq));
  }
}

void validate_sl3(Validator& v, const json&) {
  v.natural("/levels", 3, 24);
  v.natural("/seed", 0, UINT64_MAX);
}

namespace {

// Random element of the generated group with congruence level exactly 1; for
// p = 2 additionally g^2 outside level 3.
Element pick_level_one(const group::GroupOracle& g, std::mt19937_64& rng, bool square_filter) {
  const auto& gens = g.generators();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Element x = g.identity();
    for (std::size_t i = 0; i < gens.size(); ++i) x = g.multiply(x, g.power(gens[i], rng() % g.p()));
    if (g.congruence_level(x).value_or(0) != 1) continue;
    if (square_filter && g.congruence_level(g.power(x, 2)).value_or(0) >= 3) continue;
    return x;
  }
  throw Error("no level-one element found");
}

}  // namespace

void run_sl3(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto levels = static_cast<std::uint32_t>(natural_value(c, "levels"));
  auto g1 = std::make_shared<group::CongruenceGroup>(group::FinLocalRing::truncated_series(p, levels + 1));
  auto g2 = std::make_shared<group::CongruenceGroup>(group::FinLocalRing::integers_mod(p, levels + 1));
  const group::DirectProduct g({g1, g2});
  std::mt19937_64 rng(c.at("seed").get<std::uint64_t>());
  const Element x1 = g.embed(pick_level_one(*g1, rng, false), 0);
  const Element x2 = g.embed(pick_level_one(*g2, rng, p == 2), 1);

  auto h1 = estimator::cyclic_congruence_density(x1, g, 2, levels);
  auto h2 = estimator::cyclic_congruence_density(x2, g, 2, levels);
  const Rational target(BigInt(1), BigInt(16));

  bool bound = true;
  json h1_data = json::array();
  for (const auto& lv : h1.levels()) {
    const std::uint64_t i = lv.i - 1;
    std::uint64_t lg = 0;
    while (ipow(p, lg + 1) <= i) ++lg;
    const Rational b(BigInt(static_cast<unsigned long>(lg + 1)), BigInt(static_cast<unsigned long>(16 * i)));
    h1_data.push_back({{"level", lv.i}, {"value", rat(lv.ratio())}, {"bound", rat(b)}});
    bound = bound && lv.ratio() <= b;
  }
  r.check("H_1 density <= (floor(log_p i) + 1)/(16 i)", bound, {{"levels", h1_data}});
  r.check("H_1 density decreases over the window", h1.back().ratio() < h1.levels().front().ratio(),
          {{"first", rat(h1.levels().front().ratio())}, {"last", rat(h1.back().ratio())}});

  const Rational last2 = h2.back().ratio();
  r.check("H_2 density within 0.01 of 1/16 by the last level", abs(last2 - target) <= Rational(BigInt(1), BigInt(100)),
          {{"last", rat(last2)}, {"level", h2.back().i}});
  r.add_sequence("H_1", std::move(h1), 0, Rational(0));
  r.add_sequence("H_2", std::move(h2), 0, target);

  // P_i = SL_3^i on the small truncations, from the literal lower p-series.
  json small = json::array();
  bool congruence = true;
  for (auto ring : {group::FinLocalRing::truncated_series(p, 3), group::FinLocalRing::integers_mod(p, 3)}) {
    const group::CongruenceGroup s(ring);
    const auto terms = group::series_terms({SeriesKind::kLowerP, 3}, s);
    json idx = json::array();
    for (std::uint32_t i = 1; i < terms.size(); ++i) {
      idx.push_back(terms.log_index(i));
      congruence = congruence && terms.log_index(i) == s.congruence_log_index(i).value_or(UINT64_MAX);
    }
    small.push_back({{"ring", ring.name()}, {"log_indices", idx}});
  }
  r.check("lower p-series terms are the congruence subgroups on small truncations", congruence, {{"groups", small}});
}

void validate_heisenberg(Validator& v, const json&) { v.natural("/k", 2, 4); }

namespace {

std::shared_ptr<const group::GroupOracle> heisenberg(std::uint32_t p, std::uint32_t k) {
  return std::make_shared<group::UnitriangularGroup>(p, k, 3);
}

}  // namespace

void run_heisenberg(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto k = static_cast<std::uint32_t>(natural_value(c, "k"));
  auto family = [p](std::uint32_t depth) { return heisenberg(p, depth); };
  auto h = [](const group::GroupOracle& g) {
    return std::vector<Element>{dynamic_cast<const group::UnitriangularGroup&>(g).elementary(0, 1, 1)};
  };
  const Rational third(BigInt(1), BigInt(3));
  const auto rep = estimator::pfd_equality_experiment(family, k, h, third);
  json horizons = json::object();
  std::uint64_t min_h = UINT64_MAX;
  json at = json::object();
  for (const auto& t : rep.tails) {
    const auto name = group::to_string(t.kind);
    horizons[name] = t.horizon;
    at[name] = rat(t.at_horizon);
    min_h = std::min(min_h, t.horizon);
    r.add_sequence(name, t.sequence, 0, third);
  }
  r.horizon = min_h;
  const Rational tol(BigInt(1), BigInt(10));
  r.check("pairwise gaps at the horizon <= 0.1", rep.max_pairwise_gap <= tol,
          {{"gap", rat(rep.max_pairwise_gap)}, {"values", at}, {"horizons", horizons}});
  r.check("each density within 0.1 of 1/3 at the horizon", rep.max_gap_to_expected <= tol,
          {{"gap", rat(rep.max_gap_to_expected)}, {"usable_levels", rep.usable_levels}});

  const auto g = heisenberg(p, k);
  const auto dims = group::series_terms({SeriesKind::kDimension, ipow(p, k)}, *g);
  const auto dh = rep.tails.back().horizon;
  const auto pw = group::powerful_uniform_check(group::whole_group(*g), *g, &dims, dh);
  bool eq = !pw.dimension_checks.empty();
  json checks = json::array();
  for (const auto& ck : pw.dimension_checks) {
    checks.push_back({{"i", ck.i}, {"equal", ck.equal}});
    eq = eq && ck.equal;
  }
  r.check("D_{pi} = D_i^p within the horizon", eq, {{"checks", checks}, {"horizon", dh}});
}

void run_compare(const json& c, RunReport& r) {
  const auto p = prime_value(c);
  const auto k = static_cast<std::uint32_t>(natural_value(c, "k"));
  const auto shallow = heisenberg(p, k - 1);
  const auto deep = heisenberg(p, k);
  const group::SeriesSpec xs{SeriesKind::kPPower, k + 1ull}, ys{SeriesKind::kDimension, ipow(p, k)};
  const auto x = group::series_terms(xs, *deep);
  const auto y = group::series_terms(ys, *deep);
  const auto xh = group::stability_horizon(group::series_terms(xs, *shallow), x);
  const auto yh = group::stability_horizon(group::series_terms(ys, *shallow), y);
  r.horizon = std::min(xh, yh);
  auto star = [p](std::uint64_t i) { return ipow(p, i); };
  auto prime = [p](std::uint64_t j) {
    std::uint64_t e = 0;
    while (ipow(p, e + 1) <= j) ++e;
    return e;
  };
  const auto rep = estimator::compare_series(x, y, star, prime, *deep, xh, yh);
  const std::uint64_t dim_g = 3;
  bool bounded = true;
  json seqs = json::array();
  for (const auto& s : rep.sequences) {
    json lv = json::array();
    for (const auto& l : s.levels) {
      lv.push_back({{"index", l.index}, {"paired", l.paired}, {"num", l.num}, {"den", l.den}, {"ratio", rat(l.ratio)}});
      bounded = bounded && l.num <= dim_g;
    }
    seqs.push_back({{"label", s.label}, {"levels", lv}, {"decaying", s.decaying()}});
  }
  r.check("ratios bounded by dim(G)/den", bounded, {{"sequences", seqs}});
  r.check("comparison verdict compatible", rep.compatible, {{"verdict", rep.verdict}, {"horizons", {xh, yh}}});
}

}  // namespace hdlab::report::detail
