#include <gtest/gtest.h>

#include <random>

#include "hdlab/error.hpp"
#include "hdlab/estimator/density.hpp"
#include "hdlab/group/analysis.hpp"
#include "hdlab/group/congruence.hpp"
#include "hdlab/group/families.hpp"
#include "hdlab/group/scenario_block.hpp"

using namespace hdlab;
using namespace hdlab::group;

namespace {

using Oracle = std::shared_ptr<const GroupOracle>;

std::uint64_t log_p(std::uint64_t n, std::uint32_t p) {
  std::uint64_t e = 0;
  while (n > 1) {
    EXPECT_EQ(n % p, 0u);
    n /= p;
    ++e;
  }
  return e;
}

Element random_element(const GroupOracle& g, std::mt19937_64& rng) {
  Element x = g.identity();
  for (int t = 0; t < 12; ++t) {
    const auto& gens = g.generators();
    Element y = gens[rng() % gens.size()];
    if (rng() % 2) y = g.inverse(y);
    x = g.multiply(x, y);
  }
  return x;
}

std::uint64_t naive_order(const GroupOracle& g, const Element& x) {
  std::uint64_t n = 1;
  for (Element y = x; y != g.identity(); y = g.multiply(y, x)) ++n;
  return n;
}

// Every family instance with at most 2^14 elements used by the property suite.
std::vector<Oracle> small_instances() {
  std::vector<Oracle> out;
  out.push_back(std::make_shared<CyclicGroup>(2, 5));
  out.push_back(std::make_shared<CyclicGroup>(3, 4));
  out.push_back(std::make_shared<CoordinateProduct>(2, 8));
  out.push_back(std::make_shared<CoordinateProduct>(3, 5));
  out.push_back(std::make_shared<UnitriangularGroup>(2, 2));
  out.push_back(std::make_shared<UnitriangularGroup>(2, 3));
  out.push_back(std::make_shared<UnitriangularGroup>(3, 2));
  out.push_back(std::make_shared<UnitriangularGroup>(2, 1, 4));
  out.push_back(std::make_shared<CongruenceGroup>(FinLocalRing::integers_mod(2, 2)));
  out.push_back(std::make_shared<CongruenceGroup>(FinLocalRing::integers_mod(3, 2)));
  out.push_back(std::make_shared<CongruenceGroup>(FinLocalRing::truncated_series(2, 2)));
  out.push_back(std::make_shared<CongruenceGroup>(FinLocalRing::truncated_series(3, 2)));
  out.push_back(std::make_shared<CongruenceGroup>(FinLocalRing::integers_mod(2, 3), 2));
  out.push_back(std::make_shared<CyclotomicSemidirect>(3, 1, 1, 2));
  out.push_back(std::make_shared<CyclotomicSemidirect>(2, 2, 1, 2));
  out.push_back(std::make_shared<CyclotomicSemidirect>(3, 1, 2, 1));
  out.push_back(std::make_shared<DirectProduct>(std::vector<Oracle>{std::make_shared<CyclicGroup>(2, 3),
                                                                    std::make_shared<UnitriangularGroup>(2, 2)}));
  return out;
}

}  // namespace

TEST(Ring, IntegersModMatchMachineArithmetic) {
  const auto r = FinLocalRing::integers_mod(3, 4);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const Coord a = rng() % 81, b = rng() % 81;
    Coord s, m;
    r.add(&a, &b, &s);
    r.mul(&a, &b, &m);
    EXPECT_EQ(s, (a + b) % 81);
    EXPECT_EQ(m, (a * b) % 81);
    if (a % 3) {
      Coord inv;
      r.unit_inverse(&a, &inv);
      EXPECT_EQ((inv * a) % 81, 1u);
    }
  }
}

TEST(Ring, TruncatedSeriesMatchNaiveConvolution) {
  const auto r = FinLocalRing::truncated_series(2, 5);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    std::vector<Coord> a(5), b(5), m(5), want(5, 0);
    for (auto& x : a) x = rng() % 2;
    for (auto& x : b) x = rng() % 2;
    r.mul(a.data(), b.data(), m.data());
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; i + j < 5; ++j) want[i + j] = (want[i + j] + a[i] * b[j]) % 2;
    }
    EXPECT_EQ(m, want);
  }
}

TEST(Ring, CyclotomicRootOfUnity) {
  for (auto [p, m] : {std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
    const auto r = FinLocalRing::cyclotomic(p, m, 3);
    const std::size_t w = r.width();
    std::vector<Coord> one(w), pi(w), zeta(w), acc(w), tmp(w), sum(w, 0);
    r.one(one.data());
    r.uniformizer(pi.data());
    r.add(one.data(), pi.data(), zeta.data());
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < m; ++i) order *= p;
    acc = one;
    for (std::uint64_t i = 0; i < order; ++i) {
      r.add(sum.data(), acc.data(), tmp.data());
      sum = tmp;
      r.mul(acc.data(), zeta.data(), tmp.data());
      acc = tmp;
    }
    EXPECT_TRUE(r.is_one(acc.data())) << r.name();
    // 1 + zeta + ... + zeta^{p^m - 1} = 0 and zeta^{p^{m-1}} != 1.
    EXPECT_TRUE(r.is_zero(sum.data())) << r.name();
    std::vector<Coord> pp(w);
    r.from_int(p, pp.data());
    EXPECT_EQ(r.level(pp.data()), w) << r.name();
  }
}

TEST(Families, GroupAxiomsOnRandomWords) {
  std::mt19937_64 rng(4);
  for (const auto& g : small_instances()) {
    for (int t = 0; t < 40; ++t) {
      const auto a = random_element(*g, rng), b = random_element(*g, rng), c = random_element(*g, rng);
      EXPECT_EQ(g->multiply(g->multiply(a, b), c), g->multiply(a, g->multiply(b, c))) << g->format(a);
      EXPECT_EQ(g->multiply(a, g->inverse(a)), g->identity());
      EXPECT_EQ(g->multiply(g->identity(), a), a);
    }
  }
}

TEST(ClosureOracle, OrderMatchesStructuralFormula) {
  for (const auto& g : small_instances()) {
    const auto whole = whole_group(*g);
    EXPECT_EQ(whole.log_order(), g->log_order()) << g->describe().dump();
    EXPECT_EQ(whole.elements().size(), static_cast<std::size_t>(std::pow(g->p(), g->log_order())));
  }
}

TEST(ClosureOracle, CyclicClosureMatchesPowering) {
  std::mt19937_64 rng(6);
  for (const auto& g : small_instances()) {
    for (int t = 0; t < 20; ++t) {
      const auto x = random_element(*g, rng);
      EXPECT_EQ(closure(std::vector<Element>{x}, *g).log_order(), log_p(naive_order(*g, x), g->p()));
    }
  }
}

TEST(ClosureOracle, CongruenceTermsMatchEnumeration) {
  std::mt19937_64 rng(9);
  for (const auto& g : small_instances()) {
    const auto depth = g->congruence_depth();
    if (!depth) continue;
    const auto whole = whole_group(*g);
    SeriesTerms enumerated;
    enumerated.kind = SeriesKind::kPrincipalCongruence;
    enumerated.terms.push_back(whole);
    for (std::uint32_t i = 1; i <= *depth; ++i) {
      std::vector<Element> level;
      for (const auto& x : whole.elements()) {
        if (g->congruence_level(x).value() >= i) level.push_back(x);
      }
      const auto term = closure(level, *g);
      EXPECT_EQ(term.elements().size(), level.size());  // the level set is a subgroup
      EXPECT_EQ(g->log_order() - term.log_order(), g->congruence_log_index(i).value());
      enumerated.terms.push_back(term);
    }
    for (int t = 0; t < 10; ++t) {
      const auto x = random_element(*g, rng);
      const auto fast = estimator::cyclic_congruence_density(x, *g, 1, *depth);
      const auto slow = estimator::density(closure(std::vector<Element>{x}, *g), enumerated, *g, 1, *depth);
      ASSERT_EQ(fast.size(), slow.size());
      for (std::size_t k = 0; k < fast.size(); ++k) {
        EXPECT_EQ(fast.levels()[k].num, slow.levels()[k].num);
        EXPECT_EQ(fast.levels()[k].den, slow.levels()[k].den);
      }
    }
  }
}

TEST(ClosureOracle, PPowerTermsArePowerSubgroups) {
  for (const auto& g : small_instances()) {
    const auto terms = series_terms({SeriesKind::kPPower, 3}, *g);
    const auto whole = whole_group(*g);
    std::uint64_t e = 1;
    for (std::size_t i = 1; i < terms.size(); ++i) {
      e *= g->p();
      std::vector<Element> pw;
      for (const auto& x : whole.elements()) pw.push_back(g->power(x, e));
      EXPECT_TRUE(same_subgroup(closure(pw, *g), terms[i])) << g->describe().dump() << " i=" << i;
    }
  }
}

TEST(Series, DescendingAndNormal) {
  std::mt19937_64 rng(10);
  for (const auto& g : small_instances()) {
    for (auto kind : {SeriesKind::kPPower, SeriesKind::kLowerP, SeriesKind::kFrattini, SeriesKind::kDimension}) {
      const auto t = series_terms({kind, 4}, *g);
      for (std::size_t i = 1; i < t.size(); ++i) {
        EXPECT_TRUE(is_subgroup_of(t[i], t[i - 1]));
        EXPECT_TRUE(is_normalized_by(t[i], g->generators(), *g));
        const auto x = random_element(*g, rng);
        for (const auto& y : t[i].generators()) EXPECT_TRUE(t[i].contains(g->conjugate(y, x)));
      }
    }
  }
}

TEST(Series, AbelianPPowerEqualsFrattini) {
  for (const auto& g : {Oracle(std::make_shared<CyclicGroup>(3, 5)), Oracle(std::make_shared<CoordinateProduct>(2, 6))}) {
    const auto a = series_terms({SeriesKind::kPPower, 5}, *g);
    const auto b = series_terms({SeriesKind::kFrattini, 5}, *g);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(same_subgroup(a[i], b[i]));
  }
}

TEST(Series, WholeGroupOverBudgetThrows) {
  const UnitriangularGroup g(3, 3);
  EXPECT_THROW(series_terms({SeriesKind::kPPower, 3}, g, 1000), BudgetExceeded);
  EXPECT_FALSE(series_terms({SeriesKind::kPPower, 3}, g, 20000).horizon_marker.has_value());
}

TEST(Heisenberg, GeneratorOrder) {
  const UnitriangularGroup g(3, 2);
  const auto x = g.elementary(0, 1, 1);
  EXPECT_EQ(naive_order(g, x), 9u);
  EXPECT_EQ(closure(std::vector<Element>{x}, g).log_order(), 2u);
  // [x, y] is central of order 9.
  const auto c = g.commutator(x, g.elementary(1, 2, 1));
  EXPECT_EQ(naive_order(g, c), 9u);
}

TEST(Heisenberg, DimensionSeriesPowerRelation) {
  const UnitriangularGroup g(3, 2);
  const auto dims = series_terms({SeriesKind::kDimension, 9}, g);
  const auto rep = powerful_uniform_check(whole_group(g), g, &dims, 6);
  ASSERT_FALSE(rep.dimension_checks.empty());
  for (const auto& c : rep.dimension_checks) EXPECT_TRUE(c.equal) << "i=" << c.i;
  EXPECT_FALSE(rep.powerful);
}

TEST(Horizon, AgreesOnSharedPrefix) {
  auto family = [](std::uint32_t k) { return std::make_shared<UnitriangularGroup>(3, k); };
  const auto run = stability_horizon({SeriesKind::kPPower, 4}, family, 2);
  EXPECT_GE(run.horizon, 1u);
  for (std::uint64_t i = 0; i <= run.horizon; ++i) EXPECT_EQ(run.shallow.log_index(i), run.deep.log_index(i));
}

TEST(Congruence, P2SquaringRaisesLevelByOne) {
  const CongruenceGroup g(FinLocalRing::integers_mod(2, 8));
  const auto x = g.elementary(0, 1, {2});
  EXPECT_EQ(congruence_level(g, x), 1u);
  EXPECT_EQ(congruence_level(g, g.power(x, 2)), 2u);
  EXPECT_EQ(cyclic_order_mod_level(g, x, 6), 5u);
}

TEST(Congruence, CharacteristicPElementaryHasOrderP) {
  const CongruenceGroup g(FinLocalRing::truncated_series(2, 9));
  std::vector<Coord> t(9, 0);
  t[1] = 1;
  const auto x = g.elementary(0, 1, t);
  EXPECT_EQ(congruence_level(g, x), 1u);
  EXPECT_TRUE(g.is_identity(g.power(x, 2)));
  EXPECT_EQ(naive_order(g, x), 2u);
}

TEST(ScenarioBlock, BuildsFamilies) {
  const auto g = make_group({{"family", "sl-congruence"}, {"p", 3}, {"k", 2}, {"ring", "fpt"}});
  EXPECT_EQ(g->log_order(), 8u);
  EXPECT_THROW(make_group({{"family", "nope"}, {"p", 3}}), InvalidArgument);
  EXPECT_THROW(make_group({{"family", "cyclic"}}), InvalidArgument);
}
