#include <gtest/gtest.h>

#include <random>

#include "hdlab/error.hpp"
#include "hdlab/estimator/chain.hpp"
#include "hdlab/estimator/compare.hpp"
#include "hdlab/estimator/density.hpp"
#include "hdlab/estimator/experiments.hpp"
#include "hdlab/group/families.hpp"

using namespace hdlab;
using namespace hdlab::estimator;
using hdlab::arith::BigInt;
using hdlab::arith::DensityLevel;
using hdlab::group::SeriesKind;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

std::shared_ptr<group::DirectProduct> square_of_cyclic(std::uint32_t p, std::uint32_t k) {
  auto c = std::make_shared<group::CyclicGroup>(p, k);
  return std::make_shared<group::DirectProduct>(std::vector<std::shared_ptr<const GroupOracle>>{c, c});
}

}  // namespace

TEST(Density, WholeAndTrivial) {
  const group::UnitriangularGroup g(2, 3);
  const auto terms = group::series_terms({SeriesKind::kLowerP, 4}, g);
  const auto whole = group::whole_group(g);
  const auto triv = group::closure(std::vector<Element>{}, g);
  const auto full = density(whole, terms, g, 1, 4);
  const auto none = density(triv, terms, g, 1, 4);
  for (const auto& lv : full.levels()) EXPECT_EQ(lv.ratio(), Rational(1));
  for (const auto& lv : none.levels()) EXPECT_EQ(lv.num, 0);
}

TEST(Density, MonotoneUnderInclusion) {
  const group::UnitriangularGroup g(3, 2);
  const auto terms = group::series_terms({SeriesKind::kPPower, 2}, g);
  const auto x = g.elementary(0, 1, 1);
  const auto small = group::closure(std::vector<Element>{x}, g);
  const auto big = group::closure(std::vector<Element>{x, g.elementary(1, 2, 1)}, g);
  const auto a = density(small, terms, g, 1, 2), b = density(big, terms, g, 1, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LE(a.levels()[k].num, b.levels()[k].num);
}

TEST(Density, CyclicUnderPowerSeriesGrowsAtMostOnePerLevel) {
  const group::CongruenceGroup g(group::FinLocalRing::truncated_series(2, 3));
  const auto terms = group::series_terms({SeriesKind::kPPower, 3}, g);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 4; ++t) {
    Element x = g.identity();
    for (int s = 0; s < 8; ++s) x = g.multiply(x, g.generators()[rng() % g.generators().size()]);
    const auto seq = density(group::closure(std::vector<Element>{x}, g), terms, g, 1, 3);
    for (const auto& lv : seq.levels()) EXPECT_LE(lv.num, BigInt(static_cast<unsigned long>(lv.i)));
  }
}

TEST(Multiplicativity, ProductOfCyclicGroups) {
  const auto g = square_of_cyclic(3, 4);
  const auto terms = group::series_terms({SeriesKind::kFrattini, 4}, *g);
  const auto h = group::closure(std::vector<Element>{{1, 0}}, *g);
  const auto b = group::closure(std::vector<Element>{{3, 0}}, *g);
  const auto rep = multiplicativity_check(terms, *g, h, b, ProperLimit{q(1, 2), "i/(2i)"}, 1, 4);
  EXPECT_TRUE(rep.all_exact);
  ASSERT_EQ(rep.levels.size(), 4u);
  for (const auto& lv : rep.levels) {
    EXPECT_EQ(lv.h_in_g, q(1, 2));
    EXPECT_EQ(lv.b_in_h, q(static_cast<long>(lv.i) - 1, static_cast<long>(lv.i)));
    EXPECT_EQ(lv.b_in_g, q(static_cast<long>(lv.i) - 1, 2 * static_cast<long>(lv.i)));
  }
  EXPECT_THROW(multiplicativity_check(terms, *g, h, b, std::nullopt, 1, 4), InvalidArgument);
}

TEST(Compare, SeriesAgainstItself) {
  const group::UnitriangularGroup g(3, 2);
  const auto t = group::series_terms({SeriesKind::kPPower, 2}, g);
  const LevelMap id = [](std::uint64_t i) { return i; };
  const auto rep = compare_series(t, t, id, id, g, 2, 2);
  EXPECT_TRUE(rep.compatible);
  for (const auto& s : rep.sequences) {
    for (const auto& lv : s.levels) EXPECT_EQ(lv.num, 0u);
  }
}

TEST(Tower, UnitTowerAndInduced) {
  const auto t = CoordinateTower::unit(2, 8);
  EXPECT_EQ(t.m(5), 5u);
  EXPECT_THROW(CoordinateTower(2, {1, 3}), InvalidArgument);
  const auto ind = t.induced({1, 3, 5, 7});
  EXPECT_EQ(ind.tower.depth(), 4u);
  EXPECT_EQ(ind.level_map[2], 4u);
}

TEST(Chain, HalfDensityLevelFourBracket) {
  const auto t = CoordinateTower::unit(2, 32);
  for (auto tie : {TieBreak::kLargest, TieBreak::kSmallest}) {
    const auto r = chain_build(t, q(1, 2), 32, tie);
    ASSERT_GE(r.state.steps.size(), 4u);
    const auto& st = r.state.steps[3];
    EXPECT_EQ(st.level, 4u);
    EXPECT_EQ(st.l, tie == TieBreak::kLargest ? 2u : 1u);
    for (std::uint64_t i = 1; i <= 32; ++i) {
      EXPECT_GE(2 * r.state.counts[i] + 2, t.m(i)) << i;
      EXPECT_EQ(r.state.subgroups[i].count(t, i), r.state.subgroups.back().count(t, i));
    }
  }
}

TEST(Chain, FullAndEmptyTargets) {
  const auto t = CoordinateTower::unit(3, 16);
  const auto full = chain_build(t, Rational(1), 16);
  for (const auto& lv : full.sequence.levels()) EXPECT_EQ(lv.ratio(), Rational(1));
  const auto none = chain_build(t, Rational(0), 16, TieBreak::kSmallest);
  for (const auto& lv : none.sequence.levels()) EXPECT_EQ(lv.num, 0);
}

TEST(Chain, RejectsBadInput) {
  const auto t = CoordinateTower::unit(2, 8);
  EXPECT_THROW(chain_build(t, q(1, 2), 9), InvalidArgument);
  EXPECT_THROW(chain_build(t, q(3, 2), 8), InvalidArgument);
}

TEST(Chain, GroupedLevelsStayInBracket) {
  std::vector<std::uint64_t> levels;
  for (std::uint64_t i = 1; i <= 12; ++i) levels.insert(levels.end(), i % 3 + 1, i);
  const CoordinateTower t(2, levels);
  const auto r = chain_build(t, q(2, 5), 12);
  for (std::uint64_t i = 1; i <= 12; ++i) EXPECT_GE(5 * r.state.counts[i] + 5, 2 * t.m(i)) << i;
  for (auto k : r.state.checkpoints) EXPECT_LE(5 * r.state.counts[k], 2 * t.m(k));
}

TEST(Interval, ThetaEqualXiGivesH) {
  const auto t = CoordinateTower::unit(2, 24);
  std::vector<std::size_t> even;
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (t.level(c) % 2 == 0) even.push_back(c);
  }
  const auto s = interval_sample(t, even, ProperLimit{q(1, 2), "floor(i/2)/i"}, q(1, 2), 24);
  EXPECT_EQ(s.target, Rational(1));
  EXPECT_EQ(s.b.coords(), even);
  EXPECT_THROW(interval_sample(t, even, ProperLimit{q(1, 2), ""}, q(3, 4), 24), InvalidArgument);
}

TEST(LowerBound, PassesAndFails) {
  std::vector<DensityLevel> good, bad;
  for (std::uint64_t i = 1; i <= 4; ++i) {
    good.push_back({i, BigInt(static_cast<unsigned long>(i)), BigInt(static_cast<unsigned long>(4 * i))});
    bad.push_back({i, BigInt(0), BigInt(static_cast<unsigned long>(4 * i))});
  }
  const auto ok = lowerp_bound_check(DensitySequence(2, good), 1, 2, 4);
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.observed, q(1, 4));
  EXPECT_EQ(ok.slack, q(1, 16));
  EXPECT_FALSE(lowerp_bound_check(DensitySequence(2, bad), 1, 2, 4).pass);
}
