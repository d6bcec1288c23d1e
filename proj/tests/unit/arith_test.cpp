#include <gtest/gtest.h>

#include <random>

#include "hdlab/arith/density.hpp"
#include "hdlab/arith/scaled_padic.hpp"
#include "hdlab/error.hpp"

using namespace hdlab;
using namespace hdlab::arith;

namespace {

// Valuation by repeated division, independent of the library helpers.
std::uint64_t naive_vp(long long x, long long p) {
  std::uint64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Rational q(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("2/5"), q(2, 5));
  EXPECT_EQ(Rational::parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(q(1, 3).to_decimal(20), "0.33333333333333333333");
  EXPECT_EQ(q(2, 3).to_decimal(5), "0.66667");
  EXPECT_EQ(q(5, 12).to_decimal(3), "0.417");
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor(q(7, 2)), 3);
  EXPECT_EQ(ceil(q(7, 2)), 4);
  EXPECT_EQ(floor(q(-7, 2)), -4);
  EXPECT_EQ(ceil(q(-7, 2)), -3);
}

TEST(Rational, ZeroOverZeroConvention) {
  EXPECT_EQ(ratio_with_conventions(0, 0).value, Rational(1));
  EXPECT_TRUE(ratio_with_conventions(3, 0).infinite);
  EXPECT_EQ(ratio_with_conventions(3, 6).value, q(1, 2));
}

TEST(ValuationLaws, MatchNaiveDivisionOnRandomIntegers) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 500; ++t) {
      const long long x = static_cast<long long>(rng() % 1000000) + 1;
      const long long y = static_cast<long long>(rng() % 1000000) + 1;
      const auto px = ScaledPAdic::from_integer(p, BigInt(static_cast<long>(x)));
      const auto py = ScaledPAdic::from_integer(p, BigInt(static_cast<long>(y)));
      EXPECT_EQ(vp(px).value(), ExtNat(BigInt(static_cast<unsigned long>(naive_vp(x, p)))));
      // v(xy) = v(x) + v(y)
      EXPECT_EQ(vp(px * py).value(), ExtNat(BigInt(static_cast<unsigned long>(naive_vp(x, p) + naive_vp(y, p)))));
      // v(x - y) against the naive value, and the ultrametric inequality.
      const auto d = sub_valued(px, py);
      if (x == y) {
        EXPECT_TRUE(vp(d).value().is_infinite());
      } else {
        const auto nv = naive_vp(std::llabs(x - y), p);
        EXPECT_EQ(vp(d).value(), ExtNat(BigInt(static_cast<unsigned long>(nv))));
        EXPECT_GE(nv, std::min(naive_vp(x, p), naive_vp(y, p)));
        if (naive_vp(x, p) != naive_vp(y, p)) EXPECT_EQ(nv, std::min(naive_vp(x, p), naive_vp(y, p)));
      }
      const auto s = add_valued(px, py);
      EXPECT_EQ(vp(s).value(), ExtNat(BigInt(static_cast<unsigned long>(naive_vp(x + y, p)))));
    }
  }
}

TEST(ValuationLaws, ScaledDifferencesAgreeWithMaterializedOnes) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::uint32_t p = t % 2 ? 3 : 2;
    const long u1 = static_cast<long>(rng() % 97) + 1, u2 = static_cast<long>(rng() % 97) + 1;
    const long s1 = static_cast<long>(rng() % 40), s2 = static_cast<long>(rng() % 40);
    const auto a = ScaledPAdic::from_scaled(p, BigInt(u1), BigInt(s1));
    const auto b = ScaledPAdic::from_scaled(p, BigInt(u2), BigInt(s2));
    const BigInt ia = a.to_integer(), ib = b.to_integer();
    EXPECT_EQ(ia, BigInt(u1) * pow_ui(p, s1));
    const BigInt diff = ia - ib;
    const auto v = vp(sub_valued(a, b)).value();
    if (diff == 0) {
      EXPECT_TRUE(v.is_infinite());
    } else {
      BigInt m = diff;
      EXPECT_EQ(v, ExtNat(BigInt(static_cast<unsigned long>(vp_nonzero(m, p)))));
    }
  }
}

TEST(ValuationLaws, FinitePrecisionReportsLowerBound) {
  const auto a = ScaledPAdic::from_integer(3, BigInt(5), BigInt(4));
  const auto b = ScaledPAdic::from_integer(3, BigInt(5 + 81 * 2));
  const auto v = vp(sub_valued(a, b));
  EXPECT_FALSE(v.resolved());
  EXPECT_EQ(v.bound(), ExtNat(BigInt(4)));
  EXPECT_THROW(v.value(), PrecisionExhausted);
  const auto c = ScaledPAdic::from_integer(3, BigInt(5 + 9), BigInt(4));
  EXPECT_EQ(vp(sub_valued(c, b)).value(), ExtNat(BigInt(2)));
}

TEST(ValuationLaws, HugeShiftsStayUnmaterialized) {
  const BigInt big = pow_ui(3, 40);
  const auto a = ScaledPAdic::from_scaled(3, BigInt(2), big);
  const auto b = ScaledPAdic::from_scaled(3, BigInt(1), big + 5);
  EXPECT_EQ(vp(sub_valued(a, b)).value(), ExtNat(big));
  EXPECT_THROW(a.to_integer(), MaterializationError);
}

TEST(StepBounds, HoldForEtaAtMostOne) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const long y = static_cast<long>(rng() % 200) + 1;
    const long x = static_cast<long>(rng() % (y + 1));
    const long z = static_cast<long>(rng() % 200) + 1;
    const long e = static_cast<long>(rng() % 101);
    const Rational eta = q(e, 100);
    EXPECT_TRUE(step_preserves_slack_bound(x, y, z, eta));
    EXPECT_TRUE(step_preserves_bound(x, y, z, eta));
  }
}

TEST(StepBounds, FailBeyondEtaOne) {
  // The eta <= 1 hypothesis is needed: x/y = 2 >= eta, (x+z)/(y+z) < eta.
  EXPECT_FALSE(step_preserves_bound(4, 2, 10, 2));
  EXPECT_FALSE(step_preserves_slack_bound(4, 2, 100, 2));
}

TEST(DensitySequenceInvariants, RejectsMalformedLevels) {
  EXPECT_NO_THROW(DensitySequence(2, {{1, 0, 1}, {2, 1, 3}}));
  EXPECT_THROW(DensitySequence(2, {{2, 0, 1}, {1, 1, 3}}), InvalidArgument);  // i not increasing
  EXPECT_THROW(DensitySequence(2, {{1, 0, 3}, {2, 1, 3}}), InvalidArgument);  // den not increasing
  EXPECT_THROW(DensitySequence(2, {{1, 4, 3}}), InvalidArgument);             // num > den
  EXPECT_THROW(DensitySequence(2, {{1, -1, 3}}), InvalidArgument);            // num < 0
}

TEST(DensitySequenceInvariants, RandomValidSequencesConstruct) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    std::vector<DensityLevel> lv;
    unsigned long den = 0;
    for (std::uint64_t i = 1; i <= 20; ++i) {
      den += 1 + rng() % 5;
      lv.push_back({i, BigInt(rng() % (den + 1)), BigInt(den)});
    }
    const DensitySequence s(3, lv);
    const auto est = liminf_estimate(s, 10);
    for (const auto& l : s.levels()) {
      if (l.i >= 10) EXPECT_LE(est.window_min, l.ratio());
      EXPECT_GE(l.ratio(), Rational(0));
      EXPECT_LE(l.ratio(), Rational(1));
    }
  }
}

TEST(DensitySequenceInvariants, EstimateGap) {
  const DensitySequence s(2, {{1, 1, 2}, {2, 1, 3}, {3, 2, 4}});
  auto est = with_exact(liminf_estimate(s, 2), q(1, 2), "test");
  EXPECT_EQ(est.window_min, q(1, 3));
  EXPECT_EQ(*est.gap(), q(1, 6));
  EXPECT_THROW(liminf_estimate(s, 9), InvalidArgument);
}
