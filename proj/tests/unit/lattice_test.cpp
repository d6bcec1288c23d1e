#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hdlab/error.hpp"
#include "hdlab/lattice/apartment.hpp"
#include "hdlab/lattice/cyclic.hpp"
#include "hdlab/lattice/lift.hpp"
#include "hdlab/lattice/prop34.hpp"
#include "hdlab/lattice/serialize.hpp"

using namespace hdlab;
using namespace hdlab::lattice;
using arith::BigInt;
using arith::Rational;

namespace {

Rational q(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

// |<gens> + p^k Z^d| inside (Z/p^k)^d by breadth-first enumeration.
std::uint64_t brute_log_order(std::uint32_t p, std::uint32_t k, std::size_t d, const std::vector<std::vector<long>>& gens) {
  long mod = 1;
  for (std::uint32_t i = 0; i < k; ++i) mod *= p;
  auto norm = [&](std::vector<long> v) {
    for (auto& x : v) x = ((x % mod) + mod) % mod;
    return v;
  };
  std::set<std::vector<long>> seen{std::vector<long>(d, 0)};
  std::vector<std::vector<long>> frontier{std::vector<long>(d, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        std::vector<long> w(d);
        for (std::size_t c = 0; c < d; ++c) w[c] = v[c] + g[c];
        w = norm(w);
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::uint64_t lg = 0;
  for (std::size_t n = seen.size(); n > 1; n /= p) ++lg;
  return lg;
}

IntVector iv(const std::vector<long>& v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(LatticeIndex, MatchesCosetEnumeration) {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (std::uint32_t k = 1; k <= 3; ++k) {
        for (int t = 0; t < 12; ++t) {
          std::vector<std::vector<long>> gens(1 + rng() % 3, std::vector<long>(d));
          for (auto& g : gens) {
            for (auto& x : g) x = static_cast<long>(rng() % 60) - 20;
          }
          std::vector<IntVector> cols;
          for (const auto& g : gens) cols.push_back(iv(g));
          const LatticeSubgroup l(p, d, cols);
          const auto expect = d * k - brute_log_order(p, k, d, gens);
          EXPECT_EQ(l.log_index_at(BigInt(k)), BigInt(static_cast<unsigned long>(expect)))
              << "p=" << p << " d=" << d << " k=" << k;
        }
      }
    }
  }
}

TEST(LatticeIndex, ExactIndexAndInfiniteIndex) {
  const LatticeSubgroup l(3, 2, {iv({9, 0}), iv({1, 3})});
  EXPECT_EQ(l.exact_log_index(), BigInt(3));
  EXPECT_TRUE(l.full_rank());
  const LatticeSubgroup line(3, 2, {iv({1, 5})});
  EXPECT_FALSE(line.full_rank());
  EXPECT_THROW(line.exact_log_index(), PrecisionExhausted);
}

TEST(Filtration, PPowerIsValid) {
  const auto f = LatticeFiltration::p_power(3, 10);
  EXPECT_FALSE(validate_filtration(f));
  EXPECT_EQ(f.log_index(4), BigInt(8));
}

TEST(Filtration, ViolationsAreNamed) {
  std::vector<FiltrationEntry> e{{0, 0, ScaledPAdic::zero(2)}, {1, 1, ScaledPAdic::zero(2)}, {1, 1, ScaledPAdic::zero(2)}};
  const auto v = validate_filtration(LatticeFiltration(2, e));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->index, 2u);
}

TEST(CyclicDensity, NumeratorMatchesLatticeIndexOnApartmentTerms) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const std::uint32_t p = t % 2 ? 3 : 2;
    std::vector<FiltrationEntry> e{{0, 0, ScaledPAdic::zero(p)}};
    long a = 0, b = 0;
    for (int i = 1; i <= 6; ++i) {
      a += 1 + static_cast<long>(rng() % 3);
      b += static_cast<long>(rng() % 3);
      e.push_back({a, b, ScaledPAdic::zero(p)});
    }
    const LatticeFiltration f(p, e);
    for (long lambda : {0L, 1L, 5L, static_cast<long>(p) * 7}) {
      const auto h = CyclicTarget::type_a(ScaledPAdic::from_integer(p, BigInt(lambda)));
      const LatticeSubgroup hl(p, 2, {iv({1, lambda})});
      for (std::size_t i = 1; i < f.size(); ++i) EXPECT_EQ(cyclic_numerator(f, h, i), lattice_index(hl, f.term(i)));
    }
    for (long mu : {0L, static_cast<long>(p), static_cast<long>(p * p) * 4}) {
      const auto h = CyclicTarget::type_b(ScaledPAdic::from_integer(p, BigInt(mu)));
      const LatticeSubgroup hl(p, 2, {iv({mu, 1})});
      for (std::size_t i = 1; i < f.size(); ++i) EXPECT_EQ(cyclic_numerator(f, h, i), lattice_index(hl, f.term(i)));
    }
  }
}

TEST(CyclicDensity, NumeratorMatchesLatticeIndexWithTwistedTerms) {
  const auto inst = prop34_build(3, q(2, 5));
  const auto f = inst.filtration(3);
  for (long lambda : {1L, 2L, 82L, 4L}) {
    const auto h = CyclicTarget::type_a(ScaledPAdic::from_integer(3, BigInt(lambda)));
    const LatticeSubgroup hl(3, 2, {iv({1, lambda})});
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(cyclic_numerator(f, h, i), lattice_index(hl, f.term(i)));
  }
  const auto hb = CyclicTarget::type_b(ScaledPAdic::from_integer(3, BigInt(6)));
  const LatticeSubgroup hbl(3, 2, {iv({6, 1})});
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(cyclic_numerator(f, hb, i), lattice_index(hbl, f.term(i)));
}

TEST(CyclicDensity, PPowerProcyclicHalf) {
  const auto f = LatticeFiltration::p_power(5, 12);
  const auto d = hdim_cyclic(f, CyclicTarget::type_a(ScaledPAdic::from_integer(5, BigInt(7))));
  ASSERT_TRUE(d.estimate.exact);
  EXPECT_EQ(*d.estimate.exact, q(1, 2));
  EXPECT_THROW(CyclicTarget::type_b(ScaledPAdic::from_integer(5, BigInt(1))), InvalidArgument);
}

TEST(Apartment, RealizationRoundTrips) {
  const auto r = apartment_realize(q(1, 5), q(1, 4), q(3, 4));
  EXPECT_FALSE(validate_filtration(r.filtration));
  const auto s = apartment_spectrum(generator_for(r));
  EXPECT_TRUE(s.exact);
  EXPECT_EQ(s.spectrum, (std::set<Rational>{0, q(1, 5), q(1, 4), q(3, 4), 1}));
}

TEST(Apartment, BalancedTripleIsThePPowerSeries) {
  const auto r = apartment_realize(q(1, 2), q(1, 2), q(1, 2), 12);
  for (std::size_t i = 0; i < r.filtration.size(); ++i) {
    EXPECT_EQ(r.filtration[i].a, BigInt(static_cast<unsigned long>(i)));
    EXPECT_EQ(r.filtration[i].b, BigInt(static_cast<unsigned long>(i)));
  }
}

TEST(Apartment, RejectsInadmissibleTriples) {
  EXPECT_THROW(apartment_alternative(q(1, 3), q(1, 2), q(3, 4)), InvalidArgument);
  EXPECT_THROW(apartment_realize(q(1, 3), q(1, 2), q(3, 4)), InvalidArgument);
  EXPECT_NO_THROW(apartment_alternative(q(1, 5), q(1, 4), q(3, 4)));
}

TEST(Prop34, FMatchesClosedForm) {
  for (const auto& nu : {q(1, 4), q(2, 5), q(1, 2)}) {
    const auto inst = prop34_build(3, nu);
    for (long m = 1; m <= 30; ++m) {
      // ceil(3^{m+1} - 3^m * 4 * nu - 1), from the rational value directly.
      const Rational v = Rational(arith::pow_ui(3, m + 1)) - Rational(arith::pow_ui(3, m)) * Rational(4) * nu - Rational(1);
      EXPECT_EQ(inst.f(BigInt(m)), arith::ceil(v)) << "m=" << m;
    }
  }
}

TEST(Prop34, StoredLambdaPoints) {
  const auto inst = prop34_build(3, q(2, 5));
  ASSERT_GE(inst.lambda_points().size(), 2u);
  EXPECT_EQ(inst.lambda_points()[0].lambda, BigInt(1));
  EXPECT_EQ(inst.lambda_points()[0].f, BigInt(4));
  EXPECT_EQ(inst.lambda_points()[1].lambda, BigInt(82));
  EXPECT_EQ(inst.r(BigInt(1)), q(5, 12));
}

TEST(Prop34, DensityAgreesWithMaterializedLattice) {
  const auto inst = prop34_build(3, q(2, 5));
  const auto f = inst.filtration(3);
  const LatticeSubgroup h(3, 2, {iv({1, 82})});
  for (std::uint64_t i = 1; i <= 3; ++i) {
    const auto lv = inst.level(i);
    EXPECT_EQ(lv.num, lattice_index(h, f.term(i)));
    EXPECT_EQ(lv.den, f.log_index(i));
  }
}

TEST(Prop34, RatiosStayAboveNu) {
  for (const auto& nu : {q(1, 4), q(2, 5), q(1, 2)}) {
    const auto inst = prop34_build(3, nu, {std::uint64_t{1} << 20, 60});
    const auto seq = inst.density();
    for (const auto& lv : seq.levels()) EXPECT_GE(lv.ratio(), nu) << lv.i;
  }
}

TEST(Prop34, NuRange) {
  EXPECT_THROW(check_prop34_nu(3, q(3, 4)), InvalidArgument);
  EXPECT_THROW(check_prop34_nu(3, q(1, 5)), InvalidArgument);
  EXPECT_NO_THROW(check_prop34_nu(3, q(1, 4)));
  EXPECT_NO_THROW(check_prop34_nu(3, q(1, 2)));
}

TEST(Serialize, FiltrationRoundTrip) {
  const auto f = prop34_build(3, q(2, 5)).filtration(4);
  const auto g = filtration_from_json(to_json(f));
  ASSERT_EQ(g.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_EQ(g[i].a, f[i].a);
    EXPECT_EQ(g[i].b, f[i].b);
    EXPECT_EQ(g[i].z.unit(), f[i].z.unit());
    EXPECT_EQ(g[i].z.shift(), f[i].z.shift());
  }
}

TEST(Serialize, Prop34RoundTrip) {
  const auto inst = prop34_build(3, q(2, 5));
  const auto back = prop34_from_json(to_json(inst));
  EXPECT_EQ(back.nu(), inst.nu());
  EXPECT_EQ(back.density().size(), inst.density().size());
  EXPECT_EQ(back.r(BigInt(82)), inst.r(BigInt(82)));
}

TEST(Lift, ProjectionLiftsPPowerSeries) {
  IntMatrix phi{iv({1, 0, 0}), iv({0, 1, 0})};
  const auto s = lift_filtration(phi, LatticeFiltration::p_power(2, 16), 16);
  for (bool b : s.image_exact) EXPECT_TRUE(b);
  const auto& kd = s.kernel_density.levels();
  // The sqrt schedule jumps at squares; past the midpoint the share never exceeds its midpoint value.
  const std::size_t mid = kd.size() / 2;
  for (std::size_t i = mid; i < kd.size(); ++i) EXPECT_LE(kd[i].ratio(), kd[mid - 1].ratio()) << i;
  EXPECT_LT(kd.back().ratio(), kd.front().ratio());
  // Image of a subgroup meeting the kernel trivially keeps its density up to the kernel share.
  const LatticeSubgroup h(2, 3, {iv({1, 0, 0})});
  const auto ld = lifted_density(s, h);
  const auto id = image_density(s, h);
  EXPECT_EQ(id.back().ratio(), q(1, 2));
  EXPECT_LE(ld.back().ratio(), id.back().ratio());
}

TEST(Lift, NonGrowingScheduleRejected) {
  IntMatrix phi{iv({1, 0, 0}), iv({0, 1, 0})};
  auto constant = [](std::uint64_t, const BigInt&) -> std::uint64_t { return 1; };
  EXPECT_THROW(lift_filtration(phi, LatticeFiltration::p_power(2, 8), 8, constant), InvalidArgument);
}
