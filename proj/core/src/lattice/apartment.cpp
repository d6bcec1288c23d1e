#include "hdlab/lattice/apartment.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::lattice {

namespace {

const Rational kHalf(1, 2);

void check_unit_interval(const Rational& x, const char* name) {
  if (x < Rational(0) || x > Rational(1)) throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
}

ApartmentSpectrum assemble(Rational liminf_x, Rational liminf_one_minus_x, Rational zeta) {
  ApartmentSpectrum s;
  s.xi = std::min(liminf_x, liminf_one_minus_x);
  s.eta = std::max(liminf_x, liminf_one_minus_x);
  s.zeta = std::move(zeta);
  s.spectrum = {Rational(0), s.xi, s.eta, s.zeta, Rational(1)};
  return s;
}

void assert_restriction(const ApartmentSpectrum& s) {
  if (s.zeta < kHalf) throw Error("apartment spectrum violates zeta >= 1/2");
  const Rational one(1);
  const bool first = s.xi >= Rational(0) && s.xi <= s.eta && s.eta <= one - s.zeta && one - s.zeta <= kHalf;
  const bool second = s.xi >= Rational(0) && s.xi <= one - s.zeta && s.zeta == s.eta;
  if (!first && !second) throw Error("apartment spectrum violates the admissibility restriction");
}

}  // namespace

ApartmentSpectrum spectrum_from_pattern(const ResiduePattern& pattern) {
  if (pattern.modulus == 0 || pattern.limits.size() != pattern.modulus) {
    throw InvalidArgument("residue pattern needs one limit per class");
  }
  Rational lo = pattern.limits[0];
  Rational hi = pattern.limits[0];
  Rational zeta(1);
  for (const auto& l : pattern.limits) {
    check_unit_interval(l, "pattern limit");
    lo = std::min(lo, l);
    hi = std::max(hi, l);
    zeta = std::min(zeta, std::max(l, Rational(1) - l));
  }
  auto s = assemble(lo, Rational(1) - hi, zeta);
  s.exact = true;
  s.note = "pattern limits";
  assert_restriction(s);
  return s;
}

ApartmentSpectrum apartment_spectrum(const ApartmentGenerator& gen) {
  if (!gen.terms) throw InvalidArgument("apartment generator has no term function");
  if (gen.window < 2) throw InvalidArgument("apartment window must contain at least two levels");
  std::vector<Rational> xs;
  for (std::uint64_t i = 1; i <= gen.window; ++i) {
    const auto [a, b] = gen.terms(i);
    if (a < 0 || b < 0 || a + b == 0) throw InvalidArgument("apartment terms must be natural with a_i + b_i > 0");
    xs.emplace_back(a, a + b);
  }

  if (gen.pattern) {
    // Each class must sit within 1/i of its declared limit at its last window level.
    bool consistent = true;
    const auto& pat = *gen.pattern;
    for (std::uint64_t r = 0; r < pat.modulus && consistent; ++r) {
      std::uint64_t last = gen.window;
      while (last >= 1 && last % pat.modulus != r) --last;
      if (last == 0) continue;
      Rational d = xs[last - 1] - pat.limits.at(r);
      if (d.sign() < 0) d = -d;
      consistent = d <= Rational(1, static_cast<long>(last));
    }
    if (consistent) return spectrum_from_pattern(pat);
  }

  const std::uint64_t tail = (gen.window + 1) / 2;
  Rational lo(1), hi(0), zeta(1);
  for (std::uint64_t i = tail; i <= gen.window; ++i) {
    const auto& x = xs[i - 1];
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    zeta = std::min(zeta, std::max(x, Rational(1) - x));
  }
  auto s = assemble(lo, Rational(1) - hi, zeta);
  s.exact = false;
  s.note = gen.pattern ? "declared pattern inconsistent with terms; window estimate" : "window estimate";
  return s;
}

int apartment_alternative(const Rational& xi, const Rational& eta, const Rational& zeta) {
  check_unit_interval(xi, "xi");
  check_unit_interval(eta, "eta");
  check_unit_interval(zeta, "zeta");
  const Rational one(1);
  if (xi <= eta && eta <= one - zeta && one - zeta <= kHalf) return 1;
  if (xi <= one - zeta && one - zeta <= kHalf && zeta == eta) return 2;
  std::string why;
  if (!(xi <= eta)) {
    why = "xi <= eta fails (" + xi.to_string() + " > " + eta.to_string() + ")";
  } else if (!(one - zeta <= kHalf)) {
    why = "1 - zeta <= 1/2 fails (zeta = " + zeta.to_string() + ")";
  } else {
    why = "eta <= 1 - zeta fails (" + eta.to_string() + " > " + (one - zeta).to_string() + ")";
  }
  if (!(zeta == eta)) why += ", and the second alternative needs zeta = eta";
  else if (!(xi <= one - zeta)) why += ", and the second alternative needs xi <= 1 - zeta";
  throw InvalidArgument("inadmissible apartment triple: " + why);
}

ApartmentRealization apartment_realize(const Rational& xi, const Rational& eta, const Rational& zeta,
                                       std::uint64_t levels, std::uint32_t p) {
  const int alt = apartment_alternative(xi, eta, zeta);
  if (levels < 2 || levels > 40) throw InvalidArgument("apartment levels must lie in [2, 40]");
  ResiduePattern pattern;
  if (alt == 1) {
    pattern.modulus = 3;
    pattern.limits = {xi, Rational(1) - eta, zeta};
  } else {
    pattern.modulus = 2;
    pattern.limits = {xi, Rational(1) - zeta};
  }

  std::vector<FiltrationEntry> entries;
  entries.push_back({0, 0, ScaledPAdic::zero(p)});
  const bool balanced = xi == kHalf && eta == kHalf && zeta == kHalf;
  for (std::uint64_t i = 1; i <= levels; ++i) {
    const BigInt ii = static_cast<unsigned long>(i);
    if (balanced) {
      entries.push_back({ii, ii, ScaledPAdic::zero(p)});
      continue;
    }
    // Rapid growth n_i = 2^{i(i+1)/2} makes each level dominate all earlier ones.
    const BigInt n = arith::pow_ui(2, i * (i + 1) / 2);
    const Rational& t = pattern.limits[i % pattern.modulus];
    const BigInt ta = arith::floor(t * Rational(n));
    const auto& prev = entries.back();
    BigInt a = std::max({prev.a, ta, ii});
    BigInt b = std::max({prev.b, BigInt(n - ta), ii});
    entries.push_back({std::move(a), std::move(b), ScaledPAdic::zero(p)});
  }
  return {LatticeFiltration(p, std::move(entries)), std::move(pattern)};
}

ApartmentGenerator generator_for(const ApartmentRealization& r) {
  ApartmentGenerator g;
  const auto f = r.filtration;
  g.terms = [f](std::uint64_t i) { return std::make_pair(f[i].a, f[i].b); };
  g.window = f.size() - 1;
  g.pattern = r.pattern;
  return g;
}

}  // namespace hdlab::lattice
