#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hdlab/arith/rational.hpp"
#include "hdlab/lattice/filtration.hpp"

namespace hdlab::lattice {

using arith::Rational;

/// Declared limits of x_i = a_i/(a_i+b_i) along the residue classes i mod modulus.
struct ResiduePattern {
  std::uint64_t modulus = 1;
  std::vector<Rational> limits;
};

struct ApartmentGenerator {
  std::function<std::pair<BigInt, BigInt>(std::uint64_t)> terms;  // i -> (a_i, b_i), i >= 1
  std::uint64_t window = 64;
  std::optional<ResiduePattern> pattern;
};

struct ApartmentSpectrum {
  Rational xi;
  Rational eta;
  Rational zeta;
  std::set<Rational> spectrum;
  bool exact = false;
  std::string note;
};

/// Spectrum {0, xi, eta, zeta, 1} of an apartment filtration.  Exact when the
/// declared pattern is consistent with the terms on the window; otherwise the
/// three values are window estimates and exact = false.
ApartmentSpectrum apartment_spectrum(const ApartmentGenerator& gen);

/// Spectrum data straight from pattern limits.
ApartmentSpectrum spectrum_from_pattern(const ResiduePattern& pattern);

/// Which admissible alternative (1 or 2) a triple satisfies; throws
/// InvalidArgument naming the failed inequality otherwise.
int apartment_alternative(const Rational& xi, const Rational& eta, const Rational& zeta);

struct ApartmentRealization {
  LatticeFiltration filtration;
  ResiduePattern pattern;
};

/// Integer sequences with z_i = 0 whose residue-class limits realize the triple.
ApartmentRealization apartment_realize(const Rational& xi, const Rational& eta, const Rational& zeta,
                                       std::uint64_t levels = 30, std::uint32_t p = 2);

ApartmentGenerator generator_for(const ApartmentRealization& r);

}  // namespace hdlab::lattice
