#pragma once

#include <cstdint>
#include <vector>

#include "hdlab/arith/density.hpp"
#include "hdlab/lattice/filtration.hpp"

namespace hdlab::lattice {

/// Maximal procyclic subgroups of Z_p^2: TypeA <(1, lambda)>, TypeB <(mu, 1)> with mu in pZ_p.
struct CyclicTarget {
  enum class Kind { kTypeA, kTypeB };
  Kind kind = Kind::kTypeA;
  ScaledPAdic value;

  static CyclicTarget type_a(ScaledPAdic lambda) { return {Kind::kTypeA, std::move(lambda)}; }
  static CyclicTarget type_b(ScaledPAdic mu);
  /// Generator as an integer vector; throws if value is not materializable.
  IntVector generator() const;
};

struct CyclicDensity {
  arith::DensitySequence sequence;
  arith::HdimEstimate estimate;
  /// TypeB levels where min{b_i + v(mu), v(p^a_i - z_i mu)} differs from min{b_i, v(p^a_i - z_i mu)}.
  std::vector<std::uint64_t> formula_disagreements;
};

/// Density sequence of a procyclic subgroup for levels 1..window (window = 0: all
/// available levels).  tail_start = 0 picks the second half of the window.
CyclicDensity hdim_cyclic(const LatticeFiltration& f, const CyclicTarget& h, std::uint64_t window = 0,
                          std::uint64_t tail_start = 0);

/// Numerator d-term at a single level: num_i = a_i + b_i - d_i.
BigInt cyclic_numerator(const LatticeFiltration& f, const CyclicTarget& h, std::size_t i);

}  // namespace hdlab::lattice
