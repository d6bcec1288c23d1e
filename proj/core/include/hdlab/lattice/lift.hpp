#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hdlab/arith/density.hpp"
#include "hdlab/lattice/filtration.hpp"
#include "hdlab/lattice/subgroup.hpp"

namespace hdlab::lattice {

using IntMatrix = std::vector<IntVector>;  // rows

/// Level map h(i); receives the level and log_p |G~ : G~_i|.
using LiftSchedule = std::function<std::uint64_t(std::uint64_t level, const BigInt& den)>;

/// h(i) = floor(sqrt(den_i)).
LiftSchedule sqrt_schedule();

/// Filtration S_i = s(G~_i) + p^{h(i)} K of Z_p^n lifted along a surjection
/// phi: Z_p^n -> Z_p^2 with kernel K and section s.
struct LiftedFiltration {
  std::uint32_t p = 2;
  std::size_t n = 2;
  IntMatrix phi;
  BigInt precision = 0;               // all lattices below contain p^precision Z_p^n
  LatticeSubgroup kernel;
  std::vector<LatticeSubgroup> terms;         // S_0..S_window
  std::vector<LatticeSubgroup> target_terms;  // G~_0..G~_window
  std::vector<BigInt> log_index;              // log_p |Z_p^n : S_i|
  std::vector<std::uint64_t> h;
  std::vector<bool> image_exact;              // phi(S_i) = G~_i
  arith::DensitySequence kernel_density;

  std::uint64_t window() const { return terms.size() - 1; }
};

/// Throws InvalidArgument naming the offending level when the schedule does
/// not grow or the kernel share (n-2)h(i)/den_i fails to decay on the window.
LiftedFiltration lift_filtration(const IntMatrix& phi, const LatticeFiltration& target, std::uint64_t window,
                                 const LiftSchedule& schedule = sqrt_schedule());

/// Density of H <= Z_p^n under S, levels 1..window.
arith::DensitySequence lifted_density(const LiftedFiltration& s, const LatticeSubgroup& h);

/// Density of phi(H) under the target filtration, levels 1..window.
arith::DensitySequence image_density(const LiftedFiltration& s, const LatticeSubgroup& h);

}  // namespace hdlab::lattice
