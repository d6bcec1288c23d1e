#pragma once

#include <cstdint>

#include "hdlab/arith/density.hpp"
#include "hdlab/group/series.hpp"

namespace hdlab::estimator {

using arith::BigInt;
using arith::DensitySequence;
using arith::Rational;
using group::Element;
using group::GroupOracle;
using group::SeriesTerms;
using group::SubgroupHandle;

/// num_i = log_p |<H, G_i>| - log_p |G_i|, den_i = log_p |G : G_i| for
/// first <= i <= last.  Levels with den_i = 0 or den_i equal to the previous
/// kept level carry no information and are skipped.  Throws Error when a term
/// is not normal in G.
DensitySequence density(const SubgroupHandle& h, const SeriesTerms& terms, const GroupOracle& g,
                        std::uint64_t first, std::uint64_t last, std::uint64_t budget = group::default_budget());

/// Fast path for H = <x> against the principal congruence filtration, levels
/// first..last: num_i from the order of x modulo G^(i).
DensitySequence cyclic_congruence_density(const Element& x, const GroupOracle& g, std::uint32_t first,
                                          std::uint32_t last);

}  // namespace hdlab::estimator
