#pragma once

#include <cstdint>

#include "hdlab/group/oracle.hpp"

namespace hdlab::group {

/// Largest i <= depth with g = 1 modulo the i-th power of the maximal ideal.
std::uint32_t congruence_level(const GroupOracle& g, const Element& x);

/// log_p of the order of x in G / G^(level) for the principal congruence
/// filtration, by repeated p-th powering.  Throws Error when the level does not
/// grow to `level` (the order would not be a p-power at that truncation).
std::uint64_t cyclic_order_mod_level(const GroupOracle& g, const Element& x, std::uint32_t level);

}  // namespace hdlab::group
