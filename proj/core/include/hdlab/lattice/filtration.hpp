#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdlab/arith/scaled_padic.hpp"
#include "hdlab/lattice/subgroup.hpp"

namespace hdlab::lattice {

using arith::ScaledPAdic;

/// G_i = <(p^{a_i}, z_i), (0, p^{b_i})> in Z_p^2.
struct FiltrationEntry {
  BigInt a = 0;
  BigInt b = 0;
  ScaledPAdic z;
};

class LatticeFiltration {
 public:
  LatticeFiltration(std::uint32_t p, std::vector<FiltrationEntry> entries);

  /// a_i = b_i = i, z_i = 0 for i = 0..levels.
  static LatticeFiltration p_power(std::uint32_t p, std::uint64_t levels);

  std::uint32_t p() const { return p_; }
  const std::vector<FiltrationEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const FiltrationEntry& operator[](std::size_t i) const { return entries_.at(i); }

  /// log_p |G : G_i| = a_i + b_i.
  BigInt log_index(std::size_t i) const;
  /// G_i as a lattice; z_i is materialized.
  LatticeSubgroup term(std::size_t i) const;
  /// Prefix with levels 0..last.
  LatticeFiltration truncated(std::size_t last) const;

 private:
  std::uint32_t p_;
  std::vector<FiltrationEntry> entries_;
};

struct FiltrationViolation {
  std::size_t index = 0;
  std::string condition;
  std::string detail;
};

/// First failing index of the filtration invariants, or nullopt when valid.
std::optional<FiltrationViolation> validate_filtration(const LatticeFiltration& f);

}  // namespace hdlab::lattice
