#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdlab/arith/bigint.hpp"

namespace hdlab::lattice {

using arith::BigInt;
using IntVector = std::vector<BigInt>;

/// Canonical column-Hermite basis of L + p^N Z_p^d: lower triangular, column r
/// has pivot p^{valuations[r]} in row r, and entries below a pivot are reduced
/// modulo the pivot of their row.
struct HermiteForm {
  std::uint32_t p = 2;
  BigInt precision = 0;                  // N
  std::vector<BigInt> valuations;        // one per row, each <= N
  std::vector<IntVector> columns;        // d columns of length d

  /// log_p |Z_p^d : L + p^N Z_p^d|
  BigInt log_index() const;
  /// Membership of an integer vector in L + p^N Z_p^d.
  bool contains(const IntVector& v) const;

  friend bool operator==(const HermiteForm& a, const HermiteForm& b);
};

/// Subgroup of Z_p^d given by integer generators (columns).  Generators may be
/// dependent or span an infinite-index sublattice.
class LatticeSubgroup {
 public:
  LatticeSubgroup(std::uint32_t p, std::size_t rank, std::vector<IntVector> generators);

  static LatticeSubgroup zero(std::uint32_t p, std::size_t rank);
  static LatticeSubgroup whole(std::uint32_t p, std::size_t rank);

  std::uint32_t p() const { return p_; }
  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& generators() const { return generators_; }

  /// Canonical form of this lattice plus p^N Z_p^d.
  HermiteForm hermite(const BigInt& precision) const;
  /// log_p of the index of L + p^N Z_p^d.
  BigInt log_index_at(const BigInt& precision) const;
  /// Exact log_p index; throws PrecisionExhausted for infinite-index lattices.
  BigInt exact_log_index() const;
  bool full_rank() const;

  /// L + M.
  LatticeSubgroup operator+(const LatticeSubgroup& other) const;
  /// Image under an integer matrix given as rows (target rank = rows.size()).
  LatticeSubgroup image(const std::vector<IntVector>& matrix_rows) const;

 private:
  std::uint32_t p_;
  std::size_t rank_;
  std::vector<IntVector> generators_;
};

/// log_p |H + G : G| for a finite-index lattice G.
BigInt lattice_index(const LatticeSubgroup& h, const LatticeSubgroup& g);

/// Equality of two finite-index lattices (exact).
bool same_lattice(const LatticeSubgroup& a, const LatticeSubgroup& b);

}  // namespace hdlab::lattice
