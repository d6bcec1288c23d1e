#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hdlab::group {

using Coord = std::uint32_t;

/// Finite local ring Z/p^k, F_p[t]/(t^k), or Z_p[zeta_{p^m}]/p^k.  Elements are
/// fixed-width coordinate blocks reduced eagerly: a residue, the coefficients of
/// 1, t, ..., t^{k-1}, or the coefficients of 1, pi, ..., pi^{phi-1} with pi = zeta - 1.
class FinLocalRing {
 public:
  enum class Kind { kIntegersModPk, kTruncatedSeries, kCyclotomic };

  static FinLocalRing integers_mod(std::uint32_t p, std::uint32_t k);
  static FinLocalRing truncated_series(std::uint32_t p, std::uint32_t k);
  static FinLocalRing cyclotomic(std::uint32_t p, std::uint32_t m, std::uint32_t k);

  Kind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t m() const { return m_; }
  /// Coordinates per element.
  std::size_t width() const { return width_; }
  /// Modulus applied to each coordinate.
  Coord coefficient_modulus() const { return q_; }
  /// Valuation cap: k for the first two kinds, k * phi(p^m) in pi-adic units.
  std::uint32_t depth() const;
  std::string name() const;

  void zero(Coord* out) const;
  void one(Coord* out) const;
  void from_int(std::int64_t v, Coord* out) const;
  void add(const Coord* a, const Coord* b, Coord* out) const;
  void sub(const Coord* a, const Coord* b, Coord* out) const;
  void neg(const Coord* a, Coord* out) const;
  /// out may alias neither a nor b.
  void mul(const Coord* a, const Coord* b, Coord* out) const;
  bool is_zero(const Coord* a) const;
  bool is_one(const Coord* a) const;
  bool is_unit(const Coord* a) const;
  /// out may not alias a.
  void unit_inverse(const Coord* a, Coord* out) const;
  /// Largest i <= depth() with a in the i-th power of the maximal ideal.
  std::uint32_t level(const Coord* a) const;
  /// Generator of the maximal ideal (p, t, or pi).
  void uniformizer(Coord* out) const;

 private:
  FinLocalRing(Kind kind, std::uint32_t p, std::uint32_t k, std::uint32_t m);

  Kind kind_;
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t m_;
  std::size_t width_;
  Coord q_;
  std::vector<std::int64_t> pi_power_phi_;  // pi^phi = sum_j c_j pi^j, reduced mod q
};

}  // namespace hdlab::group
