#pragma once

#include <memory>

#include "hdlab/group/oracle.hpp"
#include "hdlab/group/ring.hpp"

namespace hdlab::group {

/// Z/p^k, written additively in one coordinate.
class CyclicGroup final : public GroupOracle {
 public:
  CyclicGroup(std::uint32_t p, std::uint32_t k);
  std::string family() const override { return "cyclic"; }
  std::uint32_t p() const override { return p_; }
  std::size_t coords() const override { return 1; }
  Element identity() const override { return {0}; }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  const std::vector<Element>& generators() const override { return gens_; }
  std::uint64_t log_order() const override { return k_; }
  nlohmann::json describe() const override;

 private:
  std::uint32_t p_, k_;
  Coord q_;
  std::vector<Element> gens_;
};

/// (Z/p)^n with coordinate n surviving to level n + 1 in a coordinate tower.
class CoordinateProduct final : public GroupOracle {
 public:
  CoordinateProduct(std::uint32_t p, std::size_t n);
  std::string family() const override { return "coordinate-product"; }
  std::uint32_t p() const override { return p_; }
  std::size_t coords() const override { return n_; }
  Element identity() const override { return Element(n_, 0); }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  const std::vector<Element>& generators() const override { return gens_; }
  std::uint64_t log_order() const override { return n_; }
  nlohmann::json describe() const override;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<Element> gens_;
};

/// Upper unitriangular n x n matrices over Z/p^k (Heisenberg group for n = 3),
/// stored as the strictly upper entries in row-major order.
class UnitriangularGroup final : public GroupOracle {
 public:
  UnitriangularGroup(std::uint32_t p, std::uint32_t k, std::size_t n = 3);
  std::string family() const override { return "unitriangular"; }
  std::uint32_t p() const override { return p_; }
  std::size_t coords() const override { return slots_; }
  Element identity() const override { return Element(slots_, 0); }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  const std::vector<Element>& generators() const override { return gens_; }
  std::uint64_t log_order() const override { return static_cast<std::uint64_t>(slots_) * k_; }
  nlohmann::json describe() const override;

  std::size_t n() const { return n_; }
  /// Element with a single entry at (row, col), row < col.
  Element elementary(std::size_t row, std::size_t col, Coord value) const;

 private:
  std::size_t slot(std::size_t r, std::size_t c) const;
  std::uint32_t p_, k_;
  std::size_t n_, slots_;
  Coord q_;
  std::vector<Element> gens_;
};

/// First principal congruence subgroup SL_n^1 over Z/p^k or F_p[t]/(t^k).
class CongruenceGroup final : public GroupOracle {
 public:
  CongruenceGroup(FinLocalRing ring, std::size_t n = 3);
  std::string family() const override { return "sl-congruence"; }
  std::uint32_t p() const override { return ring_.p(); }
  std::size_t coords() const override { return n_ * n_ * ring_.width(); }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  const std::vector<Element>& generators() const override { return gens_; }
  std::uint64_t log_order() const override;
  nlohmann::json describe() const override;

  std::optional<std::uint32_t> congruence_level(const Element& g) const override;
  std::optional<std::uint64_t> congruence_log_index(std::uint32_t i) const override;
  std::optional<std::uint32_t> congruence_depth() const override { return ring_.k(); }

  const FinLocalRing& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  /// Identity plus value at (row, col); value given as ring coordinates.
  Element elementary(std::size_t row, std::size_t col, const std::vector<Coord>& value) const;
  /// Entry block at (row, col).
  const Coord* entry(const Element& g, std::size_t row, std::size_t col) const;
  /// Determinant, as ring coordinates.
  std::vector<Coord> determinant(const Element& g) const;

 private:
  FinLocalRing ring_;
  std::size_t n_;
  std::vector<Element> gens_;
};

/// T x| A with T = (Z/p^k)^d, A = O/p^k for O = Z_p[zeta_{p^m}], and
/// (t, a)(t', a') = (t + t', a zeta^{t'_0} + a').  Coordinates: d entries of t
/// followed by the pi-basis coordinates of a.
class CyclotomicSemidirect final : public GroupOracle {
 public:
  CyclotomicSemidirect(std::uint32_t p, std::uint32_t m, std::uint32_t d, std::uint32_t k);
  std::string family() const override { return "cyclotomic-semidirect"; }
  std::uint32_t p() const override { return ring_.p(); }
  std::size_t coords() const override { return d_ + ring_.width(); }
  Element identity() const override { return Element(coords(), 0); }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  const std::vector<Element>& generators() const override { return gens_; }
  std::uint64_t log_order() const override;
  nlohmann::json describe() const override;

  const FinLocalRing& ring() const { return ring_; }
  std::uint32_t d() const { return d_; }
  std::uint32_t k() const { return k_; }
  std::size_t phi() const { return ring_.width(); }
  /// s_j as an element.
  Element s(std::size_t j) const;
  /// a_j = pi^j in A.
  Element a(std::size_t j) const;
  /// psi: the A-part of an element with trivial T-part, as ring coordinates.
  std::vector<Coord> psi(const Element& g) const;

 private:
  FinLocalRing ring_;
  std::uint32_t d_, k_;
  Coord q_;
  std::uint64_t zeta_order_;
  std::vector<std::vector<Coord>> zeta_powers_;
  std::vector<Element> gens_;
};

/// Direct product of finitely many oracles; coordinates are concatenated.
class DirectProduct final : public GroupOracle {
 public:
  explicit DirectProduct(std::vector<std::shared_ptr<const GroupOracle>> factors);
  std::string family() const override { return "direct-product"; }
  std::uint32_t p() const override { return factors_.front()->p(); }
  std::size_t coords() const override { return total_; }
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  const std::vector<Element>& generators() const override { return gens_; }
  std::uint64_t log_order() const override;
  nlohmann::json describe() const override;

  std::optional<std::uint32_t> congruence_level(const Element& g) const override;
  std::optional<std::uint64_t> congruence_log_index(std::uint32_t i) const override;
  std::optional<std::uint32_t> congruence_depth() const override;

  const std::vector<std::shared_ptr<const GroupOracle>>& factors() const { return factors_; }
  Element part(const Element& g, std::size_t factor) const;
  Element embed(const Element& g, std::size_t factor) const;
  Element combine(const std::vector<Element>& parts) const;

 private:
  std::vector<std::shared_ptr<const GroupOracle>> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<Element> gens_;
};

}  // namespace hdlab::group
