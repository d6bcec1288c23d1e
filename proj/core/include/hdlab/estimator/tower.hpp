#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hdlab/estimator/density.hpp"

namespace hdlab::estimator {

/// A countably based pro-p group seen through its finite quotients G/G_i.
class TowerOracle {
 public:
  virtual ~TowerOracle() = default;
  virtual std::uint32_t p() const = 0;
  /// Number of levels available (i = 0..depth).
  virtual std::uint64_t depth() const = 0;
  /// m(i) = log_p |G : G_i|.
  virtual std::uint64_t m(std::uint64_t i) const = 0;
  /// G/G_i as a finite group.
  virtual std::shared_ptr<const GroupOracle> quotient(std::uint64_t i) const = 0;
  /// Image of x in G/G_to for x in G/G_from, to <= from.
  virtual Element project(const Element& x, std::uint64_t from, std::uint64_t to) const = 0;
  /// Whether finitely generated subgroups are known to have density 0 (finite ones).
  virtual bool finite_fg_subgroups() const = 0;
};

/// Unrestricted product of copies of Z/p, coordinate c sitting outside G_i
/// exactly when level(c) <= i.  Coordinates are ordered by level, ties by
/// position.
class CoordinateTower final : public TowerOracle {
 public:
  /// levels[c] is the level of coordinate c; must be nondecreasing and >= 1,
  /// and every level 1..max must carry at least one coordinate.
  CoordinateTower(std::uint32_t p, std::vector<std::uint64_t> levels);
  /// One coordinate per level: m(i) = i.
  static CoordinateTower unit(std::uint32_t p, std::uint64_t depth);

  std::uint32_t p() const override { return p_; }
  std::uint64_t depth() const override { return depth_; }
  std::uint64_t m(std::uint64_t i) const override;
  std::shared_ptr<const GroupOracle> quotient(std::uint64_t i) const override;
  Element project(const Element& x, std::uint64_t from, std::uint64_t to) const override;
  bool finite_fg_subgroups() const override { return true; }

  std::size_t size() const { return levels_.size(); }
  std::uint64_t level(std::size_t c) const { return levels_[c]; }
  const std::vector<std::uint64_t>& levels() const { return levels_; }
  /// Coordinates with level exactly i, in order.
  std::vector<std::size_t> at_level(std::uint64_t i) const;

  /// Tower of the subproduct on the given coordinates with the induced
  /// filtration H cap G_i, keeping only the levels where it strictly refines.
  /// level_map()[j] is the G-level matching the j-th level of the result.
  struct Induced;
  Induced induced(const std::vector<std::size_t>& coords) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint64_t> levels_;
  std::uint64_t depth_;
  std::vector<std::uint64_t> m_;
};

struct CoordinateTower::Induced {
  CoordinateTower tower;
  std::vector<std::size_t> coords;        // coordinate of G for each coordinate of the tower
  std::vector<std::uint64_t> level_map;   // level_map[j] = G-level of tower level j, level_map[0] = 0
};

/// A subgroup of a coordinate tower spanned by coordinate vectors.
class CoordinateSubgroup {
 public:
  CoordinateSubgroup() = default;
  explicit CoordinateSubgroup(const CoordinateTower& t) : member_(t.size(), false) {}
  bool contains(std::size_t c) const { return member_[c]; }
  void insert(std::size_t c) { member_[c] = true; }
  std::vector<std::size_t> coords() const;
  /// log_p |H G_i : G_i|
  std::uint64_t count(const CoordinateTower& t, std::uint64_t i) const;
  bool operator==(const CoordinateSubgroup&) const = default;

 private:
  std::vector<bool> member_;
};

/// Density sequence of a coordinate subgroup, levels first..last.
DensitySequence coordinate_density(const CoordinateTower& t, const CoordinateSubgroup& h, std::uint64_t first,
                                   std::uint64_t last);

}  // namespace hdlab::estimator
