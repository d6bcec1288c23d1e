#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdlab/group/oracle.hpp"

namespace hdlab::group {

using ElementSet = std::unordered_set<Element, ElementHash>;

/// Element budget: HDLAB_BUDGET when set, otherwise 2^22.
std::uint64_t default_budget();

/// A subgroup given by generators, with an enumerated element set and/or a
/// structural membership predicate.
class SubgroupHandle {
 public:
  using Predicate = std::function<bool(const Element&)>;

  /// Enumerated subgroup; elements listed in discovery order.
  SubgroupHandle(std::vector<Element> generators, std::vector<Element> elements, std::uint32_t p);
  /// Structural subgroup known only by generators, order and membership test.
  static SubgroupHandle structural(std::vector<Element> generators, std::uint64_t log_order, Predicate member);

  const std::vector<Element>& generators() const { return generators_; }
  std::uint64_t log_order() const { return log_order_; }
  bool enumerated() const { return elements_ != nullptr; }
  /// Elements in discovery order; throws for structural handles.
  const std::vector<Element>& elements() const;
  bool contains(const Element& g) const;
  bool has_predicate() const { return static_cast<bool>(predicate_); }
  /// Structural membership test; nullptr when absent.
  const Predicate& predicate() const { return predicate_; }

  nlohmann::json to_json() const;

 private:
  SubgroupHandle() = default;

  std::vector<Element> generators_;
  std::uint64_t log_order_ = 0;
  std::shared_ptr<const std::vector<Element>> elements_;
  std::shared_ptr<const ElementSet> members_;
  Predicate predicate_;
};

/// <gens> by coset-wise breadth-first closure.  Throws BudgetExceeded when the
/// subgroup would hold more than budget elements.
SubgroupHandle closure(std::span<const Element> gens, const GroupOracle& g, std::uint64_t budget = default_budget());

/// <base, gens>, reusing the enumeration of base.
SubgroupHandle extend(const SubgroupHandle& base, std::span<const Element> gens, const GroupOracle& g,
                      std::uint64_t budget = default_budget());

/// Smallest subgroup containing h and normalized by the generators of `by`.
SubgroupHandle normal_closure(const SubgroupHandle& h, std::span<const Element> by, const GroupOracle& g,
                              std::uint64_t budget = default_budget());

/// <x^e : x in X> from the full enumeration of X.
SubgroupHandle power_subgroup(const SubgroupHandle& x, std::uint64_t e, const GroupOracle& g,
                              std::uint64_t budget = default_budget());

/// [X, Y] for subgroups normalized by `ambient`: the normal closure under
/// `ambient` of [x, y] with x ranging over all of X and y over generators of Y.
SubgroupHandle commutator_subgroup(const SubgroupHandle& x, const SubgroupHandle& y,
                                   std::span<const Element> ambient, const GroupOracle& g,
                                   std::uint64_t budget = default_budget());

/// A <= B (by generators of A against membership in B).
bool is_subgroup_of(const SubgroupHandle& a, const SubgroupHandle& b);
bool same_subgroup(const SubgroupHandle& a, const SubgroupHandle& b);
/// Normalized by every element of `by` (checked on generators).
bool is_normalized_by(const SubgroupHandle& h, std::span<const Element> by, const GroupOracle& g);

}  // namespace hdlab::group
