#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hdlab/group/series.hpp"

namespace hdlab::group {

/// Largest i such that log_p |G : G_i| agrees between two truncation depths,
/// checked for every index up to i.  Throws InvalidArgument when no level beyond
/// the trivial ones agrees.
std::uint64_t stability_horizon(const SeriesTerms& shallow, const SeriesTerms& deep);

struct HorizonRun {
  std::shared_ptr<const GroupOracle> shallow_group;
  std::shared_ptr<const GroupOracle> deep_group;
  SeriesTerms shallow;
  SeriesTerms deep;
  std::uint64_t horizon = 0;
};

/// Builds the family at depths k and k+1 and compares the series.
HorizonRun stability_horizon(const SeriesSpec& spec,
                             const std::function<std::shared_ptr<const GroupOracle>(std::uint32_t)>& family,
                             std::uint32_t k, std::uint64_t budget = default_budget());

struct PowerfulReport {
  bool powerful = false;
  std::uint64_t log_commutator = 0;  // log_p |[H,H]|
  std::uint64_t log_power = 0;       // log_p |H^p| (H^4 for p = 2)
  struct DimensionCheck {
    std::uint64_t i = 0;
    bool equal = false;
  };
  std::vector<DimensionCheck> dimension_checks;  // D_{pi} = D_i^p
};

/// [H,H] <= H^p (H^4 when p = 2), and D_{pi} = D_i^p for p*i <= horizon when a
/// dimension series of the ambient group is supplied.
PowerfulReport powerful_uniform_check(const SubgroupHandle& h, const GroupOracle& g,
                                      const SeriesTerms* dimension_series = nullptr, std::uint64_t horizon = 0,
                                      std::uint64_t budget = default_budget());

}  // namespace hdlab::group
