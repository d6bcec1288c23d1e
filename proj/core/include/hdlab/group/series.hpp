#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdlab/group/closure.hpp"

namespace hdlab::group {

enum class SeriesKind {
  kPPower,
  kLowerP,
  kFrattini,
  kDimension,
  kPrincipalCongruence,
  kExplicitChain,
  kLatticeTriples,
  kLifted,
};

std::string to_string(SeriesKind k);
SeriesKind series_kind_from_string(const std::string& s);

struct SeriesSpec {
  SeriesKind kind = SeriesKind::kPPower;
  std::uint64_t depth = 1;  // terms 0..depth
};

/// Terms G_0 = G, G_1, ..., indexed by their series index.
struct SeriesTerms {
  SeriesKind kind = SeriesKind::kPPower;
  std::vector<SubgroupHandle> terms;
  /// Set when the budget cut the chain short; terms holds indices < horizon_marker.
  std::optional<std::uint64_t> horizon_marker;

  std::size_t size() const { return terms.size(); }
  const SubgroupHandle& operator[](std::size_t i) const { return terms.at(i); }
  /// log_p |G : G_i|.
  std::uint64_t log_index(std::size_t i) const { return terms.at(0).log_order() - terms.at(i).log_order(); }
};

/// Literal recursions; verbal subgroups from full enumerations.  Budget
/// overruns truncate the chain and set horizon_marker.
SeriesTerms series_terms(const SeriesSpec& spec, const GroupOracle& g, std::uint64_t budget = default_budget());

/// The whole group, enumerated.
SubgroupHandle whole_group(const GroupOracle& g, std::uint64_t budget = default_budget());

/// Structural principal congruence terms SL^i, i = 1..depth (index 0 repeats G).
SeriesTerms congruence_terms(const GroupOracle& g);

}  // namespace hdlab::group
