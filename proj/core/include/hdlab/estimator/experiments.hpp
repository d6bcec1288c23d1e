#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hdlab/estimator/density.hpp"

namespace hdlab::estimator {

using GroupFactory = std::function<std::shared_ptr<const GroupOracle>(std::uint32_t depth)>;
using SubgroupFactory = std::function<std::vector<Element>(const GroupOracle&)>;

/// A certified closed form for a convergent density sequence.
struct ProperLimit {
  Rational value;
  std::string tag;
};

struct SeriesTail {
  group::SeriesKind kind = group::SeriesKind::kPPower;
  std::uint64_t horizon = 0;
  DensitySequence sequence{2, {}};
  Rational at_horizon;
};

struct PfdReport {
  std::vector<SeriesTail> tails;  // p-power, Frattini, dimension subgroup
  Rational expected;
  Rational max_pairwise_gap;
  Rational max_gap_to_expected;
  std::uint64_t usable_levels = 0;
};

/// Densities of H under the p-power, Frattini and dimension subgroup series of
/// the family at depth k, restricted to the stability horizon against depth
/// k - 1.  Throws InvalidArgument when the three series together offer fewer
/// than three usable levels or one of them offers none.
PfdReport pfd_equality_experiment(const GroupFactory& family, std::uint32_t k, const SubgroupFactory& h,
                                  const Rational& expected, std::uint64_t budget = group::default_budget());

struct LowerBoundReport {
  Rational bound;     // dim(H)/dim(G)^2 - slack
  Rational slack;
  Rational observed;  // minimum ratio over the levels within the horizon
  bool pass = false;
};

/// Tail check of hdim >= dim(H)/dim(G)^2 with slack 1/m(horizon) (or the given slack).
LowerBoundReport lowerp_bound_check(const DensitySequence& seq, std::uint64_t dim_h, std::uint64_t dim_g,
                                    std::uint64_t horizon, std::optional<Rational> slack = std::nullopt);

struct FactorizationLevel {
  std::uint64_t i = 0;
  Rational b_in_g;  // log|BG_i:G_i| / log|G:G_i|
  Rational h_in_g;  // log|HG_i:G_i| / log|G:G_i|
  Rational b_in_h;  // log|BH_i:H_i| / log|H:H_i|, H_i = H cap G_i (0/0 = 1)
  bool exact = false;
};

struct MultiplicativityReport {
  ProperLimit certificate;
  std::vector<FactorizationLevel> levels;
  bool all_exact = false;
};

/// Level-wise check of density_G(B) = density_G(H) * density_H(B) against the
/// induced filtration.  Requires B <= H and a proper-limit certificate for H.
MultiplicativityReport multiplicativity_check(const SeriesTerms& terms, const GroupOracle& g,
                                              const SubgroupHandle& h, const SubgroupHandle& b,
                                              const std::optional<ProperLimit>& certificate, std::uint64_t first,
                                              std::uint64_t last, std::uint64_t budget = group::default_budget());

}  // namespace hdlab::estimator
