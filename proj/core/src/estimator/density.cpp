#include "hdlab/estimator/density.hpp"

#include "hdlab/error.hpp"
#include "hdlab/group/congruence.hpp"

namespace hdlab::estimator {

DensitySequence density(const SubgroupHandle& h, const SeriesTerms& terms, const GroupOracle& g,
                        std::uint64_t first, std::uint64_t last, std::uint64_t budget) {
  if (last >= terms.size()) throw InvalidArgument("density window beyond computed series terms");
  std::vector<arith::DensityLevel> levels;
  std::uint64_t prev_den = 0;
  for (std::uint64_t i = first; i <= last; ++i) {
    const SubgroupHandle& gi = terms[i];
    const std::uint64_t den = terms.log_index(i);
    if (den == 0 || den <= prev_den) continue;
    if (!group::is_normalized_by(gi, g.generators(), g)) {
      throw Error("series term " + std::to_string(i) + " is not normal in G");
    }
    std::uint64_t joined;
    if (gi.enumerated()) {
      joined = group::extend(gi, h.generators(), g, budget).log_order();
    } else {
      throw InvalidArgument("structural series terms need a fast path");
    }
    const std::uint64_t num = joined - gi.log_order();
    levels.push_back({i, BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den))});
    prev_den = den;
  }
  return DensitySequence(g.p(), std::move(levels));
}

DensitySequence cyclic_congruence_density(const Element& x, const GroupOracle& g, std::uint32_t first,
                                          std::uint32_t last) {
  std::vector<arith::DensityLevel> levels;
  for (std::uint32_t i = first; i <= last; ++i) {
    const auto den = g.congruence_log_index(i);
    if (!den) throw InvalidArgument("level " + std::to_string(i) + " outside the congruence filtration");
    if (*den == 0) continue;
    const std::uint64_t num = group::cyclic_order_mod_level(g, x, i);
    levels.push_back({i, BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(*den))});
  }
  return DensitySequence(g.p(), std::move(levels));
}

}  // namespace hdlab::estimator
