#include "hdlab/group/analysis.hpp"

#include "hdlab/error.hpp"

namespace hdlab::group {

std::uint64_t stability_horizon(const SeriesTerms& shallow, const SeriesTerms& deep) {
  const std::size_t n = std::min(shallow.size(), deep.size());
  std::uint64_t horizon = 0;
  bool informative = false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = shallow.log_index(i);
    if (a != deep.log_index(i)) break;
    informative = informative || a > 0;
    horizon = i;
  }
  if (!informative) throw InvalidArgument("stability horizon is trivial: truncation depth too shallow");
  return horizon;
}

HorizonRun stability_horizon(const SeriesSpec& spec,
                             const std::function<std::shared_ptr<const GroupOracle>(std::uint32_t)>& family,
                             std::uint32_t k, std::uint64_t budget) {
  HorizonRun run;
  run.shallow_group = family(k);
  run.deep_group = family(k + 1);
  run.shallow = series_terms(spec, *run.shallow_group, budget);
  run.deep = series_terms(spec, *run.deep_group, budget);
  run.horizon = stability_horizon(run.shallow, run.deep);
  return run;
}

PowerfulReport powerful_uniform_check(const SubgroupHandle& h, const GroupOracle& g,
                                      const SeriesTerms* dimension_series, std::uint64_t horizon,
                                      std::uint64_t budget) {
  PowerfulReport r;
  const std::uint32_t p = g.p();
  const SubgroupHandle comm = commutator_subgroup(h, h, h.generators(), g, budget);
  const SubgroupHandle pw = power_subgroup(h, p == 2 ? 4 : p, g, budget);
  r.log_commutator = comm.log_order();
  r.log_power = pw.log_order();
  r.powerful = is_subgroup_of(comm, pw);
  if (dimension_series) {
    for (std::uint64_t i = 1; p * i <= horizon && p * i < dimension_series->size(); ++i) {
      const SubgroupHandle di_p = power_subgroup((*dimension_series)[i], p, g, budget);
      r.dimension_checks.push_back({i, same_subgroup(di_p, (*dimension_series)[p * i])});
    }
  }
  return r;
}

}  // namespace hdlab::group
