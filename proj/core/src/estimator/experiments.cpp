#include "hdlab/estimator/experiments.hpp"

#include <algorithm>

#include "hdlab/error.hpp"
#include "hdlab/group/analysis.hpp"

namespace hdlab::estimator {

namespace {

Rational abs_diff(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d.sign() < 0 ? -d : d;
}

Rational ratio_of(std::uint64_t num, std::uint64_t den) {
  return arith::ratio_with_conventions(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)))
      .value;
}

}  // namespace

PfdReport pfd_equality_experiment(const GroupFactory& family, std::uint32_t k, const SubgroupFactory& h,
                                  const Rational& expected, std::uint64_t budget) {
  if (k < 2) throw InvalidArgument("pfd experiment needs depth k >= 2");
  PfdReport r;
  r.expected = expected;
  const auto shallow = family(k - 1);
  const auto deep = family(k);
  const SubgroupHandle hh = group::closure(h(*deep), *deep, budget);
  const std::uint64_t p = deep->p();
  std::uint64_t dim_depth = 1;
  for (std::uint32_t i = 0; i < k; ++i) dim_depth *= p;
  for (auto kind : {group::SeriesKind::kPPower, group::SeriesKind::kFrattini, group::SeriesKind::kDimension}) {
    const std::uint64_t depth = kind == group::SeriesKind::kDimension ? dim_depth : k + 1;
    const auto a = group::series_terms({kind, depth}, *shallow, budget);
    const auto b = group::series_terms({kind, depth}, *deep, budget);
    const std::uint64_t horizon = group::stability_horizon(a, b);
    SeriesTail tail;
    tail.kind = kind;
    tail.horizon = horizon;
    tail.sequence = density(hh, b, *deep, 1, horizon, budget);
    if (tail.sequence.empty()) {
      throw InvalidArgument(group::to_string(kind) + " series has no usable level within its horizon");
    }
    tail.at_horizon = tail.sequence.back().ratio();
    r.usable_levels += tail.sequence.size();
    r.tails.push_back(std::move(tail));
  }
  if (r.usable_levels < 3) throw InvalidArgument("horizon too short: fewer than 3 usable levels");
  for (std::size_t a = 0; a < r.tails.size(); ++a) {
    r.max_gap_to_expected = std::max(r.max_gap_to_expected, abs_diff(r.tails[a].at_horizon, expected));
    for (std::size_t b = a + 1; b < r.tails.size(); ++b) {
      r.max_pairwise_gap = std::max(r.max_pairwise_gap, abs_diff(r.tails[a].at_horizon, r.tails[b].at_horizon));
    }
  }
  return r;
}

LowerBoundReport lowerp_bound_check(const DensitySequence& seq, std::uint64_t dim_h, std::uint64_t dim_g,
                                    std::uint64_t horizon, std::optional<Rational> slack) {
  if (dim_g == 0) throw InvalidArgument("dim(G) must be positive");
  LowerBoundReport r;
  const arith::DensityLevel* last = nullptr;
  std::optional<Rational> observed;
  for (const auto& lv : seq.levels()) {
    if (lv.i > horizon) break;
    last = &lv;
    const Rational x = lv.ratio();
    if (!observed || x < *observed) observed = x;
  }
  if (!last) throw InvalidArgument("no density level within the horizon");
  r.slack = slack ? *slack : Rational(BigInt(1), last->den);
  r.bound = Rational(static_cast<long>(dim_h), static_cast<long>(dim_g * dim_g)) - r.slack;
  r.observed = *observed;
  r.pass = r.observed >= r.bound;
  return r;
}

MultiplicativityReport multiplicativity_check(const SeriesTerms& terms, const GroupOracle& g,
                                              const SubgroupHandle& h, const SubgroupHandle& b,
                                              const std::optional<ProperLimit>& certificate, std::uint64_t first,
                                              std::uint64_t last, std::uint64_t budget) {
  if (!certificate) throw InvalidArgument("multiplicativity check needs a proper-limit certificate for H");
  if (!group::is_subgroup_of(b, h)) throw InvalidArgument("B must be a subgroup of H");
  if (last >= terms.size()) throw InvalidArgument("window beyond computed series terms");
  MultiplicativityReport r;
  r.certificate = *certificate;
  r.all_exact = true;
  const std::uint64_t total = terms[0].log_order();
  for (std::uint64_t i = first; i <= last; ++i) {
    const std::uint64_t den = terms.log_index(i);
    if (den == 0) continue;
    const SubgroupHandle& gi = terms[i];
    // Induced filtration term H_i = H cap G_i, enumerated independently of G_i joins.
    std::vector<Element> hi_elems;
    for (const auto& x : h.elements()) {
      if (gi.contains(x)) hi_elems.push_back(x);
    }
    const SubgroupHandle hi = group::closure(hi_elems, g, budget);
    const std::uint64_t b_join_g = group::extend(gi, b.generators(), g, budget).log_order() - gi.log_order();
    const std::uint64_t h_join_g = group::extend(gi, h.generators(), g, budget).log_order() - gi.log_order();
    const std::uint64_t b_join_h = group::extend(hi, b.generators(), g, budget).log_order() - hi.log_order();
    const std::uint64_t h_den = h.log_order() - hi.log_order();
    FactorizationLevel lv;
    lv.i = i;
    lv.b_in_g = ratio_of(b_join_g, den);
    lv.h_in_g = ratio_of(h_join_g, den);
    lv.b_in_h = ratio_of(b_join_h, h_den);
    lv.exact = lv.b_in_g == lv.h_in_g * lv.b_in_h;
    r.all_exact = r.all_exact && lv.exact;
    r.levels.push_back(std::move(lv));
  }
  (void)total;
  return r;
}

}  // namespace hdlab::estimator
