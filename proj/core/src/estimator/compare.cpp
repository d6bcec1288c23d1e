#include "hdlab/estimator/compare.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::estimator {

bool RatioSequence::decaying() const {
  // Maxima per block of consecutive levels sharing a key, then the halves rule on the blocks.
  std::vector<Rational> blocks;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto key = by_paired ? levels[k].paired : levels[k].index;
    const bool fresh = k == 0 || key != (by_paired ? levels[k - 1].paired : levels[k - 1].index);
    if (fresh) blocks.push_back(levels[k].ratio);
    else blocks.back() = std::max(blocks.back(), levels[k].ratio);
  }
  if (blocks.empty()) return true;
  const std::size_t half = blocks.size() / 2;
  Rational first(0), second(0);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto& slot = k < half ? first : second;
    slot = std::max(slot, blocks[k]);
  }
  if (second.is_zero()) return true;
  return half > 0 && second < first;
}

namespace {

void append(RatioSequence& seq, std::uint64_t index, std::uint64_t paired, std::uint64_t num, std::uint64_t den) {
  seq.levels.push_back({index, paired, num, den,
                        Rational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)))});
}

}  // namespace

CompareReport compare_series(const SeriesTerms& x, const SeriesTerms& y, const LevelMap& star, const LevelMap& prime,
                             const GroupOracle& g, std::uint64_t x_last, std::uint64_t y_last, std::uint64_t budget) {
  CompareReport r;
  r.sequences[0].label = "XY*:X";
  r.sequences[1].label = "XY*:Y*";
  r.sequences[2].label = "X'Y:X'";
  r.sequences[3].label = "X'Y:Y";
  r.sequences[2].by_paired = true;
  r.sequences[3].by_paired = true;
  const std::uint64_t total = x[0].log_order();
  auto join = [&](const SubgroupHandle& a, const SubgroupHandle& b) {
    return group::extend(a, b.generators(), g, budget).log_order();
  };
  for (std::uint64_t i = 1; i <= x_last && i < x.size(); ++i) {
    const std::uint64_t is = star(i);
    if (is >= y.size()) break;
    const std::uint64_t w = join(x[i], y[is]);
    if (w == total) continue;
    append(r.sequences[0], i, is, w - x[i].log_order(), total - w);
    append(r.sequences[1], i, is, w - y[is].log_order(), total - w);
  }
  for (std::uint64_t j = 1; j <= y_last && j < y.size(); ++j) {
    const std::uint64_t jp = prime(j);
    if (jp >= x.size()) break;
    const std::uint64_t w = join(x[jp], y[j]);
    if (w == total) continue;
    append(r.sequences[2], j, jp, w - x[jp].log_order(), total - w);
    append(r.sequences[3], j, jp, w - y[j].log_order(), total - w);
  }
  r.compatible = std::all_of(r.sequences.begin(), r.sequences.end(), [](const auto& s) { return s.decaying(); });
  r.verdict = r.compatible ? "compatible (ratios decrease to 0 on window)" : "divergent";
  return r;
}

}  // namespace hdlab::estimator
