#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "hdlab/estimator/density.hpp"

namespace hdlab::estimator {

using LevelMap = std::function<std::uint64_t(std::uint64_t)>;

struct RatioLevel {
  std::uint64_t index = 0;   // i (or j)
  std::uint64_t paired = 0;  // i* (or j')
  std::uint64_t num = 0;
  std::uint64_t den = 0;     // log_p |G : X_i Y_{i*}|
  Rational ratio;
};

struct RatioSequence {
  std::string label;
  std::vector<RatioLevel> levels;
  /// Levels with equal paired index form one block (the j -> j' sequences);
  /// otherwise every level is its own block.
  bool by_paired = false;
  /// Over the block maxima: the maximum over the second half is below the
  /// maximum over the first half, or the second half vanishes.
  bool decaying() const;
};

struct CompareReport {
  // |X_i Y_i* : X_i|, |X_i Y_i* : Y_i*|, |X_j' Y_j : X_j'|, |X_j' Y_j : Y_j|, each over |G : join|.
  std::array<RatioSequence, 4> sequences;
  bool compatible = false;
  std::string verdict;
};

/// The four vanishing-ratio sequences of the two-series comparison on the
/// window i in [1, x_last], j in [1, y_last]; levels whose join is G are skipped.
CompareReport compare_series(const SeriesTerms& x, const SeriesTerms& y, const LevelMap& star, const LevelMap& prime,
                             const GroupOracle& g, std::uint64_t x_last, std::uint64_t y_last,
                             std::uint64_t budget = group::default_budget());

}  // namespace hdlab::estimator
