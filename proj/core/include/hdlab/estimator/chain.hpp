#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hdlab/estimator/experiments.hpp"
#include "hdlab/estimator/tower.hpp"

namespace hdlab::estimator {

enum class TieBreak { kLargest, kSmallest };

struct ChainStep {
  std::uint64_t level = 0;  // k: H_k was fixed at this step
  bool frozen = false;      // true when the step advanced past an index ratio above eta
  std::uint64_t l_low = 0;  // l' = log_p |H_j G_k : G_k|
  std::uint64_t l_high = 0; // l'' = log_p |H_j G_{k-1} : G_k|
  std::uint64_t l = 0;
};

/// Ascending chain H_1 <= H_2 <= ... in a coordinate tower.  counts[i] is
/// log_p |H_i G_i : G_i| and subgroups.back() is the final H.
struct ChainState {
  Rational eta;
  std::uint64_t j = 0;
  std::vector<CoordinateSubgroup> subgroups;  // H_0 .. H_j
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> checkpoints;     // levels with ratio <= eta
  std::vector<ChainStep> steps;
};

struct ChainResult {
  ChainState state;
  DensitySequence sequence{2, {}};
};

/// Builds H_1 <= ... <= H_steps with
///   (i)  H_i G_i = H_{i'} G_i for i <= i',
///   (ii) log_p |H_i G_i : G_i| >= eta m(i) - 1,
/// and ratio <= eta at every level where an extension was chosen.  Both
/// conditions are checked after every step.  Throws BudgetExceeded when the
/// tower runs out of levels while advancing past a ratio above eta.
ChainResult chain_build(const CoordinateTower& tower, const Rational& eta, std::uint64_t steps,
                        TieBreak tie = TieBreak::kLargest);

struct IntervalLevel {
  std::uint64_t i = 0;
  Rational b_in_g;
  Rational h_in_g;
  Rational b_in_h;
  bool exact = false;
};

struct IntervalSample {
  Rational theta;
  Rational target;  // theta / xi
  CoordinateSubgroup b;
  ChainResult chain;
  DensitySequence sequence{2, {}};
  std::vector<IntervalLevel> levels;
  Rational final_value;
  bool within_tolerance = false;
};

/// Builds B <= H of density theta from a subproduct H of certified density xi
/// by running chain_build on the induced tower of H with target theta/xi.
IntervalSample interval_sample(const CoordinateTower& tower, const std::vector<std::size_t>& h_coords,
                               const ProperLimit& xi, const Rational& theta, std::uint64_t depth,
                               TieBreak tie = TieBreak::kLargest);

}  // namespace hdlab::estimator
