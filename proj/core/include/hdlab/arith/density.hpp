#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdlab/arith/bigint.hpp"
#include "hdlab/arith/rational.hpp"

namespace hdlab::arith {

/// One level of a density sequence: num = log_p|HG_i : G_i|, den = log_p|G : G_i|.
struct DensityLevel {
  std::uint64_t i = 0;
  BigInt num = 0;
  BigInt den = 0;

  /// num/den with 0/0 = 1.
  Rational ratio() const;
};

/// Per-level index data of a subgroup against a filtration.
///
/// Construction enforces: entries sorted by strictly increasing i, den
/// strictly increasing, and 0 <= num <= den.
class DensitySequence {
 public:
  DensitySequence(std::uint32_t p, std::vector<DensityLevel> levels);

  std::uint32_t p() const { return p_; }
  const std::vector<DensityLevel>& levels() const { return levels_; }
  bool empty() const { return levels_.empty(); }
  std::size_t size() const { return levels_.size(); }
  const DensityLevel& back() const { return levels_.back(); }
  /// Level with index i, or nullptr.
  const DensityLevel* find(std::uint64_t i) const;
  std::uint64_t max_level() const { return levels_.empty() ? 0 : levels_.back().i; }

 private:
  std::uint32_t p_;
  std::vector<DensityLevel> levels_;
};

/// Observed lower-limit estimate of a density sequence, optionally paired with
/// a certified closed form.
struct HdimEstimate {
  Rational window_min;
  std::uint64_t tail_start = 0;
  std::optional<Rational> exact;
  std::string certificate;

  /// |window_min - exact| when a closed form is present.
  std::optional<Rational> gap() const;
};

/// Minimum of num/den over the levels with i >= tail_start (0/0 = 1).
/// Throws InvalidArgument when the tail is empty.
HdimEstimate liminf_estimate(const DensitySequence& seq, std::uint64_t tail_start);

/// Attaches a certified closed form to an estimate.
HdimEstimate with_exact(HdimEstimate est, Rational exact, std::string certificate);

/// Step inequalities used by the ascending-chain construction.  Both return the
/// truth value of the implication for positive x, y, z and eta in [0, 1].
///
///   x/y >= eta - 1/y   implies  (x+z)/(y+z) >= eta - 1/(y+z)
bool step_preserves_slack_bound(const Rational& x, const Rational& y, const Rational& z, const Rational& eta);
///   x/y >= eta         implies  (x+z)/(y+z) >= eta
bool step_preserves_bound(const Rational& x, const Rational& y, const Rational& z, const Rational& eta);

}  // namespace hdlab::arith
