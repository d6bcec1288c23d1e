#pragma once

#include <cstdint>
#include <vector>

#include "hdlab/arith/density.hpp"
#include "hdlab/arith/rational.hpp"
#include "hdlab/lattice/filtration.hpp"

namespace hdlab::lattice {

struct LambdaPoint {
  BigInt lambda;
  BigInt f;  // f(lambda), exact
};

struct Prop34Options {
  /// Stop storing lambda_j once f(lambda_{j-1}) exceeds this many digits.
  std::uint64_t f_budget = std::uint64_t{1} << 20;
  /// Density window; 0 means min(500, lambda_last).
  std::uint64_t window = 0;
};

/// The filtration a_i = p^i, b_i = p^{i+1}, z_i = i p^{a_i} of Z_p^2 together
/// with the congruence data lambda_j that pins the procyclic subgroup
/// <(1, lambda)> of density nu.
class Prop34Instance {
 public:
  Prop34Instance(std::uint32_t p, arith::Rational nu, std::vector<LambdaPoint> points, std::uint64_t window);

  std::uint32_t p() const { return p_; }
  const arith::Rational& nu() const { return nu_; }
  const std::vector<LambdaPoint>& lambda_points() const { return points_; }
  std::uint64_t window() const { return window_; }

  /// f(m) = ceil(p^{m+1} - p^m (p+1) nu - 1).
  BigInt f(const BigInt& m) const;
  /// v_p(i - lambda) resolved through the stored congruence data.
  BigInt valuation_at(const BigInt& i) const;
  /// r_i = (p^{i+1} - v) / (p^i (p+1)).
  arith::Rational r(const BigInt& i) const;
  arith::DensityLevel level(std::uint64_t i) const;
  /// Levels 1..window.
  arith::DensitySequence density() const;
  /// Filtration entries 0..levels (z_i kept in scaled form).
  LatticeFiltration filtration(std::uint64_t levels) const;
  /// lambda_J known modulo p^{f(lambda_J)}.
  ScaledPAdic lambda_approximation() const;
  /// First integer beyond the validity range of the stored data.
  bool level_in_range(const BigInt& i) const;

 private:
  std::uint32_t p_;
  arith::Rational nu_;
  std::vector<LambdaPoint> points_;
  std::uint64_t window_;
};

/// Validates nu in [1/(p+1), (p-1)/(p+1)]; throws InvalidArgument otherwise.
void check_prop34_nu(std::uint32_t p, const arith::Rational& nu);

Prop34Instance prop34_build(std::uint32_t p, const arith::Rational& nu, Prop34Options options = {});

}  // namespace hdlab::lattice
