#include "hdlab/lattice/prop34.hpp"

#include "hdlab/error.hpp"

namespace hdlab::lattice {

using arith::Rational;

namespace {

constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 24;

bool fits_exponent(const BigInt& e) { return e >= 0 && e <= BigInt(static_cast<unsigned long>(kMaxExponent)); }

BigInt f_value(std::uint32_t p, const Rational& nu, const BigInt& m) {
  if (!fits_exponent(m + 1)) throw MaterializationError("f(m) needs p^m with m = " + m.get_str());
  const BigInt pm = arith::pow_ui(p, m.get_ui());
  const Rational x = Rational(pm * p) - Rational(pm) * Rational(static_cast<long>(p) + 1) * nu - Rational(1);
  return arith::ceil(x);
}

}  // namespace

void check_prop34_nu(std::uint32_t p, const Rational& nu) {
  const Rational lo(1, static_cast<long>(p) + 1);
  const Rational hi(static_cast<long>(p) - 1, static_cast<long>(p) + 1);
  if (nu < lo || nu > hi) {
    throw InvalidArgument("nu = " + nu.to_string() + " outside [" + lo.to_string() + ", " + hi.to_string() + "]");
  }
}

Prop34Instance::Prop34Instance(std::uint32_t p, Rational nu, std::vector<LambdaPoint> points, std::uint64_t window)
    : p_(p), nu_(std::move(nu)), points_(std::move(points)), window_(window) {
  if (points_.empty()) throw InvalidArgument("Prop34 instance needs lambda_0");
  if (window_ == 0) throw InvalidArgument("Prop34 window must be positive");
  if (!level_in_range(static_cast<unsigned long>(window_))) {
    throw InvalidArgument("window " + std::to_string(window_) + " reaches beyond lambda_" +
                          std::to_string(points_.size() - 1) + " + p^f(lambda)");
  }
}

BigInt Prop34Instance::f(const BigInt& m) const { return f_value(p_, nu_, m); }

bool Prop34Instance::level_in_range(const BigInt& i) const {
  const auto& last = points_.back();
  if (!fits_exponent(last.f)) return true;  // radius p^f dwarfs any machine-sized level
  return i < last.lambda + arith::pow_ui(p_, last.f.get_ui());
}

BigInt Prop34Instance::valuation_at(const BigInt& i) const {
  for (const auto& pt : points_) {
    if (pt.lambda == i) return pt.f;
  }
  if (!level_in_range(i)) throw PrecisionExhausted("level " + i.get_str() + " beyond stored congruence data");
  const BigInt diff = i - points_.back().lambda;
  return static_cast<unsigned long>(arith::vp_nonzero(diff, p_));
}

Rational Prop34Instance::r(const BigInt& i) const {
  if (!fits_exponent(i + 1)) throw MaterializationError("r_i needs p^i with i = " + i.get_str());
  const BigInt pi = arith::pow_ui(p_, i.get_ui());
  return Rational(pi * p_ - valuation_at(i), pi * (p_ + 1));
}

arith::DensityLevel Prop34Instance::level(std::uint64_t i) const {
  const BigInt pi = arith::pow_ui(p_, i);
  const BigInt b = pi * p_;
  BigInt v = valuation_at(static_cast<unsigned long>(i));
  if (v > b - pi) v = b - pi;  // d_i is capped at b_i
  return {i, b - v, pi + b};
}

arith::DensitySequence Prop34Instance::density() const {
  std::vector<arith::DensityLevel> levels;
  for (std::uint64_t i = 1; i <= window_; ++i) levels.push_back(level(i));
  return arith::DensitySequence(p_, std::move(levels));
}

LatticeFiltration Prop34Instance::filtration(std::uint64_t levels) const {
  std::vector<FiltrationEntry> entries;
  entries.push_back({0, 0, ScaledPAdic::zero(p_)});
  for (std::uint64_t i = 1; i <= levels; ++i) {
    const BigInt a = arith::pow_ui(p_, i);
    const BigInt b = a * p_;
    entries.push_back({a, b, ScaledPAdic::from_scaled(p_, static_cast<unsigned long>(i), a)});
  }
  return LatticeFiltration(p_, std::move(entries));
}

ScaledPAdic Prop34Instance::lambda_approximation() const {
  const auto& last = points_.back();
  return ScaledPAdic::from_integer(p_, last.lambda, last.f);
}

Prop34Instance prop34_build(std::uint32_t p, const Rational& nu, Prop34Options options) {
  check_prop34_nu(p, nu);
  std::vector<LambdaPoint> points;
  BigInt lambda = 1;
  points.push_back({lambda, f_value(p, nu, lambda)});
  const BigInt budget = static_cast<unsigned long>(options.f_budget);
  for (;;) {
    const auto& prev = points.back();
    if (prev.f > budget) break;
    BigInt next = prev.lambda + arith::pow_ui(p, prev.f.get_ui());
    // f(next) needs p^next; stop once that is no longer materializable.
    if (next > budget) break;
    BigInt fn = f_value(p, nu, next);
    points.push_back({std::move(next), std::move(fn)});
  }
  std::uint64_t window = options.window;
  if (window == 0) {
    const BigInt last = points.back().lambda;
    window = last < 500 ? last.get_ui() : 500;
  }
  return Prop34Instance(p, nu, std::move(points), window);
}

}  // namespace hdlab::lattice
