#include "hdlab/arith/density.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::arith {

Rational DensityLevel::ratio() const {
  const auto r = ratio_with_conventions(num, den);
  if (r.infinite) throw InvalidArgument("density level with positive numerator over zero");
  return r.value;
}

DensitySequence::DensitySequence(std::uint32_t p, std::vector<DensityLevel> levels)
    : p_(p), levels_(std::move(levels)) {
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const auto& lv = levels_[k];
    if (lv.num < 0 || lv.num > lv.den) {
      throw InvalidArgument("density level " + std::to_string(lv.i) + " violates 0 <= num <= den (num=" +
                            lv.num.get_str() + ", den=" + lv.den.get_str() + ")");
    }
    if (k > 0) {
      if (lv.i <= levels_[k - 1].i) throw InvalidArgument("density levels must be sorted by i");
      if (lv.den <= levels_[k - 1].den) {
        throw InvalidArgument("density denominators must strictly increase (level " + std::to_string(lv.i) + ")");
      }
    }
  }
}

const DensityLevel* DensitySequence::find(std::uint64_t i) const {
  auto it = std::lower_bound(levels_.begin(), levels_.end(), i,
                             [](const DensityLevel& lv, std::uint64_t key) { return lv.i < key; });
  return it != levels_.end() && it->i == i ? &*it : nullptr;
}

std::optional<Rational> HdimEstimate::gap() const {
  if (!exact) return std::nullopt;
  Rational d = window_min - *exact;
  return d.sign() < 0 ? -d : d;
}

HdimEstimate liminf_estimate(const DensitySequence& seq, std::uint64_t tail_start) {
  std::optional<Rational> best;
  for (const auto& lv : seq.levels()) {
    if (lv.i < tail_start) continue;
    Rational r = lv.ratio();
    if (!best || r < *best) best = std::move(r);
  }
  if (!best) throw InvalidArgument("empty tail: no density level at or beyond " + std::to_string(tail_start));
  HdimEstimate est;
  est.window_min = *best;
  est.tail_start = tail_start;
  return est;
}

HdimEstimate with_exact(HdimEstimate est, Rational exact, std::string certificate) {
  est.exact = std::move(exact);
  est.certificate = std::move(certificate);
  return est;
}

bool step_preserves_slack_bound(const Rational& x, const Rational& y, const Rational& z, const Rational& eta) {
  const Rational one(1);
  if (!(x / y >= eta - one / y)) return true;
  return (x + z) / (y + z) >= eta - one / (y + z);
}

bool step_preserves_bound(const Rational& x, const Rational& y, const Rational& z, const Rational& eta) {
  if (!(x / y >= eta)) return true;
  return (x + z) / (y + z) >= eta;
}

}  // namespace hdlab::arith
