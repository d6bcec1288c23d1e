#include "hdlab/lattice/cyclic.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::lattice {

using arith::ExtNat;
using arith::Valuation;

namespace {

// min of a known bound and a valuation that may be "at least k".
ExtNat resolved_min(const ExtNat& cap, const Valuation& v, std::size_t level) {
  if (v.resolved()) return arith::min(cap, v.value());
  if (v.bound() >= cap) return cap;
  throw PrecisionExhausted("level " + std::to_string(level) + ": valuation " + v.to_string() +
                           " does not resolve below " + cap.to_string());
}

ExtNat min_of(const Valuation& x, const Valuation& y, std::size_t level) {
  if (x.resolved()) return resolved_min(x.value(), y, level);
  if (y.resolved()) return resolved_min(y.value(), x, level);
  throw PrecisionExhausted("level " + std::to_string(level) + ": both valuations unresolved");
}

struct LevelTerms {
  BigInt num;
  bool disagreement = false;
};

LevelTerms level_terms(const LatticeFiltration& f, const CyclicTarget& h, std::size_t i) {
  const auto& e = f[i];
  const std::uint32_t p = f.p();
  const ScaledPAdic one = ScaledPAdic::from_integer(p, 1);
  LevelTerms out;
  if (h.kind == CyclicTarget::Kind::kTypeA) {
    const auto diff = arith::sub_valued(e.z, h.value.times_p_power(e.a));
    const ExtNat d = resolved_min(ExtNat(e.b), arith::vp(diff), i);
    out.num = e.a + e.b - d.value();
    return out;
  }
  const auto diff = arith::sub_valued(one.times_p_power(e.a), e.z * h.value);
  const Valuation vdiff = arith::vp(diff);
  const Valuation vmu = arith::vp(h.value);
  const Valuation capped =
      vmu.resolved() ? Valuation::exact(ExtNat(e.b) + vmu.value()) : Valuation::at_least(e.b + vmu.bound().value());
  const ExtNat d = min_of(capped, vdiff, i);
  const ExtNat displayed = resolved_min(ExtNat(e.b), vdiff, i);
  out.num = e.a + e.b - d.value();
  out.disagreement = !(d == displayed);
  return out;
}

}  // namespace

CyclicTarget CyclicTarget::type_b(ScaledPAdic mu) {
  const auto v = arith::vp(mu);
  if (v.bound() < ExtNat(std::uint64_t{1})) throw InvalidArgument("TypeB requires mu in pZ_p");
  return {Kind::kTypeB, std::move(mu)};
}

IntVector CyclicTarget::generator() const {
  if (kind == Kind::kTypeA) return {1, value.to_integer()};
  return {value.to_integer(), 1};
}

BigInt cyclic_numerator(const LatticeFiltration& f, const CyclicTarget& h, std::size_t i) {
  return level_terms(f, h, i).num;
}

CyclicDensity hdim_cyclic(const LatticeFiltration& f, const CyclicTarget& h, std::uint64_t window,
                          std::uint64_t tail_start) {
  if (h.value.prime() != f.p()) throw InvalidArgument("target and filtration use different primes");
  const std::uint64_t available = f.size() - 1;
  if (window == 0) window = available;
  if (window > available) throw InvalidArgument("window exceeds filtration length");
  if (window == 0) throw InvalidArgument("filtration has no levels beyond 0");
  if (tail_start == 0) tail_start = (window + 1) / 2;

  std::vector<arith::DensityLevel> levels;
  std::vector<std::uint64_t> disagreements;
  for (std::uint64_t i = 1; i <= window; ++i) {
    const auto t = level_terms(f, h, i);
    if (t.disagreement) disagreements.push_back(i);
    levels.push_back({i, t.num, f.log_index(i)});
  }
  arith::DensitySequence seq(f.p(), std::move(levels));
  auto est = arith::liminf_estimate(seq, tail_start);
  bool constant = true;
  for (const auto& lv : seq.levels()) {
    if (lv.i >= tail_start && lv.ratio() != est.window_min) {
      constant = false;
      break;
    }
  }
  if (constant) est = arith::with_exact(est, est.window_min, "constant tail");
  return {std::move(seq), std::move(est), std::move(disagreements)};
}

}  // namespace hdlab::lattice
