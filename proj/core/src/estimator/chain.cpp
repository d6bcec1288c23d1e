#include "hdlab/estimator/chain.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::estimator {

namespace {

Rational frac(std::uint64_t a, std::uint64_t b) {
  return arith::ratio_with_conventions(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(b)))
      .value;
}

std::uint64_t to_u64(const BigInt& x) { return arith::to_u64(x); }

// Valid l with eta - 1/m <= l/m <= eta and lo <= l <= hi.
std::uint64_t bracket(const Rational& eta, std::uint64_t m, std::uint64_t lo, std::uint64_t hi, TieBreak tie) {
  const Rational em = eta * Rational(static_cast<long>(m));
  const BigInt low_b = arith::ceil(em - Rational(1));
  const BigInt high_b = arith::floor(em);
  const std::uint64_t a = std::max<std::uint64_t>(lo, sgn(low_b) < 0 ? 0 : to_u64(low_b));
  const std::uint64_t b = std::min<std::uint64_t>(hi, to_u64(high_b));
  if (a > b) {
    throw Error("no valid l in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] at m = " + std::to_string(m));
  }
  return tie == TieBreak::kLargest ? b : a;
}

void check_invariants(const CoordinateTower& t, const ChainState& s) {
  const auto& last = s.subgroups.back();
  for (std::uint64_t i = 1; i <= s.j; ++i) {
    const std::uint64_t c = s.subgroups[i].count(t, i);
    if (c != s.counts[i]) throw Error("chain bookkeeping mismatch at level " + std::to_string(i));
    // H_i <= H_j and equal counts below level i give H_i G_i = H_j G_i.
    if (last.count(t, i) != c) throw Error("chain condition (i) fails at level " + std::to_string(i));
    const Rational m(static_cast<long>(t.m(i)));
    if (Rational(static_cast<long>(c)) / m < s.eta - Rational(1) / m) {
      throw Error("chain condition (ii) fails at level " + std::to_string(i));
    }
  }
}

// H_k = H_j plus the first l - l' coordinates of level k.
CoordinateSubgroup extend_to(const CoordinateTower& t, const CoordinateSubgroup& h, std::uint64_t k, std::uint64_t add) {
  CoordinateSubgroup out = h;
  for (auto c : t.at_level(k)) {
    if (add == 0) break;
    if (!out.contains(c)) {
      out.insert(c);
      --add;
    }
  }
  if (add != 0) throw Error("level " + std::to_string(k) + " has too few coordinates");
  return out;
}

}  // namespace

ChainResult chain_build(const CoordinateTower& tower, const Rational& eta, std::uint64_t steps, TieBreak tie) {
  if (eta.sign() < 0 || eta > Rational(1)) throw InvalidArgument("eta must lie in [0, 1]");
  if (steps < 1 || steps > tower.depth()) throw InvalidArgument("chain steps must lie in [1, tower depth]");
  if (!tower.finite_fg_subgroups()) throw InvalidArgument("tower does not certify the finitely generated hypothesis");
  ChainState s;
  s.eta = eta;
  s.subgroups.emplace_back(tower);
  s.counts.push_back(0);

  // H_1: l' = 0, l'' = m(1).
  {
    const std::uint64_t l = bracket(eta, tower.m(1), 0, tower.m(1), tie);
    s.subgroups.push_back(extend_to(tower, s.subgroups[0], 1, l));
    s.counts.push_back(l);
    s.j = 1;
    s.checkpoints.push_back(1);
    s.steps.push_back({1, false, 0, tower.m(1), l});
    check_invariants(tower, s);
  }

  while (s.j < steps) {
    const CoordinateSubgroup& hj = s.subgroups.back();
    std::uint64_t k = s.j + 1;
    bool frozen = false;
    if (frac(hj.count(tower, k), tower.m(k)) > eta) {
      frozen = true;
      ++k;
      while (k <= tower.depth() && !(frac(hj.count(tower, k), tower.m(k)) < eta)) ++k;
      if (k > tower.depth()) {
        throw BudgetExceeded("no level after " + std::to_string(s.j) + " brings the index ratio below eta");
      }
      for (std::uint64_t i = s.j + 1; i < k; ++i) {
        s.subgroups.push_back(hj);
        s.counts.push_back(hj.count(tower, i));
      }
    }
    const CoordinateSubgroup base = s.subgroups.back();
    const std::uint64_t l_low = base.count(tower, k);
    const std::uint64_t l_high = base.count(tower, k - 1) + (tower.m(k) - tower.m(k - 1));
    const Rational mk(static_cast<long>(tower.m(k)));
    if (frac(l_high, tower.m(k)) < eta - Rational(1) / mk) {
      throw Error("step bound fails at level " + std::to_string(k));
    }
    const std::uint64_t l = bracket(eta, tower.m(k), l_low, l_high, tie);
    s.subgroups.push_back(extend_to(tower, base, k, l - l_low));
    s.counts.push_back(l);
    s.j = k;
    s.checkpoints.push_back(k);
    s.steps.push_back({k, frozen, l_low, l_high, l});
    check_invariants(tower, s);
  }

  ChainResult r;
  r.sequence = coordinate_density(tower, s.subgroups.back(), 1, s.j);
  r.state = std::move(s);
  return r;
}

IntervalSample interval_sample(const CoordinateTower& tower, const std::vector<std::size_t>& h_coords,
                               const ProperLimit& xi, const Rational& theta, std::uint64_t depth, TieBreak tie) {
  if (xi.value.sign() <= 0) throw InvalidArgument("xi must be positive");
  if (theta.sign() <= 0 || theta > xi.value) throw InvalidArgument("theta must lie in (0, xi]");
  if (depth < 1 || depth > tower.depth()) throw InvalidArgument("depth outside the tower");
  const auto ind = tower.induced(h_coords);
  std::uint64_t h_depth = 0;
  while (h_depth + 1 < ind.level_map.size() && ind.level_map[h_depth + 1] <= depth) ++h_depth;
  if (h_depth == 0) throw InvalidArgument("H meets no level up to depth");

  IntervalSample out;
  out.theta = theta;
  out.target = theta / xi.value;
  out.chain = chain_build(ind.tower, out.target, h_depth, tie);
  out.b = CoordinateSubgroup(tower);
  CoordinateSubgroup h(tower);
  for (auto c : ind.coords) h.insert(c);
  const auto inner = out.chain.state.subgroups.back();
  for (std::size_t c = 0; c < ind.coords.size(); ++c) {
    if (inner.contains(c)) out.b.insert(ind.coords[c]);
  }
  out.sequence = coordinate_density(tower, out.b, 1, depth);
  for (const auto& lv : out.sequence.levels()) {
    const std::uint64_t ch = h.count(tower, lv.i);
    const std::uint64_t cb = out.b.count(tower, lv.i);
    IntervalLevel il;
    il.i = lv.i;
    il.b_in_g = lv.ratio();
    il.h_in_g = frac(ch, to_u64(lv.den));
    il.b_in_h = frac(cb, ch);
    il.exact = il.b_in_g == il.h_in_g * il.b_in_h;
    if (!il.exact) throw Error("factorization fails at level " + std::to_string(lv.i));
    out.levels.push_back(std::move(il));
  }
  out.final_value = out.sequence.back().ratio();
  const Rational d = out.final_value - theta;
  const Rational gap = d.sign() < 0 ? -d : d;
  out.within_tolerance = gap <= Rational(BigInt(1), out.sequence.back().den);
  return out;
}

}  // namespace hdlab::estimator
