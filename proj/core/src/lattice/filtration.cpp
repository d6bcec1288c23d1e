#include "hdlab/lattice/filtration.hpp"

#include "hdlab/error.hpp"

namespace hdlab::lattice {

LatticeFiltration::LatticeFiltration(std::uint32_t p, std::vector<FiltrationEntry> entries)
    : p_(p), entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("filtration needs at least the level-0 entry");
  for (const auto& e : entries_) {
    if (e.z.prime() != p_) throw InvalidArgument("filtration entry z has a different prime");
  }
}

LatticeFiltration LatticeFiltration::p_power(std::uint32_t p, std::uint64_t levels) {
  std::vector<FiltrationEntry> entries;
  for (std::uint64_t i = 0; i <= levels; ++i) {
    const BigInt v = static_cast<unsigned long>(i);
    entries.push_back({v, v, ScaledPAdic::zero(p)});
  }
  return LatticeFiltration(p, std::move(entries));
}

BigInt LatticeFiltration::log_index(std::size_t i) const { return entries_.at(i).a + entries_.at(i).b; }

LatticeSubgroup LatticeFiltration::term(std::size_t i) const {
  const auto& e = entries_.at(i);
  if (!mpz_fits_ulong_p(e.a.get_mpz_t()) || !mpz_fits_ulong_p(e.b.get_mpz_t()) ||
      e.a + e.b > BigInt(static_cast<unsigned long>(ScaledPAdic::kMaterializeDigits))) {
    throw MaterializationError("filtration term " + std::to_string(i) + " too large to materialize");
  }
  return LatticeSubgroup(p_, 2,
                         {{arith::pow_ui(p_, e.a.get_ui()), e.z.to_integer()}, {0, arith::pow_ui(p_, e.b.get_ui())}});
}

LatticeFiltration LatticeFiltration::truncated(std::size_t last) const {
  if (last >= entries_.size()) throw InvalidArgument("truncation beyond filtration length");
  return LatticeFiltration(p_, {entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(last + 1)});
}

std::optional<FiltrationViolation> validate_filtration(const LatticeFiltration& f) {
  const auto& es = f.entries();
  if (es[0].a != 0 || es[0].b != 0) return FiltrationViolation{0, "a_0 = b_0 = 0", "level 0 must be the whole group"};
  for (std::size_t i = 1; i < es.size(); ++i) {
    const auto& cur = es[i];
    const auto& prev = es[i - 1];
    if (cur.a < prev.a || cur.b < prev.b) {
      return FiltrationViolation{i, "monotone", "a_i and b_i must be non-decreasing"};
    }
    if (cur.a + cur.b <= prev.a + prev.b) {
      return FiltrationViolation{i, "proper refinement", "a_i + b_i must strictly increase"};
    }
    const auto lifted = prev.z.times_p_power(cur.a - prev.a);
    const auto diff = arith::sub_valued(cur.z, lifted);
    const auto v = arith::vp(diff);
    if (v.bound() < arith::ExtNat(prev.b)) {
      if (!v.resolved()) {
        return FiltrationViolation{i, "condition (ii)", "valuation only known to be " + v.to_string()};
      }
      return FiltrationViolation{i, "condition (ii)",
                                 "v_p(z_i - p^(a_i - a_{i-1}) z_{i-1}) = " + v.to_string() + " < b_{i-1} = " +
                                     prev.b.get_str()};
    }
  }
  // Trivial intersection: both coordinates must keep growing across the window.
  if (es.size() >= 3) {
    const std::size_t last = es.size() - 1;
    const std::size_t mid = last / 2;
    if (es[last].a == es[mid].a) {
      return FiltrationViolation{last, "divergence", "a_i stalls on the second half of the window"};
    }
    if (es[last].b == es[mid].b) {
      return FiltrationViolation{last, "divergence", "b_i stalls on the second half of the window"};
    }
  }
  return std::nullopt;
}

}  // namespace hdlab::lattice
