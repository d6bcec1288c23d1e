#include "hdlab/lattice/lift.hpp"

#include "hdlab/error.hpp"

namespace hdlab::lattice {

using arith::Rational;

namespace {

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Index of a lattice that is known to contain p^N Z_p^d.
BigInt index_at(const LatticeSubgroup& l, const BigInt& n) { return l.log_index_at(n); }

}  // namespace

LiftSchedule sqrt_schedule() {
  return [](std::uint64_t, const BigInt& den) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), den.get_mpz_t());
    return arith::to_u64(r);
  };
}

LiftedFiltration lift_filtration(const IntMatrix& phi, const LatticeFiltration& target, std::uint64_t window,
                                 const LiftSchedule& schedule) {
  const std::uint32_t p = target.p();
  if (phi.size() != 2) throw InvalidArgument("phi must have two rows");
  const std::size_t n = phi[0].size();
  if (n < 2 || phi[1].size() != n) throw InvalidArgument("phi must be a 2 x n matrix with n >= 2");
  if (window == 0 || window >= target.size()) throw InvalidArgument("lift window outside the target filtration");

  // A 2x2 minor that is a unit modulo p gives a section of phi.
  std::size_t c1 = n, c2 = n;
  for (std::size_t i = 0; i < n && c1 == n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const BigInt det = phi[0][i] * phi[1][j] - phi[0][j] * phi[1][i];
      if (mod_floor(det, p) != 0) {
        c1 = i;
        c2 = j;
        break;
      }
    }
  }
  if (c1 == n) throw InvalidArgument("phi is not surjective onto Z_p^2 (no unit 2x2 minor)");

  std::vector<std::uint64_t> hs;
  std::vector<BigInt> dens;
  for (std::uint64_t i = 0; i <= window; ++i) {
    dens.push_back(target.log_index(i));
    hs.push_back(i == 0 ? 0 : schedule(i, dens.back()));
  }
  if (n > 2) {
    for (std::uint64_t i = 2; i <= window; ++i) {
      if (hs[i] < hs[i - 1]) {
        throw InvalidArgument("lift schedule decreases at level " + std::to_string(i));
      }
    }
    auto share = [&](std::uint64_t i) { return Rational(BigInt(static_cast<unsigned long>(hs[i])), dens[i]); };
    if (window >= 2) {
      if (hs[window] <= hs[1]) {
        throw InvalidArgument("lift schedule does not grow on the window (level " + std::to_string(window) + ")");
      }
      if (!(share(window) < share(1))) {
        throw InvalidArgument("kernel share does not decay on the window (level " + std::to_string(window) + ")");
      }
      const std::uint64_t mid = window / 2;
      for (std::uint64_t i = mid + 1; i <= window && mid >= 1; ++i) {
        if (share(i) > share(mid)) {
          throw InvalidArgument("kernel share rises above its midpoint value at level " + std::to_string(i));
        }
      }
    }
  }

  BigInt precision = 1;
  for (std::uint64_t i = 0; i <= window; ++i) {
    const BigInt e = dens[i] + BigInt(static_cast<unsigned long>((n - 2) * hs[i]));
    if (e + 1 > precision) precision = e + 1;
  }
  if (precision > BigInt(static_cast<unsigned long>(ScaledPAdic::kMaterializeDigits))) {
    throw MaterializationError("lift precision too large");
  }
  const BigInt modulus = arith::pow_ui(p, precision.get_ui());

  // Section: s(y) puts M^{-1} y into coordinates c1, c2.
  const BigInt det = phi[0][c1] * phi[1][c2] - phi[0][c2] * phi[1][c1];
  BigInt det_inv;
  {
    const BigInt d = mod_floor(det, modulus);
    mpz_invert(det_inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
  }
  auto section = [&](const IntVector& y) {
    IntVector x(n, 0);
    x[c1] = mod_floor((phi[1][c2] * y[0] - phi[0][c2] * y[1]) * det_inv, modulus);
    x[c2] = mod_floor((-phi[1][c1] * y[0] + phi[0][c1] * y[1]) * det_inv, modulus);
    return x;
  };
  auto apply_phi = [&](const IntVector& x) {
    IntVector y(2, 0);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < n; ++c) y[r] += phi[r][c] * x[c];
    }
    return y;
  };

  std::vector<IntVector> kernel_gens;
  for (std::size_t c = 0; c < n; ++c) {
    if (c == c1 || c == c2) continue;
    IntVector e(n, 0);
    e[c] = 1;
    const IntVector s = section(apply_phi(e));
    for (std::size_t k = 0; k < n; ++k) e[k] = mod_floor(e[k] - s[k], modulus);
    kernel_gens.push_back(std::move(e));
  }

  LiftedFiltration out{p, n, phi, precision, LatticeSubgroup(p, n, kernel_gens), {}, {}, {}, hs, {},
                       arith::DensitySequence(p, {})};
  std::vector<arith::DensityLevel> kernel_levels;
  for (std::uint64_t i = 0; i <= window; ++i) {
    const LatticeSubgroup gt = target.term(i);
    std::vector<IntVector> gens;
    for (const auto& g : gt.generators()) gens.push_back(section(g));
    const BigInt ph = arith::pow_ui(p, hs[i]);
    for (const auto& k : kernel_gens) {
      IntVector v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = k[j] * ph;
      gens.push_back(std::move(v));
    }
    LatticeSubgroup s(p, n, std::move(gens));
    const BigInt e = index_at(s, precision);
    const bool exact = s.image(phi).hermite(precision) == gt.hermite(precision);
    if (i > 0) {
      const BigInt num = e - index_at(out.kernel + s, precision);
      kernel_levels.push_back({i, num, e});
    }
    out.terms.push_back(std::move(s));
    out.target_terms.push_back(gt);
    out.log_index.push_back(e);
    out.image_exact.push_back(exact);
  }
  out.kernel_density = arith::DensitySequence(p, std::move(kernel_levels));
  return out;
}

arith::DensitySequence lifted_density(const LiftedFiltration& s, const LatticeSubgroup& h) {
  if (h.rank() != s.n || h.p() != s.p) throw InvalidArgument("subgroup does not live in the lifted group");
  std::vector<arith::DensityLevel> levels;
  for (std::uint64_t i = 1; i <= s.window(); ++i) {
    const BigInt num = s.log_index[i] - index_at(h + s.terms[i], s.precision);
    levels.push_back({i, num, s.log_index[i]});
  }
  return arith::DensitySequence(s.p, std::move(levels));
}

arith::DensitySequence image_density(const LiftedFiltration& s, const LatticeSubgroup& h) {
  const LatticeSubgroup img = h.image(s.phi);
  std::vector<arith::DensityLevel> levels;
  for (std::uint64_t i = 1; i <= s.window(); ++i) {
    const BigInt den = index_at(s.target_terms[i], s.precision);
    const BigInt num = den - index_at(img + s.target_terms[i], s.precision);
    levels.push_back({i, num, den});
  }
  return arith::DensitySequence(s.p, std::move(levels));
}

}  // namespace hdlab::lattice
