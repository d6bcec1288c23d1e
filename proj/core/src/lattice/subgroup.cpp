#include "hdlab/lattice/subgroup.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::lattice {

namespace {

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt p_power(std::uint32_t p, const BigInt& e) {
  if (!mpz_fits_ulong_p(e.get_mpz_t())) throw MaterializationError("p-power exponent too large");
  return arith::pow_ui(p, e.get_ui());
}

// Valuation of x modulo p^N, capped at N.
BigInt capped_vp(const BigInt& x, std::uint32_t p, const BigInt& n) {
  if (x == 0) return n;
  BigInt v = static_cast<unsigned long>(arith::vp_nonzero(x, p));
  return v < n ? v : n;
}

// Rank over Q by fraction-free elimination.
std::size_t rational_rank(std::vector<IntVector> cols, std::size_t rows) {
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows && rank < cols.size(); ++r) {
    std::size_t piv = rank;
    while (piv < cols.size() && cols[piv][r] == 0) ++piv;
    if (piv == cols.size()) continue;
    std::swap(cols[rank], cols[piv]);
    for (std::size_t c = rank + 1; c < cols.size(); ++c) {
      if (cols[c][r] == 0) continue;
      const BigInt a = cols[rank][r];
      const BigInt b = cols[c][r];
      for (std::size_t k = 0; k < rows; ++k) cols[c][k] = cols[c][k] * a - cols[rank][k] * b;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BigInt HermiteForm::log_index() const {
  BigInt s = 0;
  for (const auto& v : valuations) s += v;
  return s;
}

bool HermiteForm::contains(const IntVector& v) const {
  const BigInt modulus = p_power(p, precision);
  IntVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = mod_floor(v[i], modulus);
  for (std::size_t r = 0; r < w.size(); ++r) {
    if (w[r] == 0) continue;
    const BigInt pivot = p_power(p, valuations[r]);
    if (valuations[r] == precision) return false;  // nonzero residue where only p^N is available
    if (mpz_divisible_p(w[r].get_mpz_t(), pivot.get_mpz_t()) == 0) return false;
    const BigInt q = w[r] / pivot;
    for (std::size_t k = r; k < w.size(); ++k) w[k] = mod_floor(w[k] - q * columns[r][k], modulus);
  }
  return true;
}

bool operator==(const HermiteForm& a, const HermiteForm& b) {
  return a.p == b.p && a.precision == b.precision && a.valuations == b.valuations && a.columns == b.columns;
}

LatticeSubgroup::LatticeSubgroup(std::uint32_t p, std::size_t rank, std::vector<IntVector> generators)
    : p_(p), rank_(rank), generators_(std::move(generators)) {
  if (p < 2) throw InvalidArgument("lattice prime must be >= 2");
  for (const auto& g : generators_) {
    if (g.size() != rank_) throw InvalidArgument("lattice generator has wrong length");
  }
}

LatticeSubgroup LatticeSubgroup::zero(std::uint32_t p, std::size_t rank) { return LatticeSubgroup(p, rank, {}); }

LatticeSubgroup LatticeSubgroup::whole(std::uint32_t p, std::size_t rank) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    IntVector e(rank, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return LatticeSubgroup(p, rank, std::move(gens));
}

HermiteForm LatticeSubgroup::hermite(const BigInt& precision) const {
  const std::size_t d = rank_;
  const BigInt modulus = p_power(p_, precision);
  std::vector<IntVector> cols;
  cols.reserve(generators_.size());
  for (const auto& g : generators_) {
    IntVector c(d);
    bool nonzero = false;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = mod_floor(g[i], modulus);
      nonzero = nonzero || c[i] != 0;
    }
    if (nonzero) cols.push_back(std::move(c));
  }

  HermiteForm hf;
  hf.p = p_;
  hf.precision = precision;
  hf.valuations.assign(d, 0);
  hf.columns.assign(d, IntVector(d, 0));

  std::size_t used = 0;  // cols[0..used) are consumed pivots
  for (std::size_t r = 0; r < d; ++r) {
    std::size_t best = cols.size();
    BigInt best_v = precision;
    for (std::size_t c = used; c < cols.size(); ++c) {
      const BigInt v = capped_vp(cols[c][r], p_, precision);
      if (v < best_v) {
        best_v = v;
        best = c;
      }
    }
    hf.valuations[r] = best_v;
    if (best == cols.size()) {
      // Only p^N e_r is available; it vanishes modulo p^N in every other row.
      hf.columns[r][r] = modulus;
      continue;
    }
    std::swap(cols[used], cols[best]);
    IntVector& piv = cols[used];
    const BigInt pv = p_power(p_, best_v);
    BigInt unit = piv[r] / pv;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
    for (std::size_t k = r; k < d; ++k) piv[k] = mod_floor(piv[k] * inv, modulus);
    for (std::size_t c = used + 1; c < cols.size(); ++c) {
      if (cols[c][r] == 0) continue;
      const BigInt q = cols[c][r] / pv;
      for (std::size_t k = r; k < d; ++k) cols[c][k] = mod_floor(cols[c][k] - q * piv[k], modulus);
    }
    hf.columns[r] = piv;
    // p^{N-v} * piv minus p^N e_r: zero in row r, possibly nonzero below.
    IntVector tail(d, 0);
    bool tail_nonzero = false;
    const BigInt lift = p_power(p_, precision - best_v);
    for (std::size_t k = r + 1; k < d; ++k) {
      tail[k] = mod_floor(piv[k] * lift, modulus);
      tail_nonzero = tail_nonzero || tail[k] != 0;
    }
    ++used;
    if (tail_nonzero) cols.push_back(std::move(tail));
  }

  // Reduce entries below each pivot modulo the pivot of their row.
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = j + 1; r < d; ++r) {
      const BigInt pivot = p_power(p_, hf.valuations[r]);
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), hf.columns[j][r].get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = r; k < d; ++k) {
        hf.columns[j][k] = hf.columns[j][k] - q * hf.columns[r][k];
        if (k != r || hf.valuations[r] != precision) hf.columns[j][k] = mod_floor(hf.columns[j][k], modulus);
      }
    }
  }
  return hf;
}

BigInt LatticeSubgroup::log_index_at(const BigInt& precision) const { return hermite(precision).log_index(); }

bool LatticeSubgroup::full_rank() const { return rational_rank(generators_, rank_) == rank_; }

BigInt LatticeSubgroup::exact_log_index() const {
  if (!full_rank()) throw PrecisionExhausted("lattice has infinite index in Z_p^d");
  BigInt n = 64;
  for (;;) {
    const HermiteForm hf = hermite(n);
    const bool capped = std::any_of(hf.valuations.begin(), hf.valuations.end(),
                                    [&](const BigInt& v) { return v == n; });
    if (!capped) return hf.log_index();
    n *= 2;
  }
}

LatticeSubgroup LatticeSubgroup::operator+(const LatticeSubgroup& other) const {
  if (other.p_ != p_ || other.rank_ != rank_) throw InvalidArgument("lattice sum of incompatible lattices");
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return LatticeSubgroup(p_, rank_, std::move(gens));
}

LatticeSubgroup LatticeSubgroup::image(const std::vector<IntVector>& matrix_rows) const {
  std::vector<IntVector> gens;
  for (const auto& g : generators_) {
    IntVector out(matrix_rows.size(), 0);
    for (std::size_t r = 0; r < matrix_rows.size(); ++r) {
      if (matrix_rows[r].size() != rank_) throw InvalidArgument("matrix width does not match lattice rank");
      for (std::size_t c = 0; c < rank_; ++c) out[r] += matrix_rows[r][c] * g[c];
    }
    gens.push_back(std::move(out));
  }
  return LatticeSubgroup(p_, matrix_rows.size(), std::move(gens));
}

BigInt lattice_index(const LatticeSubgroup& h, const LatticeSubgroup& g) {
  if (h.p() != g.p() || h.rank() != g.rank()) throw InvalidArgument("lattice_index of incompatible lattices");
  const BigInt e = g.exact_log_index();
  return e - (h + g).log_index_at(e);
}

bool same_lattice(const LatticeSubgroup& a, const LatticeSubgroup& b) {
  const BigInt ea = a.exact_log_index();
  const BigInt eb = b.exact_log_index();
  if (ea != eb) return false;
  return a.hermite(ea) == b.hermite(ea);
}

}  // namespace hdlab::lattice
