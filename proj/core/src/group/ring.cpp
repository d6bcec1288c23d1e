#include "hdlab/group/ring.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::group {

namespace {

std::uint64_t checked_pow(std::uint32_t p, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    r *= p;
    if (r >= (std::uint64_t{1} << 31)) throw InvalidArgument("ring modulus must stay below 2^31");
  }
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw InvalidArgument("element is not a unit");
  return ((x % m) + m) % m;
}

}  // namespace

FinLocalRing::FinLocalRing(Kind kind, std::uint32_t p, std::uint32_t k, std::uint32_t m)
    : kind_(kind), p_(p), k_(k), m_(m) {
  if (!is_prime(p)) throw InvalidArgument("ring characteristic must be a prime");
  if (k == 0) throw InvalidArgument("ring depth must be positive");
  switch (kind) {
    case Kind::kIntegersModPk:
      width_ = 1;
      q_ = static_cast<Coord>(checked_pow(p, k));
      break;
    case Kind::kTruncatedSeries:
      width_ = k;
      q_ = p;
      break;
    case Kind::kCyclotomic: {
      if (m == 0) throw InvalidArgument("cyclotomic level must be positive");
      const std::uint64_t phi = (p - 1) * checked_pow(p, m - 1);
      width_ = phi;
      q_ = static_cast<Coord>(checked_pow(p, k));
      // Phi_{p^m}(1+y) = sum_{j<p} (1+y)^{j p^{m-1}}; integer coefficients via binomials mod q.
      const std::uint64_t step = checked_pow(p, m - 1);
      std::vector<std::int64_t> poly(phi + 1, 0);
      for (std::uint64_t j = 0; j < p; ++j) {
        const std::uint64_t e = j * step;
        std::vector<std::int64_t> row(e + 1, 0);
        row[0] = 1;
        for (std::uint64_t r = 1; r <= e; ++r) {
          for (std::uint64_t c = r; c >= 1; --c) row[c] = (row[c] + row[c - 1]) % q_;
        }
        for (std::uint64_t c = 0; c <= e; ++c) poly[c] = (poly[c] + row[c]) % q_;
      }
      pi_power_phi_.resize(phi);
      for (std::uint64_t c = 0; c < phi; ++c) pi_power_phi_[c] = (q_ - poly[c]) % q_;
      break;
    }
  }
}

FinLocalRing FinLocalRing::integers_mod(std::uint32_t p, std::uint32_t k) {
  return FinLocalRing(Kind::kIntegersModPk, p, k, 0);
}

FinLocalRing FinLocalRing::truncated_series(std::uint32_t p, std::uint32_t k) {
  return FinLocalRing(Kind::kTruncatedSeries, p, k, 0);
}

FinLocalRing FinLocalRing::cyclotomic(std::uint32_t p, std::uint32_t m, std::uint32_t k) {
  return FinLocalRing(Kind::kCyclotomic, p, k, m);
}

std::uint32_t FinLocalRing::depth() const {
  return kind_ == Kind::kCyclotomic ? k_ * static_cast<std::uint32_t>(width_) : k_;
}

std::string FinLocalRing::name() const {
  const std::string p = std::to_string(p_), k = std::to_string(k_);
  switch (kind_) {
    case Kind::kIntegersModPk: return "Z/" + p + "^" + k;
    case Kind::kTruncatedSeries: return "F_" + p + "[t]/t^" + k;
    case Kind::kCyclotomic: return "Z_" + p + "[zeta_" + p + "^" + std::to_string(m_) + "]/" + p + "^" + k;
  }
  return "?";
}

void FinLocalRing::zero(Coord* out) const { std::fill(out, out + width_, 0); }

void FinLocalRing::one(Coord* out) const {
  zero(out);
  out[0] = 1 % q_;
}

void FinLocalRing::from_int(std::int64_t v, Coord* out) const {
  zero(out);
  const std::int64_t mod = kind_ == Kind::kTruncatedSeries ? p_ : q_;
  out[0] = static_cast<Coord>(((v % mod) + mod) % mod);
}

void FinLocalRing::add(const Coord* a, const Coord* b, Coord* out) const {
  for (std::size_t i = 0; i < width_; ++i) {
    const std::uint64_t s = std::uint64_t{a[i]} + b[i];
    out[i] = static_cast<Coord>(s >= q_ ? s - q_ : s);
  }
}

void FinLocalRing::sub(const Coord* a, const Coord* b, Coord* out) const {
  for (std::size_t i = 0; i < width_; ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + (q_ - b[i]);
}

void FinLocalRing::neg(const Coord* a, Coord* out) const {
  for (std::size_t i = 0; i < width_; ++i) out[i] = a[i] == 0 ? 0 : q_ - a[i];
}

void FinLocalRing::mul(const Coord* a, const Coord* b, Coord* out) const {
  const std::uint64_t q = q_;
  switch (kind_) {
    case Kind::kIntegersModPk:
      out[0] = static_cast<Coord>(std::uint64_t{a[0]} * b[0] % q);
      return;
    case Kind::kTruncatedSeries:
      for (std::size_t n = 0; n < width_; ++n) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i <= n; ++i) s += std::uint64_t{a[i]} * b[n - i];
        out[n] = static_cast<Coord>(s % q);
      }
      return;
    case Kind::kCyclotomic: {
      const std::size_t w = width_;
      std::vector<std::uint64_t> prod(2 * w - 1, 0);
      for (std::size_t i = 0; i < w; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < w; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % q;
      }
      for (std::size_t d = 2 * w - 2; d >= w; --d) {
        const std::uint64_t c = prod[d];
        if (c != 0) {
          for (std::size_t j = 0; j < w; ++j) {
            prod[d - w + j] = (prod[d - w + j] + c * static_cast<std::uint64_t>(pi_power_phi_[j])) % q;
          }
        }
      }
      for (std::size_t i = 0; i < w; ++i) out[i] = static_cast<Coord>(prod[i]);
      return;
    }
  }
}

bool FinLocalRing::is_zero(const Coord* a) const {
  return std::all_of(a, a + width_, [](Coord c) { return c == 0; });
}

bool FinLocalRing::is_one(const Coord* a) const {
  if (a[0] != 1 % q_) return false;
  return std::all_of(a + 1, a + width_, [](Coord c) { return c == 0; });
}

bool FinLocalRing::is_unit(const Coord* a) const { return a[0] % p_ != 0; }

void FinLocalRing::unit_inverse(const Coord* a, Coord* out) const {
  if (!is_unit(a)) throw InvalidArgument("ring element is not a unit");
  switch (kind_) {
    case Kind::kIntegersModPk:
      out[0] = static_cast<Coord>(inverse_mod(a[0], q_));
      return;
    case Kind::kTruncatedSeries: {
      const std::int64_t inv0 = inverse_mod(a[0], p_);
      out[0] = static_cast<Coord>(inv0);
      for (std::size_t n = 1; n < width_; ++n) {
        std::int64_t s = 0;
        for (std::size_t j = 1; j <= n; ++j) s = (s + std::int64_t{a[j]} * out[n - j]) % p_;
        out[n] = static_cast<Coord>(((p_ - s) % p_) * inv0 % p_);
      }
      return;
    }
    case Kind::kCyclotomic: {
      // Newton iteration x <- x(2 - a x) doubles the pi-adic precision each round.
      std::vector<Coord> x(width_, 0), ax(width_), two(width_), t(width_);
      x[0] = static_cast<Coord>(inverse_mod(a[0], q_));
      from_int(2, two.data());
      for (std::uint32_t prec = 1; prec < 2 * depth(); prec *= 2) {
        mul(a, x.data(), ax.data());
        sub(two.data(), ax.data(), t.data());
        mul(x.data(), t.data(), ax.data());
        x = ax;
      }
      std::copy(x.begin(), x.end(), out);
      return;
    }
  }
}

std::uint32_t FinLocalRing::level(const Coord* a) const {
  switch (kind_) {
    case Kind::kIntegersModPk: {
      if (a[0] == 0) return k_;
      std::uint32_t v = 0;
      for (Coord x = a[0]; x % p_ == 0; x /= p_) ++v;
      return v;
    }
    case Kind::kTruncatedSeries:
      for (std::size_t i = 0; i < width_; ++i) {
        if (a[i] != 0) return static_cast<std::uint32_t>(i);
      }
      return k_;
    case Kind::kCyclotomic: {
      std::uint32_t best = depth();
      for (std::size_t j = 0; j < width_; ++j) {
        if (a[j] == 0) continue;
        std::uint32_t v = 0;
        for (Coord x = a[j]; x % p_ == 0; x /= p_) ++v;
        best = std::min(best, static_cast<std::uint32_t>(width_ * v + j));
      }
      return best;
    }
  }
  return 0;
}

void FinLocalRing::uniformizer(Coord* out) const {
  zero(out);
  switch (kind_) {
    case Kind::kIntegersModPk: out[0] = p_ % q_; return;
    case Kind::kTruncatedSeries: if (width_ > 1) out[1] = 1; return;
    case Kind::kCyclotomic:
      if (width_ > 1) out[1] = 1;
      else from_int(static_cast<std::int64_t>(pi_power_phi_[0]), out);
      return;
  }
}

}  // namespace hdlab::group
