#include "hdlab/arith/scaled_padic.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::arith {

ExtNat::ExtNat(const BigInt& v) : value_(v) {
  if (v < 0) throw InvalidArgument("ExtNat must be non-negative");
}

ExtNat ExtNat::infinity() {
  ExtNat r;
  r.infinite_ = true;
  return r;
}

const BigInt& ExtNat::value() const {
  if (infinite_) throw InvalidArgument("ExtNat is +infinity");
  return value_;
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(a.value_ + b.value_);
}

bool operator==(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtNat::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

ExtNat min(const ExtNat& a, const ExtNat& b) { return b < a ? b : a; }

const ExtNat& Valuation::value() const {
  if (kind_ != Kind::kExact) {
    throw PrecisionExhausted("valuation only known to be >= " + value_.to_string());
  }
  return value_;
}

std::string Valuation::to_string() const {
  return (kind_ == Kind::kExact ? "" : ">=") + value_.to_string();
}

namespace {

void check_prime(std::uint32_t p) {
  if (p < 2) throw InvalidArgument("p must be a prime >= 2");
}

void check_same_prime(const ScaledPAdic& x, const ScaledPAdic& y) {
  if (x.prime() != y.prime()) throw InvalidArgument("p-adic operands have different primes");
}

std::optional<BigInt> min_precision(const std::optional<BigInt>& a, const std::optional<BigInt>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

}  // namespace

ScaledPAdic ScaledPAdic::zero(std::uint32_t p) {
  check_prime(p);
  return ScaledPAdic(p, 0, 0, std::nullopt);
}

ScaledPAdic ScaledPAdic::from_integer(std::uint32_t p, const BigInt& x, std::optional<BigInt> precision) {
  return from_scaled(p, x, 0, std::move(precision));
}

ScaledPAdic ScaledPAdic::from_scaled(std::uint32_t p, BigInt unit, BigInt shift,
                                     std::optional<BigInt> precision) {
  check_prime(p);
  if (shift < 0) throw InvalidArgument("scaled p-adic shift must be non-negative");
  if (precision && *precision < 0) throw InvalidArgument("precision must be non-negative");
  if (unit == 0) return ScaledPAdic(p, 0, 0, std::move(precision));
  shift += static_cast<unsigned long>(strip_p(unit, p));
  if (precision && shift >= *precision) return ScaledPAdic(p, 0, 0, std::move(precision));
  return ScaledPAdic(p, std::move(unit), std::move(shift), std::move(precision));
}

ScaledPAdic ScaledPAdic::times_p_power(const BigInt& e) const {
  if (e < 0) throw InvalidArgument("negative power of p");
  std::optional<BigInt> prec;
  if (precision_) prec = *precision_ + e;
  if (unit_ == 0) return ScaledPAdic(p_, 0, 0, std::move(prec));
  return ScaledPAdic(p_, unit_, shift_ + e, std::move(prec));
}

ScaledPAdic ScaledPAdic::operator-() const { return ScaledPAdic(p_, -unit_, shift_, precision_); }

ScaledPAdic operator*(const ScaledPAdic& a, const ScaledPAdic& b) {
  check_same_prime(a, b);
  // A value known modulo p^N times a value of valuation v is known modulo p^(N+v).
  auto lift = [](const ScaledPAdic& known, const ScaledPAdic& other) -> std::optional<BigInt> {
    if (!known.precision_) return std::nullopt;
    if (other.unit_ == 0) {
      if (!other.precision_) return std::nullopt;  // exact zero factor makes the product exact
      return *known.precision_ + *other.precision_;
    }
    return *known.precision_ + other.shift_;
  };
  if ((a.unit_ == 0 && a.is_exact()) || (b.unit_ == 0 && b.is_exact())) return ScaledPAdic::zero(a.p_);
  const auto prec = min_precision(lift(a, b), lift(b, a));
  if (a.unit_ == 0 || b.unit_ == 0) return ScaledPAdic(a.p_, 0, 0, prec);
  return ScaledPAdic::from_scaled(a.p_, a.unit_ * b.unit_, a.shift_ + b.shift_, prec);
}

BigInt ScaledPAdic::to_integer() const {
  if (unit_ == 0) return 0;
  if (shift_ > BigInt(static_cast<unsigned long>(kMaterializeDigits))) {
    throw MaterializationError("p-adic shift " + shift_.get_str() + " too large to materialize");
  }
  return unit_ * pow_ui(p_, shift_.get_ui());
}

std::string ScaledPAdic::to_string() const {
  std::string s = unit_.get_str() + "*" + std::to_string(p_) + "^" + shift_.get_str();
  if (precision_) s += " + O(" + std::to_string(p_) + "^" + precision_->get_str() + ")";
  return s;
}

Valuation vp(const ScaledPAdic& x) {
  if (x.unit() == 0) {
    if (x.is_exact()) return Valuation::exact(ExtNat::infinity());
    return Valuation::at_least(*x.precision());
  }
  return Valuation::exact(ExtNat(x.shift()));
}

ScaledPAdic add_valued(const ScaledPAdic& x, const ScaledPAdic& y) { return sub_valued(x, -y); }

ScaledPAdic sub_valued(const ScaledPAdic& x, const ScaledPAdic& y) {
  check_same_prime(x, y);
  const auto prec = min_precision(x.precision(), y.precision());
  const std::uint32_t p = x.prime();
  if (x.unit_is_zero()) return ScaledPAdic::from_scaled(p, -y.unit(), y.shift(), prec);
  if (y.unit_is_zero()) return ScaledPAdic::from_scaled(p, x.unit(), x.shift(), prec);

  const bool x_low = x.shift() <= y.shift();
  const ScaledPAdic& low = x_low ? x : y;
  const ScaledPAdic& high = x_low ? y : x;
  const BigInt low_unit = x_low ? x.unit() : -y.unit();
  const BigInt high_unit = x_low ? -y.unit() : x.unit();
  const BigInt gap = high.shift() - low.shift();

  // The higher term is invisible at the available precision.
  if (prec && high.shift() >= *prec) return ScaledPAdic::from_scaled(p, low_unit, low.shift(), prec);
  if (gap > BigInt(static_cast<unsigned long>(ScaledPAdic::kMaterializeDigits))) {
    // Distinct valuations: the lower term dominates, but its unit cannot be
    // combined with the higher term exactly.
    throw MaterializationError("shift gap " + gap.get_str() + " too large for exact subtraction");
  }
  BigInt unit = low_unit + high_unit * pow_ui(p, gap.get_ui());
  return ScaledPAdic::from_scaled(p, std::move(unit), low.shift(), prec);
}

}  // namespace hdlab::arith
