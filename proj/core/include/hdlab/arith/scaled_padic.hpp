#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hdlab/arith/bigint.hpp"

namespace hdlab::arith {

/// A natural number or +infinity.  Addition and ordering treat +infinity as absorbing.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(const BigInt& v);  // NOLINT(google-explicit-constructor)
  ExtNat(std::uint64_t v) : ExtNat(BigInt(static_cast<unsigned long>(v))) {}  // NOLINT
  static ExtNat infinity();

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws for +infinity.
  const BigInt& value() const;

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b);
  friend bool operator==(const ExtNat& a, const ExtNat& b);
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

  std::string to_string() const;

 private:
  bool infinite_ = false;
  BigInt value_ = 0;
};

ExtNat min(const ExtNat& a, const ExtNat& b);

/// Result of a valuation query on a value that may be known only to finite precision.
class Valuation {
 public:
  enum class Kind { kExact, kAtLeast };

  static Valuation exact(ExtNat v) { return Valuation(Kind::kExact, std::move(v)); }
  static Valuation at_least(const BigInt& k) { return Valuation(Kind::kAtLeast, ExtNat(k)); }

  Kind kind() const { return kind_; }
  bool resolved() const { return kind_ == Kind::kExact; }
  /// The valuation when resolved, otherwise the lower bound k.
  const ExtNat& bound() const { return value_; }
  /// The resolved valuation; throws PrecisionExhausted for an "at least k" marker.
  const ExtNat& value() const;

  std::string to_string() const;

 private:
  Valuation(Kind kind, ExtNat v) : kind_(kind), value_(std::move(v)) {}
  Kind kind_;
  ExtNat value_;
};

/// p-adic integer stored in scaled-unit form unit * p^shift, where unit is zero
/// or coprime to p.  A finite precision N means the value is known modulo p^N;
/// std::nullopt marks an exact value.  A zero unit with finite precision N means
/// "congruent to 0 modulo p^N".
class ScaledPAdic {
 public:
  /// Largest shift difference that sub/add will materialize as an integer power.
  static constexpr std::uint64_t kMaterializeDigits = std::uint64_t{1} << 24;

  static ScaledPAdic zero(std::uint32_t p);
  static ScaledPAdic from_integer(std::uint32_t p, const BigInt& x,
                                  std::optional<BigInt> precision = std::nullopt);
  /// unit * p^shift; unit need not be coprime to p (it is normalized).
  static ScaledPAdic from_scaled(std::uint32_t p, BigInt unit, BigInt shift,
                                 std::optional<BigInt> precision = std::nullopt);

  std::uint32_t prime() const { return p_; }
  const BigInt& unit() const { return unit_; }
  const BigInt& shift() const { return shift_; }
  const std::optional<BigInt>& precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  /// True when the unit is zero (exact zero, or zero to the stated precision).
  bool unit_is_zero() const { return unit_ == 0; }

  /// Multiplies by p^e; precision moves with the value.
  ScaledPAdic times_p_power(const BigInt& e) const;
  ScaledPAdic operator-() const;
  friend ScaledPAdic operator*(const ScaledPAdic& a, const ScaledPAdic& b);

  /// Integer representative unit * p^shift.  Throws MaterializationError when
  /// the shift exceeds kMaterializeDigits.
  BigInt to_integer() const;

  std::string to_string() const;

 private:
  ScaledPAdic(std::uint32_t p, BigInt unit, BigInt shift, std::optional<BigInt> precision)
      : p_(p), unit_(std::move(unit)), shift_(std::move(shift)), precision_(std::move(precision)) {}

  std::uint32_t p_ = 2;
  BigInt unit_ = 0;
  BigInt shift_ = 0;
  std::optional<BigInt> precision_;
};

/// p-adic valuation; +infinity for exact zero, "at least N" for zero at precision N.
Valuation vp(const ScaledPAdic& x);

/// Exact difference x - y renormalized to scaled-unit form.  The precision of
/// the result is the smaller operand precision; when cancellation eats all of
/// it the result is zero-at-precision and vp reports "at least N".
ScaledPAdic sub_valued(const ScaledPAdic& x, const ScaledPAdic& y);
ScaledPAdic add_valued(const ScaledPAdic& x, const ScaledPAdic& y);

}  // namespace hdlab::arith
