#include "hdlab/arith/rational.hpp"

#include <limits>

#include "hdlab/error.hpp"

namespace hdlab::arith {

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) {
    throw InvalidArgument("integer does not fit in 64 bits: " + x.get_str());
  }
  if (mpz_fits_ulong_p(x.get_mpz_t())) return x.get_ui();
  BigInt hi = x >> 32;
  BigInt lo = x - (hi << 32);
  return (static_cast<std::uint64_t>(hi.get_ui()) << 32) | lo.get_ui();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("not a rational number: '" + s + "'");
  }
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  const BigInt scale = pow_ui(10, static_cast<std::uint64_t>(digits));
  BigInt n = abs(q_.get_num()) * scale * 2 + q_.get_den();
  BigInt d = q_.get_den() * 2;
  BigInt scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  std::string body = scaled.get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  std::string out = q_.get_num() < 0 && scaled != 0 ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  return out;
}

BigInt floor(const Rational& x) {
  BigInt r;
  BigInt n = x.num();
  BigInt d = x.den();
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

BigInt ceil(const Rational& x) {
  BigInt r;
  BigInt n = x.num();
  BigInt d = x.den();
  mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

ExtRational ratio_with_conventions(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    if (num == 0) return {false, Rational(1)};
    return {true, Rational(0)};
  }
  return {false, Rational(num, den)};
}

}  // namespace hdlab::arith
