#include "mhs/dyadic.hpp"

#include <algorithm>
#include <utility>

namespace mhs {

namespace {

std::int64_t bit_length(const BigInt& v) {
  return v.is_zero() ? 0 : static_cast<std::int64_t>(msb(v)) + 1;
}

// floor(v / 2^k) + 1 if any dropped bit was set, else exact shift.
BigInt shift_right_up(const BigInt& v, std::int64_t k) {
  BigInt q = v >> k;
  BigInt dropped = v - (q << k);
  if (!dropped.is_zero()) ++q;
  return q;
}

}  // namespace

void DyadicUpper::normalize_up() {
  if (mant_.sign() < 0) throw std::domain_error("negative dyadic mantissa");
  const std::int64_t limit = static_cast<std::int64_t>(prec_) + 64;
  while (bit_length(mant_) > limit) {
    std::int64_t shift = bit_length(mant_) - limit;
    mant_ = shift_right_up(mant_, shift);
    exp_ += shift;
  }
}

DyadicUpper DyadicUpper::from_integer(const BigInt& v, unsigned precision) {
  return DyadicUpper(v, 0, precision);
}

DyadicUpper DyadicUpper::from_rational_upper(const Rational& q,
                                             unsigned precision) {
  if (q.sign() < 0) throw std::domain_error("negative value in upper dyadic");
  return from_integer(q.num(), precision).div_int(q.den());
}

DyadicUpper DyadicUpper::operator+(const DyadicUpper& o) const {
  unsigned prec = std::max(prec_, o.prec_);
  if (is_zero()) return DyadicUpper(o.mant_, o.exp_, prec);
  if (o.is_zero()) return DyadicUpper(mant_, exp_, prec);
  const DyadicUpper& hi = exp_ >= o.exp_ ? *this : o;
  const DyadicUpper& lo = exp_ >= o.exp_ ? o : *this;
  std::int64_t gap = hi.exp_ - lo.exp_;
  // The low operand is < 2^(lo.exp + prec + 64) <= one ulp of the high
  // operand once the gap reaches its mantissa bound, so +1 ulp covers it.
  if (gap >= static_cast<std::int64_t>(lo.prec_) + 64)
    return DyadicUpper(hi.mant_ + 1, hi.exp_, prec);
  return DyadicUpper((hi.mant_ << gap) + lo.mant_, lo.exp_, prec);
}

DyadicUpper DyadicUpper::operator*(const DyadicUpper& o) const {
  unsigned prec = std::max(prec_, o.prec_);
  return DyadicUpper(mant_ * o.mant_, exp_ + o.exp_, prec);
}

DyadicUpper DyadicUpper::div_int(const BigInt& divisor) const {
  if (divisor.sign() <= 0) throw std::domain_error("division by non-positive");
  if (is_zero()) return DyadicUpper(prec_);
  // Shift far enough that the quotient keeps >= prec+64 significant bits
  // even when the divisor is much larger than the mantissa.
  std::int64_t shift = static_cast<std::int64_t>(prec_) + 64 + bit_length(divisor);
  BigInt q, rem;
  boost::multiprecision::divide_qr(mant_ << shift, divisor, q, rem);
  if (!rem.is_zero()) ++q;
  return DyadicUpper(std::move(q), exp_ - shift, prec_);
}

DyadicUpper DyadicUpper::operator/(const DyadicUpper& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero dyadic");
  DyadicUpper q = div_int(o.mant_);
  q.exp_ -= o.exp_;
  q.prec_ = std::max(prec_, o.prec_);
  return q;
}

Rational DyadicUpper::to_rational() const {
  if (exp_ >= 0) return Rational(mant_ << exp_);
  return Rational(mant_, BigInt(1) << -exp_);
}

std::strong_ordering DyadicUpper::compare(const Rational& q) const {
  // mant * 2^exp  vs  num/den  <=>  mant * den * 2^exp  vs  num
  BigInt lhs = mant_ * q.den();
  BigInt rhs = q.num();
  if (exp_ >= 0)
    lhs <<= exp_;
  else
    rhs <<= -exp_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicUpper::to_decimal_upper_string(unsigned digits) const {
  // ceil(value * 10^digits), rendered over 10^digits.
  BigInt pow10 = 1;
  for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
  BigInt scaled;
  if (exp_ >= 0) {
    scaled = (mant_ << exp_) * pow10;
  } else {
    BigInt q, rem;
    boost::multiprecision::divide_qr(mant_ * pow10, BigInt(1) << -exp_, q, rem);
    if (!rem.is_zero()) ++q;
    scaled = q;
  }
  std::string text = scaled.str();
  if (digits == 0) return text;
  if (text.size() <= digits)
    text.insert(0, std::string(digits + 1 - text.size(), '0'));
  text.insert(text.size() - digits, ".");
  // Trim trailing zeros but keep at least one fractional digit.
  std::size_t last = text.find_last_not_of('0');
  if (text[last] == '.') ++last;
  text.erase(last + 1);
  return text;
}

}  // namespace mhs
