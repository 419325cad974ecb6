#pragma once

#include "mhs/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace mhs {

/*
 * Round-toward-+infinity dyadic arithmetic on nonnegative values.
 * A value is mantissa * 2^exponent with mantissa >= 0. Every operation
 * returns a stored value >= the exact real result, so a computed
 * "value < bound" comparison (done exactly, see compare) is a proof.
 *
 * Invariants:
 *   - mantissa >= 0
 *   - mantissa < 2^(precision + 64) after every operation (normalization
 *     shifts excess bits out, rounding up)
 */
class DyadicUpper {
 public:
  static constexpr unsigned kDefaultPrecision = 96;

  explicit DyadicUpper(unsigned precision = kDefaultPrecision)
      : mant_(0), exp_(0), prec_(precision) {}

  // Exact when v < 2^(precision+64); otherwise rounded up.
  static DyadicUpper from_integer(const BigInt& v,
                                  unsigned precision = kDefaultPrecision);
  // Result >= q. Requires q >= 0.
  static DyadicUpper from_rational_upper(const Rational& q,
                                         unsigned precision = kDefaultPrecision);

  const BigInt& mantissa() const noexcept { return mant_; }
  std::int64_t exponent() const noexcept { return exp_; }
  unsigned precision() const noexcept { return prec_; }
  bool is_zero() const noexcept { return mant_.is_zero(); }

  // Result precision is the max of the operand precisions.
  DyadicUpper operator+(const DyadicUpper& o) const;
  DyadicUpper operator*(const DyadicUpper& o) const;

  /*
   * Division rounds up: floor quotient plus one ulp unless exact. The
   * divisor is taken at face value, so the upper-bound property of the
   * result holds only when the divisor's stored value is <= the intended
   * exact divisor (callers here always pass exact divisors).
   */
  DyadicUpper div_int(const BigInt& divisor) const;  // divisor > 0, exact
  DyadicUpper operator/(const DyadicUpper& o) const;  // o > 0

  Rational to_rational() const;  // exact value of the stored dyadic

  // Exact comparison of the stored value against a rational.
  std::strong_ordering compare(const Rational& q) const;
  bool less_than(const Rational& q) const { return compare(q) < 0; }

  /*
   * Decimal over-approximation: the smallest multiple of 10^-digits that
   * is >= the stored value, rendered exactly. Still an upper bound.
   */
  std::string to_decimal_upper_string(unsigned digits = 30) const;

 private:
  DyadicUpper(BigInt mant, std::int64_t exp, unsigned prec)
      : mant_(std::move(mant)), exp_(exp), prec_(prec) {
    normalize_up();
  }
  void normalize_up();

  BigInt mant_;
  std::int64_t exp_;
  unsigned prec_;
};

}  // namespace mhs
