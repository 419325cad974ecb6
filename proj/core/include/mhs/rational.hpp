#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mhs {

using BigInt = boost::multiprecision::cpp_int;

// Parse failure carrying the byte offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/*
 * Exact rational arithmetic. Representation invariants:
 *   - denominator > 0
 *   - gcd(|numerator|, denominator) == 1
 *   - zero is 0/1
 * Every constructor and operation restores the invariants, so two equal
 * values always have identical representations.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt num, BigInt den);  // reduces; throws on zero denominator

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  Rational reciprocal() const;  // throws on zero
  static Rational pow(const Rational& base, unsigned exp);

  bool operator==(const Rational& o) const noexcept {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

  // "num/den", denominator always present ("1/1", "-3/4").
  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;
  void reduce();
};

/*
 * Exact decimal parsing: "d+" or "d+.d+", no sign, no exponent. The result
 * is digits/10^k reduced; nothing is rounded. Throws ParseError with the
 * byte offset of the first offending position.
 */
Rational parse_decimal(std::string_view text);

/*
 * Exact decimal rendering, inverse of parse_decimal for canonical literals
 * (no trailing zeros). Requires the denominator to have no prime factors
 * other than 2 and 5; throws std::domain_error otherwise.
 */
std::string render_decimal(const Rational& q);

/*
 * p-adic valuation with +infinity for zero. Finite orders are exact
 * integers; +infinity compares greater than every finite order and
 * absorbs addition.
 */
class PAdicOrder {
 public:
  static PAdicOrder infinity() { return PAdicOrder(true, 0); }
  static PAdicOrder of(std::int64_t v) { return PAdicOrder(false, v); }

  bool is_infinite() const noexcept { return infinite_; }
  std::int64_t value() const;  // throws std::domain_error if infinite

  PAdicOrder operator+(const PAdicOrder& o) const;
  bool operator==(const PAdicOrder& o) const noexcept = default;
  std::strong_ordering operator<=>(const PAdicOrder& o) const;
  static PAdicOrder min(const PAdicOrder& a, const PAdicOrder& b);

  std::string to_string() const;  // "-3" or "inf"

 private:
  PAdicOrder(bool inf, std::int64_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::int64_t value_;
};

// Multiplicity of p in a nonzero integer. Requires p >= 2, x != 0.
std::int64_t int_valuation(std::uint64_t p, BigInt x);

/*
 * Valuation of a rational at p: valuation of the numerator minus valuation
 * of the denominator; +infinity for zero. Requires p >= 2; callers are
 * responsible for p being prime (the laws below fail for composite p).
 *
 * Laws, for nonzero a, b:
 *   padic_order(p, a*b) == padic_order(p, a) + padic_order(p, b)
 *   padic_order(p, a+b) >= min(padic_order(p, a), padic_order(p, b)),
 *     with equality whenever the two orders differ.
 * A negative order at any prime certifies the value is not an integer.
 */
PAdicOrder padic_order(std::uint64_t p, const Rational& q);

}  // namespace mhs
