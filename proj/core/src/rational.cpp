#include "mhs/rational.hpp"

#include <utility>

namespace mhs {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.sign() < 0) {
    num_.backend().negate();
    den_.backend().negate();
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = big_gcd(abs(num_), den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

/*
 * Addition keeps intermediates small: with g = gcd(b, d) the sum
 * a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)), and only gcd(t, g) can be
 * cancelled from the result. When g == 1 the result is already reduced.
 */
Rational& Rational::operator+=(const Rational& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) {
    *this = o;
    return *this;
  }
  BigInt g = big_gcd(den_, o.den_);
  if (g == 1) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    return *this;
  }
  BigInt db = den_ / g;
  BigInt dd = o.den_ / g;
  BigInt t = num_ * dd + o.num_ * db;
  if (t.is_zero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  BigInt g2 = big_gcd(abs(t), g);
  num_ = t / g2;
  den_ = db * (o.den_ / g2);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

// Cross-cancellation keeps the multiplication near-linear in operand size.
Rational& Rational::operator*=(const Rational& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  BigInt g1 = big_gcd(abs(num_), o.den_);
  BigInt g2 = big_gcd(abs(o.num_), den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  return *this *= o.reciprocal();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_.backend().negate();
  return r;
}

Rational Rational::reciprocal() const {
  if (num_.is_zero()) throw std::domain_error("reciprocal of zero");
  Rational r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.sign() < 0) {
    r.num_.backend().negate();
    r.den_.backend().negate();
  }
  return r;
}

Rational Rational::pow(const Rational& base, unsigned exp) {
  Rational acc = 1;
  Rational b = base;
  while (exp != 0) {
    if (exp & 1u) acc *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return acc;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  // Denominators are positive, so cross-multiplication preserves order.
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return num_.str() + "/" + den_.str();
}

Rational parse_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal literal", 0);
  std::size_t i = 0;
  auto digits_from = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  std::size_t int_end = digits_from(0);
  if (int_end == 0) throw ParseError("expected digit", 0);
  BigInt value = 0;
  for (i = 0; i < int_end; ++i) value = value * 10 + (text[i] - '0');
  BigInt den = 1;
  if (i < text.size() && text[i] == '.') {
    std::size_t frac_start = ++i;
    std::size_t frac_end = digits_from(frac_start);
    if (frac_end == frac_start)
      throw ParseError("expected digit after decimal point", frac_start);
    for (i = frac_start; i < frac_end; ++i) {
      value = value * 10 + (text[i] - '0');
      den *= 10;
    }
  }
  if (i != text.size()) throw ParseError("unexpected character", i);
  return Rational(std::move(value), std::move(den));
}

std::string render_decimal(const Rational& q) {
  BigInt den = q.den();
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1)
    throw std::domain_error("denominator is not a product of 2s and 5s");
  unsigned k = twos > fives ? twos : fives;
  BigInt scaled = abs(q.num());
  for (unsigned j = 0; j < k - fives; ++j) scaled *= 5;
  for (unsigned j = 0; j < k - twos; ++j) scaled *= 2;
  std::string digits = scaled.str();
  if (k != 0) {
    if (digits.size() <= k)
      digits.insert(0, std::string(k + 1 - digits.size(), '0'));
    digits.insert(digits.size() - k, ".");
  }
  if (q.sign() < 0) digits.insert(0, "-");
  return digits;
}

std::int64_t PAdicOrder::value() const {
  if (infinite_) throw std::domain_error("infinite p-adic order has no value");
  return value_;
}

PAdicOrder PAdicOrder::operator+(const PAdicOrder& o) const {
  if (infinite_ || o.infinite_) return infinity();
  return of(value_ + o.value_);
}

std::strong_ordering PAdicOrder::operator<=>(const PAdicOrder& o) const {
  if (infinite_ && o.infinite_) return std::strong_ordering::equal;
  if (infinite_) return std::strong_ordering::greater;
  if (o.infinite_) return std::strong_ordering::less;
  return value_ <=> o.value_;
}

PAdicOrder PAdicOrder::min(const PAdicOrder& a, const PAdicOrder& b) {
  return a < b ? a : b;
}

std::string PAdicOrder::to_string() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

std::int64_t int_valuation(std::uint64_t p, BigInt x) {
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  if (x.is_zero()) throw std::domain_error("valuation of zero integer");
  std::int64_t v = 0;
  BigInt q, rem;
  const BigInt bp = p;
  for (;;) {
    boost::multiprecision::divide_qr(x, bp, q, rem);
    if (!rem.is_zero()) return v;
    x.swap(q);
    ++v;
  }
}

PAdicOrder padic_order(std::uint64_t p, const Rational& q) {
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  if (q.is_zero()) return PAdicOrder::infinity();
  // The representation is reduced, so at most one of the two loops runs.
  std::int64_t vn = int_valuation(p, q.num());
  if (vn != 0) return PAdicOrder::of(vn);
  return PAdicOrder::of(-int_valuation(p, q.den()));
}

}  // namespace mhs
