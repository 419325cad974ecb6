#include "mhs/certified.hpp"

#include "mhs/dyadic.hpp"

#include <stdexcept>

namespace mhs {

namespace {

constexpr unsigned kMaxSeriesTerms = 100000;

Rational dyadic_rational(BigInt num, unsigned bits) {
  return Rational(std::move(num), BigInt(1) << bits);
}

// floor/ceil of q * 2^bits as an integer.
BigInt scaled_floor(const Rational& q, unsigned bits) {
  BigInt f, rem;
  boost::multiprecision::divide_qr(q.num() << bits, q.den(), f, rem);
  // divide_qr truncates toward zero; fix up for negative values
  if (!rem.is_zero() && q.sign() < 0) --f;
  return f;
}

BigInt scaled_ceil(const Rational& q, unsigned bits) {
  BigInt f, rem;
  boost::multiprecision::divide_qr(q.num() << bits, q.den(), f, rem);
  if (!rem.is_zero() && q.sign() > 0) ++f;
  return f;
}

/*
 * atanh(z) = sum z^(2j+1)/(2j+1) for 0 <= z <= 1/3. The geometric tail
 * from term j on is at most (9/8) * z^(2j+1)/(2j+1) since 1/(1-z^2) <= 9/8.
 */
Rational atanh_upper(const Rational& z, unsigned bits) {
  unsigned wb = bits + 64;
  if (z.is_zero()) return Rational(0);
  DyadicUpper p = DyadicUpper::from_rational_upper(z, wb);
  DyadicUpper z2 = DyadicUpper::from_rational_upper(z * z, wb);
  DyadicUpper sum{wb};
  const Rational eps(BigInt(1), BigInt(1) << (bits + 3));
  const DyadicUpper nine_eighths =
      DyadicUpper::from_rational_upper(Rational(9, 8), wb);
  for (unsigned j = 0; j < kMaxSeriesTerms; ++j) {
    DyadicUpper term = p.div_int(2 * j + 1);
    if (term.compare(eps) < 0)
      return (sum + term * nine_eighths).to_rational();
    sum = sum + term;
    p = p * z2;
  }
  throw std::runtime_error("atanh series did not converge");
}

Rational atanh_lower(const Rational& z, unsigned bits) {
  unsigned wb = bits + 64;
  if (z.is_zero()) return Rational(0);
  Rational p = round_down_dyadic(z, wb);
  Rational z2 = round_down_dyadic(z * z, wb);
  Rational sum(0);
  const Rational eps(BigInt(1), BigInt(1) << (bits + 3));
  for (unsigned j = 0; j < kMaxSeriesTerms; ++j) {
    Rational term = round_down_dyadic(p / Rational(2 * j + 1), wb);
    if (term < eps) return sum;  // dropping the positive tail stays below
    sum += term;
    p = round_down_dyadic(p * z2, wb);
  }
  throw std::runtime_error("atanh series did not converge");
}

// n = 2^k * x with x in [1,2); ln n = k ln2 + 2 atanh((x-1)/(x+1)).
struct LnReduction {
  unsigned k;
  Rational z;
};

LnReduction ln_reduce(std::uint64_t n) {
  if (n == 0) throw std::domain_error("ln of zero");
  unsigned k = 0;
  while (k + 1 < 64 && (std::uint64_t{1} << (k + 1)) <= n) ++k;
  BigInt pow2 = BigInt(1) << k;
  return {k, Rational(BigInt(n) - pow2, BigInt(n) + pow2)};
}

const Rational kLn2Z(1, 3);  // (2-1)/(2+1)

}  // namespace

Rational round_up_dyadic(const Rational& q, unsigned bits) {
  return dyadic_rational(scaled_ceil(q, bits), bits);
}

Rational round_down_dyadic(const Rational& q, unsigned bits) {
  return dyadic_rational(scaled_floor(q, bits), bits);
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative");
  BigInt a = (x.num() * x.den()) << (2 * bits);
  BigInt s = boost::multiprecision::sqrt(a);
  if (s * s < a) ++s;
  return Rational(std::move(s), x.den() << bits);
}

Rational sqrt_lower(const Rational& x, unsigned bits) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative");
  BigInt a = (x.num() * x.den()) << (2 * bits);
  BigInt s = boost::multiprecision::sqrt(a);
  return Rational(std::move(s), x.den() << bits);
}

Rational exp_upper(const Rational& x, unsigned bits) {
  if (x.sign() < 0) throw std::domain_error("exp bracket requires x >= 0");
  unsigned wb = bits + 64;
  DyadicUpper xu = DyadicUpper::from_rational_upper(x, wb);
  DyadicUpper sum = DyadicUpper::from_integer(1, wb);
  DyadicUpper term = DyadicUpper::from_integer(1, wb);
  const Rational eps(BigInt(1), BigInt(1) << (bits + 2));
  const Rational twice_x = Rational(2) * x;
  for (unsigned k = 1; k < kMaxSeriesTerms; ++k) {
    term = (term * xu).div_int(k);
    // Once the true ratio x/(k+1) is <= 1/2, the tail from this term on
    // is at most twice the term.
    if (twice_x <= Rational(static_cast<long long>(k) + 1) &&
        term.compare(eps) < 0)
      return (sum + term + term).to_rational();
    sum = sum + term;
  }
  throw std::runtime_error("exp series did not converge");
}

Rational exp_lower(const Rational& x, unsigned bits) {
  if (x.sign() < 0) throw std::domain_error("exp bracket requires x >= 0");
  unsigned wb = bits + 64;
  Rational xl = round_down_dyadic(x, wb);
  Rational sum(1);
  Rational term(1);
  const Rational eps(BigInt(1), BigInt(1) << (bits + 2));
  const Rational twice_x = Rational(2) * x;
  for (unsigned k = 1; k < kMaxSeriesTerms; ++k) {
    term = round_down_dyadic(term * xl / Rational(static_cast<long long>(k)),
                             wb);
    if (twice_x <= Rational(static_cast<long long>(k) + 1) && term < eps)
      return sum;  // positive tail dropped
    sum += term;
  }
  throw std::runtime_error("exp series did not converge");
}

Rational ln_upper(std::uint64_t n, unsigned bits) {
  LnReduction red = ln_reduce(n);
  Rational value = Rational(2) * atanh_upper(red.z, bits);
  if (red.k != 0)
    value += Rational(static_cast<long long>(red.k)) * Rational(2) *
             atanh_upper(kLn2Z, bits);
  return value;
}

Rational ln_lower(std::uint64_t n, unsigned bits) {
  LnReduction red = ln_reduce(n);
  Rational value = Rational(2) * atanh_lower(red.z, bits);
  if (red.k != 0)
    value += Rational(static_cast<long long>(red.k)) * Rational(2) *
             atanh_lower(kLn2Z, bits);
  return value;
}

Rational e_upper(unsigned bits) { return exp_upper(Rational(1), bits); }

Rational e_lower(unsigned bits) { return exp_lower(Rational(1), bits); }

}  // namespace mhs
