#include "mhs/s1_bounds.hpp"

#include "mhs/certified.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhs {

namespace {

Composition with_unit_head(const Composition& tail) {
  std::vector<std::uint32_t> s;
  s.reserve(tail.length() + 1);
  s.push_back(1);
  s.insert(s.end(), tail.exponents().begin(), tail.exponents().end());
  return Composition(std::move(s));
}

S1Bound single_term_bound(std::uint64_t n, const Composition& tail) {
  // n == r: the only tuple is (1, 2, ..., n), whose denominator carries
  // 2^{s_2}, so v_2 < 0 independently of s_1.
  return S1Bound{n, tail, 2, 0, S1Variant::single_term};
}

std::int64_t order_value(std::uint64_t p, const Rational& q) {
  PAdicOrder o = padic_order(p, q);
  if (o.is_infinite())
    throw std::logic_error("suffix coefficient unexpectedly zero");
  return o.value();
}

S1Bound scan_from_coefficients(std::uint64_t n, const Composition& tail,
                               std::uint64_t p,
                               const std::vector<Rational>& c) {
  std::int64_t vp = order_value(p, c[p - 1]);
  bool have_other = false;
  std::int64_t min_other = 0;
  for (std::uint64_t k = 1; k <= c.size(); ++k) {
    if (k == p) continue;
    std::int64_t v = order_value(p, c[k - 1]);
    if (!have_other || v < min_other) {
      min_other = v;
      have_other = true;
    }
  }
  std::int64_t bound = have_other ? std::max(vp, vp - min_other) : vp;
  return S1Bound{n, tail, p, bound, S1Variant::scan};
}

S1Bound large_prime_from_coefficients(std::uint64_t n, const Composition& tail,
                                      std::uint64_t p,
                                      const std::vector<Rational>& c) {
  std::int64_t vp = order_value(p, c[p - 1]);
  std::uint32_t max_tail =
      *std::max_element(tail.exponents().begin(), tail.exponents().end());
  return S1Bound{n, tail, p,
                 vp + static_cast<std::int64_t>(max_tail),
                 S1Variant::large_prime};
}

std::uint64_t witness_prime(std::uint64_t n, std::size_t r,
                            const PrimeSieve& sieve) {
  return sieve.largest_prime_up_to(n - r + 1);
}

}  // namespace

S1Bound s1_bound_scan(std::uint64_t n, const Composition& tail,
                      const PrimeSieve& sieve) {
  std::size_t r = tail.length() + 1;
  if (n < r) throw std::invalid_argument("s1 bound needs n >= length");
  if (n == r) return single_term_bound(n, tail);
  std::uint64_t p = witness_prime(n, r, sieve);
  return scan_from_coefficients(n, tail, p,
                                suffix_coefficients(n, with_unit_head(tail)));
}

std::optional<S1Bound> s1_bound_large_prime(std::uint64_t n,
                                            const Composition& tail,
                                            const PrimeSieve& sieve) {
  std::size_t r = tail.length() + 1;
  if (n <= r)
    throw std::invalid_argument("large-prime bound needs n > length");
  std::uint64_t p = witness_prime(n, r, sieve);
  if (2 * p <= n) return std::nullopt;
  return large_prime_from_coefficients(
      n, tail, p, suffix_coefficients(n, with_unit_head(tail)));
}

S1Bound s1_bound(std::uint64_t n, const Composition& tail,
                 const PrimeSieve& sieve) {
  std::size_t r = tail.length() + 1;
  if (n < r) throw std::invalid_argument("s1 bound needs n >= length");
  if (n == r) return single_term_bound(n, tail);
  return s1_bound_with_coefficients(
      n, tail, suffix_coefficients(n, with_unit_head(tail)), sieve);
}

S1Bound s1_bound_with_coefficients(std::uint64_t n, const Composition& tail,
                                   const std::vector<Rational>& coefficients,
                                   const PrimeSieve& sieve) {
  std::size_t r = tail.length() + 1;
  if (n <= r)
    throw std::invalid_argument("coefficient form needs n > length");
  if (coefficients.size() != n - r + 1)
    throw std::invalid_argument("coefficient vector of mismatched size");
  std::uint64_t p = witness_prime(n, r, sieve);
  if (2 * p > n)
    return large_prime_from_coefficients(n, tail, p, coefficients);
  return scan_from_coefficients(n, tail, p, coefficients);
}

Rational ones_upper_bound(std::uint64_t n, std::uint64_t r) {
  if (r < 1 || r > n)
    throw std::invalid_argument("bound needs 1 <= r <= n");
  Rational base = ln_upper(n) + Rational(1);
  BigInt factorial = 1;
  for (std::uint64_t i = 2; i <= r; ++i) factorial *= i;
  return Rational::pow(base, static_cast<unsigned>(r)) / Rational(factorial);
}

bool large_r_criterion(std::uint64_t n, std::uint64_t r) {
  if (n == 0) throw std::invalid_argument("criterion needs n >= 1");
  Rational lhs = e_upper() * (ln_upper(n) + Rational(1));
  return lhs <= Rational(static_cast<long long>(r));
}

bool scan_bound_below_large_r_threshold(std::uint64_t r) {
  if (r < 2) throw std::invalid_argument("threshold comparison needs r >= 2");
  const Rational one(1);
  const Rational r_plus_1(static_cast<long long>(r) + 1);
  const Rational arg(BigInt(7) * r, BigInt(5));  // 1.4 r
  for (unsigned bits = kCertifiedBits; bits <= 512; bits *= 2) {
    Rational lhs_up = r_plus_1 * exp_upper(sqrt_upper(arg, bits), bits);
    // r/e - 1 from below: divide by an upper bound of e.
    Rational x_lo = Rational(static_cast<long long>(r)) / e_upper(bits) - one;
    Rational rhs_lo = x_lo.sign() < 0 ? Rational(0) : exp_lower(x_lo, bits);
    if (lhs_up <= rhs_lo) return true;

    Rational lhs_lo = r_plus_1 * exp_lower(sqrt_lower(arg, bits), bits);
    Rational x_up = Rational(static_cast<long long>(r)) / e_lower(bits) - one;
    Rational rhs_up = x_up.sign() <= 0 ? one : exp_upper(x_up, bits);
    if (lhs_lo > rhs_up) return false;
  }
  throw std::runtime_error("threshold comparison undecided at 512 bits");
}

}  // namespace mhs
