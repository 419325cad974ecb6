#include "mhs/primes.hpp"

#include "mhs/certified.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mhs {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 20;

std::vector<bool> simple_sieve(std::uint64_t limit) {
  std::vector<bool> is_prime(limit + 1, true);
  is_prime[0] = false;
  if (limit >= 1) is_prime[1] = false;
  for (std::uint64_t p = 2; p * p <= limit; ++p)
    if (is_prime[p])
      for (std::uint64_t m = p * p; m <= limit; m += p) is_prime[m] = false;
  return is_prime;
}

}  // namespace

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
  if (limit >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("sieve limit must be < 2^32");
  if (limit <= 1000000) {
    is_prime_ = simple_sieve(limit);
  } else {
    // Segmented: mark blocks with base primes up to sqrt(limit).
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
    std::vector<bool> base = simple_sieve(root);
    is_prime_.assign(limit + 1, true);
    is_prime_[0] = false;
    is_prime_[1] = false;
    for (std::uint64_t lo = 0; lo <= limit; lo += kSegmentSize) {
      std::uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
      for (std::uint64_t p = 2; p <= root && p * p <= hi; ++p) {
        if (!base[p]) continue;
        std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
        for (std::uint64_t m = start; m <= hi; m += p) is_prime_[m] = false;
      }
    }
  }
  for (std::uint64_t k = 2; k <= limit; ++k)
    if (is_prime_[k]) primes_.push_back(static_cast<std::uint32_t>(k));
}

bool PrimeSieve::is_prime(std::uint64_t k) const {
  if (k > limit_) throw std::out_of_range("primality query beyond sieve limit");
  return is_prime_[k];
}

std::uint64_t PrimeSieve::largest_prime_up_to(std::uint64_t bound) const {
  if (bound < 2) throw std::invalid_argument("no prime below 2");
  if (bound > limit_) throw std::out_of_range("prime query beyond sieve limit");
  auto it = std::upper_bound(primes_.begin(), primes_.end(),
                             static_cast<std::uint32_t>(bound));
  return *std::prev(it);
}

bool PrimeSieve::has_prime_in(std::uint64_t lo, std::uint64_t hi) const {
  if (hi < lo) return false;
  if (hi > limit_) throw std::out_of_range("prime range query beyond sieve limit");
  auto it = std::lower_bound(primes_.begin(), primes_.end(),
                             static_cast<std::uint32_t>(lo));
  return it != primes_.end() && *it <= hi;
}

std::vector<std::uint64_t> PrimeSieve::primes_in(std::uint64_t lo,
                                                 std::uint64_t hi) const {
  if (hi > limit_) throw std::out_of_range("prime range query beyond sieve limit");
  std::vector<std::uint64_t> out;
  if (hi < lo) return out;
  auto it = std::lower_bound(primes_.begin(), primes_.end(),
                             static_cast<std::uint32_t>(lo));
  for (; it != primes_.end() && *it <= hi; ++it) out.push_back(*it);
  return out;
}

PrimeWindow primes_in_window(std::uint64_t n, std::uint64_t r,
                             const PrimeSieve& sieve) {
  if (n == 0 || r == 0) throw std::invalid_argument("window needs n, r >= 1");
  // p in (n/(r+1), n/r]  <=>  n/(r+1) < p and p <= n/r  <=>  rp <= n < (r+1)p,
  // so over integers the window is [floor(n/(r+1))+1, floor(n/r)].
  std::uint64_t lo = n / (r + 1) + 1;
  std::uint64_t hi = n / r;
  if (hi > sieve.limit())
    throw std::out_of_range("window query beyond sieve limit");
  PrimeWindow w;
  w.n = n;
  w.r = r;
  if (hi >= lo) w.primes_inside = sieve.primes_in(lo, hi);
  return w;
}

bool in_A_r(std::uint64_t n, std::uint64_t r, const PrimeSieve& sieve) {
  if (n == 0 || r == 0) throw std::invalid_argument("membership needs n, r >= 1");
  std::uint64_t lo = n / (r + 1) + 1;
  std::uint64_t hi = n / r;
  if (hi > sieve.limit())
    throw std::out_of_range("window query beyond sieve limit");
  return hi >= lo && sieve.has_prime_in(lo, hi);
}

std::uint64_t scan_bound(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("scan bound needs r >= 1");
  Rational root = sqrt_upper(Rational(BigInt(7) * r, BigInt(5)), 64);
  Rational growth = exp_upper(root, 64) * Rational(static_cast<long long>(r) + 1);
  // ceil of the certified upper bound
  BigInt q, rem;
  boost::multiprecision::divide_qr(growth.num(), growth.den(), q, rem);
  if (!rem.is_zero()) ++q;
  if (q > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::out_of_range("scan bound overflows 64 bits");
  std::uint64_t exp_term = q.convert_to<std::uint64_t>();
  return std::max<std::uint64_t>({9599, exp_term, (r + 1) * 3275});
}

std::uint64_t compute_m_r(std::uint64_t r, const PrimeSieve& sieve) {
  std::uint64_t top = scan_bound(r);
  if (top / r > sieve.limit())
    throw std::out_of_range(
        "sieve too small for the threshold scan (needs floor(scan_bound/r))");
  for (std::uint64_t n = top; n >= 1; --n)
    if (!in_A_r(n, r, sieve)) return n + 1;
  throw std::logic_error("no natural number outside A_r found (1 always is)");
}

bool m_r_estimate_check(std::uint64_t r, const PrimeSieve& sieve) {
  if (r < 24) throw std::invalid_argument("estimate check applies to r >= 24");
  std::uint64_t m = compute_m_r(r, sieve);
  Rational root = sqrt_lower(Rational(BigInt(7) * r, BigInt(5)));
  Rational rhs_lower = exp_lower(root) * Rational(static_cast<long long>(r) + 1);
  return Rational(static_cast<long long>(m)) <= rhs_lower;
}

}  // namespace mhs
