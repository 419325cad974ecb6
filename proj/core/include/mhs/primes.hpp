#pragma once

#include "mhs/rational.hpp"

#include <cstdint>
#include <vector>

namespace mhs {

/*
 * Sieve of Eratosthenes over [0, limit], segmented above 10^6 to keep the
 * marking pass cache-resident. Immutable after construction; all queries
 * are read-only and thread-safe. Requires limit < 2^32.
 */
class PrimeSieve {
 public:
  static constexpr std::uint64_t kDefaultLimit = 100000;

  explicit PrimeSieve(std::uint64_t limit = kDefaultLimit);

  std::uint64_t limit() const noexcept { return limit_; }
  bool is_prime(std::uint64_t k) const;  // requires k <= limit
  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

  // Largest prime <= bound; requires 2 <= bound <= limit.
  std::uint64_t largest_prime_up_to(std::uint64_t bound) const;
  // Queries over the inclusive range [lo, hi] intersected with [0, limit].
  bool has_prime_in(std::uint64_t lo, std::uint64_t hi) const;
  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> is_prime_;
  std::vector<std::uint32_t> primes_;
};

/*
 * The window for (n, r) is (n/(r+1), n/r]: a prime p lies inside iff
 * rp <= n < (r+1)p, i.e. exactly r multiples of p land in [1, n].
 */
struct PrimeWindow {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::vector<std::uint64_t> primes_inside;

  Rational lower() const {  // exclusive endpoint n/(r+1)
    return Rational(BigInt(n), BigInt(r) + 1);
  }
  Rational upper() const {  // inclusive endpoint n/r
    return Rational(BigInt(n), BigInt(r));
  }
  bool inhabited() const noexcept { return !primes_inside.empty(); }
};

/*
 * Window queries need primes only up to floor(n/r), so the precondition is
 * floor(n/r) <= sieve.limit() (weaker than n <= limit; lets one 10^5 sieve
 * serve every threshold scan below).
 */
PrimeWindow primes_in_window(std::uint64_t n, std::uint64_t r,
                             const PrimeSieve& sieve);

// n is in A_r iff its window is inhabited, i.e. n is in [rp, (r+1)p) for
// some prime p. Same precondition as primes_in_window.
bool in_A_r(std::uint64_t n, std::uint64_t r, const PrimeSieve& sieve);

/*
 * Upper end of the descending scan that locates m_r: beyond this bound
 * membership in A_r rests on a prime-gap theorem taken as an axiom.
 * Certified over-approximation of max(9599, (r+1)*exp(sqrt(1.4 r)),
 * (r+1)*3275).
 */
std::uint64_t scan_bound(std::uint64_t r);

/*
 * m_r = 1 + the largest n <= scan_bound(r) outside A_r (the scan starts at
 * n = 1; 0 is not considered, which is immaterial since 1 is never in A_r).
 * Requires floor(scan_bound(r)/r) <= sieve.limit().
 */
std::uint64_t compute_m_r(std::uint64_t r, const PrimeSieve& sieve);

/*
 * Certifies m_r <= (r+1)*exp(sqrt(1.4 r)) for r >= 24 by comparing m_r
 * against a certified LOWER bound of the right-hand side, so a true result
 * is a theorem.
 */
bool m_r_estimate_check(std::uint64_t r, const PrimeSieve& sieve);

}  // namespace mhs
