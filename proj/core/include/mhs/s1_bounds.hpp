#pragma once

#include "mhs/mhs_sums.hpp"
#include "mhs/primes.hpp"

#include <cstdint>
#include <optional>

namespace mhs {

/*
 * A certified cap on the leading exponent: for every integer s_1 > bound,
 * H_n(s_1, tail) has negative p-adic order at the witness prime p and is
 * therefore not an integer.
 *
 * Variants:
 *   scan         p = largest prime <= n-r+1;
 *                bound = max(v_p(c_p), v_p(c_p) - min over k != p of
 *                v_p(c_k)) from the suffix coefficients.
 *   large_prime  same p with additionally 2p > n;
 *                bound = v_p(c_p) + max tail entry (>= the scan bound).
 *   single_term  n = r: the sum is the single term 1/(2^{s_2} ... n^{s_r}),
 *                so p = 2 certifies every s_1; bound = 0.
 */
enum class S1Variant { scan, large_prime, single_term };

struct S1Bound {
  std::uint64_t n = 0;
  Composition tail;  // (s_2..s_r)
  std::uint64_t p = 0;
  std::int64_t bound = 0;
  S1Variant variant = S1Variant::scan;
};

// The scan variant. Requires n >= tail.length()+1 (n == r gives single_term)
// and a sieve covering n - tail.length().
S1Bound s1_bound_scan(std::uint64_t n, const Composition& tail,
                      const PrimeSieve& sieve);

// The large-prime variant; empty when 2p <= n. Requires n > tail.length()+1.
std::optional<S1Bound> s1_bound_large_prime(std::uint64_t n,
                                            const Composition& tail,
                                            const PrimeSieve& sieve);

// Preferred selection: large_prime when its precondition holds, else scan;
// single_term when n == tail.length()+1.
S1Bound s1_bound(std::uint64_t n, const Composition& tail,
                 const PrimeSieve& sieve);

/*
 * Shared-computation variant of s1_bound for callers that already hold the
 * suffix coefficients of (s_1, tail) at n (any s_1; the coefficients do
 * not involve it). coefficients[k-1] must equal c_k for k = 1..n-r+1.
 */
S1Bound s1_bound_with_coefficients(std::uint64_t n, const Composition& tail,
                                   const std::vector<Rational>& coefficients,
                                   const PrimeSieve& sieve);

/*
 * Certified rational upper bound on (ln n + 1)^r / r!, which dominates
 * H_n(s) for every composition s of length r (each of the r index sums is
 * at most H_n(1) <= ln n + 1, and ordering the tuple divides by r!).
 * Requires 1 <= r <= n.
 */
Rational ones_upper_bound(std::uint64_t n, std::uint64_t r);

/*
 * Certified check of e*(ln n + 1) <= r (upper-rounded left side, so true
 * is a theorem): when it holds, every H_n(s) with length r is below 1
 * because (ln n + 1)^r / r! <= ((ln n + 1) e / r)^r <= 1.
 * Requires n >= 1.
 */
bool large_r_criterion(std::uint64_t n, std::uint64_t r);

/*
 * Certified truth value of (r+1) exp(sqrt(1.4 r)) <= exp(r/e - 1): the
 * point where the threshold-scan upper bound drops below the reach of the
 * large-r criterion. Certifies falsity too (lower bound of the left side
 * above an upper bound of the right); widens precision until decidable.
 * Requires r >= 2.
 */
bool scan_bound_below_large_r_threshold(std::uint64_t r);

}  // namespace mhs
