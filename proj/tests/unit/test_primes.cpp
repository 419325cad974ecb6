#include "doctest.h"

#include "mhs/primes.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

using mhs::PrimeSieve;

TEST_SUITE("primes") {

TEST_CASE("sieve basics") {
  const PrimeSieve sieve(100);
  CHECK_FALSE(sieve.is_prime(0));
  CHECK_FALSE(sieve.is_prime(1));
  CHECK(sieve.is_prime(2));
  CHECK(sieve.is_prime(97));
  CHECK_FALSE(sieve.is_prime(91));  // 7*13
  CHECK(sieve.primes().size() == 25);
  CHECK(sieve.primes().front() == 2);
  CHECK(sieve.primes().back() == 97);
}

TEST_CASE("prime counts at powers of ten") {
  CHECK(PrimeSieve(100000).primes().size() == 9592);
  const PrimeSieve big(2000000);  // crosses the segmented path
  CHECK(big.primes().size() == 148933);
  CHECK(big.is_prime(1999993));
  CHECK_FALSE(big.is_prime(1999995));
}

TEST_CASE("largest_prime_up_to") {
  const PrimeSieve sieve(1000);
  CHECK(sieve.largest_prime_up_to(10) == 7);
  CHECK(sieve.largest_prime_up_to(7) == 7);
  CHECK(sieve.largest_prime_up_to(2) == 2);
  CHECK(sieve.largest_prime_up_to(1000) == 997);
  CHECK_THROWS_AS(sieve.largest_prime_up_to(1), std::invalid_argument);
  CHECK_THROWS_AS(sieve.largest_prime_up_to(1001), std::out_of_range);
}

TEST_CASE("range queries") {
  const PrimeSieve sieve(1000);
  CHECK(sieve.has_prime_in(14, 16) == false);
  CHECK(sieve.has_prime_in(24, 29));
  CHECK(sieve.primes_in(24, 30) == std::vector<std::uint64_t>{29});
  CHECK(sieve.primes_in(5, 11) == std::vector<std::uint64_t>{5, 7, 11});
  CHECK(sieve.primes_in(90, 96).empty());
  CHECK(sieve.primes_in(0, 2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("prime windows") {
  const PrimeSieve sieve;
  const auto w10 = mhs::primes_in_window(10, 2, sieve);
  CHECK(w10.primes_inside == std::vector<std::uint64_t>{5});
  CHECK(w10.lower() == mhs::Rational(mhs::BigInt(10), mhs::BigInt(3)));
  CHECK(w10.upper() == mhs::Rational(5));
  CHECK(mhs::primes_in_window(7, 1, sieve).primes_inside ==
        std::vector<std::uint64_t>{5, 7});
  CHECK_FALSE(mhs::primes_in_window(21, 2, sieve).inhabited());
  CHECK(mhs::primes_in_window(4, 2, sieve).primes_inside ==
        std::vector<std::uint64_t>{2});
  // Window membership is exactly rp <= n < (r+1)p.
  for (std::uint64_t p : mhs::primes_in_window(60, 4, sieve).primes_inside) {
    CHECK(4 * p <= 60);
    CHECK(60 < 5 * p);
  }
}

TEST_CASE("window precondition is floor(n/r), not n") {
  const PrimeSieve small(100);
  CHECK(mhs::primes_in_window(600, 7, small).inhabited());
  CHECK_THROWS_AS(mhs::primes_in_window(10000, 2, small), std::out_of_range);
}

TEST_CASE("A_r membership") {
  const PrimeSieve sieve;
  CHECK(mhs::in_A_r(10, 2, sieve));
  CHECK_FALSE(mhs::in_A_r(21, 2, sieve));
  CHECK_FALSE(mhs::in_A_r(1, 5, sieve));
  // Gaps of A_2 below its threshold.
  std::vector<std::uint64_t> gaps;
  for (std::uint64_t n = 2; n < 22; ++n)
    if (!mhs::in_A_r(n, 2, sieve)) gaps.push_back(n);
  CHECK(gaps == std::vector<std::uint64_t>{2, 3, 9, 21});
}

TEST_CASE("scan_bound") {
  CHECK(mhs::scan_bound(2) == 9825);   // 3 * 3275
  CHECK(mhs::scan_bound(8) == 29475);  // 9 * 3275
  CHECK(mhs::scan_bound(40) == 134275);
  // At r = 69 the exponential term takes over; the exact value depends on
  // upward rounding, so pin a window rather than a value.
  CHECK(mhs::scan_bound(69) >= 1290000);
  CHECK(mhs::scan_bound(69) <= 1305000);
}

TEST_CASE("thresholds for small lengths") {
  const PrimeSieve sieve;
  const std::uint64_t expect[] = {0, 2,  22, 33, 116, 145,
                                  222, 259, 424};
  for (std::uint64_t r = 1; r <= 8; ++r)
    CHECK(mhs::compute_m_r(r, sieve) == expect[r]);
  CHECK(mhs::compute_m_r(17, sieve) == 3587);
  CHECK(mhs::compute_m_r(24, sieve) == 7944);
  CHECK(mhs::compute_m_r(29, sieve) == 9599);
  CHECK(mhs::compute_m_r(40, sieve) == 54440);
}

TEST_CASE("threshold sits outside A_r with everything above inside") {
  const PrimeSieve sieve;
  for (std::uint64_t r : {2ULL, 5ULL, 8ULL}) {
    const std::uint64_t m = mhs::compute_m_r(r, sieve);
    CHECK_FALSE(mhs::in_A_r(m - 1, r, sieve));
    for (std::uint64_t n = m; n < m + 200; ++n) CHECK(mhs::in_A_r(n, r, sieve));
  }
}

TEST_CASE("threshold estimate certificate") {
  const PrimeSieve sieve;
  for (std::uint64_t r = 24; r <= 30; ++r)
    CHECK(mhs::m_r_estimate_check(r, sieve));
}

}  // TEST_SUITE
