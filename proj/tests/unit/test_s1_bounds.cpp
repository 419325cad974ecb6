#include "doctest.h"

#include "mhs/mhs_sums.hpp"
#include "mhs/primes.hpp"
#include "mhs/rational.hpp"
#include "mhs/s1_bounds.hpp"

#include <cstdint>
#include <vector>

using mhs::Composition;
using mhs::PrimeSieve;
using mhs::Rational;
using mhs::S1Variant;

namespace {

Composition with_head(std::uint32_t s1, const Composition& tail) {
  std::vector<std::uint32_t> e;
  e.push_back(s1);
  e.insert(e.end(), tail.exponents().begin(), tail.exponents().end());
  return Composition(e);
}

}  // namespace

TEST_SUITE("s1_bounds") {

TEST_CASE("worked bounds at small n") {
  const PrimeSieve sieve;

  const auto b10 = mhs::s1_bound(10, Composition({1}), sieve);
  CHECK(b10.p == 7);
  CHECK(b10.bound == 1);
  CHECK(b10.variant == S1Variant::large_prime);
  CHECK(mhs::s1_bound_scan(10, Composition({1}), sieve).bound == 1);

  const auto b4 = mhs::s1_bound(4, Composition({1}), sieve);
  CHECK(b4.p == 3);
  CHECK(b4.bound == 1);
  CHECK(b4.variant == S1Variant::large_prime);

  const auto b21 = mhs::s1_bound(10, Composition({2, 1}), sieve);
  CHECK(b21.p == 7);
  CHECK(b21.bound == 2);
  CHECK(b21.variant == S1Variant::large_prime);
  CHECK(mhs::s1_bound_scan(10, Composition({2, 1}), sieve).bound == 2);
}

TEST_CASE("single-term variant at n == r") {
  const PrimeSieve sieve;
  const auto b = mhs::s1_bound(2, Composition({1}), sieve);
  CHECK(b.variant == S1Variant::single_term);
  CHECK(b.p == 2);
  CHECK(b.bound == 0);
  const auto b5 = mhs::s1_bound(4, Composition({3, 1, 2}), sieve);
  CHECK(b5.variant == S1Variant::single_term);
  CHECK(b5.bound == 0);
}

TEST_CASE("large-prime variant needs 2p > n") {
  const PrimeSieve sieve;
  // n = 21: largest prime <= 20 is 19, 38 > 21 -> applies.
  CHECK(mhs::s1_bound_large_prime(21, Composition({1}), sieve).has_value());
  // n = 27, r = 2: largest prime <= 26 is 23, 46 > 27 -> applies; contrast
  // with a tail long enough to pull the prime below n/2.
  CHECK(mhs::s1_bound_large_prime(27, Composition({1}), sieve).has_value());
  CHECK_FALSE(
      mhs::s1_bound_large_prime(27, mhs::parse_composition("{1}^14"), sieve)
          .has_value());
}

TEST_CASE("coefficient-sharing variant agrees with the scan") {
  const PrimeSieve sieve;
  for (std::uint64_t n : {6ULL, 9ULL, 21ULL, 33ULL}) {
    for (const char* tail_text : {"1", "2", "1,1", "3,1"}) {
      const Composition tail = mhs::parse_composition(tail_text);
      if (n <= tail.length() + 1) continue;
      const auto coeffs =
          mhs::suffix_coefficients(n, with_head(1, tail));
      const auto direct = mhs::s1_bound(n, tail, sieve);
      const auto shared =
          mhs::s1_bound_with_coefficients(n, tail, coeffs, sieve);
      CHECK(direct.p == shared.p);
      CHECK(direct.bound == shared.bound);
      CHECK((direct.variant == shared.variant));
    }
  }
}

TEST_CASE("exceeding the bound forces a negative valuation") {
  const PrimeSieve sieve;
  for (std::uint64_t n = 2; n <= 25; ++n) {
    for (const char* tail_text : {"1", "2", "1,1"}) {
      const Composition tail = mhs::parse_composition(tail_text);
      if (n < tail.length() + 1) continue;
      const auto b = mhs::s1_bound(n, tail, sieve);
      for (std::int64_t s1 = b.bound + 1; s1 <= b.bound + 3; ++s1) {
        const auto h =
            mhs::mhs_eval(n, with_head(static_cast<std::uint32_t>(s1), tail));
        const auto nu = mhs::padic_order(b.p, h);
        CHECK(nu < mhs::PAdicOrder::of(0));
      }
    }
  }
}

TEST_CASE("all-ones upper bound dominates the sums") {
  CHECK(mhs::ones_upper_bound(10, 1) > mhs::mhs_eval(10, Composition({1})));
  CHECK(mhs::ones_upper_bound(20, 3) >
        mhs::mhs_eval(20, Composition({1, 1, 1})));
  // (ln 8275 + 1)^25 / 25! is well below 1 but not tiny.
  const auto closure = mhs::ones_upper_bound(8275, 25);
  CHECK(closure < Rational(1));
  CHECK(closure > Rational(mhs::BigInt(6), mhs::BigInt(10)));
  CHECK(closure < Rational(mhs::BigInt(7), mhs::BigInt(10)));
}

TEST_CASE("large-length criterion boundary") {
  CHECK(mhs::large_r_criterion(22000, 30));
  CHECK_FALSE(mhs::large_r_criterion(22877, 30));
  CHECK(mhs::large_r_criterion(9599, 29));
  CHECK_FALSE(mhs::large_r_criterion(8275, 25));
  CHECK(mhs::large_r_criterion(1, 3));
}

TEST_CASE("scan bound falls under the large-length threshold at 30") {
  for (std::uint64_t r : {2ULL, 10ULL, 28ULL, 29ULL})
    CHECK_FALSE(mhs::scan_bound_below_large_r_threshold(r));
  for (std::uint64_t r : {30ULL, 31ULL, 46ULL, 69ULL, 100ULL})
    CHECK(mhs::scan_bound_below_large_r_threshold(r));
}

}  // TEST_SUITE
