#include "doctest.h"

#include "mhs/dyadic.hpp"

#include <random>

using mhs::BigInt;
using mhs::DyadicUpper;
using mhs::Rational;

namespace {

// Generous multiplicative slack for a handful of prec-32 operations.
const Rational kSlack = Rational(1) + Rational(BigInt(1), BigInt(1) << 20);

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(0, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000000);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_SUITE("dyadic") {

TEST_CASE("integers are represented exactly") {
  const auto d = DyadicUpper::from_integer(BigInt(12345));
  CHECK(d.to_rational() == Rational(12345));
  CHECK(DyadicUpper::from_integer(BigInt(0)).is_zero());
  CHECK((DyadicUpper(96)).is_zero());
}

TEST_CASE("from_rational_upper rounds toward +infinity") {
  const Rational third(BigInt(1), BigInt(3));
  const auto d = DyadicUpper::from_rational_upper(third, 8);
  CHECK(d.to_rational() >= third);
  CHECK(d.to_rational() <= third * kSlack);
  // Exact dyadic input stays exact.
  const Rational eighth(BigInt(1), BigInt(8));
  CHECK(DyadicUpper::from_rational_upper(eighth, 8).to_rational() == eighth);
}

TEST_CASE("operations keep the upper-bound invariant") {
  std::mt19937_64 rng(987654321);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng) + Rational(BigInt(1), BigInt(7));
    const auto da = DyadicUpper::from_rational_upper(a, 32);
    const auto db = DyadicUpper::from_rational_upper(b, 32);

    const auto sum = da + db;
    CHECK(sum.to_rational() >= a + b);
    CHECK(sum.to_rational() <= (a + b) * kSlack + Rational(BigInt(1), BigInt(1) << 20));

    const auto prod = da * db;
    CHECK(prod.to_rational() >= a * b);
    CHECK(prod.to_rational() <= (a * b) * kSlack * kSlack + Rational(BigInt(1), BigInt(1) << 20));

    const auto quot = da.div_int(BigInt(7));
    CHECK(quot.to_rational() >= a / Rational(7));
    CHECK(quot.to_rational() <= (a / Rational(7)) * kSlack + Rational(BigInt(1), BigInt(1) << 20));

    const auto full = da / db;
    CHECK(full.to_rational() * kSlack >= a / b);
  }
}

TEST_CASE("compare is exact") {
  const Rational third(BigInt(1), BigInt(3));
  const auto d = DyadicUpper::from_rational_upper(third, 96);
  CHECK(d.compare(third) == std::strong_ordering::greater);
  CHECK(d.less_than(Rational(BigInt(34), BigInt(100))));
  CHECK_FALSE(d.less_than(third));
  const auto exact = DyadicUpper::from_rational_upper(Rational(BigInt(3), BigInt(4)));
  CHECK(exact.compare(Rational(BigInt(3), BigInt(4))) == std::strong_ordering::equal);
  CHECK(exact.compare(Rational(1)) == std::strong_ordering::less);
}

TEST_CASE("decimal rendering stays an upper bound") {
  const auto one = DyadicUpper::from_integer(BigInt(1));
  CHECK(one.to_decimal_upper_string(3) == "1.0");
  const auto eighth = DyadicUpper::from_rational_upper(Rational(BigInt(1), BigInt(8)));
  CHECK(eighth.to_decimal_upper_string(3) == "0.125");
  const auto third = DyadicUpper::from_rational_upper(Rational(BigInt(1), BigInt(3)));
  CHECK(third.to_decimal_upper_string(3) == "0.334");
}

TEST_CASE("precision widens through mixed-precision operations") {
  const auto narrow = DyadicUpper::from_rational_upper(Rational(BigInt(1), BigInt(3)), 16);
  const auto wide = DyadicUpper::from_rational_upper(Rational(BigInt(1), BigInt(5)), 64);
  CHECK((narrow + wide).precision() == 64);
  CHECK((narrow * wide).precision() == 64);
}

}  // TEST_SUITE
