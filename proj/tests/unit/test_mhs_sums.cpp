#include "doctest.h"

#include "mhs/mhs_sums.hpp"
#include "mhs/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

using mhs::BigInt;
using mhs::Composition;
using mhs::Rational;

namespace {

Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST_SUITE("mhs_sums") {

TEST_CASE("composition basics") {
  const Composition s({1, 4, 1, 1, 1});
  CHECK(s.length() == 5);
  CHECK(s.weight() == 8);
  CHECK(s[1] == 4);
  CHECK(s.to_string() == "1,4,{1}^3");
  CHECK(Composition({2, 2}).to_string() == "2,2");
  CHECK(Composition({3, 3, 3}).to_string() == "{3}^3");
  CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({}), std::invalid_argument);
}

TEST_CASE("parse_composition grammar") {
  CHECK(mhs::parse_composition("1,2") == Composition({1, 2}));
  CHECK(mhs::parse_composition(" 1 , 2 ") == Composition({1, 2}));
  CHECK(mhs::parse_composition("{1}^4,2") == Composition({1, 1, 1, 1, 2}));
  CHECK(mhs::parse_composition("3,1,{1}^8") ==
        Composition({3, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(mhs::parse_composition("{2}^1") == Composition({2}));
  // Round trips.
  for (const char* text : {"1,2", "{1}^10", "2,1,1,{1}^7", "5,{1}^9"}) {
    const auto c = mhs::parse_composition(text);
    CHECK(mhs::parse_composition(c.to_string()) == c);
  }
}

TEST_CASE("parse_composition rejects malformed input with offsets") {
  CHECK_THROWS_AS(mhs::parse_composition(""), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_composition("0"), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_composition("1,,2"), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_composition("1,"), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_composition("{2}^0"), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_composition("{1}^200000"), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_composition("1;2"), mhs::ParseError);
  try {
    mhs::parse_composition("1,x");
    FAIL("expected ParseError");
  } catch (const mhs::ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("exact values, strict indices") {
  CHECK(mhs::mhs_eval(4, Composition({1, 1})) == q(35, 24));
  CHECK(mhs::mhs_eval(3, Composition({1, 1})) == Rational(1));
  for (std::uint32_t k = 1; k <= 10; ++k)
    CHECK(mhs::mhs_eval(1, Composition({k})) == Rational(1));
  CHECK(mhs::mhs_eval(10, Composition({1})) == q(7381, 2520));
  CHECK(mhs::mhs_eval(2, Composition({1, 1, 1})).is_zero());  // n < r
  CHECK(mhs::mhs_eval(0, Composition({2})).is_zero());
  CHECK(mhs::mhs_eval(3, Composition({2, 1})) ==
        q(1, 2) + q(1, 3) + q(1, 4 * 3));
}

TEST_CASE("exact values, weak indices") {
  CHECK(mhs::mhs_star_eval(2, Composition({1, 1})) == q(7, 4));
  CHECK(mhs::mhs_star_eval(3, Composition({1, 1})) == q(85, 36));
  CHECK(mhs::mhs_star_eval(4, Composition({1, 1})) == q(415, 144));
  CHECK(mhs::mhs_star_eval(6, Composition({1})) == q(49, 20));
  CHECK(mhs::mhs_star_eval(2, Composition({3})) == q(9, 8));
  CHECK(mhs::mhs_star_eval(1, Composition({4, 2, 7})) == Rational(1));
  CHECK(mhs::mhs_star_eval(0, Composition({1})).is_zero());
  CHECK(mhs::padic_order(3, mhs::mhs_star_eval(4, Composition({1, 1}))) ==
        mhs::PAdicOrder::of(-2));
  CHECK(mhs::padic_order(5, mhs::mhs_star_eval(6, Composition({1}))) ==
        mhs::PAdicOrder::of(-1));
  CHECK(mhs::padic_order(2, mhs::mhs_star_eval(2, Composition({3}))) ==
        mhs::PAdicOrder::of(-3));
}

TEST_CASE("suffix coefficients") {
  const auto c4 = mhs::suffix_coefficients(4, Composition({1, 1}));
  CHECK(c4 == std::vector<Rational>{q(13, 12), q(7, 12), q(1, 4)});
  const auto c10 = mhs::suffix_coefficients(10, Composition({1, 1}));
  CHECK(c10.size() == 9);
  CHECK(c10[0] == q(4861, 2520));
  CHECK(c10[6] == q(121, 360));

  // H_n(s) == sum_k c_k / k^{s_1}, including s_1 != 1.
  for (std::uint32_t s1 : {1u, 2u, 3u}) {
    const Composition s({s1, 2, 1});
    const auto coeffs = mhs::suffix_coefficients(12, s);
    Rational total;
    for (std::size_t k = 1; k <= coeffs.size(); ++k)
      total += coeffs[k - 1] /
               Rational::pow(Rational(static_cast<long long>(k)), s1);
    CHECK(total == mhs::mhs_eval(12, s));
  }
}

TEST_CASE("upper evaluation bounds the exact value tightly") {
  const std::vector<Composition> cases = {
      Composition({1, 1}), Composition({2, 1, 3}), Composition({1, 1, 1, 1}),
      Composition({4})};
  for (const auto& s : cases) {
    for (std::uint64_t n : {5ULL, 17ULL, 40ULL}) {
      const Rational exact = mhs::mhs_eval(n, s);
      const auto upper = mhs::mhs_upper_eval(n, s);
      CHECK(upper.to_rational() >= exact);
      if (!exact.is_zero()) {
        const Rational slack = exact * Rational(BigInt(1), BigInt(1) << 64);
        CHECK(upper.to_rational() <= exact + slack);
        CHECK_FALSE(upper.less_than(exact));
      }
      const Rational star_exact = mhs::mhs_star_eval(n, s);
      const auto star_upper = mhs::mhs_star_upper_eval(n, s);
      CHECK(star_upper.to_rational() >= star_exact);
      CHECK(star_upper.to_rational() <=
            star_exact + star_exact * Rational(BigInt(1), BigInt(1) << 64));
    }
  }
  CHECK(mhs::mhs_upper_eval(3, Composition({1, 1, 1, 1})).is_zero());
}

TEST_CASE("exact cost gate") {
  CHECK(mhs::exact_cost_ok(100, Composition({1, 1})));
  CHECK(mhs::exact_cost_ok(2048, Composition({1, 1})));
  CHECK_FALSE(mhs::exact_cost_ok(2049, Composition({1, 1})));
  CHECK(mhs::exact_cost_ok(2049, Composition({1, 1}), 1ULL << 20));
}

}  // TEST_SUITE
