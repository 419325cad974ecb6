#include "doctest.h"

#include "mhs/rational.hpp"

#include <random>
#include <string>

using mhs::BigInt;
using mhs::PAdicOrder;
using mhs::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rational(BigInt(6), BigInt(4)) == Rational(BigInt(3), BigInt(2)));
  CHECK(Rational(BigInt(1), BigInt(-2)) == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational(BigInt(-4), BigInt(-6)) == Rational(BigInt(2), BigInt(3)));
  CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
  CHECK(Rational().is_zero());
  CHECK(Rational(5).is_integer());
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("arithmetic identities") {
  const Rational a(BigInt(3), BigInt(4));
  const Rational b(BigInt(-5), BigInt(6));
  CHECK(a + b == Rational(BigInt(-1), BigInt(12)));
  CHECK(a - b == Rational(BigInt(19), BigInt(12)));
  CHECK(a * b == Rational(BigInt(-5), BigInt(8)));
  CHECK(a / b == Rational(BigInt(-9), BigInt(10)));
  CHECK(-b == Rational(BigInt(5), BigInt(6)));
  CHECK(b.reciprocal() == Rational(BigInt(-6), BigInt(5)));
  CHECK(a + (-a) == Rational());
  CHECK_THROWS_AS(a / Rational(), std::domain_error);
  CHECK_THROWS_AS(Rational().reciprocal(), std::domain_error);
}

TEST_CASE("pow") {
  CHECK(Rational::pow(Rational(BigInt(2), BigInt(3)), 0) == Rational(1));
  CHECK(Rational::pow(Rational(BigInt(2), BigInt(3)), 3) ==
        Rational(BigInt(8), BigInt(27)));
  CHECK(Rational::pow(Rational(-2), 5) == Rational(-32));
  CHECK(Rational::pow(Rational(), 4).is_zero());
}

TEST_CASE("ordering") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(-1) < Rational());
  CHECK(Rational(BigInt(7), BigInt(5)) > Rational(1));
  CHECK(Rational(BigInt(2), BigInt(4)) <= Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-3), BigInt(2)) < Rational(BigInt(-4), BigInt(3)));
}

TEST_CASE("to_string always keeps the denominator") {
  CHECK(Rational(1).to_string() == "1/1");
  CHECK(Rational(BigInt(35), BigInt(24)).to_string() == "35/24");
  CHECK(Rational(BigInt(-3), BigInt(4)).to_string() == "-3/4");
  CHECK(Rational().to_string() == "0/1");
}

TEST_CASE("parse_decimal is exact") {
  CHECK(mhs::parse_decimal("0.994099321") ==
        Rational(BigInt(994099321), BigInt(1000000000)));
  CHECK(mhs::parse_decimal("145") == Rational(145));
  CHECK(mhs::parse_decimal("2.5") == Rational(BigInt(5), BigInt(2)));
  CHECK(mhs::parse_decimal("0.000") == Rational());
  CHECK(mhs::parse_decimal("00.125") == Rational(BigInt(1), BigInt(8)));
}

TEST_CASE("parse_decimal reports the offending byte") {
  CHECK_THROWS_AS(mhs::parse_decimal(""), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_decimal(".5"), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_decimal("1."), mhs::ParseError);
  CHECK_THROWS_AS(mhs::parse_decimal("-1"), mhs::ParseError);
  try {
    mhs::parse_decimal("1.2x3");
    FAIL("expected ParseError");
  } catch (const mhs::ParseError& e) {
    CHECK(e.offset() == 3);
    CHECK(std::string(e.what()).find("(byte 3)") != std::string::npos);
  }
}

TEST_CASE("render_decimal") {
  CHECK(mhs::render_decimal(Rational(BigInt(1), BigInt(8))) == "0.125");
  CHECK(mhs::render_decimal(Rational(BigInt(-1), BigInt(8))) == "-0.125");
  CHECK(mhs::render_decimal(Rational(3)) == "3");
  CHECK(mhs::render_decimal(Rational()) == "0");
  CHECK(mhs::render_decimal(mhs::parse_decimal("0.994099321")) ==
        "0.994099321");
  CHECK_THROWS_AS(mhs::render_decimal(Rational(BigInt(1), BigInt(3))),
                  std::domain_error);
}

TEST_CASE("int_valuation") {
  CHECK(mhs::int_valuation(2, BigInt(48)) == 4);
  CHECK(mhs::int_valuation(3, BigInt(48)) == 1);
  CHECK(mhs::int_valuation(5, BigInt(48)) == 0);
  CHECK(mhs::int_valuation(2, BigInt(-8)) == 3);
  CHECK(mhs::int_valuation(7, BigInt(1)) == 0);
}

TEST_CASE("padic_order on fixed values") {
  const Rational h(BigInt(35), BigInt(24));  // 24 = 2^3 * 3
  CHECK(mhs::padic_order(2, h) == PAdicOrder::of(-3));
  CHECK(mhs::padic_order(3, h) == PAdicOrder::of(-1));
  CHECK(mhs::padic_order(5, h) == PAdicOrder::of(1));
  CHECK(mhs::padic_order(7, h) == PAdicOrder::of(1));
  CHECK(mhs::padic_order(11, h) == PAdicOrder::of(0));
  CHECK(mhs::padic_order(3, Rational()).is_infinite());
}

TEST_CASE("PAdicOrder arithmetic and ordering") {
  const auto inf = PAdicOrder::infinity();
  CHECK(PAdicOrder::of(-3) + PAdicOrder::of(5) == PAdicOrder::of(2));
  CHECK((PAdicOrder::of(7) + inf).is_infinite());
  CHECK(PAdicOrder::of(1000000) < inf);
  CHECK(PAdicOrder::of(-1) < PAdicOrder::of(0));
  CHECK(PAdicOrder::min(PAdicOrder::of(-2), inf) == PAdicOrder::of(-2));
  CHECK(PAdicOrder::min(inf, inf).is_infinite());
  CHECK(PAdicOrder::of(-3).to_string() == "-3");
  CHECK(inf.to_string() == "inf");
  CHECK_THROWS_AS(inf.value(), std::domain_error);
}

TEST_CASE("valuation laws on random rationals") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<long long> num(-2000, 2000);
  std::uniform_int_distribution<long long> den(1, 2000);
  const std::uint64_t ps[] = {2, 3, 5, 7, 13};
  for (int i = 0; i < 500; ++i) {
    const Rational a(BigInt(num(rng)), BigInt(den(rng)));
    const Rational b(BigInt(num(rng)), BigInt(den(rng)));
    for (std::uint64_t p : ps) {
      const auto va = mhs::padic_order(p, a);
      const auto vb = mhs::padic_order(p, b);
      CHECK(mhs::padic_order(p, a * b) == va + vb);
      const auto vsum = mhs::padic_order(p, a + b);
      CHECK(vsum >= PAdicOrder::min(va, vb));
      if (va != vb) CHECK(vsum == PAdicOrder::min(va, vb));
    }
  }
}

}  // TEST_SUITE
