#include <doctest.h>

#include "coal/rational.hpp"

using coal::Integer;
using coal::Rational;

TEST_CASE("rational string form is p or p/q") {
  CHECK(coal::to_string(Rational(5)) == "5");
  CHECK(coal::to_string(Rational(-3)) == "-3");
  CHECK(coal::to_string(Rational(0)) == "0");
  CHECK(coal::to_string(Rational(3, 2)) == "3/2");
  CHECK(coal::to_string(Rational(-7, 4)) == "-7/4");
  CHECK(coal::to_string(Rational(4, 2)) == "2");  // stored reduced
  CHECK(coal::to_string(Rational(-2, 4)) == "-1/2");
}

TEST_CASE("rational parsing round-trips and rejects junk") {
  for (const char* s : {"0", "17", "-4", "3/2", "-9/7", "123456789/1000"}) {
    Rational r = coal::rational_from_string(s);
    CHECK(coal::to_string(r) == s);
  }
  CHECK(coal::rational_from_string("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(coal::rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(coal::rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(coal::rational_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(coal::rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(coal::rational_from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(coal::rational_from_string("/3"), std::invalid_argument);
  CHECK_THROWS_AS(coal::rational_from_string("-"), std::invalid_argument);
}

TEST_CASE("integer square roots bracket exactly") {
  for (long long v = 0; v <= 2000; ++v) {
    Integer f = coal::isqrt_floor(v);
    Integer c = coal::isqrt_ceil(v);
    CHECK(f * f <= v);
    CHECK((f + 1) * (f + 1) > v);
    CHECK(c * c >= v);
    if (c > 0) CHECK((c - 1) * (c - 1) < v);
  }
  Integer big = Integer("123456789012345678901234567890");
  Integer f = coal::isqrt_floor(big);
  CHECK(f * f <= big);
  CHECK((f + 1) * (f + 1) > big);
  CHECK_THROWS_AS(coal::isqrt_floor(Integer(-1)), std::invalid_argument);
}
