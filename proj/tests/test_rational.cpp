#include "lnat/rational.hpp"

#include "doctest.h"

using namespace lnat;

TEST_CASE("rational parsing covers integer, fraction and decimal forms") {
  CHECK(parse_rational("3") == rat(3));
  CHECK(parse_rational("-2") == rat(-2));
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-6/8") == rat(-3, 4));
  CHECK(parse_rational("1.25") == rat(5, 4));
  CHECK(parse_rational("-0.5") == rat(-1, 2));
  CHECK(parse_rational(".5") == rat(1, 2));
  CHECK(parse_rational(" 2.0 ") == rat(2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational formatting round-trips") {
  CHECK(format_rational(rat(7)) == "7");
  CHECK(format_rational(rat(-3, 2)) == "-3/2");
  CHECK(parse_rational(format_rational(rat(355, 113))) == rat(355, 113));
}

TEST_CASE("doubles convert exactly") {
  CHECK(rat_from_double(0.5) == rat(1, 2));
  CHECK(rat_from_double(-2.0) == rat(-2));
  CHECK(rat_from_double(0.1) != rat(1, 10));  // 0.1 is not dyadic
  CHECK(rat_to_double(rat_from_double(0.1)) == 0.1);
}

TEST_CASE("floor and ceil on rationals") {
  CHECK(floor_to_int(rat(3, 2)) == 1);
  CHECK(floor_to_int(rat(-3, 2)) == -2);
  CHECK(ceil_to_int(rat(3, 2)) == 2);
  CHECK(ceil_to_int(rat(-3, 2)) == -1);
  CHECK(floor_to_int(rat(4)) == 4);
  CHECK(is_integral(rat(4)));
  CHECK_FALSE(is_integral(rat(1, 3)));
}
