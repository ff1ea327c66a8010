#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amen/rational.hpp"

using amen::Rat;

TEST_CASE("normalization and arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
  CHECK(Rat(-1, 3).abs() == Rat(1, 3));
}

TEST_CASE("ordering is exact") {
  CHECK(Rat(1, 3) < Rat(34, 100));
  CHECK(Rat(21, 20) <= Rat(21, 20));
  CHECK(Rat(11, 10) > Rat(21, 20));
  CHECK_FALSE(Rat(1, 3) < Rat(1, 3));
}

TEST_CASE("string round trip") {
  CHECK(Rat(21, 20).str() == "21/20");
  CHECK(Rat(5).str() == "5");
  CHECK(Rat::parse("21/20") == Rat(21, 20));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("-3/9") == Rat(-1, 3));
  CHECK_THROWS_AS(Rat::parse("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}
