#include <doctest/doctest.h>

#include "conedet/rational.hpp"

using namespace conedet;
using namespace conedet::exact;

TEST_CASE("make_rational normalizes through division") {
  CHECK(make_rational(1, 2) + make_rational(1, 3) == make_rational(5, 6));
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  // A negative denominator must move its sign to the numerator.
  CHECK(make_rational(1, -2) == make_rational(-1, 2));
  CHECK(make_rational(-3, -6) == make_rational(1, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), InvalidArgument);
}

TEST_CASE("parse_rational accepts p and p/q with the sign on the numerator") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("1/2") == make_rational(1, 2));
  CHECK(parse_rational("-1/2") == make_rational(-1, 2));
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
}

TEST_CASE("parse_rational rejects malformed literals") {
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
  CHECK_THROWS_AS(parse_rational("abc"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1.5"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/-2"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/"), SchemaError);
  CHECK_THROWS_AS(parse_rational("/2"), SchemaError);
  CHECK_THROWS_AS(parse_rational("-"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), SchemaError);
  CHECK_THROWS_AS(parse_rational(" 1"), SchemaError);
}

TEST_CASE("rational_to_string is the inverse of parse_rational") {
  const char* literals[] = {"0", "5", "-5", "1/2", "-7/3", "22/7"};
  for (const char* s : literals) {
    CHECK(rational_to_string(parse_rational(s)) == s);
  }
  // Canonical form comes out reduced even when the input was not.
  CHECK(rational_to_string(parse_rational("4/6")) == "2/3");
  CHECK(rational_to_string(make_rational(9, -3)) == "-3");
}

TEST_CASE("vector round trip") {
  const std::vector<std::string> parts = {"1", "-1/2", "0"};
  const Vec v = parse_rational_vector(parts);
  REQUIRE(v.size() == 3);
  CHECK(v[1] == make_rational(-1, 2));
  CHECK(rational_vector_to_strings(v) == parts);
}

TEST_CASE("arithmetic stays exact at desk scale") {
  // 1/1 + 1/2 + ... + 1/12 = 86021/27720; a float backend could not pin this.
  Rational sum = 0;
  for (long q = 1; q <= 12; ++q) sum += make_rational(1, q);
  CHECK(sum == make_rational(86021, 27720));
}
