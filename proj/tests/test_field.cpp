#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorhom/field.hpp"

using namespace gorhom;

TEST_CASE("F5 arithmetic") {
  PrimeField f(5);
  CHECK_EQ(f.add(3, 4), 2);
  CHECK_EQ(f.sub(1, 3), 3);
  CHECK_EQ(f.mul(3, 4), 2);
  CHECK_EQ(f.neg(2), 3);
  CHECK_EQ(f.neg(0), 0);
  CHECK_EQ(f.inv(2), 3);
  CHECK_EQ(f.inv(4), 4);
  CHECK_EQ(f.div(1, 3), 2);
  CHECK_EQ(f.from_long(-7), 3);
  CHECK_EQ(f.from_long(12), 2);
  CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("F5 powers, including negative exponents") {
  PrimeField f(5);
  CHECK_EQ(f.pow(2, 0), 1);
  CHECK_EQ(f.pow(2, 3), 3);
  CHECK_EQ(f.pow(2, -1), 3);   // 2*3 = 6 = 1
  CHECK_EQ(f.pow(2, -2), 4);   // 3^2 = 9 = 4
  CHECK_EQ(f.pow(3, 100), f.pow(3, 100 % 4));
}

TEST_CASE("F5 literals") {
  PrimeField f(5);
  CHECK_EQ(f.from_string("7"), 2);
  CHECK_EQ(f.from_string("-1"), 4);
  CHECK_EQ(f.from_string("7/3"), 4);  // 2 * inv(3) = 2*2
  CHECK_EQ(f.from_string("-8/6"), 2); // -4/3: (-4 -> 1) * inv(3) = 2
  CHECK_THROWS_AS(f.from_string("1/5"), Error);
  CHECK_THROWS_AS(f.from_string("x"), Error);
  CHECK_EQ(f.str(4), "4");
}

TEST_CASE("multiplicative orders over F_p") {
  PrimeField f5(5);
  CHECK_EQ(order_of_unit(f5, 2), 4);  // 2,4,3,1
  CHECK_EQ(order_of_unit(f5, 4), 2);
  CHECK_EQ(order_of_unit(f5, 1), 1);
  PrimeField f7(7);
  CHECK_EQ(order_of_unit(f7, 2), 3);
  CHECK_EQ(order_of_unit(f7, 3), 6);
  CHECK_THROWS_AS(order_of_unit(f5, 0), Error);
}

TEST_CASE("multiplicative orders over Q") {
  RationalField q;
  CHECK_EQ(order_of_unit(q, q.from_long(1)), 1);
  CHECK_EQ(order_of_unit(q, q.from_long(-1)), 2);
  CHECK_EQ(order_of_unit(q, q.from_long(5)), 0);
  CHECK_EQ(order_of_unit(q, q.from_string("2/3")), 0);
  CHECK_THROWS_AS(order_of_unit(q, q.zero()), Error);
}

TEST_CASE("modulus must be prime") {
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(91), Error);   // 7 * 13
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(65521));
  CHECK_NOTHROW(PrimeField(2305843009213693951ull));  // 2^61 - 1
}

TEST_CASE("rational field is exact") {
  RationalField q;
  auto third = q.from_string("1/3");
  auto sixth = q.from_string("1/6");
  CHECK(q.eq(q.add(third, sixth), q.from_string("1/2")));
  CHECK_EQ(q.str(q.from_string("-8/6")), "-4/3");
  CHECK(q.eq(q.pow(q.from_string("2/3"), -2), q.from_string("9/4")));
  CHECK_THROWS_AS(q.from_string("1/0"), Error);
  CHECK_THROWS_AS(q.from_string("abc"), Error);
  CHECK_THROWS_AS(q.inv(q.zero()), Error);
}

TEST_CASE("field specs") {
  CHECK_EQ(FieldSpec::rationals().str(), "Q");
  CHECK_EQ(FieldSpec::prime(5).str(), "F5");
  CHECK(FieldSpec::prime(5) == PrimeField(5).spec());
  CHECK(FieldSpec::rationals() == RationalField{}.spec());
}
