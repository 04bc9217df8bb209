#include <doctest.h>

#include "helpers.hpp"

using namespace gmaderiv;
using testutil::GF;
using testutil::QQ;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  CHECK(Scalar::parse(QQ(), "2/4").str() == "1/2");
  CHECK(Scalar::parse(QQ(), "-2/4").str() == "-1/2");
  CHECK(Scalar::parse(QQ(), "3/-6").str() == "-1/2");
  CHECK(Scalar::parse(QQ(), "5/1").str() == "5");
  CHECK(Scalar::parse(QQ(), "5").str() == "5");
  CHECK(Scalar::parse(QQ(), "0/7").str() == "0");
}

TEST_CASE("rational arithmetic is exact") {
  const Scalar a = Scalar::parse(QQ(), "-7/12");
  const Scalar b = Scalar::parse(QQ(), "12/-7");
  CHECK((a * b).is_one());
  CHECK((a * a.inverse()).is_one());
  CHECK((a - a).is_zero());
  CHECK((a + a).str() == "-7/6");
  // No overflow during long products.
  Scalar big = Scalar::one(QQ());
  for (int i = 2; i < 30; ++i) big *= Scalar::of(QQ(), i);
  CHECK((big / big).is_one());
}

TEST_CASE("malformed scalars are rejected") {
  CHECK_THROWS_AS(Scalar::parse(QQ(), "1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(QQ(), "x"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(QQ(), ""), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(GF(5), "2/3x"), std::invalid_argument);
}

TEST_CASE("prime fields reject composite and accept prime moduli") {
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(0), std::invalid_argument);
  CHECK(Field::prime(2).characteristic() == 2);
  CHECK(Field::prime(97).characteristic() == 97);
  CHECK(QQ().characteristic() == 0);
}

TEST_CASE("prime field arithmetic uses canonical representatives") {
  const Field f = GF(7);
  CHECK(Scalar::parse(f, "10").str() == "3");
  CHECK(Scalar::parse(f, "-1").str() == "6");
  const Scalar three = Scalar::of(f, 3);
  CHECK((three * three.inverse()).is_one());
  CHECK(three.inverse().str() == "5");  // 3 * 5 = 15 = 1 mod 7
  CHECK((-Scalar::of(f, 2)).str() == "5");
  // Every nonzero element is invertible.
  for (int v = 1; v < 7; ++v) CHECK((Scalar::of(f, v) * Scalar::of(f, v).inverse()).is_one());
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), std::domain_error);
}

TEST_CASE("mixing ground fields is an error") {
  const Scalar a = Scalar::one(QQ());
  const Scalar b = Scalar::one(GF(3));
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK_THROWS_AS(a == b, FieldMismatchError);
}
