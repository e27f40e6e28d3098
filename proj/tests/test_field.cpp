#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gentle/field.hpp"

using namespace gentle;

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(7);
  CHECK(F.add(F.from_int(5), F.from_int(4)) == F.from_int(2));
  CHECK(F.mul(F.from_int(3), F.from_int(5)) == F.from_int(1));
  CHECK(F.inv(F.from_int(3)) == F.from_int(5));
  CHECK(F.is_zero(F.sub(F.from_int(7), F.zero())));
  CHECK(F.neg(F.one()) == F.from_int(6));
  CHECK(F.parse("10") == F.from_int(3));
  CHECK_THROWS(Field::prime(10));
}

TEST_CASE("rational field arithmetic") {
  Field Q = Field::rationals();
  FieldElem half = Q.from_fraction(1, 2);
  FieldElem third = Q.from_fraction(1, 3);
  CHECK(Q.add(half, third) == Q.from_fraction(5, 6));
  CHECK(Q.mul(half, Q.from_int(2)) == Q.one());
  CHECK(Q.inv(Q.from_fraction(-2, 3)) == Q.from_fraction(-3, 2));
  CHECK(Q.parse("3/6") == half);
  CHECK(Q.to_string(Q.from_fraction(2, 4)) == "1/2");
}

TEST_CASE("rank, kernel and solve") {
  Field F = Field::prime();
  Mat m(F, 2, 3);
  // [1 2 3; 2 4 6] has rank 1
  for (int j = 0; j < 3; ++j) {
    m.at(0, j) = F.from_int(j + 1);
    m.at(1, j) = F.from_int(2 * (j + 1));
  }
  CHECK(rank(F, m) == 1);
  auto ker = kernel_basis(F, m);
  CHECK(ker.size() == 2);
  for (auto& v : ker)
    for (int i = 0; i < 2; ++i) {
      FieldElem s = F.zero();
      for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(m.at(i, j), v[j]));
      CHECK(F.is_zero(s));
    }
  std::vector<FieldElem> b{F.from_int(3), F.from_int(6)}, x;
  REQUIRE(solve(F, m, b, x));
  FieldElem s = F.zero();
  for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(m.at(0, j), x[j]));
  CHECK(s == F.from_int(3));
  std::vector<FieldElem> bad{F.one(), F.zero()};
  CHECK_FALSE(solve(F, m, bad, x));
  CHECK(in_column_span(F, m, b));
  CHECK_FALSE(in_column_span(F, m, bad));
}
