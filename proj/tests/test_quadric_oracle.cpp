#include <doctest.h>

#include "isopieri/quadric_oracle.hpp"

using namespace isopieri;

TEST_CASE("pushforwards") {
  CHECK(pushforward(QuadricClass::basis(LieType::B, 2, {0, false})) == HClass::quadric(5));
  CHECK(pushforward(QuadricClass::basis(LieType::B, 2, {2, false})) == HClass::monomial(5, 3));
  for (int n = 1; n <= 4; ++n) {
    const int N = 2 * n + 2;
    CHECK(pushforward(QuadricClass::basis(LieType::D, n, {n, false})) ==
          HClass::monomial(N, n + 1));
    CHECK(pushforward(QuadricClass::basis(LieType::D, n, {n, true})) ==
          HClass::monomial(N, n + 1));
  }
}

TEST_CASE("middle products in type D") {
  for (int n = 1; n <= 5; ++n) {
    const QuadricIndex Qn{n, false}, Qt{n, true}, point{2 * n, false};
    const auto sq = product(LieType::D, n, Qn, Qn);
    const auto mixed = product(LieType::D, n, Qn, Qt);
    const auto tt = product(LieType::D, n, Qt, Qt);
    REQUIRE(sq.cls);
    REQUIRE(mixed.cls);
    REQUIRE(tt.cls);
    if (n % 2 == 0) {
      CHECK(*sq.cls == QuadricClass::basis(LieType::D, n, point));
      CHECK(*tt.cls == QuadricClass::basis(LieType::D, n, point));
      CHECK(*mixed.cls == QuadricClass(LieType::D, n));
    } else {
      CHECK(*sq.cls == QuadricClass(LieType::D, n));
      CHECK(*mixed.cls == QuadricClass::basis(LieType::D, n, point));
    }
  }
}

TEST_CASE("projection formula in type B") {
  // O_Q(0) is the unit.
  const auto unit = product(LieType::B, 2, {0, false}, {1, false});
  REQUIRE(unit.cls);
  CHECK(*unit.cls == QuadricClass::basis(LieType::B, 2, {1, false}));
  CHECK(unit.pushforward == HClass(5, {0, 0, 2, -1}));

  // A hyperplane section squared is a conic: 2 lines minus a point.
  const auto conic = product(LieType::B, 2, {1, false}, {1, false});
  CHECK(conic.pushforward == HClass(5, {0, 0, 0, 2, -1}));
  REQUIRE(conic.cls);
  QuadricClass want(LieType::B, 2);
  want.add({2, false}, 2);
  want.add({3, false}, -1);
  CHECK(*conic.cls == want);

  // Codimensions n and above multiply to zero on a (2n-1)-dimensional quadric.
  const auto high = product(LieType::B, 2, {2, false}, {2, false});
  CHECK(high.pushforward.is_zero());
}

TEST_CASE("expand") {
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= 2 * n - 1; ++j) {
      const auto b = QuadricClass::basis(LieType::B, n, {j, false});
      const auto back = expand(LieType::B, n, pushforward(b));
      REQUIRE(back);
      CHECK(*back == b);
    }
  CHECK_THROWS_AS(expand(LieType::B, 2, HClass::monomial(5, 1)), Error);
  CHECK_THROWS_AS(expand(LieType::B, 2, HClass::one(5)), Error);
  CHECK_FALSE(expand(LieType::D, 2, HClass::monomial(6, 3)).has_value());
  CHECK(expand(LieType::D, 2, HClass::monomial(6, 4)).has_value());
}

TEST_CASE("invalid indices") {
  CHECK_THROWS_AS(QuadricClass::basis(LieType::B, 2, {2, true}), Error);
  CHECK_THROWS_AS(QuadricClass::basis(LieType::D, 2, {1, true}), Error);
  CHECK_THROWS_AS(QuadricClass::basis(LieType::B, 2, {4, false}), Error);
  CHECK_THROWS_AS(QuadricClass(LieType::C, 2), Error);
}
