#include <doctest.h>

#include <limits>

#include "helpers.hpp"
#include "isopieri/ktheory.hpp"

using namespace isopieri;
using namespace testing;

TEST_CASE("HClass arithmetic") {
  const HClass q = HClass::quadric(4);
  CHECK(q * q == HClass(4, {0, 0, 4, -4}));
  CHECK((q * q).to_string() == "4h^2 - 4h^3");
  CHECK(q * HClass::one(4) == q);
  CHECK((HClass::monomial(4, 3) * HClass::monomial(4, 1)).is_zero());
  CHECK(HClass::monomial(4, 7).is_zero());
  CHECK(hclass_add(q, q) == hclass_scale(q, 2));
  CHECK(hclass_mul(q, q) == q.pow(2));
  CHECK((q - q).is_zero());
  CHECK(HClass(3).to_string() == "0");
  CHECK(HClass(5, {1, -1, 0, 0, 2}).to_string() == "1 - h + 2h^4");
}

TEST_CASE("HClass errors") {
  try {
    (void)(HClass::one(3) * HClass::one(4));
    FAIL("expected modulus-mismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::ModulusMismatch);
  }
  const auto big = std::numeric_limits<std::int64_t>::max();
  try {
    (void)(HClass(2, {big}) + HClass(2, {1}));
    FAIL("expected overflow");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
  CHECK_THROWS_AS(HClass(2, {big}).scaled(2), Error);
}

TEST_CASE("chi") {
  for (int j = 0; j < 6; ++j)
    CHECK(chi(HClass::monomial(6, j)) == 1);
  CHECK(chi(HClass::quadric(6)) == 1);
  CHECK(chi(HClass(6)) == 0);
}

TEST_CASE("z_class") {
  const auto s = C(4, 5);
  ZData z{s, SchubertSymbol(s, {2, 3, 4, 10}), SchubertSymbol(s, {1, 2, 4, 6}), {5, 7}, {{0, 3}}, 2, 1};
  CHECK(z_class(s, z) == HClass(10, {0, 0, 0, 2, -1}));
  ZData empty{s, z.P, z.P, {}, {}, 0, 0};
  CHECK(z_class(s, empty) == HClass::one(10));
}

TEST_CASE("special classes") {
  CHECK_NOTHROW(validate_special(C(2, 2), {2, false}));
  CHECK_THROWS_AS(validate_special(C(2, 2), {3, false}), Error);
  CHECK_THROWS_AS(validate_special(C(2, 2), {0, false}), Error);
  CHECK_THROWS_AS(validate_special(B(2, 3), {1, true}), Error);
  CHECK_NOTHROW(validate_special(D(2, 3), {2, true}));
  CHECK_THROWS_AS(validate_special(D(2, 3), {1, true}), Error);
  CHECK_NOTHROW(validate_special(D(2, 3), {5, false}));
  CHECK_THROWS_AS(validate_special(D(2, 3), {6, false}), Error);
  CHECK(special_classes(D(2, 3)).size() == 6);
  CHECK(special_classes(D(2, 3)).back() == SpecialClass{2, true});
  CHECK(special_type(D(2, 3), {2, true}) == 1);
  CHECK(special_type(D(2, 3), {2, false}) == 0);
  try {
    special_type(D(2, 3), {1, false});
    FAIL("expected precondition-violated");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("triple intersection numbers") {
  SUBCASE("OG(2,8) type-D example") {
    const auto s = D(2, 3);
    const SchubertSymbol P(s, {1, 4}), T(s, {1, 2});
    CHECK(triple_intersection(s, P, T, {2, false}) == 0);
    CHECK(triple_intersection(s, P, T, {2, true}) == 1);
    CHECK(triple_intersection_unified(s, P, T, {2, false}) == 0);
    CHECK(triple_intersection_unified(s, P, T, {2, true}) == 1);
  }
  SUBCASE("SG(2,4)") {
    const auto s = C(2, 2);
    const SchubertSymbol top(s, {3, 4}), bottom(s, {1, 2});
    CHECK(triple_intersection(s, top, bottom, {1, false}) == 1);
    CHECK(triple_intersection(s, top, bottom, {2, false}) == 1);
    CHECK(triple_intersection(s, top, top, {1, false}) == 0);
    CHECK(triple_intersection(s, top, top, {2, false}) == 0);
  }
  SUBCASE("SG(4,10) example") {
    const auto s = C(4, 5);
    const SchubertSymbol P(s, {2, 3, 4, 10}), T(s, {1, 2, 4, 6});
    CHECK(triple_intersection(s, P, T, {1, false}) == 1);
    CHECK(triple_intersection_unified(s, P, T, {1, false}) == 1);
  }
  SUBCASE("printed unified formula differs in the reduced regime") {
    const auto s = B(1, 2);
    const SchubertSymbol P(s, {4}), T(s, {2});
    CHECK(triple_intersection(s, P, T, {1, false}) == 2);
    CHECK(triple_intersection_unified(s, P, T, {1, false}) == 2);
    CHECK(triple_intersection_printed(s, P, T, {1, false}) == 1);
  }
  SUBCASE("requires T ⪯ P") {
    const auto s = D(2, 2);
    CHECK_THROWS_AS(triple_intersection(s, SchubertSymbol(s, {1, 4}), SchubertSymbol(s, {1, 3}),
                                        {1, false}),
                    Error);
  }
}

TEST_CASE("truncated_binomial_sum") {
  CHECK(truncated_binomial_sum(3, -1) == 0);
  CHECK(truncated_binomial_sum(0, 0) == 1);
  CHECK(truncated_binomial_sum(2, 10) == 1);
  CHECK(truncated_binomial_sum(2, 0) == 4);
  CHECK(truncated_binomial_sum(2, 1) == 0);
  CHECK(checked::binomial(10, 3) == 120);
  CHECK(checked::binomial(3, 5) == 0);
}
