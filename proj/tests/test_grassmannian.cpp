#include <doctest.h>

#include "helpers.hpp"

using namespace isopieri;
using namespace testing;

TEST_CASE("make_spec derives N and k") {
  const auto s = make_spec(LieType::C, 4, 5);
  CHECK(s.N == 10);
  CHECK(s.k == 1);
  const auto d = make_spec(LieType::D, 2, 2);
  CHECK(d.N == 6);
  CHECK(d.k == 1);
  const auto b = make_spec(LieType::B, 2, 3);
  CHECK(b.N == 7);
  CHECK(b.k == 1);
  CHECK(make_spec(LieType::D, 3, 2).k == 0);
}

TEST_CASE("make_spec rejects out-of-range parameters") {
  auto code = [](LieType t, int m, int n) {
    try {
      make_spec(t, m, n);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code(LieType::B, 3, 2) == ErrorCode::InvalidParameters);
  CHECK(code(LieType::C, 1, 0) == ErrorCode::InvalidParameters);
  CHECK(code(LieType::D, 0, 2) == ErrorCode::InvalidParameters);
  CHECK(code(LieType::D, 4, 2) == ErrorCode::InvalidParameters);
}

TEST_CASE("enumerate_symbols") {
  SUBCASE("OG(2,6)") {
    std::vector<std::vector<int>> got;
    for (const auto &P : enumerate_symbols(D(2, 2)))
      got.push_back(elems(P));
    const std::vector<std::vector<int>> want{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
                                             {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
    CHECK(got == want);
  }
  SUBCASE("SG(2,4)") {
    std::vector<std::vector<int>> got;
    for (const auto &P : enumerate_symbols(C(2, 2)))
      got.push_back(elems(P));
    CHECK(got == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  }
  SUBCASE("OG(1,7) skips the center") {
    std::vector<std::vector<int>> got;
    for (const auto &P : enumerate_symbols(B(1, 3)))
      got.push_back(elems(P));
    CHECK(got == std::vector<std::vector<int>>{{1}, {2}, {3}, {5}, {6}, {7}});
  }
}

TEST_CASE("symbol validation") {
  const auto s = C(2, 2);
  CHECK(is_valid_symbol(s, std::vector<int>{1, 3}));
  CHECK_FALSE(is_valid_symbol(s, std::vector<int>{1, 4}));  // 1 + 4 = N+1
  CHECK_FALSE(is_valid_symbol(s, std::vector<int>{2, 2}));  // not strict
  CHECK_FALSE(is_valid_symbol(s, std::vector<int>{0, 1}));  // out of range
  CHECK_FALSE(is_valid_symbol(s, std::vector<int>{1}));     // wrong length
  CHECK_FALSE(is_valid_symbol(B(1, 3), std::vector<int>{4})); // 4 + 4 = 8
  CHECK_THROWS_AS(SchubertSymbol(s, {3, 1}), Error);
  CHECK(parse_symbol(s, {3, 1}) == SchubertSymbol(s, {1, 3}));
}

TEST_CASE("sentinels and counting") {
  const auto s = C(4, 5);
  const SchubertSymbol P(s, {2, 3, 4, 10});
  CHECK(P.bounded(0, s.N) == 0);
  CHECK(P.bounded(1, s.N) == 2);
  CHECK(P.bounded(4, s.N) == 10);
  CHECK(P.bounded(5, s.N) == 11);
  CHECK(P.count_up_to(3) == 2);
  CHECK(P.to_string() == "[2,3,4,10]");
}

TEST_CASE("reflect") {
  CHECK(reflect(C(4, 5), SchubertSymbol(C(4, 5), {2, 3, 4, 10})) ==
        SchubertSymbol(C(4, 5), {1, 7, 8, 9}));
  CHECK(reflect(D(3, 4), SchubertSymbol(D(3, 4), {1, 4, 5})) ==
        SchubertSymbol(D(3, 4), {6, 7, 10}));
  for (const auto &P : enumerate_symbols(B(2, 3)))
    CHECK(reflect(B(2, 3), reflect(B(2, 3), P)) == P);
}

TEST_CASE("iota") {
  CHECK(iota(D(3, 4), SchubertSymbol(D(3, 4), {6, 7, 10})) ==
        SchubertSymbol(D(3, 4), {5, 7, 10}));
  CHECK(iota(D(2, 2), SchubertSymbol(D(2, 2), {1, 2})) == SchubertSymbol(D(2, 2), {1, 2}));
  for (const auto &P : enumerate_symbols(D(2, 3)))
    CHECK(iota(D(2, 3), iota(D(2, 3), P)) == P);
  CHECK_THROWS_AS(iota(C(2, 2), SchubertSymbol(C(2, 2), {1, 2})), Error);
}

TEST_CASE("dual") {
  CHECK(dual(D(1, 2), SchubertSymbol(D(1, 2), {4})) == SchubertSymbol(D(1, 2), {4}));
  CHECK(dual(D(3, 4), SchubertSymbol(D(3, 4), {1, 4, 5})) ==
        SchubertSymbol(D(3, 4), {5, 7, 10}));
  CHECK(dual(C(2, 2), SchubertSymbol(C(2, 2), {1, 3})) == SchubertSymbol(C(2, 2), {2, 4}));
  for (const auto &spec : {D(2, 2), D(2, 3), B(2, 3), C(3, 4)})
    for (const auto &P : enumerate_symbols(spec))
      CHECK(dual(spec, dual(spec, P)) == P);
}

TEST_CASE("type_of") {
  CHECK(type_of(D(2, 2), SchubertSymbol(D(2, 2), {1, 2})) == 2);
  CHECK(type_of(D(2, 3), SchubertSymbol(D(2, 3), {1, 4})) == 0);
  CHECK(type_of(D(2, 2), SchubertSymbol(D(2, 2), {1, 3})) == 1);
  try {
    type_of(B(2, 3), SchubertSymbol(B(2, 3), {1, 2}));
    FAIL("expected wrong-lie-type");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::WrongLieType);
  }
}

TEST_CASE("describe") {
  CHECK(describe(D(2, 2)) == "OG(2,6) [type D, n=2, k=1]");
  CHECK(describe(C(4, 5)) == "SG(4,10) [type C, n=5, k=1]");
}
