#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "isopieri/bruhat.hpp"

using namespace isopieri;
using namespace testing;

TEST_CASE("leq") {
  const auto s = C(4, 5);
  CHECK(leq(SchubertSymbol(s, {1, 2, 4, 6}), SchubertSymbol(s, {2, 3, 4, 10})));
  const auto d = D(2, 2);
  CHECK(leq(SchubertSymbol(d, {1, 3}), SchubertSymbol(d, {1, 4})));
  CHECK_FALSE(leq(SchubertSymbol(d, {2, 3}), SchubertSymbol(d, {1, 5})));
  CHECK_THROWS_AS(leq(SchubertSymbol(D(1, 2), {1}), SchubertSymbol(d, {1, 2})), Error);
}

TEST_CASE("preceq in type D") {
  const auto d = D(2, 2);
  CHECK(preceq(d, SchubertSymbol(d, {1, 4}), SchubertSymbol(d, {2, 4})));
  CHECK_FALSE(preceq(d, SchubertSymbol(d, {1, 3}), SchubertSymbol(d, {1, 4})));
  const auto d4 = D(4, 4);
  CHECK_FALSE(preceq(d4, SchubertSymbol(d4, {1, 3, 4, 6}), SchubertSymbol(d4, {2, 5, 7, 8})));
}

TEST_CASE("preceq equals leq in types B and C") {
  for (const auto &spec : {C(2, 3), B(2, 3)}) {
    const auto sym = enumerate_symbols(spec);
    for (const auto &P : sym)
      for (const auto &T : sym)
        CHECK(preceq(spec, T, P) == leq(T, P));
  }
}

TEST_CASE("OG(2,6) Hasse diagram") {
  const auto d = D(2, 2);
  const auto poset = build_poset(d);
  CHECK(poset.size() == 12);
  CHECK(poset.covers().size() == 19);
  CHECK(leq_covers(poset.symbols()).size() == 16);
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> drawn{
      {{1, 2}, {1, 4}}, {{1, 4}, {2, 4}}, {{2, 4}, {3, 5}}, {{3, 5}, {3, 6}}, {{3, 6}, {5, 6}},
      {{1, 4}, {1, 5}}, {{1, 5}, {2, 6}}, {{2, 6}, {3, 6}}, {{1, 3}, {1, 5}}, {{2, 6}, {4, 6}},
      {{2, 4}, {2, 6}}, {{1, 5}, {3, 5}}, {{1, 5}, {4, 5}}, {{2, 3}, {2, 6}}, {{1, 2}, {1, 3}},
      {{1, 3}, {2, 3}}, {{2, 3}, {4, 5}}, {{4, 5}, {4, 6}}, {{4, 6}, {5, 6}}};
  std::set<CoverEdge> want;
  for (const auto &[lo, hi] : drawn)
    want.insert({poset.index_of(SchubertSymbol(d, lo)), poset.index_of(SchubertSymbol(d, hi))});
  CHECK(std::set<CoverEdge>(poset.covers().begin(), poset.covers().end()) == want);
  // ≤-covers with no ⪯ relation at all
  int absent = 0;
  for (const auto &e : leq_covers(poset.symbols()))
    absent += !poset.related(e.lower, e.upper);
  CHECK(absent == 4);
  const std::vector<SchubertSymbol> chain{
      SchubertSymbol(d, {1, 2}), SchubertSymbol(d, {1, 4}), SchubertSymbol(d, {2, 4}),
      SchubertSymbol(d, {3, 5}), SchubertSymbol(d, {3, 6}), SchubertSymbol(d, {5, 6})};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(poset.related(poset.index_of(chain[i]), poset.index_of(chain[i + 1])));
  CHECK(poset.is_graded());
}

TEST_CASE("SG(2,4) is a chain") {
  const auto s = C(2, 2);
  const auto poset = build_poset(s);
  CHECK(poset.covers().size() == 3);
  CHECK(codim(poset, SchubertSymbol(s, {1, 2})) == 3);
  CHECK(codim(poset, SchubertSymbol(s, {1, 3})) == 2);
  CHECK(codim(poset, SchubertSymbol(s, {3, 4})) == 0);
  CHECK(poset.rank(poset.maximum()) == 0);
}

TEST_CASE("codim in OG(2,6)") {
  const auto d = D(2, 2);
  const auto poset = build_poset(d);
  CHECK(codim(poset, SchubertSymbol(d, {5, 6})) == 0);
  CHECK(codim(poset, SchubertSymbol(d, {1, 2})) == 5);
  CHECK(poset.symbols()[poset.minimum()] == minimum_symbol(d));
}

TEST_CASE("mobius") {
  const auto d = D(2, 2);
  const auto poset = build_poset(d);
  for (std::size_t i = 0; i < poset.size(); ++i)
    CHECK(poset.mobius(i, i) == 1);
  for (const auto &e : poset.covers())
    CHECK(poset.mobius(e.lower, e.upper) == -1);
  CHECK(mobius(poset, SchubertSymbol(d, {1, 2}), SchubertSymbol(d, {1, 5})) == 1);
  CHECK(mobius(poset, SchubertSymbol(d, {1, 3}), SchubertSymbol(d, {1, 4})) == 0);
}

TEST_CASE("errors") {
  try {
    build_poset(D(4, 4), 10);
    FAIL("expected size-limit-exceeded");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::SizeLimitExceeded);
  }
  const auto poset = build_poset(D(2, 2));
  try {
    codim(poset, SchubertSymbol(B(2, 3), {6, 7}));
    FAIL("expected unknown-symbol");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::UnknownSymbol);
  }
}

TEST_CASE("from_covers reproduces the built poset") {
  const auto built = build_poset(D(2, 3));
  const auto again = BruhatPoset::from_covers(built.spec(), built.symbols(), built.covers());
  CHECK(again.ranks() == built.ranks());
  for (std::size_t i = 0; i < built.size(); ++i)
    for (std::size_t j = 0; j < built.size(); ++j) {
      CHECK(again.related(i, j) == built.related(i, j));
      CHECK(again.mobius(i, j) == built.mobius(i, j));
    }
}

TEST_CASE("hasse_to_dot") {
  const auto poset = build_poset(D(2, 2));
  const std::string dot = hasse_to_dot(poset);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("[1,2]\\ncodim 5") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; pos += 2)
    ++edges;
  CHECK(edges == poset.covers().size());
}
