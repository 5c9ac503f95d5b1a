#include <doctest.h>

#include "helpers.hpp"
#include "isopieri/bruhat.hpp"
#include "isopieri/projection.hpp"

using namespace isopieri;
using namespace testing;

using Gaps = std::vector<std::pair<int, int>>;

TEST_CASE("z_data") {
  SUBCASE("SG(4,10) example") {
    const auto s = C(4, 5);
    const ZData z = z_data(s, SchubertSymbol(s, {2, 3, 4, 10}), SchubertSymbol(s, {1, 2, 4, 6}));
    CHECK(z.linear == std::vector<int>{5, 7});
    CHECK(z.quad_gaps == Gaps{{0, 3}});
    CHECK(z.l == 2);
    CHECK(z.q == 1);
    CHECK(z.gap_support({0, 3}) == std::vector<int>{1, 2, 3, 8, 9, 10});
  }
  SUBCASE("OG(2,6) quadric hypersurface") {
    const auto s = D(2, 2);
    const ZData z = z_data(s, SchubertSymbol(s, {5, 6}), SchubertSymbol(s, {1, 3}));
    CHECK(z.l == 0);
    CHECK(z.q == 1);
    CHECK(z.quad_gaps == Gaps{{0, 3}});
  }
  SUBCASE("OG(2,8) linear") {
    const auto s = D(2, 3);
    const ZData z = z_data(s, SchubertSymbol(s, {1, 4}), SchubertSymbol(s, {1, 2}));
    CHECK(z.linear == std::vector<int>{5, 6, 7, 8});
    CHECK(z.l == 4);
    CHECK(z.q == 0);
  }
  SUBCASE("requires T ⪯ P") {
    const auto s = D(2, 2);
    try {
      z_data(s, SchubertSymbol(s, {1, 4}), SchubertSymbol(s, {1, 3}));
      FAIL("expected not-preceq");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::NotPreceq);
    }
  }
}

TEST_CASE("s_sets") {
  const auto s3 = D(2, 3);
  const SSets a = s_sets(s3, SchubertSymbol(s3, {1, 4}), SchubertSymbol(s3, {1, 2}));
  CHECK(a.S == S({1, 2, 3, 4}));
  CHECK(a.S_prime.empty());

  const auto s2 = D(2, 2);
  const SSets b = s_sets(s2, SchubertSymbol(s2, {5, 6}), SchubertSymbol(s2, {1, 3}));
  CHECK(b.S == S({1, 2, 3}));
  CHECK(b.S_prime == S({5, 6}));

  for (const auto &P : enumerate_symbols(s3)) {
    const SSets c = s_sets(s3, P, P);
    std::set<int> low;
    for (int p : P.elements())
      if (p <= s3.n + 1)
        low.insert(p);
    CHECK(c.S == low);
    CHECK(c.S_prime.empty());
  }
  CHECK_THROWS_AS(s_sets(C(2, 2), SchubertSymbol(C(2, 2), {3, 4}), SchubertSymbol(C(2, 2), {1, 2})),
                  Error);
}

TEST_CASE("z_type") {
  const auto s3 = D(2, 3);
  CHECK(z_type(s3, SchubertSymbol(s3, {1, 4}), SchubertSymbol(s3, {1, 2})) == 0);
  const auto s2 = D(2, 2);
  CHECK(z_type(s2, SchubertSymbol(s2, {2, 4}), SchubertSymbol(s2, {1, 2})) == 1);
  try {
    z_type(s2, SchubertSymbol(s2, {5, 6}), SchubertSymbol(s2, {1, 3}));
    FAIL("expected precondition-violated");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("shrink") {
  SUBCASE("type D witness") {
    const auto s = D(2, 2);
    const SchubertSymbol P(s, {5, 6}), T(s, {1, 3});
    const SchubertSymbol shrunk = shrink(s, P, T);
    CHECK(shrunk == SchubertSymbol(s, {4, 6}));
    CHECK(same_generators(z_data(s, shrunk, T), z_data(s, P, T)));
    CHECK(arrow(s, shrunk, T));
    // The type B/C construction would give {3,6}, which loses both properties.
    const SchubertSymbol naive(s, {3, 6});
    CHECK_FALSE(same_generators(z_data(s, naive, T), z_data(s, P, T)));
    CHECK_FALSE(arrow(s, naive, T));
  }
  SUBCASE("raising T by rotation") {
    const auto s = C(4, 5);
    const SchubertSymbol P(s, {6, 7, 9, 10}), T(s, {3, 4, 5, 9});
    const SchubertSymbol raised = raise(s, P, T);
    CHECK(raised == SchubertSymbol(s, {3, 6, 7, 10}));
    CHECK(preceq(s, T, raised));
    CHECK(preceq(s, raised, P));
    CHECK(same_generators(z_data(s, P, raised), z_data(s, P, T)));
    CHECK(arrow(s, P, raised));
  }
  SUBCASE("interleaved rows are fixed") {
    const auto s = C(2, 3);
    const SchubertSymbol P(s, {1, 5}), T(s, {1, 2});
    CHECK(shrink(s, P, T) == P);
  }
  SUBCASE("requires T ⪯ P") {
    const auto s = D(2, 2);
    CHECK_THROWS_AS(shrink(s, SchubertSymbol(s, {1, 4}), SchubertSymbol(s, {1, 3})), Error);
  }
}
