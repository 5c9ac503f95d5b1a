#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "isopieri/pieri.hpp"

using namespace isopieri;
using namespace testing;

TEST_CASE("projective space") {
  const auto s = C(1, 2);
  const auto poset = build_poset(s);
  const SchubertSymbol P(s, {2}), Q(s, {1});
  CHECK(pieri_coefficient(poset, P, Q, {1, false}) == 1);
  const PieriRow row = pieri_row(poset, P, {1, false});
  CHECK(row.coefficients.size() == 1);
  CHECK(row.at(Q) == 1);
  // Q ⋠ P
  CHECK(pieri_coefficient(poset, Q, P, {1, false}) == 0);
}

TEST_CASE("multiplying the fundamental class") {
  const auto s = D(2, 2);
  const auto poset = build_poset(s);
  const SchubertSymbol top(s, {5, 6});
  for (const auto &sp : special_classes(s)) {
    const PieriRow row = pieri_row(poset, top, sp);
    REQUIRE(row.coefficients.size() == 1);
    CHECK(row.coefficients.begin()->second == 1);
    CHECK(codim(poset, row.coefficients.begin()->first) == sp.r);
  }
}

TEST_CASE("matrix method") {
  for (const auto &spec : {C(2, 3), B(2, 3), D(2, 3)}) {
    const auto poset = build_poset(spec);
    for (const auto &sp : special_classes(spec)) {
      const PosetMatrices mats = build_matrices(poset, sp);
      CHECK(mats.M * mats.D == IntMatrix::identity(poset.size()));
      CHECK(mats.T * mats.D == mats.C);
      for (std::size_t i = 0; i < poset.size(); ++i) {
        const PieriRow row = pieri_row(poset, poset.symbols()[i], sp);
        for (std::size_t j = 0; j < poset.size(); ++j)
          CHECK(row.at(poset.symbols()[j]) == mats.C(i, j));
      }
    }
  }
}

TEST_CASE("exports") {
  const auto poset = build_poset(C(2, 2));
  const PosetMatrices mats = build_matrices(poset, {1, false});
  const std::string csv = matrices_to_csv(poset, mats);
  CHECK(csv.rfind("P,\"[1,2]\",\"[1,3]\",\"[2,4]\",\"[3,4]\"\n", 0) == 0);
  CHECK(csv.find("\"[3,4]\",0,0,1,0\n") != std::string::npos);

  const auto j = nlohmann::json::parse(matrices_to_json(poset, mats));
  CHECK(j["spec"]["type"] == "C");
  CHECK(j["special"]["r"] == 1);
  CHECK(j["symbols"].size() == 4);
  for (const char *key : {"M", "D", "T", "C"})
    CHECK(j[key].size() == 4);
  CHECK(j["C"][3][2] == 1);
}

TEST_CASE("IntMatrix overflow is detected") {
  IntMatrix a(1);
  a(0, 0) = std::int64_t{1} << 40;
  CHECK_THROWS_AS(a * a, Error);
}
