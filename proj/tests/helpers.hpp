#pragma once

#include <set>
#include <vector>

#include "isopieri/grassmannian.hpp"

namespace testing {

inline isopieri::GrassmannianSpec C(int m, int n) { return isopieri::make_spec(isopieri::LieType::C, m, n); }
inline isopieri::GrassmannianSpec B(int m, int n) { return isopieri::make_spec(isopieri::LieType::B, m, n); }
inline isopieri::GrassmannianSpec D(int m, int n) { return isopieri::make_spec(isopieri::LieType::D, m, n); }

inline std::vector<int> elems(const isopieri::SchubertSymbol &P) {
  return {P.elements().begin(), P.elements().end()};
}

inline std::set<int> S(std::initializer_list<int> xs) { return std::set<int>(xs); }

} // namespace testing
