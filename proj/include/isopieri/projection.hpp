#pragma once

// Complete-intersection data for the projected Richardson variety Z_{P,T} in
// P^{N-1}, and the shrinking construction that preserves it.

#include <set>
#include <utility>
#include <vector>

#include "isopieri/diagram.hpp"
#include "isopieri/grassmannian.hpp"

namespace isopieri {

/// Z_{P,T} is cut out by x_c for c in `linear` and by f_d - f_c for each
/// (c,d) in `quad_gaps`, where f_c = x_1 x_N + ... + x_c x_{N+1-c}.
struct ZData {
  GrassmannianSpec spec;
  SchubertSymbol P;
  SchubertSymbol T;
  std::vector<int> linear;
  std::vector<std::pair<int, int>> quad_gaps;
  int l = 0;
  int q = 0;

  // Variables touched by the generator f_d - f_c.
  std::vector<int> gap_support(std::pair<int, int> gap) const;
};

// Generator data only; equality ignores the symbols.
bool same_generators(const ZData &a, const ZData &b);

ZData z_data(const GrassmannianSpec &spec, const SchubertSymbol &P,
             const SchubertSymbol &T);

struct SSets {
  std::set<int> S;       // columns of [1,n+1] meeting some row
  std::set<int> S_prime; // p in P, p >= n+2, N+1-p in S
};

SSets s_sets(const GrassmannianSpec &spec, const SchubertSymbol &P,
             const SchubertSymbol &T);

// t(Z_{P,T}) when Z is a linear subvariety of codimension n in the quadric.
int z_type(const GrassmannianSpec &spec, const SchubertSymbol &P,
           const SchubertSymbol &T);

// The symbol P̃ with T ⪯ P̃ ⪯ P, Z_{P̃,T} = Z_{P,T} and P̃ → T.
SchubertSymbol shrink(const GrassmannianSpec &spec, const SchubertSymbol &P,
                      const SchubertSymbol &T);

// Fix P and raise T: shrink on the rotated pair (bar T, bar P), rotated back.
SchubertSymbol raise(const GrassmannianSpec &spec, const SchubertSymbol &P,
                     const SchubertSymbol &T);

} // namespace isopieri
