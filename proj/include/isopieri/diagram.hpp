#pragma once

// Richardson diagrams D(P,T) = {(j,c) : t_j <= c <= p_j} and their cut
// structure. A cut position c in [0,N] sits between columns c and c+1.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isopieri/grassmannian.hpp"

namespace isopieri {

struct LoneStar {
  int row;    // 1-based
  int column; // 1-based
  friend bool operator==(const LoneStar &, const LoneStar &) = default;
  friend auto operator<=>(const LoneStar &, const LoneStar &) = default;
};

struct DiagramReport {
  GrassmannianSpec spec;
  SchubertSymbol P;
  SchubertSymbol T;
  std::vector<std::pair<int, int>> rows; // [t_i, p_i]
  std::set<int> visible_cuts;
  std::set<int> apparent_cuts;
  std::set<int> exceptional_cuts; // type D only
  std::set<int> cuts;             // union of the three flavors
  std::set<int> zero_columns;
  std::set<LoneStar> lone_stars;
  std::set<int> linear; // L_{P,T}
  std::set<int> quad;   // Q_{P,T}

  bool is_cut(int c) const { return cuts.contains(c); }
  bool is_visible(int c) const { return visible_cuts.contains(c); }
  std::set<int> lone_star_columns() const;
};

// Requires T ≤ P componentwise; T ⪯ P is not needed.
DiagramReport analyze(const GrassmannianSpec &spec, const SchubertSymbol &P,
                      const SchubertSymbol &T);

// The relation P → T.
bool arrow(const GrassmannianSpec &spec, const SchubertSymbol &P,
           const SchubertSymbol &T);

// Type D, T ≤ P, t(P) ≠ t(T): some [c+1, N-c] has c, N-c visible and
// [c+1, n+1] ⊆ [T] ∩ [P].
bool has_critical_window(const GrassmannianSpec &spec, const SchubertSymbol &P,
                         const SchubertSymbol &T);

// Type D, T ≤ P, T ≠ P: lone stars in two mirrored columns d and N+1-d.
bool conflicting_lone_stars(const GrassmannianSpec &spec, const SchubertSymbol &P,
                            const SchubertSymbol &T);

// One line per row: '*' inside [t_i,p_i], '@' for a lone star, '0' elsewhere,
// '|' between columns c and c+1 when c is a cut.
std::string render_ascii(const DiagramReport &report);

} // namespace isopieri
