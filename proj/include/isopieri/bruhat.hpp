#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isopieri/grassmannian.hpp"

namespace isopieri {

// Componentwise order: t_i <= p_i for all i.
bool leq(const SchubertSymbol &T, const SchubertSymbol &P);

// Bruhat order T ⪯ P (X_T ⊂ X_P), answered directly from the symbols.
bool preceq(const GrassmannianSpec &spec, const SchubertSymbol &T,
            const SchubertSymbol &P);

inline constexpr std::size_t kDefaultSymbolCap = 100000;

struct CoverEdge {
  std::size_t lower;
  std::size_t upper;
  friend bool operator==(const CoverEdge &, const CoverEdge &) = default;
  friend auto operator<=>(const CoverEdge &, const CoverEdge &) = default;
};

/// The Bruhat poset of a spec, materialized over the canonical symbol order.
/// Immutable once constructed; all queries are const and thread-safe.
class BruhatPoset {
public:
  const GrassmannianSpec &spec() const { return spec_; }
  const std::vector<SchubertSymbol> &symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  std::size_t index_of(const SchubertSymbol &P) const;
  std::optional<std::size_t> find(const SchubertSymbol &P) const;

  // symbols[lower] ⪯ symbols[upper]
  bool related(std::size_t lower, std::size_t upper) const {
    return relation_[lower * size() + upper];
  }
  const std::vector<CoverEdge> &covers() const { return covers_; }
  const std::vector<int> &ranks() const { return rank_; }
  int rank(std::size_t i) const { return rank_[i]; }

  std::size_t maximum() const { return max_; }
  std::size_t minimum() const { return min_; }

  // μ(symbols[lower], symbols[upper]).
  std::int64_t mobius(std::size_t lower, std::size_t upper) const {
    return mobius_[lower * size() + upper];
  }

  // Graph-theoretic: every maximal chain in every interval has the same length.
  bool is_graded() const;

  // Used by the cache loader: relation is the reflexive-transitive closure of
  // the given covers, ranks are taken as given and checked for consistency.
  static BruhatPoset from_covers(const GrassmannianSpec &spec,
                                 std::vector<SchubertSymbol> symbols,
                                 std::vector<CoverEdge> covers);

private:
  friend BruhatPoset build_poset(const GrassmannianSpec &, std::size_t);

  BruhatPoset(const GrassmannianSpec &spec, std::vector<SchubertSymbol> symbols)
      : spec_(spec), symbols_(std::move(symbols)) {}

  void finish_from_relation();
  void compute_ranks();
  void compute_mobius();

  GrassmannianSpec spec_;
  std::vector<SchubertSymbol> symbols_;
  std::map<SchubertSymbol, std::size_t> index_;
  std::vector<bool> relation_; // row-major, [lower][upper]
  std::vector<CoverEdge> covers_;
  std::vector<int> rank_;
  std::vector<std::int64_t> mobius_;
  std::size_t max_ = 0;
  std::size_t min_ = 0;
};

BruhatPoset build_poset(const GrassmannianSpec &spec,
                        std::size_t symbol_cap = kDefaultSymbolCap);

// Codimension |P| of X_P, the graded rank measured down from the maximum.
int codim(const BruhatPoset &poset, const SchubertSymbol &P);

std::int64_t mobius(const BruhatPoset &poset, const SchubertSymbol &Q,
                    const SchubertSymbol &P);

// Transitive reduction of the componentwise order ≤ on the same ground set.
std::vector<CoverEdge> leq_covers(const std::vector<SchubertSymbol> &symbols);

// Hasse diagram in Graphviz DOT, nodes grouped by rank.
std::string hasse_to_dot(const BruhatPoset &poset);

} // namespace isopieri
