#include "isopieri/bruhat.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace isopieri {

bool leq(const SchubertSymbol &T, const SchubertSymbol &P) {
  if (T.size() != P.size())
    throw Error(ErrorCode::LengthMismatch,
                T.to_string() + " and " + P.to_string() + " differ in length");
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T[i] > P[i])
      return false;
  return true;
}

bool preceq(const GrassmannianSpec &spec, const SchubertSymbol &T,
            const SchubertSymbol &P) {
  if (!leq(T, P))
    return false;
  if (spec.lie_type != LieType::D)
    return true;
  const int tP = type_of(spec, P);
  const int tT = type_of(spec, T);
  if (tP == tT)
    return true;
  // Walk c down from n; [c+1,n+1] ⊆ [P]∩[T] stays true until it first fails.
  for (int c = spec.n; c >= 1; --c) {
    if (!in_closure(spec, P, c + 1) || !in_closure(spec, T, c + 1))
      break;
    if (P.count_up_to(c) == T.count_up_to(c))
      return false;
  }
  return true;
}

namespace {

std::size_t expected_symbol_count(const GrassmannianSpec &spec) {
  // Choose m of the mirror pairs, then one element of each pair.
  const int pairs = spec.lie_type == LieType::D ? spec.n + 1 : spec.n;
  const std::size_t cap = std::numeric_limits<std::size_t>::max() / 4;
  std::size_t binom = 1;
  for (int i = 0; i < spec.m; ++i) {
    binom = binom * static_cast<std::size_t>(pairs - i) /
            static_cast<std::size_t>(i + 1);
    if (binom > cap)
      return cap;
  }
  for (int i = 0; i < spec.m; ++i) {
    binom *= 2;
    if (binom > cap)
      return cap;
  }
  return binom;
}

std::vector<CoverEdge> reduce(std::size_t L, const std::vector<bool> &rel) {
  std::vector<CoverEdge> out;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      if (i == j || !rel[i * L + j])
        continue;
      bool cover = true;
      for (std::size_t k = 0; k < L && cover; ++k)
        if (k != i && k != j && rel[i * L + k] && rel[k * L + j])
          cover = false;
      if (cover)
        out.push_back({i, j});
    }
  return out;
}

} // namespace

BruhatPoset build_poset(const GrassmannianSpec &spec, std::size_t symbol_cap) {
  const std::size_t expected = expected_symbol_count(spec);
  if (expected > symbol_cap)
    throw Error(ErrorCode::SizeLimitExceeded,
                describe(spec) + " has " + std::to_string(expected) +
                    " symbols, above the cap of " + std::to_string(symbol_cap));
  BruhatPoset poset(spec, enumerate_symbols(spec));
  const std::size_t L = poset.size();
  poset.relation_.assign(L * L, false);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i; j < L; ++j) // T ⪯ P implies T ≤lex P
      poset.relation_[i * L + j] = preceq(spec, poset.symbols_[i], poset.symbols_[j]);
  poset.covers_ = reduce(L, poset.relation_);
  poset.finish_from_relation();
  return poset;
}

BruhatPoset BruhatPoset::from_covers(const GrassmannianSpec &spec,
                                     std::vector<SchubertSymbol> symbols,
                                     std::vector<CoverEdge> covers) {
  BruhatPoset poset(spec, std::move(symbols));
  const std::size_t L = poset.size();
  std::vector<std::vector<std::size_t>> up(L);
  for (const auto &e : covers) {
    if (e.lower >= L || e.upper >= L || e.lower >= e.upper)
      throw Error(ErrorCode::PreconditionViolated, "malformed cover edge");
    up[e.lower].push_back(e.upper);
  }
  poset.relation_.assign(L * L, false);
  for (std::size_t i = L; i-- > 0;) {
    poset.relation_[i * L + i] = true;
    for (std::size_t j : up[i])
      for (std::size_t k = j; k < L; ++k)
        if (poset.relation_[j * L + k])
          poset.relation_[i * L + k] = true;
  }
  std::sort(covers.begin(), covers.end());
  poset.covers_ = std::move(covers);
  poset.finish_from_relation();
  return poset;
}

void BruhatPoset::finish_from_relation() {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    index_.emplace(symbols_[i], i);
  std::sort(covers_.begin(), covers_.end());
  compute_ranks();
  compute_mobius();
}

void BruhatPoset::compute_ranks() {
  const std::size_t L = size();
  std::vector<std::vector<std::size_t>> up(L);
  for (const auto &e : covers_)
    up[e.lower].push_back(e.upper);
  rank_.assign(L, 0);
  std::size_t tops = 0, bottoms = 0;
  // Upper elements come later in lex order, so a reverse sweep sees them first.
  for (std::size_t i = L; i-- > 0;) {
    if (up[i].empty()) {
      rank_[i] = 0;
      max_ = i;
      ++tops;
      continue;
    }
    int r = 0;
    for (std::size_t j : up[i])
      r = std::max(r, rank_[j] + 1);
    rank_[i] = r;
  }
  std::vector<bool> has_lower(L, false);
  for (const auto &e : covers_)
    has_lower[e.upper] = true;
  for (std::size_t i = 0; i < L; ++i)
    if (!has_lower[i]) {
      min_ = i;
      ++bottoms;
    }
  if (tops != 1 || bottoms != 1)
    throw Error(ErrorCode::PreconditionViolated,
                "poset of " + describe(spec_) + " lacks a unique maximum/minimum");
}

void BruhatPoset::compute_mobius() {
  const std::size_t L = size();
  mobius_.assign(L * L, 0);
  for (std::size_t q = 0; q < L; ++q) {
    mobius_[q * L + q] = 1;
    for (std::size_t p = q + 1; p < L; ++p) {
      if (!related(q, p))
        continue;
      std::int64_t sum = 0;
      for (std::size_t t = q; t < p; ++t)
        if (related(q, t) && related(t, p))
          sum += mobius_[q * L + t];
      mobius_[q * L + p] = -sum;
    }
  }
}

bool BruhatPoset::is_graded() const {
  for (const auto &e : covers_)
    if (rank_[e.lower] != rank_[e.upper] + 1)
      return false;
  return true;
}

std::optional<std::size_t> BruhatPoset::find(const SchubertSymbol &P) const {
  auto it = index_.find(P);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t BruhatPoset::index_of(const SchubertSymbol &P) const {
  if (auto i = find(P))
    return *i;
  throw Error(ErrorCode::UnknownSymbol,
              P.to_string() + " is not a symbol of " + describe(spec_));
}

int codim(const BruhatPoset &poset, const SchubertSymbol &P) {
  return poset.rank(poset.index_of(P));
}

std::int64_t mobius(const BruhatPoset &poset, const SchubertSymbol &Q,
                    const SchubertSymbol &P) {
  return poset.mobius(poset.index_of(Q), poset.index_of(P));
}

std::vector<CoverEdge> leq_covers(const std::vector<SchubertSymbol> &symbols) {
  const std::size_t L = symbols.size();
  std::vector<bool> rel(L * L, false);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      rel[i * L + j] = leq(symbols[i], symbols[j]);
  return reduce(L, rel);
}

std::string hasse_to_dot(const BruhatPoset &poset) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  label=\"" << describe(poset.spec()) << "\";\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  int top_rank = 0;
  for (int r : poset.ranks())
    top_rank = std::max(top_rank, r);
  for (int r = top_rank; r >= 0; --r) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < poset.size(); ++i)
      if (poset.rank(i) == r)
        os << " s" << i << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < poset.size(); ++i)
    os << "  s" << i << " [label=\"" << poset.symbols()[i].to_string()
       << "\\ncodim " << poset.rank(i) << "\"];\n";
  for (const auto &e : poset.covers())
    os << "  s" << e.lower << " -> s" << e.upper << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace isopieri
