#include "isopieri/diagram.hpp"

#include "isopieri/bruhat.hpp"

namespace isopieri {

std::set<int> DiagramReport::lone_star_columns() const {
  std::set<int> out;
  for (const auto &s : lone_stars)
    out.insert(s.column);
  return out;
}

namespace {

void require_type_d(const GrassmannianSpec &spec, const char *what) {
  if (spec.lie_type != LieType::D)
    throw Error(ErrorCode::WrongLieType, std::string(what) + " is a type-D notion");
}

bool window_in_closures(const GrassmannianSpec &spec, const SchubertSymbol &P,
                        const SchubertSymbol &T, int c) {
  for (int x = c + 1; x <= spec.n + 1; ++x)
    if (!in_closure(spec, P, x) || !in_closure(spec, T, x))
      return false;
  return true;
}

} // namespace

DiagramReport analyze(const GrassmannianSpec &spec, const SchubertSymbol &P,
                      const SchubertSymbol &T) {
  if (!leq(T, P))
    throw Error(ErrorCode::NotLeq, T.to_string() + " ≤ " + P.to_string() + " fails");
  DiagramReport r{spec, P, T, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  const int N = spec.N;
  const int m = spec.m;
  auto p = [&](int i) { return P.bounded(i, N); };
  auto t = [&](int i) { return T.bounded(i, N); };

  for (int i = 1; i <= m; ++i)
    r.rows.emplace_back(t(i), p(i));

  r.visible_cuts = {0, N};
  for (int i = 0; i <= m; ++i)
    for (int c = p(i); c < t(i + 1) && c <= N; ++c)
      r.visible_cuts.insert(c);

  for (int c = 0; c <= N; ++c)
    if (r.visible_cuts.contains(c) || r.visible_cuts.contains(N - c))
      r.apparent_cuts.insert(c);

  if (spec.lie_type == LieType::D) {
    const int n = spec.n;
    for (int i = 1; i <= m; ++i) {
      const bool from_p = p(i) == n + 2 && n + 2 <= t(i + 1);
      const bool from_t = t(i) == n + 1 && n + 1 >= p(i - 1);
      if (from_p || from_t)
        r.exceptional_cuts.insert(n + 1);
    }
    if (type_of(spec, P) != type_of(spec, T)) {
      for (int c = 1; c <= n; ++c) {
        if (window_in_closures(spec, P, T, c) &&
            T.count_up_to(c) == P.count_up_to(c) + 1) {
          r.exceptional_cuts.insert(c);
          r.exceptional_cuts.insert(N - c);
        }
      }
    }
  }

  r.cuts = r.apparent_cuts;
  r.cuts.insert(r.visible_cuts.begin(), r.visible_cuts.end());
  r.cuts.insert(r.exceptional_cuts.begin(), r.exceptional_cuts.end());

  for (int j = 0; j <= m; ++j)
    for (int c = p(j) + 1; c < t(j + 1); ++c)
      if (c >= 1 && c <= N)
        r.zero_columns.insert(c);

  for (int j = 1; j <= m; ++j) {
    if (r.is_cut(t(j)))
      r.lone_stars.insert({j, t(j)});
    if (r.is_cut(p(j) - 1))
      r.lone_stars.insert({j, p(j)});
  }

  r.linear = r.zero_columns;
  for (const auto &s : r.lone_stars)
    r.linear.insert(N + 1 - s.column);

  for (int c : r.cuts)
    if (c <= spec.n)
      r.quad.insert(c);
  if (spec.orthogonal())
    r.quad.insert(spec.n + 1);
  return r;
}

bool arrow(const GrassmannianSpec &spec, const SchubertSymbol &P,
           const SchubertSymbol &T) {
  if (!preceq(spec, T, P))
    return false;
  const DiagramReport d = analyze(spec, P, T);
  const int n = spec.n;
  for (std::size_t i = 0; i + 1 < P.size(); ++i) {
    const int pi = P[i];
    const int tnext = T[i + 1];
    if (pi > tnext) {
      const bool central_square =
          spec.lie_type == LieType::D && pi == n + 2 && tnext == n + 1;
      if (!central_square)
        return false;
    }
    if (pi == tnext && d.is_cut(pi))
      return false;
  }
  return true;
}

bool has_critical_window(const GrassmannianSpec &spec, const SchubertSymbol &P,
                         const SchubertSymbol &T) {
  require_type_d(spec, "critical window");
  if (!leq(T, P))
    throw Error(ErrorCode::NotLeq, T.to_string() + " ≤ " + P.to_string() + " fails");
  if (type_of(spec, P) == type_of(spec, T))
    throw Error(ErrorCode::PreconditionViolated,
                "critical windows are defined only when t(P) ≠ t(T)");
  const DiagramReport d = analyze(spec, P, T);
  for (int c = 1; c <= spec.n; ++c)
    if (d.is_visible(c) && d.is_visible(spec.N - c) &&
        window_in_closures(spec, P, T, c))
      return true;
  return false;
}

bool conflicting_lone_stars(const GrassmannianSpec &spec, const SchubertSymbol &P,
                            const SchubertSymbol &T) {
  require_type_d(spec, "conflicting lone stars");
  if (P == T)
    throw Error(ErrorCode::PreconditionViolated, "requires T ≠ P");
  const DiagramReport d = analyze(spec, P, T);
  const std::set<int> columns = d.lone_star_columns();
  for (int c : columns)
    if (columns.contains(spec.N + 1 - c))
      return true;
  return false;
}

std::string render_ascii(const DiagramReport &report) {
  std::string out;
  const int N = report.spec.N;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto [lo, hi] = report.rows[i];
    const int row = static_cast<int>(i) + 1;
    for (int c = 1; c <= N; ++c) {
      char cell = '0';
      if (lo <= c && c <= hi)
        cell = report.lone_stars.contains({row, c}) ? '@' : '*';
      out += cell;
      if (c < N)
        out += report.is_cut(c) ? '|' : ' ';
    }
    out += '\n';
  }
  return out;
}

} // namespace isopieri
