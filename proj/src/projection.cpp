#include "isopieri/projection.hpp"

#include <algorithm>

#include "isopieri/bruhat.hpp"

namespace isopieri {

namespace {

void require_preceq(const GrassmannianSpec &spec, const SchubertSymbol &P,
                    const SchubertSymbol &T) {
  if (!preceq(spec, T, P))
    throw Error(ErrorCode::NotPreceq,
                T.to_string() + " ⪯ " + P.to_string() + " fails in " + describe(spec));
}

} // namespace

std::vector<int> ZData::gap_support(std::pair<int, int> gap) const {
  std::vector<int> out;
  for (int x = gap.first + 1; x <= gap.second; ++x) {
    out.push_back(x);
    if (spec.N + 1 - x != x)
      out.push_back(spec.N + 1 - x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_generators(const ZData &a, const ZData &b) {
  return a.linear == b.linear && a.quad_gaps == b.quad_gaps;
}

ZData z_data(const GrassmannianSpec &spec, const SchubertSymbol &P,
             const SchubertSymbol &T) {
  require_preceq(spec, P, T);
  const DiagramReport d = analyze(spec, P, T);
  ZData z{spec, P, T, {d.linear.begin(), d.linear.end()}, {}, 0, 0};
  // f_0 = 0 is never a generator; 0 only anchors the first gap.
  int prev = -1;
  for (int c : d.quad) {
    if (prev >= 0 && c - prev >= 2)
      z.quad_gaps.emplace_back(prev, c);
    prev = c;
  }
  z.l = static_cast<int>(z.linear.size());
  z.q = static_cast<int>(z.quad_gaps.size());
  return z;
}

SSets s_sets(const GrassmannianSpec &spec, const SchubertSymbol &P,
             const SchubertSymbol &T) {
  if (spec.lie_type != LieType::D)
    throw Error(ErrorCode::WrongLieType, "S and S' are type-D data");
  require_preceq(spec, P, T);
  SSets out;
  for (int i = 1; i <= spec.n + 1; ++i)
    for (std::size_t j = 0; j < P.size(); ++j)
      if (T[j] <= i && i <= P[j]) {
        out.S.insert(i);
        break;
      }
  for (int p : P.elements())
    if (p >= spec.n + 2 && out.S.contains(spec.N + 1 - p))
      out.S_prime.insert(p);
  return out;
}

int z_type(const GrassmannianSpec &spec, const SchubertSymbol &P,
           const SchubertSymbol &T) {
  if (spec.lie_type != LieType::D)
    throw Error(ErrorCode::WrongLieType, "t(Z) is a type-D notion");
  const ZData z = z_data(spec, P, T);
  if (z.q != 0 || z.l != spec.n + 1)
    throw Error(ErrorCode::PreconditionViolated,
                "Z is not a codimension-n linear subvariety of the quadric (l=" +
                    std::to_string(z.l) + ", q=" + std::to_string(z.q) + ")");
  const SSets s = s_sets(spec, P, T);
  return static_cast<int>(s.S.size() + s.S_prime.size() +
                          static_cast<std::size_t>(spec.n) + 1) % 2;
}

SchubertSymbol shrink(const GrassmannianSpec &spec, const SchubertSymbol &P,
                      const SchubertSymbol &T) {
  require_preceq(spec, P, T);
  const DiagramReport d = analyze(spec, P, T);
  const int N = spec.N;
  const int n = spec.n;
  std::vector<int> out;
  out.reserve(P.size());
  for (int i = 1; i <= spec.m; ++i) {
    const int pi = P.bounded(i, N);
    const int ti = T.bounded(i, N);
    const int tnext = T.bounded(i + 1, N); // N+1 for the last row
    if (pi < tnext) {
      out.push_back(pi);
    } else if (!d.is_cut(tnext - 1)) {
      const bool central =
          spec.lie_type == LieType::D && (tnext == n + 1 || tnext == n + 2);
      out.push_back(central ? N + 1 - tnext : tnext);
    } else {
      int c = tnext - 1;
      while (c >= ti && d.linear.contains(c))
        --c;
      if (c < ti)
        throw Error(ErrorCode::PreconditionViolated,
                    "every column of [t_i, t_{i+1}-1] is linear");
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return SchubertSymbol(spec, std::move(out));
}

SchubertSymbol raise(const GrassmannianSpec &spec, const SchubertSymbol &P,
                     const SchubertSymbol &T) {
  const SchubertSymbol rotated =
      shrink(spec, reflect(spec, T), reflect(spec, P));
  return reflect(spec, rotated);
}

} // namespace isopieri
