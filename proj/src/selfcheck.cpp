#include "isopieri/selfcheck.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "isopieri/diagram.hpp"
#include "isopieri/ktheory.hpp"
#include "isopieri/pieri.hpp"
#include "isopieri/projection.hpp"
#include "isopieri/quadric_oracle.hpp"

namespace isopieri {

namespace {

constexpr std::size_t kSamplesPerSuite = 5;

class Recorder {
public:
  Recorder(SelfcheckReport &report, std::string suite, const GrassmannianSpec &spec)
      : r_(report), suite_(std::move(suite)), where_(describe(spec)) {
    r_.checks[suite_];
    r_.failures[suite_];
  }
  Recorder(SelfcheckReport &report, std::string suite, std::string where)
      : r_(report), suite_(std::move(suite)), where_(std::move(where)) {
    r_.checks[suite_];
    r_.failures[suite_];
  }

  template <class Msg> void expect(bool ok, Msg &&msg) {
    ++r_.checks[suite_];
    if (ok)
      return;
    if (r_.failures[suite_]++ < kSamplesPerSuite)
      r_.failure_samples.push_back(suite_ + " " + where_ + ": " + msg());
  }

  void erratum(const std::string &msg) {
    if (r_.errata++ < kSamplesPerSuite)
      r_.erratum_samples.push_back(where_ + ": " + msg);
  }

  // Runs body, turning an escaped exception into one failure.
  template <class F> void guard(const std::string &what, F &&body) {
    try {
      body();
    } catch (const std::exception &e) {
      expect(false, [&] { return what + " threw " + e.what(); });
    }
  }

private:
  SelfcheckReport &r_;
  std::string suite_;
  std::string where_;
};

std::string pair_str(const SchubertSymbol &P, const SchubertSymbol &T) {
  return "P=" + P.to_string() + " T=" + T.to_string();
}

template <class C> std::string set_str(const C &c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int x : c) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << "}";
  return os.str();
}

// All (T, P) index pairs with T ⪯ P.
template <class F> void for_each_relation(const BruhatPoset &poset, F &&f) {
  for (std::size_t p = 0; p < poset.size(); ++p)
    for (std::size_t t = 0; t <= p; ++t)
      if (poset.related(t, p))
        f(poset.symbols()[p], poset.symbols()[t], p, t);
}

std::vector<std::vector<int>> brute_force_symbols(const GrassmannianSpec &spec) {
  std::vector<std::vector<int>> out;
  const int N = spec.N;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) != spec.m)
      continue;
    std::vector<int> s;
    for (int c = 1; c <= N; ++c)
      if (mask & (1u << (c - 1)))
        s.push_back(c);
    bool ok = true;
    for (int a : s)
      for (int b : s)
        ok = ok && a + b != N + 1;
    if (ok)
      out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

bool SelfcheckReport::ok() const { return total_failures() == 0; }

std::size_t SelfcheckReport::total_checks() const {
  std::size_t s = 0;
  for (const auto &[k, v] : checks)
    s += v;
  return s;
}

std::size_t SelfcheckReport::total_failures() const {
  std::size_t s = 0;
  for (const auto &[k, v] : failures)
    s += v;
  return s;
}

void SelfcheckReport::merge(const SelfcheckReport &o) {
  for (const auto &[k, v] : o.checks)
    checks[k] += v;
  for (const auto &[k, v] : o.failures)
    failures[k] += v;
  failure_samples.insert(failure_samples.end(), o.failure_samples.begin(),
                         o.failure_samples.end());
  errata += o.errata;
  for (const auto &s : o.erratum_samples)
    if (erratum_samples.size() < 20)
      erratum_samples.push_back(s);
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

std::string SelfcheckReport::summary() const {
  std::ostringstream os;
  for (const auto &[suite, n] : checks)
    os << (failures.at(suite) == 0 ? "ok   " : "FAIL ") << suite << ": " << n
       << " checks, " << failures.at(suite) << " failures\n";
  for (const auto &s : failure_samples)
    os << "  failure: " << s << "\n";
  os << "printed unified formula disagreements (erratum confirmations): " << errata
     << "\n";
  for (const auto &s : erratum_samples)
    os << "  erratum: " << s << "\n";
  for (const auto &s : notes)
    os << "  note: " << s << "\n";
  os << "total: " << total_checks() << " checks, " << total_failures()
     << " failures\n";
  return os.str();
}

SelfcheckReport check_symbols(const GrassmannianSpec &spec) {
  SelfcheckReport report;
  Recorder rec(report, "symbols", spec);
  const auto symbols = enumerate_symbols(spec);
  if (spec.N <= 12) {
    const auto brute = brute_force_symbols(spec);
    rec.expect(brute.size() == symbols.size(), [&] {
      return "enumeration has " + std::to_string(symbols.size()) +
             " symbols, brute force " + std::to_string(brute.size());
    });
    for (std::size_t i = 0; i < std::min(brute.size(), symbols.size()); ++i)
      rec.expect(std::equal(brute[i].begin(), brute[i].end(),
                            symbols[i].elements().begin(), symbols[i].elements().end()),
                 [&] { return "symbol " + std::to_string(i) + " differs"; });
  }
  rec.expect(std::is_sorted(symbols.begin(), symbols.end()),
             [] { return "enumeration is not lexicographic"; });
  for (const auto &P : symbols) {
    rec.guard("involutions of " + P.to_string(), [&] {
      const SchubertSymbol R = reflect(spec, P);
      rec.expect(R.size() == P.size() && reflect(spec, R) == P,
                 [&] { return "reflect is not an involution at " + P.to_string(); });
      rec.expect(dual(spec, dual(spec, P)) == P,
                 [&] { return "dual is not an involution at " + P.to_string(); });
      if (spec.lie_type == LieType::D) {
        rec.expect(iota(spec, iota(spec, P)) == P,
                   [&] { return "iota is not an involution at " + P.to_string(); });
        const bool center = in_closure(spec, P, spec.n + 1);
        rec.expect((type_of(spec, P) == 2) == !center,
                   [&] { return "t(P) = 2 mismatch at " + P.to_string(); });
      }
    });
  }
  return report;
}

SelfcheckReport check_order(const BruhatPoset &poset) {
  SelfcheckReport report;
  const GrassmannianSpec &spec = poset.spec();
  Recorder rec(report, "order", spec);
  const auto &sym = poset.symbols();
  const std::size_t L = poset.size();

  bool some_leq_not_preceq = false;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const bool rel = poset.related(i, j);
      const bool l = leq(sym[i], sym[j]);
      rec.expect(rel == preceq(spec, sym[i], sym[j]),
                 [&] { return "poset relation differs from preceq"; });
      if (spec.lie_type == LieType::D) {
        rec.expect(!rel || l, [&] { return "preceq without leq " + pair_str(sym[j], sym[i]); });
        some_leq_not_preceq = some_leq_not_preceq || (l && !rel);
      } else {
        rec.expect(rel == l, [&] { return "preceq ≠ leq " + pair_str(sym[j], sym[i]); });
      }
      if (i != j)
        rec.expect(!(rel && poset.related(j, i)),
                   [&] { return "antisymmetry fails " + pair_str(sym[j], sym[i]); });
      if (rel)
        for (std::size_t k = 0; k < L; ++k)
          if (poset.related(j, k) && !poset.related(i, k))
            rec.expect(false, [&] { return "transitivity fails at " + sym[k].to_string(); });
    }
  for (std::size_t i = 0; i < L; ++i)
    rec.expect(poset.related(i, i), [&] { return "not reflexive at " + sym[i].to_string(); });
  if (spec.lie_type == LieType::D && spec.m >= 2)
    rec.expect(some_leq_not_preceq, [] { return "no pair with T ≤ P but T ⋠ P"; });

  rec.expect(poset.rank(poset.maximum()) == 0, [] { return "rank(max) ≠ 0"; });
  rec.expect(sym[poset.minimum()] == minimum_symbol(spec),
             [] { return "minimum is not {1,...,m}"; });
  rec.expect(poset.is_graded(), [] { return "not graded"; });
  const int m = spec.m;
  const int expected_dim = spec.lie_type == LieType::C
                               ? m * (spec.N - m) - m * (m - 1) / 2
                               : m * (spec.N - m) - m * (m + 1) / 2;
  rec.expect(poset.rank(poset.minimum()) == expected_dim, [&] {
    return "rank(min) = " + std::to_string(poset.rank(poset.minimum())) + ", expected " +
           std::to_string(expected_dim);
  });

  for (const auto &e : poset.covers())
    rec.expect(poset.mobius(e.lower, e.upper) == -1,
               [&] { return "μ on a cover ≠ -1 at " + sym[e.lower].to_string(); });
  for (std::size_t q = 0; q < L; ++q)
    for (std::size_t t = 0; t < L; ++t) {
      const std::int64_t mu = poset.mobius(q, t);
      if (!poset.related(q, t)) {
        rec.expect(mu == 0, [] { return "μ ≠ 0 off the relation"; });
        continue;
      }
      const std::int64_t sign = (poset.rank(q) - poset.rank(t)) % 2 == 0 ? 1 : -1;
      rec.expect(mu == 0 || mu == sign, [&] {
        return "μ(" + sym[q].to_string() + "," + sym[t].to_string() +
               ") = " + std::to_string(mu) + " outside {0, (-1)^{|Q|-|T|}}";
      });
    }
  return report;
}

SelfcheckReport check_type_d_order(const GrassmannianSpec &spec) {
  SelfcheckReport report;
  if (spec.lie_type != LieType::D)
    return report;
  Recorder rec(report, "type-D order equivalence", spec);
  const auto symbols = enumerate_symbols(spec);
  for (const auto &P : symbols)
    for (const auto &T : symbols) {
      if (T == P || !leq(T, P))
        continue;
      rec.guard(pair_str(P, T), [&] {
        const bool a = preceq(spec, T, P);
        const bool b = !conflicting_lone_stars(spec, P, T);
        const bool same = type_of(spec, P) == type_of(spec, T);
        const bool c = same || !has_critical_window(spec, P, T);
        rec.expect(a == b && b == c, [&] {
          return pair_str(P, T) + ": preceq=" + std::to_string(a) +
                 " no-conflict=" + std::to_string(b) + " window-test=" + std::to_string(c);
        });
      });
    }
  return report;
}

SelfcheckReport check_diagrams(const BruhatPoset &poset) {
  SelfcheckReport report;
  const GrassmannianSpec &spec = poset.spec();
  Recorder rec(report, "diagram", spec);
  const int N = spec.N, n = spec.n;
  for_each_relation(poset, [&](const SchubertSymbol &P, const SchubertSymbol &T,
                               std::size_t, std::size_t) {
    rec.guard(pair_str(P, T), [&] {
      const DiagramReport d = analyze(spec, P, T);
      const std::string at = pair_str(P, T);
      rec.expect(d.is_visible(0) && d.is_visible(N), [&] { return at + ": 0 or N not visible"; });
      for (int c : d.cuts)
        rec.expect(d.is_cut(N - c), [&] { return at + ": cut " + std::to_string(c) + " unmirrored"; });
      for (int c : d.linear) {
        rec.expect(d.is_cut(c) && d.is_cut(c - 1),
                   [&] { return at + ": L element " + std::to_string(c) + " not flanked by cuts"; });
        rec.expect(!P.contains(c) && !T.contains(c),
                   [&] { return at + ": L meets P ∪ T at " + std::to_string(c); });
      }
      rec.expect(d.quad.contains(0), [&] { return at + ": 0 ∉ Q"; });
      rec.expect(d.quad.contains(n + 1) == spec.orthogonal(),
                 [&] { return at + ": n+1 ∈ Q mismatch"; });
      rec.expect(*d.quad.rbegin() <= n + 1, [&] { return at + ": Q exceeds n+1"; });
      for (int c : d.quad)
        if (c >= 1 && d.quad.contains(c - 1))
          rec.expect(d.linear.contains(c) || d.linear.contains(N + 1 - c), [&] {
            return at + ": consecutive cuts " + std::to_string(c - 1) + "," +
                   std::to_string(c) + " without a linear witness";
          });

      const SchubertSymbol Pr = reflect(spec, T);
      const SchubertSymbol Tr = reflect(spec, P);
      const DiagramReport rot = analyze(spec, Pr, Tr);
      rec.expect(rot.cuts == d.cuts, [&] {
        return at + ": cuts " + set_str(d.cuts) + " vs rotated " + set_str(rot.cuts);
      });
      rec.expect(rot.linear.size() == d.linear.size() && rot.quad == d.quad,
                 [&] { return at + ": L/Q counts change under rotation"; });

      const ZData z = z_data(spec, P, T);
      if (spec.orthogonal() && z.q == 0)
        rec.expect(z.l >= n + 1, [&] { return at + ": q = 0 but l < n+1"; });
    });
  });
  return report;
}

SelfcheckReport check_projection(const BruhatPoset &poset) {
  SelfcheckReport report;
  const GrassmannianSpec &spec = poset.spec();
  Recorder rec(report, "projection", spec);
  Recorder shrink_rec(report, "shrink", spec);
  const int N = spec.N;
  for_each_relation(poset, [&](const SchubertSymbol &P, const SchubertSymbol &T,
                               std::size_t, std::size_t) {
    const std::string at = pair_str(P, T);
    rec.guard(at, [&] {
      const ZData z = z_data(spec, P, T);
      const DiagramReport d = analyze(spec, P, T);
      int gaps = 0;
      for (int c : d.quad)
        if (c > 0 && !d.quad.contains(c - 1))
          ++gaps;
      rec.expect(gaps == z.q, [&] { return at + ": q disagrees with the gap count of Q"; });
      rec.expect(z.l + 2 * z.q <= N, [&] { return at + ": l + 2q > N"; });
      std::set<int> used(z.linear.begin(), z.linear.end());
      bool disjoint = used.size() == z.linear.size();
      for (const auto &g : z.quad_gaps)
        for (int x : z.gap_support(g))
          disjoint = used.insert(x).second && disjoint;
      rec.expect(disjoint, [&] { return at + ": generators share a variable"; });

      const ZData zr = z_data(spec, reflect(spec, T), reflect(spec, P));
      rec.expect(zr.l == z.l && zr.q == z.q,
                 [&] { return at + ": l, q change under rotation"; });
    });
    shrink_rec.guard(at, [&] {
      const SchubertSymbol S = shrink(spec, P, T);
      const ZData z = z_data(spec, P, T);
      shrink_rec.expect(preceq(spec, T, S) && preceq(spec, S, P),
                        [&] { return at + ": shrink " + S.to_string() + " outside [T,P]"; });
      shrink_rec.expect(same_generators(z_data(spec, S, T), z),
                        [&] { return at + ": shrink " + S.to_string() + " changes Z"; });
      shrink_rec.expect(arrow(spec, S, T),
                        [&] { return at + ": shrink " + S.to_string() + " ↛ T"; });
      for (int x : S.elements())
        shrink_rec.expect(std::find(z.linear.begin(), z.linear.end(), x) == z.linear.end(),
                          [&] { return at + ": shrink meets L at " + std::to_string(x); });

      const SchubertSymbol R = raise(spec, P, T);
      shrink_rec.expect(preceq(spec, T, R) && preceq(spec, R, P) &&
                            same_generators(z_data(spec, P, R), z) && arrow(spec, P, R),
                        [&] { return at + ": raised T " + R.to_string() + " unsound"; });
    });
  });
  return report;
}

SelfcheckReport check_triples(const BruhatPoset &poset) {
  SelfcheckReport report;
  const GrassmannianSpec &spec = poset.spec();
  Recorder rec(report, "triple", spec);
  const auto specials = special_classes(spec);
  for_each_relation(poset, [&](const SchubertSymbol &P, const SchubertSymbol &T,
                               std::size_t, std::size_t) {
    const std::string at = pair_str(P, T);
    rec.guard(at, [&] {
      const ZData z = z_data(spec, P, T);
      if (z.l + 2 * z.q <= spec.N - 1)
        rec.expect(chi(z_class(spec, z)) == 1, [&] { return at + ": χ(O_Z) ≠ 1"; });
      for (const auto &s : specials) {
        const std::int64_t per_type = triple_intersection(spec, P, T, s);
        const std::int64_t unified = triple_intersection_unified(spec, P, T, s);
        const std::int64_t printed = triple_intersection_printed(spec, P, T, s);
        rec.expect(per_type == unified, [&] {
          return at + " " + s.to_string() + ": per-type " + std::to_string(per_type) +
                 " vs unified " + std::to_string(unified);
        });
        if (printed != unified)
          rec.erratum(at + " " + s.to_string() + ": printed " + std::to_string(printed) +
                      ", corrected " + std::to_string(unified) + " (l=" +
                      std::to_string(z.l) + ", q=" + std::to_string(z.q) + ")");
        if (z.q == 0 && spec.m + s.r + z.l - 1 >= spec.N)
          rec.expect(per_type == 0, [&] { return at + ": degree overflow but nonzero"; });
      }
    });
  });
  return report;
}

SelfcheckReport check_pieri(const BruhatPoset &poset) {
  SelfcheckReport report;
  const GrassmannianSpec &spec = poset.spec();
  Recorder paths(report, "pieri two-path", spec);
  Recorder rows(report, "pieri rows", spec);
  const auto &sym = poset.symbols();
  const SchubertSymbol minimum = sym[poset.minimum()];
  std::size_t large = 0;
  for (const auto &s : special_classes(spec)) {
    paths.guard(s.to_string(), [&] {
      const PosetMatrices mats = build_matrices(poset, s);
      paths.expect(mats.M * mats.D == IntMatrix::identity(poset.size()),
                   [] { return "M·D ≠ I"; });
      for (std::size_t i = 0; i < poset.size(); ++i) {
        const SchubertSymbol &P = sym[i];
        const PieriRow row = pieri_row(poset, P, s);
        const std::string at = "P=" + P.to_string() + " " + s.to_string();
        for (std::size_t j = 0; j < poset.size(); ++j)
          paths.expect(row.at(sym[j]) == mats.C(i, j), [&] {
            return at + " Q=" + sym[j].to_string() + ": Möbius sum " +
                   std::to_string(row.at(sym[j])) + " vs matrix " +
                   std::to_string(mats.C(i, j));
          });
        for (const auto &[Q, c] : row.coefficients) {
          const std::size_t q = poset.index_of(Q);
          const int excess = poset.rank(q) - poset.rank(i) - s.r;
          rows.expect(poset.related(q, i) && excess >= 0,
                      [&] { return at + ": coefficient outside support at " + Q.to_string(); });
          const std::int64_t signed_c = excess % 2 == 0 ? c : -c;
          rows.expect(signed_c >= 0, [&] {
            return at + ": sign rule fails at " + Q.to_string() + " (" + std::to_string(c) + ")";
          });
          if (c != 1 && c != -1)
            ++large;
        }
        rows.expect(row.sum() == triple_intersection(spec, P, minimum, s),
                    [&] { return at + ": row sum ≠ triple(P, minimum)"; });
      }
    });
  }
  if (large > 0)
    report.notes.push_back(describe(spec) + ": " + std::to_string(large) +
                           " Pieri coefficients of magnitude ≠ 1");
  return report;
}

SelfcheckReport check_m1(const BruhatPoset &poset) {
  SelfcheckReport report;
  const GrassmannianSpec &spec = poset.spec();
  if (spec.m != 1)
    return report;
  Recorder rec(report, "m=1 oracle", spec);
  const auto &sym = poset.symbols();
  const int n = spec.n;
  auto index_of = [&](std::size_t i) {
    return QuadricIndex{poset.rank(i), spec.lie_type == LieType::D && sym[i][0] == n + 2};
  };
  for (const auto &s : special_classes(spec))
    for (std::size_t i = 0; i < poset.size(); ++i) {
      const std::string at = "P=" + sym[i].to_string() + " " + s.to_string();
      rec.guard(at, [&] {
        const PieriRow row = pieri_row(poset, sym[i], s);
        if (spec.lie_type == LieType::C) {
          const int target = poset.rank(i) + s.r;
          bool ok = row.coefficients.size() == (target <= spec.dimension() ? 1u : 0u);
          for (const auto &[Q, c] : row.coefficients)
            ok = ok && c == 1 && codim(poset, Q) == target;
          rec.expect(ok, [&] { return at + ": row is not the unit vector at codim " +
                                      std::to_string(target); });
          return;
        }
        QuadricClass computed(spec.lie_type, n);
        for (const auto &[Q, c] : row.coefficients)
          computed.add(index_of(poset.index_of(Q)), c);
        const OracleProduct expected =
            product(spec.lie_type, n, index_of(i), QuadricIndex{s.r, s.tilde});
        rec.expect(pushforward(computed) == expected.pushforward, [&] {
          return at + ": pushforward " + pushforward(computed).to_string() + " vs oracle " +
                 expected.pushforward.to_string();
        });
        if (expected.cls)
          rec.expect(computed == *expected.cls, [&] {
            return at + ": " + computed.to_string() + " vs oracle " + expected.cls->to_string();
          });
      });
    }
  return report;
}

SelfcheckReport check_quadric_oracle(LieType lie_type, int n) {
  SelfcheckReport report;
  const std::string where = std::string("quadric ") + to_char(lie_type) + " n=" + std::to_string(n);
  Recorder rec(report, "quadric oracle", where);
  rec.guard(where, [&] {
    const QuadricClass zero(lie_type, n);
    const int dim = zero.dimension();
    std::vector<QuadricIndex> basis;
    for (int j = 0; j <= dim; ++j)
      basis.push_back({j, false});
    if (lie_type == LieType::D)
      basis.push_back({n, true});

    if (lie_type == LieType::B) {
      QuadricClass mix(lie_type, n);
      for (int j = 0; j <= dim; ++j) {
        const QuadricClass b = QuadricClass::basis(lie_type, n, {j, false});
        const auto back = expand(lie_type, n, pushforward(b));
        rec.expect(back && *back == b, [&] { return "expand∘push ≠ id at Q(" + std::to_string(j) + ")"; });
        mix.add({j, false}, j % 3 - 1);
      }
      const auto back = expand(lie_type, n, pushforward(mix));
      rec.expect(back && *back == mix, [] { return "expand∘push ≠ id on a mixed class"; });
    }

    if (lie_type == LieType::D) {
      const QuadricIndex Qn{n, false}, Qt{n, true};
      const std::int64_t even = n % 2 == 0 ? 1 : 0;
      rec.expect(product(lie_type, n, Qn, Qn).cls->coeff({2 * n, false}) == even,
                 [] { return "[O_Q(n)]^2 parity rule"; });
      rec.expect(product(lie_type, n, Qt, Qt).cls->coeff({2 * n, false}) == even,
                 [] { return "[O_~Q(n)]^2 parity rule"; });
      rec.expect(product(lie_type, n, Qn, Qt).cls->coeff({2 * n, false}) == 1 - even,
                 [] { return "[O_Q(n)]·[O_~Q(n)] parity rule"; });
    }

    // (a·b)·c = a·(b·c) at pushforward level whenever a·b expands uniquely.
    for (int a = 0; a <= n - 1; ++a)
      for (int b = 0; b <= n - 1; ++b)
        for (const auto &c : basis) {
          const OracleProduct ab = product(lie_type, n, {a, false}, {b, false});
          if (!ab.cls)
            continue;
          HClass lhs(zero.modulus());
          for (const auto &i : basis)
            if (std::int64_t k = ab.cls->coeff(i); k != 0)
              lhs = lhs + product(lie_type, n, i, c).pushforward.scaled(k);
          const HClass bc = product(lie_type, n, {b, false}, c).pushforward;
          const HClass rhs = HClass::monomial(zero.modulus(), a) * bc;
          rec.expect(lhs == rhs, [&] {
            return "associativity fails for Q(" + std::to_string(a) + "),Q(" +
                   std::to_string(b) + "),Q(" + std::to_string(c.j) + ")";
          });
        }
  });
  return report;
}

SelfcheckReport check_spec(const BruhatPoset &poset) {
  SelfcheckReport report;
  report.merge(check_symbols(poset.spec()));
  report.merge(check_order(poset));
  report.merge(check_type_d_order(poset.spec()));
  report.merge(check_diagrams(poset));
  report.merge(check_projection(poset));
  report.merge(check_triples(poset));
  report.merge(check_pieri(poset));
  report.merge(check_m1(poset));
  return report;
}

std::vector<GrassmannianSpec> specs_up_to(int max_N) {
  std::vector<GrassmannianSpec> out;
  for (LieType t : {LieType::C, LieType::B, LieType::D})
    for (int n = 1; n <= max_N; ++n) {
      const GrassmannianSpec probe = make_spec(t, 1, n);
      if (probe.N > max_N)
        break;
      for (int m = 1; m <= n; ++m)
        out.push_back(make_spec(t, m, n));
    }
  return out;
}

SelfcheckReport run_selfcheck(const std::vector<GrassmannianSpec> &specs,
                              const ProgressFn &progress) {
  SelfcheckReport report;
  std::set<std::pair<char, int>> quadrics;
  for (const auto &spec : specs) {
    if (progress)
      progress(describe(spec));
    try {
      report.merge(check_spec(build_poset(spec)));
    } catch (const std::exception &e) {
      SelfcheckReport failed;
      Recorder(failed, "build", spec).expect(false, [&] { return std::string(e.what()); });
      report.merge(failed);
    }
    if (spec.orthogonal())
      quadrics.insert({to_char(spec.lie_type), spec.n});
  }
  for (const auto &[t, n] : quadrics)
    report.merge(check_quadric_oracle(lie_type_from_char(t), n));
  return report;
}

} // namespace isopieri
