#pragma once

// Exhaustive invariant suites over small specs. Every suite returns a report;
// failures are real violations, errata record where the printed unified
// formula disagrees with the corrected one, and notes are informational.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "isopieri/bruhat.hpp"
#include "isopieri/grassmannian.hpp"

namespace isopieri {

struct SelfcheckReport {
  std::map<std::string, std::size_t> checks;   // per suite
  std::map<std::string, std::size_t> failures; // per suite
  std::vector<std::string> failure_samples;    // first few messages per suite
  std::size_t errata = 0;
  std::vector<std::string> erratum_samples;
  std::vector<std::string> notes;

  bool ok() const;
  std::size_t total_checks() const;
  std::size_t total_failures() const;
  void merge(const SelfcheckReport &other);
  std::string summary() const;
};

SelfcheckReport check_symbols(const GrassmannianSpec &spec);
SelfcheckReport check_order(const BruhatPoset &poset);
// Type D only: preceq ⇔ no conflicting lone stars ⇔ (same type or no window),
// over every pair with T ≤ P, T ≠ P.
SelfcheckReport check_type_d_order(const GrassmannianSpec &spec);
SelfcheckReport check_diagrams(const BruhatPoset &poset);
SelfcheckReport check_projection(const BruhatPoset &poset);
SelfcheckReport check_triples(const BruhatPoset &poset);
SelfcheckReport check_pieri(const BruhatPoset &poset);
// m = 1 only: unit rows in type C, quadric oracle agreement in B and D.
SelfcheckReport check_m1(const BruhatPoset &poset);
SelfcheckReport check_quadric_oracle(LieType lie_type, int n);

SelfcheckReport check_spec(const BruhatPoset &poset);

// Every spec with a connected poset and N ≤ max_N: types B, C with m ≤ n and
// type D with m ≤ n.
std::vector<GrassmannianSpec> specs_up_to(int max_N);

inline constexpr int kDefaultBudget = 10;

using ProgressFn = std::function<void(const std::string &)>;

SelfcheckReport run_selfcheck(const std::vector<GrassmannianSpec> &specs,
                              const ProgressFn &progress = {});

} // namespace isopieri
