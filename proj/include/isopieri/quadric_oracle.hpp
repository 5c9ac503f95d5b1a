#pragma once

// Independent m = 1 oracle: Schubert classes of the quadric Q = OG(1,N) in
// types B and D, their pushforwards to K(P^{N-1}), and the products that follow
// from the pushforward formulas and the middle-degree parity rule. Only HClass
// arithmetic is shared with the main pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isopieri/ktheory.hpp"

namespace isopieri {

// O_{Q(j)}, or O_{tilde Q(n)} when tilde is set (type D, j = n only).
struct QuadricIndex {
  int j = 0;
  bool tilde = false;
  friend bool operator==(const QuadricIndex &, const QuadricIndex &) = default;
};

struct QuadricClass {
  LieType lie_type;
  int n;
  std::vector<std::int64_t> coeffs; // over O_{Q(0)} .. O_{Q(dim)}
  std::int64_t tilde = 0;           // coefficient of O_{tilde Q(n)}, type D

  QuadricClass(LieType lie_type, int n);
  static QuadricClass basis(LieType lie_type, int n, QuadricIndex idx);

  int dimension() const { return lie_type == LieType::B ? 2 * n - 1 : 2 * n; }
  int modulus() const { return lie_type == LieType::B ? 2 * n + 1 : 2 * n + 2; }
  std::int64_t coeff(QuadricIndex idx) const;
  void add(QuadricIndex idx, std::int64_t c);

  std::string to_string() const;

  friend bool operator==(const QuadricClass &, const QuadricClass &) = default;
};

HClass pushforward(const QuadricClass &cls);

// Inverse of pushforward on its image. Type B is triangular and always unique.
// Type D is unique unless h^{n+1} appears, where O_{Q(n)} and O_{tilde Q(n)}
// cannot be told apart; then nullopt. Throws PreconditionViolated outside the
// image lattice.
std::optional<QuadricClass> expand(LieType lie_type, int n, const HClass &x);

struct OracleProduct {
  HClass pushforward;
  std::optional<QuadricClass> cls; // absent when only the pushforward is known
};

OracleProduct product(LieType lie_type, int n, QuadricIndex a, QuadricIndex b);

} // namespace isopieri
