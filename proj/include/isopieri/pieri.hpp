#pragma once

// K-theoretic Pieri coefficients N^Q_{P,r}, the coefficient of [O_{X_Q}] in
// [O_{X_P}]·[O_{X_(r)}], by Möbius inversion of triple intersection numbers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isopieri/bruhat.hpp"
#include "isopieri/ktheory.hpp"

namespace isopieri {

struct PieriRow {
  GrassmannianSpec spec;
  SchubertSymbol P;
  SpecialClass special;
  std::map<SchubertSymbol, std::int64_t> coefficients; // nonzero entries only

  std::int64_t at(const SchubertSymbol &Q) const;
  std::int64_t sum() const;
};

// Σ_{Q ⪯ T ⪯ P} μ(Q,T) χ(O_{X_P} · O_{X^T} · O_{X_(r)}); 0 when Q ⋠ P.
std::int64_t pieri_coefficient(const BruhatPoset &poset, const SchubertSymbol &P,
                               const SchubertSymbol &Q, const SpecialClass &special);

PieriRow pieri_row(const BruhatPoset &poset, const SchubertSymbol &P,
                   const SpecialClass &special);

/// Dense square integer matrix with overflow-checked products.
class IntMatrix {
public:
  explicit IntMatrix(std::size_t size = 0) : n_(size), data_(size * size, 0) {}
  static IntMatrix identity(std::size_t size);

  std::size_t size() const { return n_; }
  std::int64_t &operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix &o) const;
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  std::vector<std::vector<std::int64_t>> rows() const;

private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

// Rows and columns follow poset.symbols().
//   M(i,j) = [P_j ⪯ P_i]            zeta matrix
//   D(k,j) = μ(P_j, P_k)            its inverse, the matrix of duals
//   T(i,j) = triple(P_i, P_j)       zero unless P_j ⪯ P_i
//   C      = T·D                    C(i,j) = N^{P_j}_{P_i}
struct PosetMatrices {
  SpecialClass special;
  IntMatrix M, D, T, C;
};

// Throws PreconditionViolated if M·D ≠ I.
PosetMatrices build_matrices(const BruhatPoset &poset, const SpecialClass &special);

std::string matrices_to_csv(const BruhatPoset &poset, const PosetMatrices &mats);
std::string matrices_to_json(const BruhatPoset &poset, const PosetMatrices &mats);

} // namespace isopieri
