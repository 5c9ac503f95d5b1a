#pragma once

// Grothendieck-ring arithmetic of P^{N-1} and the Pieri-type triple
// intersection numbers chi_X([O_{X_P}] · [O_{X^T}] · [O_{X_(r)}]).

#include <cstdint>
#include <string>
#include <vector>

#include "isopieri/grassmannian.hpp"
#include "isopieri/projection.hpp"

namespace isopieri {

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t binomial(int n, int k);
std::int64_t pow2(int e);
} // namespace checked

/// An element of K(P^{N-1}) = Z[h]/(h^N), stored as coefficients of
/// h^0 .. h^{N-1}. Overflow throws instead of wrapping.
class HClass {
public:
  explicit HClass(int N);
  HClass(int N, std::vector<std::int64_t> coeffs);

  static HClass one(int N) { return monomial(N, 0); }
  // h^e, which is zero once e >= N.
  static HClass monomial(int N, int e, std::int64_t coeff = 1);
  // 2h - h^2, the class of a quadric hypersurface.
  static HClass quadric(int N);

  int modulus() const { return N_; }
  const std::vector<std::int64_t> &coeffs() const { return coeffs_; }
  std::int64_t coeff(int e) const;
  bool is_zero() const;

  HClass operator+(const HClass &o) const;
  HClass operator-(const HClass &o) const;
  HClass operator*(const HClass &o) const;
  HClass scaled(std::int64_t s) const;
  HClass pow(int e) const;

  std::string to_string() const; // e.g. "2h^3 - h^4"

  friend bool operator==(const HClass &, const HClass &) = default;

private:
  void require_same(const HClass &o) const;

  int N_;
  std::vector<std::int64_t> coeffs_;
};

inline HClass hclass_add(const HClass &a, const HClass &b) { return a + b; }
inline HClass hclass_mul(const HClass &a, const HClass &b) { return a * b; }
inline HClass hclass_scale(const HClass &a, std::int64_t s) { return a.scaled(s); }

// Sheaf Euler characteristic over P^{N-1}: h^j -> 1 for every 0 <= j < N.
std::int64_t chi(const HClass &a);

// [O_Z] = h^l (2h - h^2)^q.
HClass z_class(const GrassmannianSpec &spec, const ZData &z);

/// Special Schubert class X_(r), or the type-D class tilde X_(k).
struct SpecialClass {
  int r = 1;
  bool tilde = false;

  friend bool operator==(const SpecialClass &, const SpecialClass &) = default;
  std::string to_string() const;
};

void validate_special(const GrassmannianSpec &spec, const SpecialClass &special);

// Every valid special class of the spec, plain classes by r then the tilde one.
std::vector<SpecialClass> special_classes(const GrassmannianSpec &spec);

// Codimension m-1+r of the matching Schubert class on OG(1,N) / P^{N-1}.
inline int quadric_codim(const GrassmannianSpec &spec, const SpecialClass &s) {
  return spec.m - 1 + s.r;
}

// t(A) of the codimension-n quadric class behind a type-D special class with
// m-1+r = n. Any other access is an error.
int special_type(const GrassmannianSpec &spec, const SpecialClass &special);

// Per-type formulas, evaluated through Grothendieck classes of P^{N-1}.
std::int64_t triple_intersection(const GrassmannianSpec &spec, const SchubertSymbol &P,
                                 const SchubertSymbol &T, const SpecialClass &special);

// One closed-form binomial sum covering all types, with the reduced branch
// keyed on the quadric-side codimension m-1+r >= n.
std::int64_t triple_intersection_unified(const GrassmannianSpec &spec,
                                         const SchubertSymbol &P,
                                         const SchubertSymbol &T,
                                         const SpecialClass &special);

// The same sum with q' = q-1 for every orthogonal q > 0 and l' keyed on r >= k,
// as the general formula is usually printed. Kept for comparison only.
std::int64_t triple_intersection_printed(const GrassmannianSpec &spec,
                                         const SchubertSymbol &P,
                                         const SchubertSymbol &T,
                                         const SpecialClass &special);

// sum_{j=0}^{upper} C(q,j) (-1)^j 2^{q-j}; zero when upper < 0.
std::int64_t truncated_binomial_sum(int q, int upper);

} // namespace isopieri
