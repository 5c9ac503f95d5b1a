#pragma once

// Ambient isotropic Grassmannians IG(m, C^N) of Lie types B, C, D and their
// Schubert symbols.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "isopieri/error.hpp"

namespace isopieri {

enum class LieType { B, C, D };

char to_char(LieType t);
LieType lie_type_from_char(char c);

struct GrassmannianSpec {
  LieType lie_type;
  int m; // plane dimension
  int n; // rank parameter
  int N; // ambient dimension
  int k; // special-class threshold

  bool orthogonal() const { return lie_type != LieType::C; }
  // Dimension of X as a variety, i.e. the codimension of the point class.
  int dimension() const;

  friend bool operator==(const GrassmannianSpec &,
                         const GrassmannianSpec &) = default;
};

GrassmannianSpec make_spec(LieType lie_type, int m, int n);

std::string describe(const GrassmannianSpec &spec);

/// A strictly increasing m-subset of [1,N] with no c, d (c = d allowed)
/// summing to N+1. Immutable; ordered lexicographically.
class SchubertSymbol {
public:
  // Throws InvalidSymbol unless `elements` is already a valid symbol for spec.
  SchubertSymbol(const GrassmannianSpec &spec, std::vector<int> elements);
  SchubertSymbol(const GrassmannianSpec &spec, std::initializer_list<int> elements)
      : SchubertSymbol(spec, std::vector<int>(elements)) {}

  std::size_t size() const { return elements_.size(); }
  std::span<const int> elements() const { return elements_; }
  // 0-based access.
  int operator[](std::size_t i) const { return elements_[i]; }
  // 1-based access with the conventions p_0 = 0 and p_{m+1} = N+1.
  int bounded(int i, int N) const;
  bool contains(int c) const;
  // #(P ∩ [1,c])
  int count_up_to(int c) const;

  std::string to_string() const; // "[1,4,5]"

  friend bool operator==(const SchubertSymbol &, const SchubertSymbol &) = default;
  friend auto operator<=>(const SchubertSymbol &a, const SchubertSymbol &b) {
    return a.elements_ <=> b.elements_;
  }

private:
  std::vector<int> elements_;
};

// Accepts elements in any order; sorts, then validates.
SchubertSymbol parse_symbol(const GrassmannianSpec &spec, std::vector<int> elements);

bool is_valid_symbol(const GrassmannianSpec &spec, std::span<const int> elements);

/// All symbols of the spec, lexicographically ordered. This order is the
/// canonical index used everywhere a matrix or file refers to symbols.
std::vector<SchubertSymbol> enumerate_symbols(const GrassmannianSpec &spec);

SchubertSymbol reflect(const GrassmannianSpec &spec, const SchubertSymbol &P);
SchubertSymbol iota(const GrassmannianSpec &spec, const SchubertSymbol &P);
SchubertSymbol dual(const GrassmannianSpec &spec, const SchubertSymbol &P);

// [P] = P ∪ reflect(P), as a membership test.
bool in_closure(const GrassmannianSpec &spec, const SchubertSymbol &P, int c);

// Type-D function t(P) ∈ {0,1,2}.
int type_of(const GrassmannianSpec &spec, const SchubertSymbol &P);

// The minimum symbol {1,...,m}.
SchubertSymbol minimum_symbol(const GrassmannianSpec &spec);

} // namespace isopieri
