#include "isopieri/pieri.hpp"

#include <sstream>

#include <json.hpp>

namespace isopieri {

std::int64_t PieriRow::at(const SchubertSymbol &Q) const {
  auto it = coefficients.find(Q);
  return it == coefficients.end() ? 0 : it->second;
}

std::int64_t PieriRow::sum() const {
  std::int64_t s = 0;
  for (const auto &[Q, c] : coefficients)
    s = checked::add(s, c);
  return s;
}

namespace {

// triple(P, T) for every T ⪯ P, indexed like the poset; zero elsewhere.
std::vector<std::int64_t> triples_below(const BruhatPoset &poset, std::size_t p,
                                        const SpecialClass &special) {
  std::vector<std::int64_t> out(poset.size(), 0);
  const auto &sym = poset.symbols();
  for (std::size_t t = 0; t <= p; ++t)
    if (poset.related(t, p))
      out[t] = triple_intersection(poset.spec(), sym[p], sym[t], special);
  return out;
}

std::int64_t coefficient_from(const BruhatPoset &poset, std::size_t p, std::size_t q,
                              const std::vector<std::int64_t> &triples) {
  std::int64_t sum = 0;
  for (std::size_t t = q; t <= p; ++t)
    if (poset.related(q, t) && poset.related(t, p) && triples[t] != 0)
      sum = checked::add(sum, checked::mul(poset.mobius(q, t), triples[t]));
  return sum;
}

} // namespace

std::int64_t pieri_coefficient(const BruhatPoset &poset, const SchubertSymbol &P,
                               const SchubertSymbol &Q, const SpecialClass &special) {
  validate_special(poset.spec(), special);
  const std::size_t p = poset.index_of(P);
  const std::size_t q = poset.index_of(Q);
  if (!poset.related(q, p))
    return 0;
  return coefficient_from(poset, p, q, triples_below(poset, p, special));
}

PieriRow pieri_row(const BruhatPoset &poset, const SchubertSymbol &P,
                   const SpecialClass &special) {
  validate_special(poset.spec(), special);
  const std::size_t p = poset.index_of(P);
  const auto triples = triples_below(poset, p, special);
  PieriRow row{poset.spec(), P, special, {}};
  for (std::size_t q = 0; q <= p; ++q) {
    if (!poset.related(q, p))
      continue;
    if (std::int64_t c = coefficient_from(poset, p, q, triples); c != 0)
      row.coefficients.emplace(poset.symbols()[q], c);
  }
  return row;
}

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix out(size);
  for (std::size_t i = 0; i < size; ++i)
    out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
  if (n_ != o.n_)
    throw Error(ErrorCode::PreconditionViolated, "matrix sizes differ");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (o(k, j) != 0)
          out(i, j) = checked::add(out(i, j), checked::mul(a, o(k, j)));
    }
  return out;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  return out;
}

PosetMatrices build_matrices(const BruhatPoset &poset, const SpecialClass &special) {
  validate_special(poset.spec(), special);
  const std::size_t L = poset.size();
  PosetMatrices out{special, IntMatrix(L), IntMatrix(L), IntMatrix(L), IntMatrix(L)};
  for (std::size_t i = 0; i < L; ++i) {
    const auto triples = triples_below(poset, i, special);
    for (std::size_t j = 0; j < L; ++j) {
      out.M(i, j) = poset.related(j, i) ? 1 : 0;
      out.D(i, j) = poset.related(j, i) ? poset.mobius(j, i) : 0;
      out.T(i, j) = triples[j];
    }
  }
  if (!(out.M * out.D == IntMatrix::identity(L)))
    throw Error(ErrorCode::PreconditionViolated,
                "zeta and Möbius matrices are not inverse for " + describe(poset.spec()));
  out.C = out.T * out.D;
  return out;
}

std::string matrices_to_csv(const BruhatPoset &poset, const PosetMatrices &mats) {
  std::ostringstream os;
  const auto &sym = poset.symbols();
  os << "P";
  for (const auto &Q : sym)
    os << ",\"" << Q.to_string() << "\"";
  os << "\n";
  for (std::size_t i = 0; i < sym.size(); ++i) {
    os << "\"" << sym[i].to_string() << "\"";
    for (std::size_t j = 0; j < sym.size(); ++j)
      os << "," << mats.C(i, j);
    os << "\n";
  }
  return os.str();
}

std::string matrices_to_json(const BruhatPoset &poset, const PosetMatrices &mats) {
  const GrassmannianSpec &spec = poset.spec();
  nlohmann::ordered_json j;
  j["spec"] = {{"type", std::string(1, to_char(spec.lie_type))},
               {"m", spec.m}, {"n", spec.n}, {"N", spec.N}, {"k", spec.k}};
  j["special"] = {{"r", mats.special.r}, {"tilde", mats.special.tilde}};
  auto symbols = nlohmann::ordered_json::array();
  for (const auto &P : poset.symbols())
    symbols.push_back(std::vector<int>(P.elements().begin(), P.elements().end()));
  j["symbols"] = symbols;
  j["M"] = mats.M.rows();
  j["D"] = mats.D.rows();
  j["T"] = mats.T.rows();
  j["C"] = mats.C.rows();
  return j.dump() + "\n";
}

} // namespace isopieri
