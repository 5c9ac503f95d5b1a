#include "isopieri/quadric_oracle.hpp"

#include <utility>

namespace isopieri {

namespace {

void require_quadric(LieType lie_type, int n) {
  if (lie_type == LieType::C)
    throw Error(ErrorCode::WrongLieType, "the quadric oracle covers types B and D");
  if (n < 1)
    throw Error(ErrorCode::InvalidParameters, "n must be positive");
}

bool is_mid_tilde(LieType lie_type, int n, QuadricIndex idx) {
  return idx.tilde && lie_type == LieType::D && idx.j == n;
}

void check_index(LieType lie_type, int n, QuadricIndex idx, int dim) {
  if (idx.j < 0 || idx.j > dim || (idx.tilde && !is_mid_tilde(lie_type, n, idx)))
    throw Error(ErrorCode::PreconditionViolated,
                "no quadric class " + std::string(idx.tilde ? "tilde " : "") +
                    "Q(" + std::to_string(idx.j) + ")");
}

// ι_* O_{Q(j)}; both middle classes of type D push to h^{n+1}.
HClass basis_pushforward(LieType lie_type, int n, int j) {
  const int N = lie_type == LieType::B ? 2 * n + 1 : 2 * n + 2;
  if (j <= n - 1)
    return HClass::monomial(N, j) * HClass::quadric(N);
  return HClass::monomial(N, j + 1);
}

// t(Q(n)) = 0, t(tilde Q(n)) = 1.
int mid_type(QuadricIndex idx) { return idx.tilde ? 1 : 0; }

} // namespace

QuadricClass::QuadricClass(LieType lie_type, int n) : lie_type(lie_type), n(n) {
  require_quadric(lie_type, n);
  coeffs.assign(static_cast<std::size_t>(dimension()) + 1, 0);
}

QuadricClass QuadricClass::basis(LieType lie_type, int n, QuadricIndex idx) {
  QuadricClass out(lie_type, n);
  out.add(idx, 1);
  return out;
}

std::int64_t QuadricClass::coeff(QuadricIndex idx) const {
  check_index(lie_type, n, idx, dimension());
  return idx.tilde ? tilde : coeffs[static_cast<std::size_t>(idx.j)];
}

void QuadricClass::add(QuadricIndex idx, std::int64_t c) {
  check_index(lie_type, n, idx, dimension());
  std::int64_t &slot = idx.tilde ? tilde : coeffs[static_cast<std::size_t>(idx.j)];
  slot = checked::add(slot, c);
}

std::string QuadricClass::to_string() const {
  std::string out;
  auto term = [&](std::int64_t c, const std::string &name) {
    if (c == 0)
      return;
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1)
      out += std::to_string(mag) + "*";
    out += name;
  };
  for (int j = 0; j <= dimension(); ++j) {
    term(coeffs[static_cast<std::size_t>(j)], "O_Q(" + std::to_string(j) + ")");
    if (lie_type == LieType::D && j == n)
      term(tilde, "O_~Q(" + std::to_string(n) + ")");
  }
  return out.empty() ? "0" : out;
}

HClass pushforward(const QuadricClass &cls) {
  HClass out(cls.modulus());
  for (int j = 0; j <= cls.dimension(); ++j)
    out = out + basis_pushforward(cls.lie_type, cls.n, j)
                    .scaled(cls.coeffs[static_cast<std::size_t>(j)]);
  if (cls.lie_type == LieType::D)
    out = out + basis_pushforward(cls.lie_type, cls.n, cls.n).scaled(cls.tilde);
  return out;
}

std::optional<QuadricClass> expand(LieType lie_type, int n, const HClass &x) {
  QuadricClass out(lie_type, n);
  if (x.modulus() != out.modulus())
    throw Error(ErrorCode::ModulusMismatch, "class does not live on this quadric");
  if (x.coeff(0) != 0)
    throw Error(ErrorCode::PreconditionViolated, "h^0 term is not a pushforward");
  HClass rest = x;
  bool ambiguous = false;
  // Q(j) pushes to a class whose lowest term is h^{j+1}, with coefficient 2
  // below the middle and 1 from it on.
  for (int j = 0; j <= out.dimension(); ++j) {
    const std::int64_t lead = rest.coeff(j + 1);
    if (lead == 0)
      continue;
    const std::int64_t unit = j <= n - 1 ? 2 : 1;
    if (lead % unit != 0)
      throw Error(ErrorCode::PreconditionViolated,
                  x.to_string() + " is not in the pushforward lattice");
    if (lie_type == LieType::D && j == n)
      ambiguous = true;
    out.add({j, false}, lead / unit);
    rest = rest - basis_pushforward(lie_type, n, j).scaled(lead / unit);
  }
  if (ambiguous)
    return std::nullopt;
  return out;
}

OracleProduct product(LieType lie_type, int n, QuadricIndex a, QuadricIndex b) {
  if (a.j > b.j)
    std::swap(a, b);
  const QuadricClass B = QuadricClass::basis(lie_type, n, b);
  const int N = B.modulus();

  // O_{Q(i)} is the pullback of h^i below the middle: projection formula.
  if (a.j <= n - 1) {
    const HClass pushed = HClass::monomial(N, a.j) * pushforward(B);
    return {pushed, expand(lie_type, n, pushed)};
  }

  QuadricClass out(lie_type, n);
  if (lie_type == LieType::D && a.j == n && b.j == n) {
    out.add({2 * n, false}, (mid_type(a) + mid_type(b) + n + 1) % 2);
  }
  // Otherwise the codimensions add past dim Q.
  return {pushforward(out), out};
}

} // namespace isopieri
