#include "isopieri/ktheory.hpp"

#include <algorithm>

namespace isopieri {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer addition overflowed");
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer subtraction overflowed");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer multiplication overflowed");
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i)
    out = mul(out, n - k + i) / i; // exact: out * (n-k+i) = C(n-k+i, i) * i
  return out;
}

std::int64_t pow2(int e) {
  if (e < 0 || e > 62)
    throw Error(ErrorCode::Overflow, "2^" + std::to_string(e) + " out of range");
  return std::int64_t{1} << e;
}

} // namespace checked

HClass::HClass(int N) : N_(N), coeffs_(static_cast<std::size_t>(N), 0) {
  if (N < 1)
    throw Error(ErrorCode::InvalidParameters, "modulus must be positive");
}

HClass::HClass(int N, std::vector<std::int64_t> coeffs) : HClass(N) {
  for (std::size_t e = 0; e < coeffs.size() && e < coeffs_.size(); ++e)
    coeffs_[e] = coeffs[e];
}

HClass HClass::monomial(int N, int e, std::int64_t coeff) {
  HClass out(N);
  if (e >= 0 && e < N)
    out.coeffs_[static_cast<std::size_t>(e)] = coeff;
  return out;
}

HClass HClass::quadric(int N) { return HClass(N, {0, 2, -1}); }

std::int64_t HClass::coeff(int e) const {
  return e >= 0 && e < N_ ? coeffs_[static_cast<std::size_t>(e)] : 0;
}

bool HClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::int64_t c) { return c == 0; });
}

void HClass::require_same(const HClass &o) const {
  if (N_ != o.N_)
    throw Error(ErrorCode::ModulusMismatch, "Z[h]/(h^" + std::to_string(N_) +
                                                ") vs Z[h]/(h^" +
                                                std::to_string(o.N_) + ")");
}

HClass HClass::operator+(const HClass &o) const {
  require_same(o);
  HClass out(N_);
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    out.coeffs_[e] = checked::add(coeffs_[e], o.coeffs_[e]);
  return out;
}

HClass HClass::operator-(const HClass &o) const {
  require_same(o);
  HClass out(N_);
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    out.coeffs_[e] = checked::sub(coeffs_[e], o.coeffs_[e]);
  return out;
}

HClass HClass::operator*(const HClass &o) const {
  require_same(o);
  HClass out(N_);
  const std::size_t N = coeffs_.size();
  for (std::size_t i = 0; i < N; ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < N; ++j)
      out.coeffs_[i + j] =
          checked::add(out.coeffs_[i + j], checked::mul(coeffs_[i], o.coeffs_[j]));
  }
  return out;
}

HClass HClass::scaled(std::int64_t s) const {
  HClass out(N_);
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    out.coeffs_[e] = checked::mul(coeffs_[e], s);
  return out;
}

HClass HClass::pow(int e) const {
  HClass out = one(N_);
  for (int i = 0; i < e; ++i)
    out = out * *this;
  return out;
}

std::string HClass::to_string() const {
  std::string out;
  for (int e = 0; e < N_; ++e) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(e)];
    if (c == 0)
      continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || e == 0)
      out += std::to_string(mag);
    if (e >= 1)
      out += "h";
    if (e >= 2)
      out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

std::int64_t chi(const HClass &a) {
  std::int64_t sum = 0;
  for (std::int64_t c : a.coeffs())
    sum = checked::add(sum, c);
  return sum;
}

HClass z_class(const GrassmannianSpec &spec, const ZData &z) {
  return HClass::monomial(spec.N, z.l) * HClass::quadric(spec.N).pow(z.q);
}

std::string SpecialClass::to_string() const {
  return (tilde ? "tilde X_(" : "X_(") + std::to_string(r) + ")";
}

void validate_special(const GrassmannianSpec &spec, const SpecialClass &special) {
  const int upper = spec.lie_type == LieType::D ? 2 * spec.n + 1 - spec.m
                                                : 2 * spec.n - spec.m;
  if (special.r < 1 || special.r > upper)
    throw Error(ErrorCode::InvalidSpecial,
                "r = " + std::to_string(special.r) + " outside [1," +
                    std::to_string(upper) + "]");
  if (special.tilde && (spec.lie_type != LieType::D || special.r != spec.k))
    throw Error(ErrorCode::InvalidSpecial,
                "the tilde class exists only in type D with r = k = " +
                    std::to_string(spec.k));
}

std::vector<SpecialClass> special_classes(const GrassmannianSpec &spec) {
  const int upper = spec.lie_type == LieType::D ? 2 * spec.n + 1 - spec.m
                                                : 2 * spec.n - spec.m;
  std::vector<SpecialClass> out;
  for (int r = 1; r <= upper; ++r)
    out.push_back({r, false});
  if (spec.lie_type == LieType::D && spec.k >= 1 && spec.k <= upper)
    out.push_back({spec.k, true});
  return out;
}

int special_type(const GrassmannianSpec &spec, const SpecialClass &special) {
  if (spec.lie_type != LieType::D || quadric_codim(spec, special) != spec.n)
    throw Error(ErrorCode::PreconditionViolated,
                "t(A) is defined only for the codimension-n classes of type D");
  return special.tilde ? 1 : 0;
}

namespace {

// (2 - h)^e
HClass two_minus_h(int N, int e) { return HClass(N, {2, -1}).pow(e); }

// δ of the type-D degenerate case, otherwise 1.
std::int64_t degenerate_factor(const GrassmannianSpec &spec, const SchubertSymbol &P,
                               const SchubertSymbol &T, const SpecialClass &special,
                               const ZData &z, bool require_full_linear) {
  if (spec.lie_type != LieType::D || z.q != 0 || special.r != spec.k)
    return 1;
  if (require_full_linear && z.l != spec.n + 1)
    return 1;
  const SSets s = s_sets(spec, P, T);
  const auto eta = static_cast<std::size_t>(special_type(spec, special)) +
                   s.S.size() + s.S_prime.size();
  return static_cast<std::int64_t>(eta % 2);
}

} // namespace

std::int64_t triple_intersection(const GrassmannianSpec &spec, const SchubertSymbol &P,
                                 const SchubertSymbol &T, const SpecialClass &special) {
  validate_special(spec, special);
  const ZData z = z_data(spec, P, T);
  const int N = spec.N;
  const int m = spec.m, r = special.r, l = z.l, q = z.q;

  if (spec.lie_type == LieType::C)
    return chi(HClass::monomial(N, m + r + l + q - 1) * two_minus_h(N, q));

  const int codim_on_quadric = quadric_codim(spec, special);
  if (codim_on_quadric <= spec.n - 1)
    return chi(HClass::monomial(N, m + r + l + q - 1) * two_minus_h(N, q));
  if (q > 0)
    return chi(HClass::monomial(N, m + r + l + q - 1) * two_minus_h(N, q - 1));
  const std::int64_t delta = degenerate_factor(spec, P, T, special, z, true);
  return chi(HClass::monomial(N, m + r + l - 1, delta));
}

std::int64_t truncated_binomial_sum(int q, int upper) {
  std::int64_t sum = 0;
  for (int j = 0; j <= std::min(upper, q); ++j) {
    const std::int64_t term =
        checked::mul(checked::binomial(q, j), checked::pow2(q - j));
    sum = j % 2 == 0 ? checked::add(sum, term) : checked::sub(sum, term);
  }
  return sum;
}

std::int64_t triple_intersection_unified(const GrassmannianSpec &spec,
                                         const SchubertSymbol &P,
                                         const SchubertSymbol &T,
                                         const SpecialClass &special) {
  validate_special(spec, special);
  const ZData z = z_data(spec, P, T);
  const int m = spec.m, r = special.r, l = z.l, q = z.q;
  const bool reduced = spec.orthogonal() && q > 0 && m - 1 + r >= spec.n;
  const int q_eff = reduced ? q - 1 : q;
  const int l_eff = reduced ? l + m + r : l + m + r - 1;
  const std::int64_t delta = degenerate_factor(spec, P, T, special, z, false);
  return checked::mul(delta, truncated_binomial_sum(q_eff, spec.N - 1 - l_eff - q_eff));
}

std::int64_t triple_intersection_printed(const GrassmannianSpec &spec,
                                         const SchubertSymbol &P,
                                         const SchubertSymbol &T,
                                         const SpecialClass &special) {
  validate_special(spec, special);
  const ZData z = z_data(spec, P, T);
  const int m = spec.m, r = special.r, l = z.l, q = z.q;
  const int q_eff = spec.orthogonal() && q > 0 ? q - 1 : q;
  const int l_eff = spec.orthogonal() && q > 0 && r >= spec.k ? l + m + r : l + m + r - 1;
  const std::int64_t delta = degenerate_factor(spec, P, T, special, z, false);
  return checked::mul(delta, truncated_binomial_sum(q_eff, spec.N - 1 - l_eff - q_eff));
}

} // namespace isopieri
