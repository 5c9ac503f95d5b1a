#include "isopieri/grassmannian.hpp"

#include <algorithm>
#include <sstream>

namespace isopieri {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidParameters: return "invalid-parameters";
  case ErrorCode::InvalidSymbol: return "invalid-symbol";
  case ErrorCode::WrongLieType: return "wrong-lie-type";
  case ErrorCode::LengthMismatch: return "length-mismatch";
  case ErrorCode::NotLeq: return "not-leq";
  case ErrorCode::NotPreceq: return "not-preceq";
  case ErrorCode::SizeLimitExceeded: return "size-limit-exceeded";
  case ErrorCode::UnknownSymbol: return "unknown-symbol";
  case ErrorCode::ModulusMismatch: return "modulus-mismatch";
  case ErrorCode::Overflow: return "overflow";
  case ErrorCode::InvalidSpecial: return "invalid-special";
  case ErrorCode::PreconditionViolated: return "precondition-violated";
  case ErrorCode::IoError: return "io-error";
  }
  return "unknown-error";
}

char to_char(LieType t) {
  switch (t) {
  case LieType::B: return 'B';
  case LieType::C: return 'C';
  case LieType::D: return 'D';
  }
  return '?';
}

LieType lie_type_from_char(char c) {
  switch (c) {
  case 'B': case 'b': return LieType::B;
  case 'C': case 'c': return LieType::C;
  case 'D': case 'd': return LieType::D;
  default:
    throw Error(ErrorCode::InvalidParameters,
                std::string("unknown Lie type '") + c + "'");
  }
}

int GrassmannianSpec::dimension() const {
  const int base = m * (N - m);
  return lie_type == LieType::C ? base - m * (m - 1) / 2 : base - m * (m + 1) / 2;
}

GrassmannianSpec make_spec(LieType lie_type, int m, int n) {
  if (n < 1)
    throw Error(ErrorCode::InvalidParameters, "n must be at least 1");
  if (m < 1)
    throw Error(ErrorCode::InvalidParameters, "m must be at least 1");
  const int bound = lie_type == LieType::D ? n + 1 : n;
  if (m > bound)
    throw Error(ErrorCode::InvalidParameters,
                "m = " + std::to_string(m) + " exceeds the bound " +
                    std::to_string(bound) + " for type " + to_char(lie_type));
  GrassmannianSpec spec{lie_type, m, n, 0, 0};
  switch (lie_type) {
  case LieType::C: spec.N = 2 * n; spec.k = n - m; break;
  case LieType::B: spec.N = 2 * n + 1; spec.k = n - m; break;
  case LieType::D: spec.N = 2 * n + 2; spec.k = n - m + 1; break;
  }
  return spec;
}

std::string describe(const GrassmannianSpec &spec) {
  std::ostringstream os;
  switch (spec.lie_type) {
  case LieType::C: os << "SG(" << spec.m << "," << spec.N << ")"; break;
  case LieType::B:
  case LieType::D: os << "OG(" << spec.m << "," << spec.N << ")"; break;
  }
  os << " [type " << to_char(spec.lie_type) << ", n=" << spec.n
     << ", k=" << spec.k << "]";
  return os.str();
}

bool is_valid_symbol(const GrassmannianSpec &spec, std::span<const int> elements) {
  if (static_cast<int>(elements.size()) != spec.m)
    return false;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1 || elements[i] > spec.N)
      return false;
    if (i > 0 && elements[i] <= elements[i - 1])
      return false;
  }
  // Isotropy, including c = d.
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i; j < elements.size(); ++j)
      if (elements[i] + elements[j] == spec.N + 1)
        return false;
  return true;
}

SchubertSymbol::SchubertSymbol(const GrassmannianSpec &spec,
                               std::vector<int> elements)
    : elements_(std::move(elements)) {
  if (!is_valid_symbol(spec, elements_))
    throw Error(ErrorCode::InvalidSymbol,
                to_string() + " is not a Schubert symbol for " + describe(spec));
}

int SchubertSymbol::bounded(int i, int N) const {
  if (i <= 0)
    return 0;
  if (i > static_cast<int>(elements_.size()))
    return N + 1;
  return elements_[static_cast<std::size_t>(i - 1)];
}

bool SchubertSymbol::contains(int c) const {
  return std::binary_search(elements_.begin(), elements_.end(), c);
}

int SchubertSymbol::count_up_to(int c) const {
  return static_cast<int>(
      std::upper_bound(elements_.begin(), elements_.end(), c) - elements_.begin());
}

std::string SchubertSymbol::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(elements_[i]);
  }
  return out + "]";
}

SchubertSymbol parse_symbol(const GrassmannianSpec &spec, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  return SchubertSymbol(spec, std::move(elements));
}

std::vector<SchubertSymbol> enumerate_symbols(const GrassmannianSpec &spec) {
  std::vector<SchubertSymbol> out;
  std::vector<int> current;
  // blocked[c]: the mirror N+1-c is already chosen.
  std::vector<bool> blocked(static_cast<std::size_t>(spec.N + 2), false);

  auto recurse = [&](auto &&self, int next) -> void {
    if (static_cast<int>(current.size()) == spec.m) {
      out.emplace_back(spec, current);
      return;
    }
    const int remaining = spec.m - static_cast<int>(current.size());
    for (int c = next; c <= spec.N - remaining + 1; ++c) {
      const int mirror = spec.N + 1 - c;
      if (blocked[static_cast<std::size_t>(c)] || mirror == c)
        continue;
      current.push_back(c);
      blocked[static_cast<std::size_t>(mirror)] = true;
      self(self, c + 1);
      blocked[static_cast<std::size_t>(mirror)] = false;
      current.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

SchubertSymbol reflect(const GrassmannianSpec &spec, const SchubertSymbol &P) {
  std::vector<int> out;
  out.reserve(P.size());
  for (int p : P.elements())
    out.push_back(spec.N + 1 - p);
  std::reverse(out.begin(), out.end());
  return SchubertSymbol(spec, std::move(out));
}

SchubertSymbol iota(const GrassmannianSpec &spec, const SchubertSymbol &P) {
  if (spec.lie_type != LieType::D)
    throw Error(ErrorCode::WrongLieType, "iota is defined only in type D");
  const int a = spec.n + 1, b = spec.n + 2;
  std::vector<int> out;
  out.reserve(P.size());
  for (int p : P.elements())
    out.push_back(p == a ? b : p == b ? a : p);
  std::sort(out.begin(), out.end());
  return SchubertSymbol(spec, std::move(out));
}

SchubertSymbol dual(const GrassmannianSpec &spec, const SchubertSymbol &P) {
  SchubertSymbol bar = reflect(spec, P);
  if (spec.lie_type == LieType::D && spec.n % 2 == 0)
    return iota(spec, bar);
  return bar;
}

bool in_closure(const GrassmannianSpec &spec, const SchubertSymbol &P, int c) {
  return P.contains(c) || P.contains(spec.N + 1 - c);
}

int type_of(const GrassmannianSpec &spec, const SchubertSymbol &P) {
  if (spec.lie_type != LieType::D)
    throw Error(ErrorCode::WrongLieType, "t(P) is defined only in type D");
  const int center = spec.n + 1;
  if (!P.contains(center) && !P.contains(center + 1))
    return 2;
  const int missing = center - P.count_up_to(center);
  return missing % 2;
}

SchubertSymbol minimum_symbol(const GrassmannianSpec &spec) {
  std::vector<int> out(static_cast<std::size_t>(spec.m));
  for (int i = 0; i < spec.m; ++i)
    out[static_cast<std::size_t>(i)] = i + 1;
  return SchubertSymbol(spec, std::move(out));
}

} // namespace isopieri
