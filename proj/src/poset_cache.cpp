#include "isopieri/poset_cache.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace isopieri {

namespace {

using json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string &data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json spec_json(const GrassmannianSpec &spec) {
  return {{"type", std::string(1, to_char(spec.lie_type))},
          {"m", spec.m}, {"n", spec.n}, {"N", spec.N}, {"k", spec.k}};
}

json payload(const BruhatPoset &poset) {
  json j;
  j["spec"] = spec_json(poset.spec());
  auto symbols = json::array();
  for (const auto &P : poset.symbols())
    symbols.push_back(std::vector<int>(P.elements().begin(), P.elements().end()));
  j["symbols"] = symbols;
  auto covers = json::array();
  for (const auto &e : poset.covers())
    covers.push_back({e.lower, e.upper});
  j["covers"] = covers;
  j["rank"] = poset.ranks();
  return j;
}

[[noreturn]] void corrupt(const std::string &why) {
  throw Error(ErrorCode::IoError, "poset cache rejected: " + why);
}

} // namespace

std::string serialize_poset(const BruhatPoset &poset) {
  json j = payload(poset);
  j["checksum"] = fnv1a_hex(j.dump());
  return j.dump() + "\n";
}

BruhatPoset deserialize_poset(const GrassmannianSpec &spec, const std::string &text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    corrupt("not a JSON object");
  if (!j.contains("checksum") || !j["checksum"].is_string())
    corrupt("missing checksum");
  const std::string stored = j["checksum"].get<std::string>();
  j.erase("checksum");
  if (fnv1a_hex(j.dump()) != stored)
    corrupt("checksum mismatch");
  if (j.value("spec", json()) != spec_json(spec))
    corrupt("spec does not match " + describe(spec));

  try {
    const std::vector<SchubertSymbol> expected = enumerate_symbols(spec);
    const auto raw = j.at("symbols").get<std::vector<std::vector<int>>>();
    if (raw.size() != expected.size())
      corrupt("symbol count differs");
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (!std::equal(raw[i].begin(), raw[i].end(), expected[i].elements().begin(),
                      expected[i].elements().end()))
        corrupt("symbol " + std::to_string(i) + " differs");

    std::vector<CoverEdge> covers;
    for (const auto &e : j.at("covers")) {
      const auto lower = e.at(0).get<std::size_t>();
      const auto upper = e.at(1).get<std::size_t>();
      if (lower >= expected.size() || upper >= expected.size() ||
          !preceq(spec, expected[lower], expected[upper]))
        corrupt("cover edge is not a relation");
      covers.push_back({lower, upper});
    }
    const auto rank = j.at("rank").get<std::vector<int>>();
    BruhatPoset poset = BruhatPoset::from_covers(spec, expected, std::move(covers));
    if (rank != poset.ranks() || !poset.is_graded())
      corrupt("ranks are inconsistent with the covers");
    return poset;
  } catch (const json::exception &e) {
    corrupt(e.what());
  } catch (const Error &e) {
    if (e.code() == ErrorCode::IoError)
      throw;
    corrupt(e.what());
  }
}

std::filesystem::path cache_path(const std::filesystem::path &dir,
                                 const GrassmannianSpec &spec) {
  std::ostringstream name;
  name << "poset_" << to_char(spec.lie_type) << "_m" << spec.m << "_n" << spec.n
       << ".json";
  return dir / name.str();
}

CachedPoset load_or_build(const GrassmannianSpec &spec, const std::filesystem::path &dir,
                          std::size_t symbol_cap) {
  const auto path = cache_path(dir, spec);
  std::vector<std::string> warnings;
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return {deserialize_poset(spec, buf.str()), true, {}};
    } catch (const Error &e) {
      warnings.push_back(std::string(e.what()) + "; rebuilding " + path.string());
    }
  }

  BruhatPoset poset = build_poset(spec, symbol_cap);
  std::filesystem::create_directories(dir, ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << serialize_poset(poset);
    if (!out)
      ec = std::make_error_code(std::errc::io_error);
  }
  if (!ec)
    std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    warnings.push_back("could not write poset cache " + path.string());
  }
  return {std::move(poset), false, std::move(warnings)};
}

} // namespace isopieri
