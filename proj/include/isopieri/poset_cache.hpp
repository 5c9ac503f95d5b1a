#pragma once

// On-disk cache of Bruhat posets. One JSON file per spec:
//   {"spec":{"type","m","n","N","k"}, "symbols":[[..],..],
//    "covers":[[lower,upper],..], "rank":[..], "checksum":"<fnv1a-64 hex>"}
// Indices refer to the canonical lexicographic symbol order. The checksum
// covers the compact dump of everything except itself.

#include <filesystem>
#include <string>
#include <vector>

#include "isopieri/bruhat.hpp"

namespace isopieri {

std::string serialize_poset(const BruhatPoset &poset);

// Validates checksum, spec echo, symbol list, cover edges (each checked with
// preceq) and ranks. Any mismatch throws IoError.
BruhatPoset deserialize_poset(const GrassmannianSpec &spec, const std::string &text);

std::filesystem::path cache_path(const std::filesystem::path &dir,
                                 const GrassmannianSpec &spec);

struct CachedPoset {
  BruhatPoset poset;
  bool hit = false;
  std::vector<std::string> warnings;
};

// Loads a valid cache file or builds the poset and (re)writes the file.
// A corrupt file is never trusted: it is rebuilt and a warning recorded.
// Failing to write is also only a warning.
CachedPoset load_or_build(const GrassmannianSpec &spec, const std::filesystem::path &dir,
                          std::size_t symbol_cap = kDefaultSymbolCap);

} // namespace isopieri
