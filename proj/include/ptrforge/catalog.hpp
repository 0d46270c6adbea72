#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptrforge/field.hpp"
#include "ptrforge/plane.hpp"
#include "ptrforge/ternary.hpp"

namespace ptrforge {

/// One manifest row of data/catalog.json. `claims` holds the facts the entry
/// must re-verify, e.g. {"order": 9, "desarguesian": false}.
struct CatalogEntry {
  std::string id;
  std::string kind;  // field | plane | quasifield | ptr-table
  std::string file;  // relative to the data directory
  std::string sha256;
  nlohmann::json claims;
};

// PTRFORGE_DATA_DIR from the environment if set, else the build-time default.
std::filesystem::path data_dir();

std::vector<CatalogEntry> catalog_entries(const std::filesystem::path& dir = data_dir());
CatalogEntry find_entry(const std::string& id, const std::filesystem::path& dir = data_dir());

std::string sha256_hex(const std::string& bytes);

using CatalogObject = std::variant<Field, IncidencePlane, QuasifieldPlane, TernaryTable>;

/// Loads an entry after checking its hash, structure and the inexpensive
/// claims. Throws UnknownEntry or VerificationFailed.
CatalogObject load_entry(const std::string& id, const std::filesystem::path& dir = data_dir());

struct VerifyResult {
  std::string id;
  bool ok = false;
  std::vector<std::string> passed;
  std::string failure;  // empty when ok
};

/// Re-verifies every claim from scratch, including the exhaustive ones
/// (Desargues search, translation lines).
VerifyResult verify_entry(const std::string& id, unsigned threads = 0, const std::filesystem::path& dir = data_dir());

}  // namespace ptrforge
