#pragma once

// Built-in fans and the JSON fan file format:
//   {"name": str, "dim": n, "rays": [[int,...],...], "max_cones": [[idx,...],...]}
// with 0-based ray indices.

#include "toric/cones.hpp"
#include "toric/fan.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

enum class Provenance { Builtin, UserFile };

struct CatalogEntry {
  std::string name;
  Fan fan;
  Provenance provenance = Provenance::Builtin;
  /// Classically known status of -K, when there is one.
  std::optional<FanoStatus> expected;
};

/// Names accepted by builtin(), in catalog order.
const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);
/// Throws std::out_of_range for unknown names.
CatalogEntry builtin(const std::string& name);
std::vector<CatalogEntry> builtin_catalog();

/// Malformed fan file: syntax errors carry a line number, schema errors a field path.
class FanFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Fan parse_fan(const std::string& text);
/// Normalized serialization; parse_fan(format_fan(f)) reproduces it byte for byte.
std::string format_fan(const Fan& fan);

CatalogEntry load(const std::filesystem::path& path);
void save(const CatalogEntry& entry, const std::filesystem::path& path);

/// Builtin name or fan file path; relative paths resolve against base_dir.
CatalogEntry resolve_target(const std::string& target, const std::filesystem::path& base_dir = {});

/// One builtin name or fan file path per line; '#' starts a comment.
std::vector<std::string> read_manifest(const std::filesystem::path& path);

}  // namespace toric
