#include "toric/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace toric {

namespace {

Fan named(Fan f, std::string name) {
  f.name = std::move(name);
  return f;
}

Fan del_pezzo_7() { return named(star_subdivision(star_subdivision(projective_space(2), {0, 1}), {1, 2}), "dP7"); }
Fan del_pezzo_6() { return named(star_subdivision(del_pezzo_7(), {0, 2}), "dP6"); }

struct Builder {
  std::string name;
  std::function<Fan()> make;
  std::optional<FanoStatus> expected;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> table = [] {
    const auto fano = FanoStatus::Fano;
    const auto P = [](std::size_t n) { return projective_space(n); };
    std::vector<Builder> t = {
        {"P1", [=] { return P(1); }, fano},
        {"P2", [=] { return P(2); }, fano},
        {"P3", [=] { return P(3); }, fano},
        {"P4", [=] { return P(4); }, fano},
        {"P1xP1", [=] { return product(P(1), P(1)); }, fano},
        {"F1", [] { return hirzebruch(1); }, fano},
        {"F2", [] { return hirzebruch(2); }, FanoStatus::NefFano},
        {"F3", [] { return hirzebruch(3); }, FanoStatus::Neither},
        {"dP7", del_pezzo_7, fano},
        {"dP6", del_pezzo_6, fano},
        {"P1xP2", [=] { return product(P(1), P(2)); }, fano},
        {"P1xP1xP1", [=] { return product(product(P(1), P(1)), P(1)); }, fano},
        {"P1xF1", [=] { return product(P(1), hirzebruch(1)); }, fano},
        {"P1xF2", [=] { return product(P(1), hirzebruch(2)); }, FanoStatus::NefFano},
        {"P1xdP7", [=] { return named(product(P(1), del_pezzo_7()), "P1xdP7"); }, fano},
        {"P1xdP6", [=] { return named(product(P(1), del_pezzo_6()), "P1xdP6"); }, fano},
        {"BlptP3", [=] { return named(star_subdivision(P(3), {0, 1, 2}), "BlptP3"); }, fano},
        {"BllineP3", [=] { return named(star_subdivision(P(3), {0, 1}), "BllineP3"); }, fano},
        {"P1xP3", [=] { return product(P(1), P(3)); }, fano},
        {"P2xP2", [=] { return product(P(2), P(2)); }, fano},
        {"P1xP1xP1xP1", [=] { return product(product(product(P(1), P(1)), P(1)), P(1)); }, fano},
        {"F1xF1", [] { return product(hirzebruch(1), hirzebruch(1)); }, fano},
    };
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& b : builders()) n.push_back(b.name);
    return n;
  }();
  return names;
}

bool is_builtin(const std::string& name) {
  const auto& n = builtin_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

CatalogEntry builtin(const std::string& name) {
  for (const auto& b : builders())
    if (b.name == name) return {b.name, named(b.make(), b.name), Provenance::Builtin, b.expected};
  throw std::out_of_range("unknown catalog variety '" + name + "'");
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& n : builtin_names()) out.push_back(builtin(n));
  return out;
}

// ---------------------------------------------------------------------------
// fan files

namespace {

using json = nlohmann::json;

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw FanFileError("fan file: field '" + field + "': " + what);
}

Integer read_integer(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  schema_error(field, "expected an integer");
}

}  // namespace

Fan parse_fan(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FanFileError("fan file: syntax error at line " + std::to_string(line_of(text, e.byte)) + ": " +
                       e.what());
  }
  if (!doc.is_object()) schema_error("$", "expected an object");
  for (const char* key : {"name", "dim", "rays", "max_cones"})
    if (!doc.contains(key)) schema_error(key, "missing");
  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "dim" && key != "rays" && key != "max_cones") schema_error(key, "unknown field");

  Fan f;
  if (!doc["name"].is_string()) schema_error("name", "expected a string");
  f.name = doc["name"].get<std::string>();
  if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::uint64_t>() == 0)
    schema_error("dim", "expected a positive integer");
  f.dim = doc["dim"].get<std::size_t>();

  const json& rays = doc["rays"];
  if (!rays.is_array() || rays.empty()) schema_error("rays", "expected a nonempty array");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string field = "rays[" + std::to_string(i) + "]";
    if (!rays[i].is_array()) schema_error(field, "expected an array");
    if (rays[i].size() != f.dim) schema_error(field, "expected " + std::to_string(f.dim) + " entries");
    IntVec v;
    for (std::size_t k = 0; k < rays[i].size(); ++k)
      v.push_back(read_integer(rays[i][k], field + "[" + std::to_string(k) + "]"));
    f.rays.push_back(std::move(v));
  }

  const json& cones = doc["max_cones"];
  if (!cones.is_array() || cones.empty()) schema_error("max_cones", "expected a nonempty array");
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string field = "max_cones[" + std::to_string(c) + "]";
    if (!cones[c].is_array() || cones[c].empty()) schema_error(field, "expected a nonempty array");
    std::vector<RayIndex> cone;
    for (std::size_t k = 0; k < cones[c].size(); ++k) {
      const json& idx = cones[c][k];
      const std::string sub = field + "[" + std::to_string(k) + "]";
      if (!idx.is_number_unsigned()) schema_error(sub, "expected a non-negative ray index");
      const auto i = idx.get<std::uint64_t>();
      if (i >= f.rays.size()) schema_error(sub, "ray index " + std::to_string(i) + " out of range");
      cone.push_back(static_cast<RayIndex>(i));
    }
    f.max_cones.push_back(std::move(cone));
  }
  return normalized(std::move(f));
}

namespace {

std::string integer_token(const Integer& z) {
  if (z.fits_slong_p()) return z.get_str();
  return "\"" + z.get_str() + "\"";
}

}  // namespace

std::string format_fan(const Fan& fan_in) {
  const Fan fan = normalized(fan_in);
  std::ostringstream os;
  os << "{\n  \"name\": " << json(fan.name).dump() << ",\n  \"dim\": " << fan.dim << ",\n  \"rays\": [";
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t k = 0; k < fan.rays[i].size(); ++k) os << (k ? ", " : "") << integer_token(fan.rays[i][k]);
    os << ']';
  }
  os << "],\n  \"max_cones\": [";
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    os << (c ? ", " : "") << '[';
    for (std::size_t k = 0; k < fan.max_cones[c].size(); ++k) os << (k ? ", " : "") << fan.max_cones[c][k];
    os << ']';
  }
  os << "]\n}\n";
  return os.str();
}

CatalogEntry load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FanFileError("cannot open fan file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  Fan f;
  try {
    f = parse_fan(buf.str());
  } catch (const FanFileError& e) {
    throw FanFileError(path.string() + ": " + e.what());
  }
  std::string name = f.name;
  return {std::move(name), std::move(f), Provenance::UserFile, std::nullopt};
}

void save(const CatalogEntry& entry, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write fan file " + path.string());
  Fan f = entry.fan;
  f.name = entry.name;
  out << format_fan(f);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

CatalogEntry resolve_target(const std::string& target, const std::filesystem::path& base_dir) {
  if (is_builtin(target)) return builtin(target);
  std::filesystem::path p(target);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  if (!std::filesystem::exists(p))
    throw std::out_of_range("'" + target + "' is neither a catalog variety nor an existing fan file");
  return load(p);
}

std::vector<std::string> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    entries.push_back(line.substr(b, e - b + 1));
  }
  return entries;
}

}  // namespace toric
