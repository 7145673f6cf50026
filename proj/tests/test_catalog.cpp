#include "toric/catalog.hpp"
#include "toric/cones.hpp"
#include "toric/tilting.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>

using namespace toric;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_fan(text);
  } catch (const FanFileError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("builtin names") {
  const auto& names = builtin_names();
  CHECK(names.size() == 22);
  CHECK(names.front() == "P1");
  CHECK(is_builtin("F3"));
  CHECK_FALSE(is_builtin("F4"));
  CHECK_THROWS_AS(builtin("F4"), std::out_of_range);
  for (const auto& e : builtin_catalog()) {
    CHECK(e.fan.name == e.name);
    CHECK(e.provenance == Provenance::Builtin);
  }
}

TEST_CASE("format and parse round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "toric_catalog_test";
  std::filesystem::create_directories(dir);
  for (const auto& e : builtin_catalog()) {
    const std::string text = format_fan(e.fan);
    const Fan back = parse_fan(text);
    CHECK(format_fan(back) == text);
    CHECK(back.rays == e.fan.rays);
    CHECK(back.max_cones == e.fan.max_cones);

    const auto path = dir / (e.name + ".json");
    save(e, path);
    const CatalogEntry loaded = load(path);
    CHECK(loaded.provenance == Provenance::UserFile);
    CHECK(loaded.name == e.name);
    CHECK(format_fan(loaded.fan) == text);
    CHECK(resolve_target(e.name + ".json", dir).name == e.name);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("fan file layout") {
  CHECK(format_fan(projective_space(1)) ==
        "{\n  \"name\": \"P1\",\n  \"dim\": 1,\n  \"rays\": [[1], [-1]],\n  \"max_cones\": [[0], [1]]\n}\n");
}

TEST_CASE("big integers survive the round trip") {
  Fan f = projective_space(1);
  f.rays[0][0] = Integer("99999999999999999999999");
  const std::string text = format_fan(f);
  CHECK(contains(text, "\"99999999999999999999999\""));
  CHECK(parse_fan(text).rays[0][0] == Integer("99999999999999999999999"));
}

TEST_CASE("parse errors") {
  CHECK(contains(error_of("{\"name\": \"x\",\n\"dim\": 1,\n\"rays\": [[1],\n"), "line 4"));
  CHECK(contains(error_of("{\"name\": \"x\", \"dim\": 1, \"rays\": [[1], [-1]]}"), "'max_cones'"));
  CHECK(contains(error_of("{\"name\": 3, \"dim\": 1, \"rays\": [[1]], \"max_cones\": [[0]]}"), "'name'"));
  CHECK(contains(error_of("{\"name\": \"x\", \"dim\": 0, \"rays\": [[1]], \"max_cones\": [[0]]}"), "'dim'"));
  CHECK(contains(error_of("{\"name\": \"x\", \"dim\": 1, \"rays\": [[1], [1.5]], \"max_cones\": [[0]]}"),
                 "'rays[1][0]'"));
  CHECK(contains(error_of("{\"name\": \"x\", \"dim\": 2, \"rays\": [[1, 0], [1]], \"max_cones\": [[0]]}"),
                 "'rays[1]'"));
  CHECK(contains(error_of("{\"name\": \"x\", \"dim\": 1, \"rays\": [[1], [-1]], \"max_cones\": [[0], [1, 7]]}"),
                 "'max_cones[1][1]'"));
  CHECK(contains(error_of("{\"name\": \"x\", \"dim\": 1, \"rays\": [[1], [-1]], \"max_cones\": [[0], [-1]]}"),
                 "'max_cones[1][0]'"));
  CHECK(contains(error_of("{\"name\": \"x\", \"dim\": 1, \"rays\": [[1]], \"max_cones\": [[0]], \"extra\": 1}"),
                 "'extra'"));
  CHECK(contains(error_of("[1, 2]"), "expected an object"));
  CHECK_THROWS_AS(load("/nonexistent/fan.json"), FanFileError);
  CHECK_THROWS_AS(resolve_target("nonexistent.json"), std::out_of_range);
}

TEST_CASE("parse normalizes cone order") {
  const Fan f = parse_fan("{\"name\": \"p1\", \"dim\": 1, \"rays\": [[1], [-1]], \"max_cones\": [[1], [0]]}");
  CHECK(f.max_cones == std::vector<std::vector<RayIndex>>{{0}, {1}});
}

TEST_CASE("manifest reader") {
  const auto path = std::filesystem::temp_directory_path() / "toric_manifest_test.txt";
  {
    std::ofstream out(path);
    out << "# catalog subset\nP1\n\n  F3   # trailing comment\nfans/custom.json\n";
  }
  CHECK(read_manifest(path) == std::vector<std::string>{"P1", "F3", "fans/custom.json"});
  std::filesystem::remove(path);
}

TEST_CASE("per-entry bu sizes and Gram determinants") {
  // name -> (|frob|, |bu|); |bu| equals the number of maximal cones throughout
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expect{
      {"P1", {2, 2}},          {"P2", {3, 3}},      {"P3", {4, 4}},        {"P4", {5, 5}},
      {"P1xP1", {4, 4}},       {"F1", {4, 4}},      {"F2", {5, 4}},        {"F3", {6, 4}},
      {"dP7", {5, 5}},         {"dP6", {6, 6}},     {"P1xP2", {6, 6}},     {"P1xP1xP1", {8, 8}},
      {"P1xF1", {8, 8}},       {"P1xF2", {10, 8}},  {"P1xdP7", {10, 10}},  {"P1xdP6", {12, 12}},
      {"BlptP3", {6, 6}},      {"BllineP3", {6, 6}}, {"P1xP3", {8, 8}},    {"P2xP2", {9, 9}},
      {"P1xP1xP1xP1", {16, 16}}, {"F1xF1", {16, 16}}};
  for (const auto& e : builtin_catalog()) {
    CAPTURE(e.name);
    REQUIRE(expect.count(e.name));
    const Variety x(e.fan);
    const OrlovReport r = orlov_check(x);
    CHECK(r.frob_count == expect.at(e.name).first);
    CHECK(r.bu_count == expect.at(e.name).second);
    CHECK(r.bu_count == x.num_cones());
    CHECK(r.gram_unimodular);
    CHECK(r.fano == *e.expected);
  }
}
