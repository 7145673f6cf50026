#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TORIC_ORLOV_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "toric_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("orlov on P2") {
  const Run r = run("orlov P2 --format json");
  CHECK(r.code == 0);
  const auto j = json_of(r);
  CHECK(j["status"] == "VERIFIED_MODULO_FULLNESS");
  CHECK(j["gen_time_upper"] == 2);
  CHECK(j["rdim_lower"] == 2);
}

TEST_CASE("frob-set, cohom, nef, bu, stabilize") {
  CHECK(json_of(run("frob-set P1"))["classes"].size() == 2);
  const auto h = json_of(run("cohom P2 --divisor -3,0,0"));
  CHECK(h["h"] == nlohmann::json::array({0, 0, 1}));
  CHECK(json_of(run("cohom P2 --divisor=2,0,0"))["h"] == nlohmann::json::array({6, 0, 0}));
  const auto nef = json_of(run("nef F2 --divisor 1,1,1,1"));
  CHECK(nef["nef"] == true);
  CHECK(nef["ample"] == false);
  CHECK(json_of(run("bu F1"))["count"] == 4);
  CHECK(json_of(run("stabilize P2"))["stabilizing_ell"] == 3);
  const auto frob = json_of(run("frob P2 --ell 2"));
  CHECK(frob["summands"].size() == 2);
}

TEST_CASE("describe prints the ray order") {
  const auto j = json_of(run("describe F1"));
  CHECK(j["rays"][2]["ray"] == nlohmann::json::array({-1, 1}));
  CHECK(j["validation"]["valid"] == true);
  CHECK(j["pic_rank"] == 2);
}

TEST_CASE("table formats") {
  const Run md = run("orlov F3 --format md");
  CHECK(md.code == 1);
  CHECK(md.out.rfind("| name |", 0) == 0);
  CHECK(md.out.find("NOT_APPLICABLE(-K not nef)") != std::string::npos);
  const Run csv = run("cohom P2 --divisor -3,0,0 --format csv");
  CHECK(csv.out == "degree,h\n0,0\n1,0\n2,1\n");
}

TEST_CASE("exit codes") {
  CHECK(run("orlov P1").code == 0);
  CHECK(run("tilting P2").code == 0);
  CHECK(run("orlov F3").code == 1);
  CHECK(run("orlov NoSuchVariety").code == 2);
  CHECK(run("cohom P2 --divisor 1,2").code == 2);
  CHECK(run("cohom P2 --divisor 1,x,2").code == 2);
  CHECK(run("cohom P2").code == 2);
  CHECK(run("frob P2 --ell 0").code == 2);
  CHECK(run("orlov P2 --format xml").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);

  const auto dir = scratch();
  {
    std::ofstream(dir / "broken.json") << "{\"name\": \"b\", \"dim\": 2,\n \"rays\": [[1, 0]\n";
    std::ofstream(dir / "gap.json")
        << "{\"name\": \"gap\", \"dim\": 2, \"rays\": [[1, 0], [0, 1], [-1, -1]], \"max_cones\": [[0, 1], [1, 2]]}";
    std::ofstream(dir / "manifest.txt") << "P1\ngap.json\n";
    std::ofstream(dir / "fine.txt") << "P1\nF3\n";
  }
  CHECK(run("orlov " + (dir / "broken.json").string()).code == 2);
  CHECK(run("orlov " + (dir / "gap.json").string()).code == 2);
  CHECK(run("describe " + (dir / "gap.json").string()).code == 2);
  CHECK(run("batch --manifest " + (dir / "manifest.txt").string()).code == 2);
  const Run fine = run("batch --manifest " + (dir / "fine.txt").string());
  CHECK(fine.code == 0);
  CHECK(json_of(fine)["summary"]["not_applicable"] == 1);
  CHECK(run("batch --manifest " + (dir / "missing.txt").string()).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic across thread counts") {
  const Run a = run("batch --threads 1");
  const Run b = run("batch --threads 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = json_of(a);
  CHECK(j["summary"]["verified"] == 21);
  CHECK(j["summary"]["not_applicable"] == 1);
}
