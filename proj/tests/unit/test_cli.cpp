#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "motifcover/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("motifcover_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json slurp_json(const std::string& path) { return json::parse(slurp(path)); }

int run(std::initializer_list<std::string> args) {
  return motifcover::cli_main(std::vector<std::string>(args));
}

std::string strip_timestamp(std::string text) {
  auto pos = text.find("\"generated_at\"");
  if (pos == std::string::npos) return text;
  auto end = text.find('\n', pos);
  text.erase(pos, end - pos + 1);
  return text;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("catalog command writes the catalog and exits cleanly") {
    TempDir tmp;
    CHECK(run({"catalog", "--max-size", "4", "--out", tmp.file("cat.txt")}) == 0);
    std::string text = slurp(tmp.file("cat.txt"));
    CHECK(text.find("0-1,0-2,1-2") != std::string::npos);
  }

  TEST_CASE("analyze produces a consistent report and cover") {
    TempDir tmp;
    write(tmp.file("g.txt"), "0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n5 6\n");
    CHECK(run({"analyze", tmp.file("g.txt"), "--max-size", "3", "--seed", "3",
               "--emit-cover", tmp.file("cover.json"), "--out", tmp.file("report.json")}) == 0);
    json rep = slurp_json(tmp.file("report.json"));
    CHECK(rep["input"]["edges"] == 7);
    CHECK(rep["totals"]["sigma_bits"].get<double>() <=
          rep["totals"]["eri_bits"].get<double>() + 1e-9);
    CHECK(rep.contains("cover"));

    // score of the emitted cover reproduces the analyze totals
    CHECK(run({"score", tmp.file("g.txt"), tmp.file("cover.json"), "--out",
               tmp.file("score.json")}) == 0);
    json score = slurp_json(tmp.file("score.json"));
    CHECK(score["totals"]["sigma_bits"].get<double>() ==
          doctest::Approx(rep["totals"]["sigma_bits"].get<double>()).epsilon(1e-12));
  }

  TEST_CASE("edge-only analysis sets delta to zero and omits the profile") {
    TempDir tmp;
    write(tmp.file("g.txt"), "0 1\n1 2\n");
    CHECK(run({"analyze", tmp.file("g.txt"), "--max-size", "2", "--out",
               tmp.file("r.json")}) == 0);
    json rep = slurp_json(tmp.file("r.json"));
    CHECK(rep["totals"]["delta_bits"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rep["profile_defined"] == false);
  }

  TEST_CASE("analyze is byte-identical across repeated runs modulo the timestamp") {
    TempDir tmp;
    write(tmp.file("g.txt"), "0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n");
    CHECK(run({"analyze", tmp.file("g.txt"), "--max-size", "4", "--seed", "11",
               "--runs", "2", "--out", tmp.file("a.json")}) == 0);
    CHECK(run({"analyze", tmp.file("g.txt"), "--max-size", "4", "--seed", "11",
               "--runs", "2", "--out", tmp.file("b.json")}) == 0);
    CHECK(strip_timestamp(slurp(tmp.file("a.json"))) ==
          strip_timestamp(slurp(tmp.file("b.json"))));
  }

  TEST_CASE("csv format carries rounded totals") {
    TempDir tmp;
    write(tmp.file("g.txt"), "0 1\n0 2\n1 2\n");
    CHECK(run({"analyze", tmp.file("g.txt"), "--max-size", "3", "--format", "csv", "--out",
               tmp.file("r.csv")}) == 0);
    std::string csv = slurp(tmp.file("r.csv"));
    CHECK(csv.find("motif,size,edges") != std::string::npos);
    CHECK(csv.find("# sigma_bits ") != std::string::npos);
  }

  TEST_CASE("generate then score round-trips the planted cover") {
    TempDir tmp;
    CHECK(run({"generate", "--model", "uniform", "--n", "60", "--plant",
               "triangle=10,edge=15", "--seed", "2", "--out-graph", tmp.file("g.txt"),
               "--out-cover", tmp.file("c.json")}) == 0);
    CHECK(run({"score", tmp.file("g.txt"), tmp.file("c.json"), "--out",
               tmp.file("s.json")}) == 0);
    json score = slurp_json(tmp.file("s.json"));
    CHECK(score["totals"]["sigma_bits"].get<double>() > 0.0);
  }

  TEST_CASE("bjr generation accepts canonical edge-list motif names") {
    TempDir tmp;
    CHECK(run({"generate", "--model", "bjr", "--n", "200", "--plant", "0-1,0-2,1-2=1.5",
               "--seed", "4", "--out-graph", tmp.file("g.txt")}) == 0);
  }

  TEST_CASE("exit codes: usage 1, validation 2, infeasible 3") {
    TempDir tmp;
    CHECK(run({"analyze"}) == 1);                       // missing required argument
    CHECK(run({"analyze", tmp.file("missing.txt"), "--max-size", "3"}) == 2);
    write(tmp.file("loop.txt"), "1 1\n");
    CHECK(run({"analyze", tmp.file("loop.txt"), "--max-size", "3"}) == 2);
    write(tmp.file("empty.txt"), "# vertices 4\n");
    CHECK(run({"analyze", tmp.file("empty.txt"), "--max-size", "3"}) == 2);
    CHECK(run({"generate", "--model", "uniform", "--n", "3", "--plant", "triangle=5",
               "--out-graph", tmp.file("g.txt")}) == 3);
    CHECK(run({"generate", "--model", "uniform", "--n", "9", "--plant", "triangle=0",
               "--out-graph", tmp.file("g.txt")}) == 2);  // void spec
  }

  TEST_CASE("score reports uncovered edges of an incomplete cover") {
    TempDir tmp;
    write(tmp.file("g.txt"), "0 1\n1 2\n");
    write(tmp.file("c.json"),
          R"([{"motif":"0-1","vertices":[0,1],"edges":[[0,1]]}])");
    CHECK(run({"score", tmp.file("g.txt"), tmp.file("c.json")}) == 2);
  }

  TEST_CASE("score rejects instances that do not realize their motif") {
    TempDir tmp;
    write(tmp.file("g.txt"), "0 1\n1 2\n");
    write(tmp.file("c.json"),
          R"([{"motif":"0-1,0-2,1-2","vertices":[0,1,2],"edges":[[0,1],[1,2]]}])");
    CHECK(run({"score", tmp.file("g.txt"), tmp.file("c.json")}) == 2);
  }

  TEST_CASE("candidates file without the single edge is auto-injected") {
    TempDir tmp;
    write(tmp.file("g.txt"), "0 1\n0 2\n1 2\n");
    write(tmp.file("cands.txt"), "0-1,0-2,1-2 | 3 | 3 | 6 | 0,0,0 | cb\n");
    CHECK(run({"analyze", tmp.file("g.txt"), "--candidates", tmp.file("cands.txt"), "--out",
               tmp.file("r.json")}) == 0);
    json rep = slurp_json(tmp.file("r.json"));
    CHECK(rep["config"]["catalog"]["classes"] == 2);
  }
}
