#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qsa/cli.hpp"
#include "qsa/graph.hpp"

using namespace qsa;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qsa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("qsa_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"generate", "--n", "10"}).code == 2);
    CHECK(run({"generate", "--model", "gnp", "--n", "10"}).code == 2);
    CHECK(run({"fig1", "--n-grid", "10:5:1"}).code == 2);
    CHECK(run({"fig2", "--unknown-flag", "3"}).code == 2);
    CHECK(run({"scan-ec", "--vertex", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("generate is deterministic and reports the default seed") {
    auto a = run({"generate", "--model", "ba", "--n", "30", "--seed", "4"});
    auto b = run({"generate", "--model", "ba", "--n", "30", "--seed", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("n 30\n", 0) == 0);
    CHECK(lines(a.out) == 1 + 6 + 3 * 26);
    auto d = run({"generate", "--model", "er", "--n", "30"});
    CHECK(d.code == 0);
    CHECK(d.err.find("seed: 1") != std::string::npos);
  }

  TEST_CASE("scan-ec on an eight-cycle") {
    TempDir dir;
    write_edge_list(cycle_graph(8), fs::path(dir / "c8.edges"));
    auto r = run({"scan-ec", "--in", dir / "c8.edges", "--vertex", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "anchor,kind,vertices\n3,2ec_path,2;3\n3,2ec_path,3;4\n");
  }

  TEST_CASE("malformed edge list is a runtime error") {
    TempDir dir;
    std::ofstream(dir / "bad.edges") << "n 4\n0 1\n2 2\n";
    auto r = run({"scan-ec", "--in", dir / "bad.edges", "--vertex", "0"});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);
  }

  TEST_CASE("attack without a configuration at the anchor") {
    TempDir dir;
    write_edge_list(star_graph(4), fs::path(dir / "star.edges"));
    auto r = run({"attack", "--in", dir / "star.edges", "--marked", "0", "--seed", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("no exceptional configuration") != std::string::npos);
  }

  TEST_CASE("attack and search on a file") {
    TempDir dir;
    write_edge_list(cycle_graph(12), fs::path(dir / "c12.edges"));
    auto a = run({"attack", "--in", dir / "c12.edges", "--marked", "5", "--seed", "2"});
    CHECK(a.code == 0);
    CHECK(lines(a.out) == 2);
    CHECK(a.out.find("file,12,2,5,") != std::string::npos);
    auto s = run({"search", "--in", dir / "c12.edges", "--marked", "5", "--t-max", "10"});
    CHECK(s.code == 0);
    CHECK(lines(s.out) == 12);
    CHECK(s.out.rfind("t,probability\n0,", 0) == 0);
    CHECK(s.err.find("optimum: t=") != std::string::npos);
  }

  TEST_CASE("fig1 output files are byte-identical across runs and worker counts") {
    TempDir dir;
    auto a = run({"fig1", "--model", "ws", "--n-grid", "100:500:100", "--samples", "20", "--seed", "7", "--out",
                  dir / "a.csv", "--workers", "1"});
    auto b = run({"fig1", "--model", "ws", "--n-grid", "100:500:100", "--samples", "20", "--seed", "7", "--out",
                  dir / "b.csv", "--workers", "4"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(lines(slurp(dir / "a.csv")) == 1 + 5 * 3);
    CHECK(slurp(dir / "a.csv.meta").find("regenerations.ws.100=") != std::string::npos);
  }

  TEST_CASE("fig2 writes attack rows and metadata") {
    auto r = run({"fig2", "--model", "er", "--n-grid", "40:60:20", "--samples", "3", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 1 + 2 * 3);
    CHECK(r.err.find("meta: anchor_resamples.er.40=") != std::string::npos);
    CHECK(r.err.find("er: eff median") != std::string::npos);
  }

  TEST_CASE("fig3 from a saved attack table") {
    TempDir dir;
    auto f2 = run({"fig2", "--model", "ba", "--n-grid", "40:80:20", "--samples", "3", "--seed", "5", "--out",
                   dir / "f2.csv"});
    REQUIRE(f2.code == 0);
    auto from_file = run({"fig3", "--in", dir / "f2.csv"});
    auto fresh = run({"fig3", "--model", "ba", "--n-grid", "40:80:20", "--samples", "3", "--seed", "5"});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == fresh.out);
    CHECK(lines(fresh.out) == 4);
    CHECK(run({"fig3", "--model", "ba", "--n-grid", "40:60:20", "--samples", "2"}).code == 2);
  }

  TEST_CASE("config file values apply and flags win") {
    TempDir dir;
    std::ofstream(dir / "run.cfg") << "model=ws\nn=24\nseed=9\n";
    auto from_cfg = run({"generate", "--config", dir / "run.cfg"});
    auto explicit_flags = run({"generate", "--model", "ws", "--n", "24", "--seed", "9"});
    CHECK(from_cfg.code == 0);
    CHECK(from_cfg.out == explicit_flags.out);
    auto overridden = run({"generate", "--config", dir / "run.cfg", "--seed", "10"});
    CHECK(overridden.out == run({"generate", "--model", "ws", "--n", "24", "--seed", "10"}).out);
    CHECK(overridden.out != from_cfg.out);
  }

  TEST_CASE("absorbing scheme is selectable") {
    TempDir dir;
    write_edge_list(cycle_graph(10), fs::path(dir / "c10.edges"));
    auto phase = run({"search", "--in", dir / "c10.edges", "--marked", "0,1", "--t-max", "6"});
    auto absorb = run({"search", "--in", dir / "c10.edges", "--marked", "0,1", "--t-max", "6", "--marking", "absorb"});
    CHECK(phase.code == 0);
    CHECK(absorb.code == 0);
    CHECK(phase.out != absorb.out);
    CHECK(run({"search", "--in", dir / "c10.edges", "--marked", "0", "--marking", "oracle"}).code == 2);
  }
}
