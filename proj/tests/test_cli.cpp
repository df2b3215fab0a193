#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hyperline/hypergraph.hpp"

#include "testutil.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code;
  std::string output;
};

// Runs the CLI with stdout+stderr captured; the binary path comes from CMake.
Run cli(const std::string& args) {
  fs::path out = fs::temp_directory_path() / "hyperline_cli_out.txt";
  std::string cmd = std::string(HYPERLINE_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

fs::path fixture_dir() {
  fs::path dir = fs::temp_directory_path() / "hyperline_cli_fixtures";
  fs::create_directories(dir);
  return dir;
}

std::string fig1_file() {
  auto path = fixture_dir() / "fig1.tsv";
  std::ofstream out(path);
  hyperline::write_tsv_pairs(out, testutil::fig1());
  return path.string();
}

}  // namespace

TEST_CASE("help exits zero") {
  CHECK(cli("--help").exit_code == 0);
  CHECK(cli("build --help").exit_code == 0);
}

TEST_CASE("build runs the full pipeline") {
  auto out_dir = fixture_dir() / "build_out";
  Run r = cli("build --input " + fig1_file() + " --s 2 --metrics cc,bc --out " +
              out_dir.string() + " --timing-json " + (out_dir / "t.json").string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(out_dir / "linegraph_s2.tsv"));
  CHECK(fs::exists(out_dir / "metrics_s2.json"));
  CHECK(fs::exists(out_dir / "metric_cc_s2.tsv"));
  CHECK(fs::exists(out_dir / "t.json"));
}

TEST_CASE("every documented algorithm name is accepted") {
  for (const char* algo : {"naive", "intersect", "hashmap", "spgemm"}) {
    Run r = cli("build --input " + fig1_file() + " --s 2 --algo " + algo);
    CAPTURE(algo);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("edges=3") != std::string::npos);
  }
  Run ens = cli("build --input " + fig1_file() + " --algo ensemble --s-list 1,2");
  CHECK(ens.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli("build").exit_code == 2);                      // missing --input
  CHECK(cli("nonsense-subcommand").exit_code == 2);
  CHECK(cli("build --input " + fig1_file() + " --s 0").exit_code == 2);
  CHECK(cli("build --input " + fig1_file() + " --metrics nope").exit_code == 2);
  CHECK(cli("build --input " + fig1_file() + " --algo ensemble").exit_code == 2);
  CHECK(cli("build --input " + fig1_file() + " --s 1 --metrics dist").exit_code == 2);
  CHECK(cli("build --input " + fig1_file() + " --chunk 99999").exit_code == 2);
  CHECK(cli("bench --out /tmp/hl_bench --baseline 9ZZ").exit_code == 2);
}

TEST_CASE("parse errors exit 3") {
  auto bad = fixture_dir() / "bad.tsv";
  std::ofstream(bad) << "0\t0\nbroken line here\n";
  CHECK(cli("build --input " + bad.string() + " --s 1").exit_code == 3);

  auto dup = fixture_dir() / "dup.tsv";
  std::ofstream(dup) << "1\t2\n1\t2\n";
  Run r = cli("build --input " + dup.string() + " --s 1");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("duplicate") != std::string::npos);

  CHECK(cli("build --input /no/such/file.tsv --s 1").exit_code == 3);
}

TEST_CASE("resource cap exits 4") {
  Run r = cli("build --input " + fig1_file() + " --algo spgemm --s 1 --spgemm-cap-mib 0");
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("resource cap") != std::string::npos);
}

TEST_CASE("gen then build round-trips") {
  auto dir = fixture_dir();
  auto gen_file = dir / "gen.tsv";
  Run g = cli("gen --m 200 --n 80 --exponent 2.1 --max-size 40 --seed 5 --out-file " +
              gen_file.string());
  CHECK(g.exit_code == 0);
  Run b = cli("build --input " + gen_file.string() + " --s 2 --threads 2 --partition cyclic");
  CHECK(b.exit_code == 0);

  // same seed, same bytes
  auto gen_file2 = dir / "gen2.tsv";
  cli("gen --m 200 --n 80 --exponent 2.1 --max-size 40 --seed 5 --out-file " + gen_file2.string());
  std::ifstream a(gen_file), c(gen_file2);
  std::stringstream sa, sc;
  sa << a.rdbuf();
  sc << c.rdbuf();
  CHECK(sa.str() == sc.str());
}

TEST_CASE("toplex subcommand lists maximal edges") {
  Run r = cli("toplex --input " + fig1_file());
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n4\n");
}

TEST_CASE("metrics subcommand consumes a saved edge list") {
  auto dir = fixture_dir() / "metrics_out";
  Run build = cli("build --input " + fig1_file() + " --s 2 --out " + dir.string());
  REQUIRE(build.exit_code == 0);
  Run m = cli("metrics --graph " + (dir / "linegraph_s2.tsv").string() + " --metrics cc,pr");
  CHECK(m.exit_code == 0);
  CHECK(m.output.find("component_count") != std::string::npos);
  Run bad = cli("metrics --graph " + (dir / "linegraph_s2.tsv").string() + " --metrics dist");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("sclique subcommand") {
  Run r = cli("sclique --input " + fig1_file() + " --s 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("nodes=5 edges=5") != std::string::npos);
}

TEST_CASE("bench subcommand emits csv and json") {
  auto dir = fixture_dir() / "bench_out";
  Run r = cli("bench --m 200 --n 80 --max-size 40 --s 2 --algos 1,2 --partitions B,C "
              "--relabels N,A --threads 1,2 --reps 1 --baseline 1CN --out " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "bench.csv"));
  CHECK(fs::exists(dir / "bench.json"));
  std::ifstream csv(dir / "bench.csv");
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == 1 + 2 * 2 * 2 * 2);  // header + grid cells
}
