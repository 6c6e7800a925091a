// Copyright 2026 The semisym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "oracle.hpp"
#include "semisym/cli.hpp"
#include "semisym/qubo.hpp"
#include "semisym/reducer.hpp"

using namespace semisym;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "semisym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cliMain(static_cast<int>(argv.size()), argv.data(), out, err);
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
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& file) const { return (path / file).string(); }
};

const std::string kPoc = std::string(SEMISYM_TEST_DATA) + "/poc.edges";

}  // namespace

TEST_CASE("encode and reduce reproduce the golden matrices") {
  TempDir dir("semisym_cli_golden");
  REQUIRE(cli({"encode", "--problem", "maxclique", "--graph", kPoc, "--penalty", "3", "--out",
               dir / "poc.qubo"})
              .code == 0);
  CHECK(parseQubo(slurp(dir / "poc.qubo")) == parseQubo(oracle::readData("poc.qubo")));

  REQUIRE(cli({"reduce", "--in", dir / "poc.qubo", "--ancillas", "1", "--z", "3", "--out",
               dir / "poc_mod.qubo", "--trace", dir / "poc.trace"})
              .code == 0);
  CHECK(parseQubo(slurp(dir / "poc_mod.qubo")) ==
        parseQubo(oracle::readData("poc_reduced.qubo")));
  CHECK(slurp(dir / "poc.trace") == "trace 6\nancilla 6 pair 1 4 z 3 syms 0,2,5\n");

  SECTION("stats") {
    const auto r = cli({"stats", "--in", dir / "poc.qubo", "--p", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("couplings: 9, cnot: 18") != std::string::npos);
    CHECK(cli({"stats", "--in", dir / "poc_mod.qubo"}).out.find("couplings: 8, cnot: 16") !=
          std::string::npos);
  }
  SECTION("verify with z = 3 reports the invalid drop and exits 1") {
    const auto r = cli({"verify", "--original", dir / "poc.qubo", "--reduced",
                        dir / "poc_mod.qubo", "--trace", dir / "poc.trace"});
    CHECK(r.code == 1);
    CHECK(r.out.find("traceReplays: true") != std::string::npos);
    CHECK(r.out.find("invalidNonDecrease: false") != std::string::npos);
    CHECK(r.out.find("optimumPreserved: true") != std::string::npos);
  }
  SECTION("verify with z = 9 passes") {
    REQUIRE(cli({"reduce", "--in", dir / "poc.qubo", "--ancillas", "1", "--z", "tight", "--out",
                 dir / "poc9.qubo", "--trace", dir / "poc9.trace"})
                .code == 0);
    const auto r = cli({"verify", "--original", dir / "poc.qubo", "--reduced",
                        dir / "poc9.qubo", "--trace", dir / "poc9.trace"});
    CHECK(r.code == 0);
    CHECK(r.out.find("optimumPreserved: true") != std::string::npos);
    CHECK(r.out.find("status: pass") != std::string::npos);
  }
  SECTION("verify rejects a reduced matrix that does not replay") {
    REQUIRE(cli({"reduce", "--in", dir / "poc.qubo", "--ancillas", "1", "--z", "9", "--out",
                 dir / "poc9.qubo"})
                .code == 0);
    const auto r = cli({"verify", "--original", dir / "poc.qubo", "--reduced",
                        dir / "poc9.qubo", "--trace", dir / "poc.trace"});
    CHECK(r.code == 1);
    CHECK(r.out.find("traceReplays: false") != std::string::npos);
  }
  SECTION("solve, project and decode") {
    const auto plain = cli({"solve", "--in", dir / "poc.qubo"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("energy: -3\n") != std::string::npos);

    REQUIRE(cli({"encode", "--problem", "maxclique", "--graph", kPoc, "--out", dir / "p.qubo",
                 "--map", dir / "p.map"})
                .code == 0);
    const auto r = cli({"solve", "--in", dir / "poc_mod.qubo", "--method", "sa", "--seed", "4",
                        "--trace", dir / "poc.trace", "--original", dir / "poc.qubo", "--map",
                        dir / "p.map", "--graph", kPoc});
    CHECK(r.code == 0);
    CHECK(r.out.find("method: sa") != std::string::npos);
    CHECK(r.out.find("successFraction: 1.0000") != std::string::npos);
    CHECK(r.out.find("originalEnergy: -3") != std::string::npos);
    CHECK(r.out.find("valid: true") != std::string::npos);
  }
}

TEST_CASE("graph generation is seeded") {
  const auto a = cli({"gen-graph", "--vertices", "9", "--pedge", "0.4", "--seed", "7"});
  const auto b = cli({"gen-graph", "--vertices", "9", "--pedge", "0.4", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == formatEdgeList(erdosRenyi(9, 0.4, 7)));

  TempDir dir("semisym_cli_gen");
  std::ofstream(dir / "g.edges") << a.out;
  const auto p = cli({"gen-graph", "--permute", dir / "g.edges", "--seed", "3"});
  CHECK(p.code == 0);
  CHECK(oracle::areIsomorphic(parseEdgeList(a.out), parseEdgeList(p.out)));
}

TEST_CASE("bench writes deterministic CSV") {
  const std::vector<std::string> args = {"bench",    "--problem", "maxclique", "--sizes",
                                         "6..7",     "--seeds",   "2",         "--budgets",
                                         "0,2,max",  "--sweeps",  "20",        "--restarts",
                                         "2"};
  const auto a = cli(args);
  const auto b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 2 + 2 * 2 * 3);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"stats"}).code == 2);
  CHECK(cli({"stats", "--in", "/nonexistent/file.qubo"}).code == 2);
  CHECK(cli({"encode", "--problem", "tsp", "--graph", kPoc}).code == 2);
  CHECK(cli({"reduce", "--in", std::string(SEMISYM_TEST_DATA) + "/poc.edges"}).code == 2);
  CHECK(cli({"stats", "--in", "x", "--bogus"}).code == 2);

  TempDir dir("semisym_cli_errors");
  std::ofstream(dir / "bad.qubo") << "qubo 2 1\n1 0 3\n";
  const auto r = cli({"stats", "--in", dir / "bad.qubo"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(cli({"reduce", "--in", std::string(SEMISYM_TEST_DATA) + "/poc.qubo", "--z", "0"})
            .code == 2);
}

TEST_CASE("the installed binary runs") {
  TempDir dir("semisym_cli_binary");
  const std::string cmd = std::string(SEMISYM_CLI_PATH) + " stats --in " +
                          std::string(SEMISYM_TEST_DATA) + "/poc.qubo --out " +
                          (dir / "s.txt");
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(slurp(dir / "s.txt").rfind("variables: 6, couplings: 9, cnot: 18", 0) == 0);
  const int bad = std::system((std::string(SEMISYM_CLI_PATH) + " nope 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(bad) == 2);
}
