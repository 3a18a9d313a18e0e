// End-to-end checks of the command-line binary: golden output fragments,
// byte determinism, the table round trip, and exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(AYC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("group info is deterministic and correct") {
  auto a = run_cli("group info --type A3");
  auto b = run_cli("group info --type A3");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"order\": 24") != std::string::npos);
  CHECK(a.output.find("\"num_reflections\": 6") != std::string::npos);
}

TEST_CASE("specht character golden output") {
  auto r = run_cli("specht rep --n 3 --shape 2,1 --char");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"2\",\n      \"0\",\n      \"-1\"") != std::string::npos);
}

TEST_CASE("table round trip reproduces byte-identical matrices") {
  auto table_path = temp_file("ayc_cli_table.json");
  auto r1 = run_cli("--out " + table_path.string() +
                    " rep build --type A2 --functional 1,-2 --emit-table");
  REQUIRE(r1.exit_code == 0);
  auto direct = run_cli("rep build --type A2 --functional 1,-2");
  auto loaded = run_cli("rep build --type A2 --from-table " + table_path.string());
  CHECK(direct.exit_code == 0);
  CHECK(loaded.exit_code == 0);
  CHECK(direct.output == loaded.output);
  std::filesystem::remove(table_path);
}

TEST_CASE("DOT export has |W| nodes and |W||S|/2 edges") {
  auto r = run_cli("export cayley-dot --type A3");
  REQUIRE(r.exit_code == 0);
  size_t nodes = 0, edges = 0, pos = 0;
  std::string s = r.output;
  for (size_t i = 0; (i = s.find("label=", i)) != std::string::npos; ++i) {
    // node lines carry [label="..."], edge lines carry -- before label
    size_t line_start = s.rfind('\n', i);
    std::string line = s.substr(line_start + 1, i - line_start);
    if (line.find("--") != std::string::npos)
      ++edges;
    else
      ++nodes;
  }
  (void)pos;
  CHECK(nodes == 24);
  CHECK(edges == 24 * 3 / 2);
}

TEST_CASE("bindep reports equality across normalizations") {
  auto r = run_cli("rep bindep --type A3 --descent-of s1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"equal\": true") != std::string::npos);
}

TEST_CASE("exit codes") {
  SECTION("usage error is 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("rep build --type A2").exit_code == 2);  // no functional
    CHECK(run_cli("group info --type Z9").exit_code == 2);
  }
  SECTION("verification failure is 1") {
    // corrupt one coefficient in an otherwise valid table
    auto table_path = temp_file("ayc_cli_bad_table.json");
    auto r1 = run_cli("--out " + table_path.string() +
                      " rep build --type A2 --functional 1,-2 --emit-table");
    REQUIRE(r1.exit_code == 0);
    std::ifstream in(table_path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"-1/2\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 6, "\"-1/3\"");
    std::ofstream out(table_path, std::ios::binary);
    out << text;
    out.close();
    auto r2 = run_cli("rep verify --type A2 --from-table " + table_path.string());
    CHECK(r2.exit_code == 1);
    CHECK(r2.output.find("\"ok\": false") != std::string::npos);
    std::filesystem::remove(table_path);
  }
  SECTION("non-generic functional yields a report and exit 1") {
    auto r = run_cli("rep build --type A2 --functional 0,5");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("\"generic\": false") != std::string::npos);
  }
  SECTION("enumeration guard respects AY_MAX_ORDER") {
    std::string cmd = std::string("AY_MAX_ORDER=10 ") + AYC_CLI_PATH +
                      " group info --type A3 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
  }
}

TEST_CASE("induce and restrict round through the CLI") {
  auto r = run_cli("induce --type A2 --J s1 --psi-trivial");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"character_matches_oracle\": true") != std::string::npos);
  auto r2 = run_cli("restrict --type A3 --J s1,s2 --shape 2,2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("\"character_sum_consistent\": true") != std::string::npos);
}

TEST_CASE("--out may trail the subcommand") {
  auto p = temp_file("ayc_cli_trailing_out.json");
  auto r = run_cli("group info --type A2 --out " + p.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(p);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("\"order\": 6") != std::string::npos);
  std::filesystem::remove(p);
}

TEST_CASE("raw Coxeter matrix input") {
  auto p = temp_file("ayc_cli_matrix.json");
  {
    std::ofstream out(p);
    out << "{\"m\":[[1,3,2],[3,1,3],[2,3,1]]}";
  }
  auto r = run_cli("group info --matrix " + p.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"order\": 24") != std::string::npos);  // this is S4
  std::filesystem::remove(p);
}

TEST_CASE("text output format") {
  auto r = run_cli("group info --type B3 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "type B3\norder 48\nreflections 9\nclasses 10\n"
                    "longest s1.s2.s1.s2.s3.s2.s1.s2.s3\n");
  auto r2 = run_cli("rep char --type A2 --functional 1,-2 --format text");
  CHECK(r2.output == "e 2\ns1 0\ns1.s2 -1\n");
}
