#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kspec::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool all_checks_pass(const json& report) {
  if (!report.contains("checks") || report["checks"].empty()) return false;
  for (const auto& c : report["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pentagram: human report and exit code") {
  const RunResult r = run({"pentagram"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check pentagram-structure: pass") != std::string::npos);
  CHECK(r.out.find("check no-satisfying-sign-assignment: pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("pentagram: structured report is well-formed and byte-stable") {
  const RunResult r1 = run({"pentagram", "--json"});
  const RunResult r2 = run({"--json", "pentagram"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);  // flag position does not matter, bytes identical

  const json j = json::parse(r1.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "pentagram");
  CHECK(j["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(all_checks_pass(j));
  CHECK(j["outputs"]["sign_assignment_count"] == 0);
  CHECK(j["outputs"]["observables"].size() == 10);
}

TEST_CASE("rays: table reconciliation names the three defective rows") {
  const RunResult r = run({"rays", "--table-check", "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(all_checks_pass(j));
  const auto& suspects = j["outputs"]["reconciliation"]["suspects"];
  REQUIRE(suspects.size() == 3);
  CHECK(suspects[0]["id"] == 12);
  CHECK(suspects[1]["id"] == 15);
  CHECK(suspects[2]["id"] == 16);
  CHECK(j["outputs"]["rays"].size() == 40);
  CHECK(j["outputs"]["context_of_block"] == json::array({4, 3, 2, 1, 5}));
}

TEST_CASE("relations: octad enumeration agrees with the frozen count") {
  const RunResult r = run({"relations", "--enumerate-octads"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check relations-sum-to-identity: pass") != std::string::npos);
  CHECK(r.out.find("check octad-count-frozen: pass") != std::string::npos);
  CHECK(r.out.find("check relations-among-octads: pass") != std::string::npos);
}

TEST_CASE("search: both bundled systems are unsatisfiable") {
  const RunResult r1 = run({"search", "--system", "rank1"});
  CHECK(r1.code == 0);
  CHECK(r1.out.find("complete search: UNSAT") != std::string::npos);
  CHECK(r1.out.find("check parity-certificate: pass") != std::string::npos);

  const RunResult r2 = run({"search", "--system", "rank2", "--json"});
  CHECK(r2.code == 0);
  const json j = json::parse(r2.out);
  CHECK(all_checks_pass(j));
  CHECK(j["outputs"]["result"] == "UNSAT");
  CHECK(j["outputs"]["outcome_count"] == 30);
  CHECK(j["outputs"]["context_count"] == 15);
  CHECK(j["outputs"]["parity"]["is_parity_proof"] == true);
}

TEST_CASE("search: user-supplied files, satisfiable and not") {
  const auto sat_path = temp_file("kspec_cli_sat.json", R"({"contexts": [[1, 2], [2, 3]]})");
  const RunResult sat = run({"search", "--system", sat_path.string(), "--json"});
  CHECK(sat.code == 0);
  const json js = json::parse(sat.out);
  CHECK(js["outputs"]["result"] == "SAT");
  bool witness_checked = false;
  for (const auto& c : js["checks"])
    if (c["name"] == "witness-exactly-one") witness_checked = c["pass"].get<bool>();
  CHECK(witness_checked);
  std::filesystem::remove(sat_path);

  // four contexts, so no parity argument, yet the search settles it
  const auto unsat_path =
      temp_file("kspec_cli_unsat.json", R"({"contexts": [[1,2], [1,3], [2,3], [1,2,3]]})");
  const RunResult unsat = run({"search", "--system", unsat_path.string(), "--json"});
  CHECK(unsat.code == 0);
  const json ju = json::parse(unsat.out);
  CHECK(ju["outputs"]["result"] == "UNSAT");
  CHECK(ju["outputs"]["parity"]["is_parity_proof"] == false);
  std::filesystem::remove(unsat_path);
}

TEST_CASE("search: file errors exit with code 2") {
  const RunResult missing = run({"search", "--system", "/nonexistent/systems.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  const auto bad_path = temp_file("kspec_cli_bad.json", "not json at all {");
  const RunResult bad = run({"search", "--system", bad_path.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("cannot parse") != std::string::npos);
  std::filesystem::remove(bad_path);

  const auto empty_ctx = temp_file("kspec_cli_empty.json", R"({"contexts": [[1, 2], []]})");
  const RunResult empty = run({"search", "--system", empty_ctx.string()});
  CHECK(empty.code == 2);
  std::filesystem::remove(empty_ctx);
}

TEST_CASE("pairings: bundled verification is the default") {
  const RunResult r = run({"pairings"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check matchings-partition-relations: pass") != std::string::npos);
  CHECK(r.out.find("check thirty-planes-each-twice: pass") != std::string::npos);
  CHECK(r.out.find("check search-unsat: pass") != std::string::npos);
}

TEST_CASE("pairings: enumeration reports 243 and finds the bundled instance") {
  const RunResult r = run({"pairings", "--enumerate", "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(all_checks_pass(j));
  CHECK(j["outputs"]["count"] == 243);
  CHECK(j["outputs"]["distinct_plane_histogram"] == json::parse(R"({"30": 243})"));
  CHECK(j["outputs"]["published_index"].get<int>() >= 0);
}

TEST_CASE("hypergraph: dot export goes to stdout, clean for piping") {
  const RunResult r = run({"hypergraph", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph planes {", 0) == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("check ") == std::string::npos);  // no check lines mixed in
}

TEST_CASE("hypergraph: default json export parses") {
  const RunResult r = run({"hypergraph"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["vertices"].size() == 30);
  CHECK(j["edges"].size() == 105);
  CHECK(j["hyperedges"].size() == 15);
}

TEST_CASE("hypergraph: --out writes the file and keeps stdout quiet") {
  const auto path = std::filesystem::temp_directory_path() / "kspec_cli_graph.dot";
  std::filesystem::remove(path);
  const RunResult r = run({"hypergraph", "--format", "dot", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  REQUIRE(std::filesystem::exists(path));
  std::ifstream f(path);
  std::string first_line;
  std::getline(f, first_line);
  CHECK(first_line == "graph planes {");
  std::filesystem::remove(path);
}

TEST_CASE("hypergraph: unknown format is a hard error") {
  const RunResult r = run({"hypergraph", "--format", "svg"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown format") != std::string::npos);
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run({}).code == 2);                          // a subcommand is required
  CHECK(run({"frobnicate"}).code == 2);              // unknown subcommand
  CHECK(run({"search"}).code == 2);                  // missing required --system
  CHECK(run({"pentagram", "--bogus-flag"}).code == 2);
}

TEST_CASE("help is not an error") {
  const RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pentagram") != std::string::npos);
  CHECK(r.out.find("hypergraph") != std::string::npos);
}

TEST_CASE("structured reports are deterministic across runs") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"rays", "--table-check", "--json"},
        std::vector<std::string>{"relations", "--json"},
        std::vector<std::string>{"search", "--system", "rank1", "--json"}}) {
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

}  // TEST_SUITE
