#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "nodalcodes/cli.hpp"
#include "nodalcodes/formats.hpp"

using namespace nodalcodes;
using cli::CommandResult;
using cli::dispatch;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(NODALCODES_TEST_DATA) + "/" + name; }

CommandResult run(std::vector<std::string> args) { return dispatch(args); }

json run_json(std::vector<std::string> args, int expected_exit = cli::kOk) {
  args.push_back("--json");
  const CommandResult r = dispatch(args);
  CHECK(r.exit_code == expected_exit);
  REQUIRE(r.json.has_value());
  return *r.json;
}

std::filesystem::path write_temp(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << j.dump(2);
  return path;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).exit_code == cli::kUsage);
  CHECK(run({"no-such-command"}).exit_code == cli::kUsage);
  CHECK(run({"bounds", "--degree", "8"}).exit_code == cli::kUsage);
  CHECK(run({"bounds", "--degree", "eight", "--mu", "3"}).exit_code == cli::kUsage);
  CHECK(run({"symmetroid-scan", "--family", "other"}).exit_code == cli::kUsage);
  const CommandResult help = run({"--help"});
  CHECK(help.exit_code == cli::kOk);
  CHECK(help.text.find("classify-quartic") != std::string::npos);
}

TEST_CASE("classify-quartic") {
  const json j = run_json({"classify-quartic", "--mu", "14"});
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["profile"] == "[14,4,{6_4,8,10}]");
  CHECK(j["entries"][0]["dim"] == 4);
  CHECK(run({"classify-quartic", "--mu", "17"}).exit_code == cli::kInvalidData);
  CHECK(run({"classify-quartic", "--mu", "0"}).exit_code == cli::kInvalidData);

  const json audit = run_json({"classify-quartic", "--mu", "12", "--audit"});
  CHECK(audit["entries"].size() == 4);
  // Every listed code round-trips through the code file format.
  for (const json& e : audit["entries"]) {
    const EvenSetCode code = parse_code(e["code"]);
    CHECK(weight_profile(code) == e["profile"].get<std::string>());
    CHECK(hex_bytes(canonical_form(code)) == e["canonical"].get<std::string>());
  }
}

TEST_CASE("bounds") {
  const json j = run_json({"bounds", "--degree", "8", "--mu", "168"});
  CHECK(j["report"]["beauville"] == 18);
  CHECK(j["report"]["improved"] == 19);
  const json closed = run_json({"bounds", "--degree", "8", "--mu", "168", "--paper-closed-form"});
  CHECK(closed["report"]["beauville"] == 16);
  const CommandResult text = run({"bounds", "--degree", "30", "--mu", "10"});
  CHECK(text.exit_code == cli::kOk);
  CHECK(text.text.find("vacuous") != std::string::npos);
  CHECK(run({"bounds", "--degree", "7", "--mu", "10"}).exit_code == cli::kInvalidData);
}

TEST_CASE("defect") {
  CHECK(run({"defect", "--degree", "4", "--nodes", data("missing.json")}).exit_code == cli::kInvalidData);
  CHECK(run({"defect", "--degree", "4"}).exit_code == cli::kInvalidData);

  const json direct = run_json({"defect", "--degree", "4", "--mu", "11", "--dim-m", "0"});
  CHECK(direct["report"]["defect"] == 1);

  const json from_file = run_json({"defect", "--nodes", data("eleven_points.json")});
  const NodeConfiguration cfg = parse_node_configuration(read_json_file(data("eleven_points.json")));
  CHECK(from_file["report"]["dim_m"] == vanishing_dimension(cfg, 2));
  CHECK(from_file["report"]["defect"] == 1);

  CHECK(run({"defect", "--degree", "6", "--nodes", data("eleven_points.json")}).exit_code == cli::kInvalidData);

  const json torsion = run_json({"defect", "--degree", "4", "--mu", "10", "--dim-m", "0", "--code", data("code_a.json")});
  CHECK(torsion["torsion"]["h3_rank"] == 2);
  CHECK(torsion["torsion"]["total_rank"] == 4);
  // Code dimension below the defect is inconsistent.
  CHECK(run({"defect", "--degree", "4", "--mu", "14", "--dim-m", "0", "--code", data("code_a.json")}).exit_code ==
        cli::kInvalidData);

  CHECK(run({"defect", "--nodes", data("cone_node.json")}).exit_code == cli::kOk);
  CHECK(run({"defect", "--nodes", data("not_a_node.json")}).exit_code == cli::kVerificationFailed);
}

TEST_CASE("vanishing-dim and verify-nodes") {
  const json j = run_json({"vanishing-dim", "--nodes", data("eleven_points.json"), "--degree", "3"});
  CHECK(j["monomials"] == 20);
  CHECK(j["dimension"] == 9);
  CHECK(run_json({"vanishing-dim", "--nodes", data("cone_node.json")})["dimension"] == 9);

  CHECK(run({"verify-nodes", "--nodes", data("cone_node.json")}).exit_code == cli::kOk);
  const json bad = run_json({"verify-nodes", "--nodes", data("not_a_node.json")}, cli::kVerificationFailed);
  CHECK(bad["all_nodes"] == false);
  CHECK(bad["points"][1]["node"] == false);
  // The Fermat quartic is smooth, so the cone point is not a node of it.
  CHECK(run({"verify-nodes", "--nodes", data("cone_node.json"), "--surface", data("fermat.txt")}).exit_code ==
        cli::kVerificationFailed);
  CHECK(run({"verify-nodes", "--nodes", data("eleven_points.json")}).exit_code == cli::kInvalidData);
}

TEST_CASE("code subcommands") {
  const json info = run_json({"code", "info", data("code_a.json")});
  CHECK(info["profile"] == "[10,2,{6_2,8}]");
  CHECK(info["strict_dim"] == 1);
  CHECK(run({"code", "isomorphic", data("code_a.json"), data("code_b.json")}).exit_code == cli::kOk);
  CHECK(run({"code", "isomorphic", data("code_a.json"), data("code_c.json")}).exit_code == cli::kVerificationFailed);
  CHECK(run({"code", "isomorphic", data("code_a.json")}).exit_code == cli::kInvalidData);

  const json a = run_json({"code", "canonical", data("code_a.json")});
  const json b = run_json({"code", "canonical", data("code_b.json")});
  CHECK(a["canonical"] == b["canonical"]);
  // The canonical code written back out is isomorphic to the input.
  const auto path = write_temp("nodalcodes-canonical.json", a["code"]);
  CHECK(run({"code", "isomorphic", path.string(), data("code_a.json")}).exit_code == cli::kOk);
  std::filesystem::remove(path);
}

TEST_CASE("symmetroid-scan") {
  const json j = run_json({"symmetroid-scan", "--prime", "31", "--seed", "2"});
  CHECK(j["count"] == 10);
  CHECK(j["certificate"]["certified"] == true);
  CHECK(j["note"].get<std::string>().find("finite-field") != std::string::npos);
  // The node payload is a valid node file whose points are nodes of the determinant surface.
  const auto nodes_path = write_temp("nodalcodes-scan-nodes.json", j["nodes"]);
  CHECK(run({"verify-nodes", "--nodes", nodes_path.string()}).exit_code == cli::kOk);
  CHECK(run_json({"vanishing-dim", "--nodes", nodes_path.string()})["dimension"] == 0);
  std::filesystem::remove(nodes_path);
  // So is the matrix payload.
  const auto matrix_path = write_temp("nodalcodes-scan-matrix.json", j["matrix"]);
  const json again = run_json({"symmetroid-scan", "--matrix", matrix_path.string()});
  CHECK(again["nodes"] == j["nodes"]);
  std::filesystem::remove(matrix_path);

  const json degenerate = run_json({"symmetroid-scan", "--matrix", data("diagonal_p5.json")}, cli::kVerificationFailed);
  CHECK(degenerate["degenerate"] == true);
  CHECK(degenerate["count"] == 28);
  CHECK(run({"symmetroid-scan", "--prime", "1031"}).exit_code == cli::kInvalidData);
  CHECK(run({"symmetroid-scan", "--prime", "100"}).exit_code == cli::kInvalidData);
}

TEST_CASE("hilbert-check") {
  const json j = run_json({"hilbert-check"});
  CHECK(j["ok"] == true);
  const std::vector<std::string> expected{"0", "0", "0", "10", "25", "46"};
  CHECK(j["coefficients"].get<std::vector<std::string>>() == expected);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"classify-quartic", "--mu", "11", "--json"},
      {"symmetroid-scan", "--prime", "23", "--seed", "4", "--json"},
      {"code", "canonical", data("code_b.json")},
      {"bounds", "--degree", "6", "--mu", "65"},
  };
  for (const auto& args : commands) {
    const CommandResult first = dispatch(args);
    const CommandResult second = dispatch(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.text == second.text);
    CHECK(first.json == second.json);
  }
}
