#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "facetmine/row012e.hpp"
#include "support.hpp"

namespace {

struct CliResult {
  int status = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(FACETMINE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  const int raw = pclose(pipe);
  if (WIFEXITED(raw)) result.status = WEXITSTATUS(raw);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  return lines;
}

std::string fixture(const std::string& name) { return testsupport::data_path(name); }

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("cli lists facets in canonical order") {
  const auto result = run_cli("facets " + fixture("table4.dat") + " --min-support 2");
  CHECK(result.status == 0);
  CHECK(result.output ==
        "1 2 3 5 6 7\n"
        "1 2 4 5 7 8\n"
        "1 2 5 7 9\n"
        "1 3 6 7 9\n"
        "2 4 5 8 9\n"
        "3 4 6 7 8\n"
        "4 7 8 9\n");
}

TEST_CASE("cli compresses in discovery order") {
  const auto result = run_cli("compress " + fixture("table1.dat") + " --min-support 2");
  CHECK(result.status == 0);
  CHECK(result.output ==
        "2 2 2 2 2 2 2 2 2 2 2 2 0 0 0 0  4096\n"
        "2 2 2 2 2 2 2 2 0 0 0 0 e e e e  3840\n"
        "2 2 2 2 0 0 0 0 e1 e1 e1 e1 e2 e2 e2 e2  3600\n"
        "0 0 0 0 e1 e1 e1 e1 e2 e2 e2 e2 e3 e3 e3 e3  3375\n");
}

TEST_CASE("cli honors an explicit facet order") {
  const auto order = write_temp("facetmine_order_blocks.dat",
                                "5 6 7 8 9 10 11 12 13 14 15 16\n"
                                "1 2 3 4 9 10 11 12 13 14 15 16\n"
                                "1 2 3 4 5 6 7 8 13 14 15 16\n"
                                "1 2 3 4 5 6 7 8 9 10 11 12\n");
  const auto result = run_cli("compress " + fixture("table1.dat") +
                              " --min-support 2 --order-file " + order.string());
  CHECK(result.status == 0);
  CHECK(result.output ==
        "0 0 0 0 2 2 2 2 2 2 2 2 2 2 2 2  4096\n"
        "e e e e 0 0 0 0 2 2 2 2 2 2 2 2  3840\n"
        "e1 e1 e1 e1 e2 e2 e2 e2 0 0 0 0 2 2 2 2  3600\n"
        "e1 e1 e1 e1 e2 e2 e2 e2 e3 e3 e3 e3 0 0 0 0  3375\n");
}

TEST_CASE("cli counting verbs emit single numbers") {
  CHECK(run_cli("count " + fixture("table1.dat") + " --min-support 2").output == "14911\n");
  CHECK(run_cli("count-k " + fixture("table1.dat") + " --min-support 2 --k 7").output ==
        "3120\n");
  CHECK(run_cli("supersets " + fixture("table1.dat") +
                " --min-support 2 --set \"7 8 9\"").output == "992\n");
  CHECK(run_cli("delta " + fixture("table4.dat") + " --min-support 2").output == "114\n");
  CHECK(run_cli("count " + fixture("table4.dat") + " --min-support 2").output == "173\n");
}

TEST_CASE("cli sieves a plain set family") {
  const auto result = run_cli("maxsets " + fixture("table3.dat"));
  CHECK(result.status == 0);
  CHECK(result.output ==
        "2 4 5 7 8 9\n"
        "2 3 5 8\n"
        "1 2 5 6 7 9\n"
        "6 7 8\n"
        "1 3 4 6 7 9\n");
}

TEST_CASE("cli verify reports ok on the fixtures") {
  const auto t4 = run_cli("verify " + fixture("table4.dat") + " --min-support 2");
  CHECK(t4.status == 0);
  CHECK(t4.output == "ok\n");
  const auto t1 = run_cli("verify " + fixture("table1.dat") + " --min-support 3");
  CHECK(t1.status == 0);
  CHECK(t1.output == "ok\n");
}

TEST_CASE("cli json output is consistent with the text output") {
  const auto text = run_cli("compress " + fixture("table1.dat") + " --min-support 2");
  const auto json = run_cli("compress " + fixture("table1.dat") + " --min-support 2"
                            " --format json");
  CHECK(json.status == 0);
  const auto payload = nlohmann::json::parse(json.output);
  CHECK(payload.at("universe") == 16);
  CHECK(payload.at("alpha") == 2);
  CHECK(payload.at("total") == "14911");
  CHECK(payload.at("facets").size() == 4);
  REQUIRE(payload.at("rows").size() == 4);

  const auto text_lines = lines_of(text.output);
  REQUIRE(text_lines.size() == 4);
  const facetmine::Universe u(16);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& row = payload.at("rows")[i];
    const std::string& line = text_lines[i];
    const std::size_t gap = line.rfind("  ");
    REQUIRE(gap != std::string::npos);
    const auto parsed = facetmine::Row012e::from_text(line.substr(0, gap), u);
    CHECK(row.at("count") == line.substr(gap + 2));
    CHECK(row.at("ones").get<std::vector<int>>() == parsed.ones().items());
    CHECK(row.at("zeros").get<std::vector<int>>() == parsed.zeros().items());
    CHECK(row.at("dontcares").get<std::vector<int>>() == parsed.dontcares().items());
    REQUIRE(row.at("egroups").size() == parsed.egroups().size());
    for (std::size_t g = 0; g < parsed.egroups().size(); ++g)
      CHECK(row.at("egroups")[g].get<std::vector<int>>() == parsed.egroups()[g].items());
  }

  const auto facets_json =
      run_cli("facets " + fixture("table4.dat") + " --min-support 2 --format json");
  const auto facets = nlohmann::json::parse(facets_json.output);
  CHECK(facets.at("facets").size() == 7);
  CHECK(facets.at("facets")[0].get<std::vector<int>>() ==
        std::vector<int>{1, 2, 3, 5, 6, 7});

  const auto count_json =
      run_cli("count " + fixture("table4.dat") + " --min-support 2 --format json");
  CHECK(nlohmann::json::parse(count_json.output).at("total") == "173");

  const auto super_json = run_cli("supersets " + fixture("table1.dat") +
                                  " --min-support 2 --set \"7 8 9\" --format json");
  const auto super = nlohmann::json::parse(super_json.output);
  CHECK(super.at("count") == "992");
  CHECK(super.at("per_row").size() == 4);
}

TEST_CASE("cli runs are deterministic") {
  const std::string args = "compress " + fixture("table4.dat") + " --min-support 2";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.status == second.status);
  CHECK(first.output == second.output);

  const auto plain = run_cli("facets " + fixture("table4.dat") + " --min-support 2");
  const auto seeded = run_cli("facets " + fixture("table4.dat") + " --min-support 2 --seed 99");
  CHECK(plain.output == seeded.output);
}

TEST_CASE("cli rejects bad invocations with exit code 2") {
  CHECK(run_cli("facets " + fixture("table4.dat")).status == 2);  // no --min-support
  CHECK(run_cli("count /nonexistent.dat --min-support 2").status == 2);
  CHECK(run_cli("facets " + fixture("table4.dat") + " --min-support 0").status == 2);
  CHECK(run_cli("count-k " + fixture("table1.dat") + " --min-support 2 --k 17").status == 2);
  CHECK(run_cli("facets " + fixture("table4.dat") + " --min-support 2 --universe 3").status ==
        2);
  CHECK(run_cli("supersets " + fixture("table1.dat") +
                " --min-support 2 --set \"7 x\"").status == 2);

  const auto bad = write_temp("facetmine_bad_input.dat", "1 2\n3 x4\n");
  const auto parse = run_cli("count " + bad.string() + " --min-support 2");
  CHECK(parse.status == 2);
  CHECK(parse.output.find("line 2, column 3") != std::string::npos);

  const auto wrong_order = write_temp("facetmine_wrong_order.dat", "1 2 3\n");
  CHECK(run_cli("compress " + fixture("table1.dat") + " --min-support 2 --order-file " +
                wrong_order.string())
            .status == 2);

  CHECK(run_cli("facets " + fixture("table4.dat") + " --min-support 2").status == 0);
}
