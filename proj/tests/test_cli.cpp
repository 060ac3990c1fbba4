#include "whk/deffile.hpp"
#include "whk/runner.hpp"

#include "doctest.h"

#include <nlohmann/json.hpp>

#include <filesystem>

using namespace whk;

namespace {

std::string corpus(const std::string& name) {
  return std::string(WHK_CORPUS_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parse errors carry actionable messages") {
  CHECK_THROWS_WITH_AS(parse_definition_text("{\"blocks\": []}", "t"),
                       doctest::Contains("no blocks"), ParseError);
  CHECK_THROWS_AS(parse_definition_text("not json", "t"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_definition_text(
          R"({"blocks": [{"type": "weakhopf", "name": "H", "groupoid": "G7"}]})", "t"),
      doctest::Contains("G7"), ParseError);
  // Non-rational scalars are rejected.
  CHECK_THROWS_AS(parse_definition_text(R"({"blocks": [{"type": "algebra", "name": "A",
      "labels": ["u"], "mult": [[0,0,0,1,1]], "unit": [0.5]}]})",
                                        "t"),
                  ParseError);
}

TEST_CASE("corpus files parse and serialize round-trip") {
  for (const auto& entry : std::filesystem::directory_iterator(WHK_CORPUS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    DefinitionFile f = parse_definition_file(entry.path().string());
    std::string once = serialize_definition(f).dump(2);
    DefinitionFile f2 = parse_definition_text(once, "round1");
    std::string twice = serialize_definition(f2).dump(2);
    CHECK(once == twice);
  }
}

TEST_CASE("run_command exit codes") {
  DefinitionFile ok = parse_definition_file(corpus("two_object_swap.json"));
  Report pass = run_command(ok, "check-module-algebra", {.name = "swap"});
  CHECK(exit_code_for(pass) == 0);

  DefinitionFile bad = parse_definition_file(corpus("sign_twist_module.json"));
  Report fail = run_command(bad, "check-module-algebra", {.name = "sign_twist"});
  CHECK(exit_code_for(fail) == 1);

  CHECK_THROWS_AS(run_command(ok, "no-such-command", {}), ParseError);
  CHECK_THROWS_AS(run_command(ok, "gamma", {.name = "nope"}), ParseError);
}

TEST_CASE("json and text renderings agree on statuses") {
  DefinitionFile bad = parse_definition_file(corpus("sign_twist_module.json"));
  Report rep = run_command(bad, "report", {});
  nlohmann::json j = rep.to_json();
  std::string text = rep.to_text();
  CHECK(j.at("status") == "fail");
  CHECK(text.find("result: FAIL") != std::string::npos);
  for (const auto& c : j.at("checks")) {
    std::string line = (c.at("status") == "pass" ? "PASS  " : "FAIL  ") +
                       c.at("name").get<std::string>();
    CHECK(text.find(line) != std::string::npos);
  }
}

TEST_CASE("reports are deterministic in-process") {
  DefinitionFile f = parse_definition_file(corpus("domain_two_loops.json"));
  std::string a = run_command(f, "report", {}).to_json().dump(2);
  std::string b = run_command(parse_definition_file(corpus("domain_two_loops.json")), "report", {})
                      .to_json()
                      .dump(2);
  CHECK(a == b);
}

TEST_CASE("all documented commands are registered") {
  const auto& cmds = known_commands();
  for (const char* c :
       {"check-groupoid", "groupoid-algebra", "check-weak-hopf", "counital", "grouplikes",
        "gamma", "local-units", "check-module-algebra", "decompose", "ideal", "inner-faithful",
        "smash", "der", "check-lie-action", "envelope-consistency", "report"}) {
    CHECK(std::find(cmds.begin(), cmds.end(), std::string(c)) != cmds.end());
  }
}
