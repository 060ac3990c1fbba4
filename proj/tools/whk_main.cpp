#include "whk/deffile.hpp"
#include "whk/errors.hpp"
#include "whk/runner.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"whk - exact checks for weak Hopf algebras, groupoid algebras and their actions"};
  app.require_subcommand(1);

  std::string file, name, format = "text", lie_action, groupoid_action;
  std::size_t degree = 3, max_idempotents = 16;

  auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
    if (needs_file) cmd->add_option("file", file, "definition file (JSON)")->required();
    cmd->add_option("--name", name, "target block name");
    cmd->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--degree", degree, "degree bound for envelope words");
    cmd->add_option("--max-idempotents", max_idempotents,
                    "guard on primitive idempotent enumeration");
    cmd->add_option("--lie-action", lie_action, "lie action block (envelope-consistency)");
    cmd->add_option("--groupoid-action", groupoid_action,
                    "groupoid action block (envelope-consistency)");
  };

  for (const auto& c : whk::known_commands()) add_common(app.add_subcommand(c));
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "list the bundled example files");
  add_common(corpus_cmd, false);

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();

  try {
    if (sub->get_name() == "corpus") {
      for (const auto& f : whk::corpus_files()) std::cout << f << "\n";
      return 0;
    }
    auto start = std::chrono::steady_clock::now();
    whk::DefinitionFile def = whk::parse_definition_file(file);
    whk::RunOptions opts;
    opts.name = name;
    opts.degree = degree;
    opts.max_idempotents = max_idempotents;
    opts.lie_action = lie_action;
    opts.groupoid_action = groupoid_action;
    whk::Report rep = whk::run_command(def, sub->get_name(), opts);
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (format == "json") {
      std::cout << rep.to_json().dump(2) << "\n";
    } else {
      std::cout << rep.to_text();
    }
    return whk::exit_code_for(rep);
  } catch (const whk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
