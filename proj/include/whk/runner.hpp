#pragma once

#include "whk/deffile.hpp"
#include "whk/report.hpp"

#include <string>
#include <vector>

namespace whk {

struct RunOptions {
  std::string name;             // target block, when the file has several
  std::string lie_action;       // envelope-consistency
  std::string groupoid_action;  // envelope-consistency
  std::size_t degree = 3;
  std::size_t max_idempotents = 16;
};

/// Executes one CLI command against a parsed definition file. Check
/// failures land in the report; operational problems throw.
Report run_command(const DefinitionFile& file, const std::string& command,
                   const RunOptions& opts = {});

/// Exit code contract: 0 all checks passed, 1 some check failed.
/// Operational errors are reported by the caller as exit code 2.
int exit_code_for(const Report& report);

/// The bundled corpus: *.json files under WHK_CORPUS_DIR or the built-in
/// location, sorted by name.
std::vector<std::string> corpus_files();

const std::vector<std::string>& known_commands();

}  // namespace whk
