#include "whk/deffile.hpp"
#include "whk/errors.hpp"
#include "whk/runner.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

/// A parsed definition file plus the command surface of the CLI.
class Workspace {
 public:
  explicit Workspace(const std::string& path) : file_(whk::parse_definition_file(path)) {}

  static Workspace from_text(const std::string& text) {
    return Workspace(whk::parse_definition_text(text, "<string>"));
  }

  std::vector<std::pair<std::string, std::string>> blocks() const { return file_.block_order; }

  std::string serialize() const { return whk::serialize_definition(file_).dump(2); }

  std::pair<int, std::string> run(const std::string& command, const std::string& name,
                                  const std::string& lie_action,
                                  const std::string& groupoid_action, std::size_t degree,
                                  std::size_t max_idempotents) const {
    whk::RunOptions opts;
    opts.name = name;
    opts.lie_action = lie_action;
    opts.groupoid_action = groupoid_action;
    opts.degree = degree;
    opts.max_idempotents = max_idempotents;
    whk::Report rep = whk::run_command(file_, command, opts);
    return {whk::exit_code_for(rep), rep.to_json().dump(2)};
  }

  bool is_hopf(const std::string& name) const {
    return whk::is_hopf(file_.weakhopfs.at(file_.resolve_name("weakhopf", name)));
  }

  bool is_cocommutative(const std::string& name) const {
    return whk::is_cocommutative(
        file_.weakhopfs.at(file_.resolve_name("weakhopf", name)).coalgebra);
  }

  std::size_t grouplike_count(const std::string& name) const {
    return whk::enumerate_grouplikes(file_.weakhopfs.at(file_.resolve_name("weakhopf", name)))
        .elements.size();
  }

  bool inner_faithful(const std::string& action_name) const {
    const auto& blk = file_.actions.at(file_.resolve_name("action", action_name));
    whk::HModuleAction act = blk.kind == "hmodule"
                                 ? *blk.h_action
                                 : whk::linearize_action(*blk.groupoid_action);
    return whk::inner_faithful(act).inner_faithful;
  }

 private:
  explicit Workspace(whk::DefinitionFile f) : file_(std::move(f)) {}
  whk::DefinitionFile file_;
};

}  // namespace

PYBIND11_MODULE(_whk, m) {
  m.doc() = "Exact checks for weak Hopf algebras, groupoid algebras and their actions";

  // Base first: translators run in reverse registration order, so the
  // derived ParseError must be matched before the catch-all Error.
  auto base = py::register_exception<whk::Error>(m, "WhkError");
  py::register_exception<whk::ParseError>(m, "WhkParseError", base.ptr());

  py::class_<Workspace>(m, "Workspace")
      .def(py::init<const std::string&>(), py::arg("path"))
      .def_static("from_text", &Workspace::from_text, py::arg("text"))
      .def("blocks", &Workspace::blocks)
      .def("serialize", &Workspace::serialize)
      .def("run", &Workspace::run, py::arg("command"), py::arg("name") = std::string(),
           py::arg("lie_action") = std::string(), py::arg("groupoid_action") = std::string(),
           py::arg("degree") = std::size_t(3), py::arg("max_idempotents") = std::size_t(16))
      .def("is_hopf", &Workspace::is_hopf, py::arg("name") = std::string())
      .def("is_cocommutative", &Workspace::is_cocommutative, py::arg("name") = std::string())
      .def("grouplike_count", &Workspace::grouplike_count, py::arg("name") = std::string())
      .def("inner_faithful", &Workspace::inner_faithful, py::arg("action_name") = std::string());

  m.def("corpus_files", &whk::corpus_files, "Bundled example definition files");
  m.def("commands", [] { return whk::known_commands(); });
}
