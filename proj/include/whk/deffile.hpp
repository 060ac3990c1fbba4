#pragma once

#include "whk/actions.hpp"
#include "whk/grouplike.hpp"
#include "whk/groupoid.hpp"
#include "whk/ideals.hpp"
#include "whk/lie.hpp"
#include "whk/poly.hpp"
#include "whk/smash.hpp"
#include "whk/walg.hpp"
#include "whk/xdecomp.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace whk {

/// A parsed definition file: named blocks resolved into kernel objects.
/// References between blocks resolve at parse time; dangling references
/// raise ParseError naming the missing block.
struct DefinitionFile {
  struct ActionBlock {
    std::string kind;  // "groupoid" | "lie" | "hmodule"
    std::optional<GroupoidAction> groupoid_action;
    std::optional<LieAction> lie_action;
    std::optional<HModuleAction> h_action;
    std::string structure_ref;  // acting groupoid / algebroid / weakhopf
    std::string carrier_ref;    // algebra used for module-algebra checks
  };
  struct IdealBlock {
    std::string hopf_ref;
    std::vector<Vec> generators;
  };
  struct LocalUnitsBlock {
    std::string algebra_ref;
    IdempotentFamily family;
    std::vector<LocalUnitWitness> witnesses;
  };
  struct MapBlock {
    std::string kind;  // "groupoid_hom" | "weakhopf_map"
    std::optional<GroupoidHom> hom;
    std::string source_ref, target_ref;
    std::optional<Matrix> matrix;
  };

  std::map<std::string, FiniteGroupoid> groupoids;
  std::map<std::string, FiniteDimAlgebra> algebras;
  std::map<std::string, TruncatedPolyAlgebra> polys;  // subset of algebras
  std::map<std::string, WeakHopfPresentation> weakhopfs;
  std::map<std::string, IdempotentFamily> weakhopf_idems;
  std::map<std::string, std::string> weakhopf_groupoid_refs;  // for gamma round trips
  std::map<std::string, XDecompAlgebra> xdecomps;
  std::map<std::string, std::vector<std::string>> xdecomp_refs;  // component algebra names
  std::map<std::string, FiniteDimLieAlgebra> lies;
  std::map<std::string, XLieAlgebroid> algebroids;
  std::map<std::string, std::vector<std::string>> algebroid_refs;  // lie block names
  std::map<std::string, ActionBlock> actions;
  std::map<std::string, IdealBlock> ideals;
  std::map<std::string, LocalUnitsBlock> localunits;
  std::map<std::string, SmashInput> smashes;
  std::map<std::string, std::string> smash_groupoid_refs;
  std::map<std::string, std::vector<std::string>> smash_component_refs;
  std::map<std::string, MapBlock> maps;
  /// (type, name) in file order; drives the whole-file report command.
  std::vector<std::pair<std::string, std::string>> block_order;

  /// The unique block name of the given type, or the explicitly requested
  /// one; ParseError if absent or ambiguous.
  std::string resolve_name(const std::string& type, const std::string& requested) const;
};

DefinitionFile parse_definition_text(const std::string& text, const std::string& origin);
DefinitionFile parse_definition_file(const std::string& path);

/// Canonical fully-expanded form; parse(serialize(g)) reproduces g.
nlohmann::json serialize_definition(const DefinitionFile& f);

}  // namespace whk
