#include "whk/runner.hpp"

#include "whk/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace whk {

namespace {

const FiniteDimAlgebra& carrier_algebra(const DefinitionFile& f, const std::string& ref) {
  if (auto it = f.algebras.find(ref); it != f.algebras.end()) return it->second;
  if (auto it = f.xdecomps.find(ref); it != f.xdecomps.end()) return it->second.total;
  throw ParseError("carrier block '" + ref + "' is not an algebra or xdecomp");
}

Report weak_hopf_report(const DefinitionFile& f, const std::string& name) {
  const auto& h = f.weakhopfs.at(name);
  Report rep = run_weak_hopf_suite(h);
  rep.targets = {name};
  rep.note("dim", std::to_string(h.dim()));
  if (rep.passed()) {
    rep.note("is_cocommutative", is_cocommutative(h.coalgebra) ? "true" : "false");
    if (h.antipode) rep.note("is_hopf", is_hopf(h) ? "true" : "false");
    CounitalMaps cm = counital_maps(h);
    rep.note("dim_source_subalgebra", std::to_string(cm.source_subalgebra.dim()));
    rep.note("dim_target_subalgebra", std::to_string(cm.target_subalgebra.dim()));
  }
  return rep;
}

Report grouplikes_report(const DefinitionFile& f, const std::string& name) {
  const auto& h = f.weakhopfs.at(name);
  Report rep;
  rep.command = "grouplikes";
  rep.targets = {name};
  GrouplikeSet gs = enumerate_grouplikes(h);
  auto& check = rep.add_check("grouplike_axioms");
  for (std::size_t i = 0; i < gs.elements.size(); ++i) {
    ++check.cases_checked;
    if (!is_grouplike(h, gs.elements[i]))
      check.fail({{"element " + std::to_string(i)}, "axioms violated"});
  }
  auto& indep = rep.add_check("linear_independence");
  indep.cases_checked = 1;
  if (!gs.elements.empty() &&
      rank(Matrix::from_rows(gs.elements)) != gs.elements.size())
    indep.fail({{"set"}, "grouplikes are linearly dependent"});
  rep.note("count", std::to_string(gs.elements.size()));
  rep.note("complete", gs.complete ? "true" : "false");
  for (std::size_t i = 0; i < gs.elements.size(); ++i)
    rep.note("element_" + std::to_string(i), format_element(h.labels(), gs.elements[i]));
  rep.finalize();
  return rep;
}

Report gamma_report(const DefinitionFile& f, const std::string& name, std::size_t max_idem) {
  const auto& h = f.weakhopfs.at(name);
  Report rep;
  rep.command = "gamma";
  rep.targets = {name};
  FiniteGroupoid gamma = grouplike_groupoid(h);
  rep.absorb(check_groupoid(gamma), "gamma_groupoid");
  rep.note("objects", std::to_string(gamma.object_count()));
  rep.note("morphisms", std::to_string(gamma.morphism_count()));
  {
    std::string labels;
    for (const auto& m : gamma.morphisms) labels += (labels.empty() ? "" : ", ") + m;
    rep.note("morphism_labels", labels);
  }

  // Cross-check the object set against the idempotent characterization.
  auto& cross = rep.add_check("objects_match_idempotent_characterization");
  cross.cases_checked = 1;
  std::vector<Vec> via_idem = grouplike_objects_via_idempotents(h, max_idem);
  GrouplikeSet gs = enumerate_grouplikes(h);
  std::vector<Vec> objects;
  for (std::size_t x = 0; x < gamma.object_count(); ++x)
    objects.push_back(gs.elements[gamma.identity_at[x]]);
  std::sort(objects.begin(), objects.end(), vec_less);
  if (objects != via_idem) cross.fail({{"objects"}, "the two characterizations disagree"});

  // When the presentation came from a groupoid block, the round trip must
  // reproduce it on the same morphism labels.
  if (auto src = f.weakhopf_groupoid_refs.find(name); src != f.weakhopf_groupoid_refs.end()) {
    auto& round = rep.add_check("round_trip_reproduces_source_groupoid");
    round.cases_checked = 1;
    if (!isomorphic_by_labels(gamma, f.groupoids.at(src->second)))
      round.fail({{src->second}, "gamma groupoid differs from the source groupoid"});
  }
  rep.finalize();
  return rep;
}

Report action_report(const DefinitionFile& f, const std::string& name) {
  const auto& blk = f.actions.at(name);
  Report rep;
  rep.command = "check-module-algebra";
  rep.targets = {name};
  if (blk.kind == "groupoid") {
    const auto& act = *blk.groupoid_action;
    rep.absorb(check_groupoid(act.groupoid), "groupoid");
    rep.absorb(check_groupoid_module(act), "module");
    if (act.algebra_carrier) {
      rep.absorb(check_groupoid_module_algebra(act), "module_algebra");
    } else {
      rep.note("module_algebra", "skipped: carrier has no algebra structure");
    }
  } else if (blk.kind == "hmodule") {
    const auto& act = *blk.h_action;
    rep.absorb(check_h_module(act), "module");
    if (!blk.carrier_ref.empty()) {
      rep.absorb(check_h_module_algebra(act, carrier_algebra(f, blk.carrier_ref)),
                 "module_algebra");
    } else {
      rep.note("module_algebra", "skipped: carrier given only by dimension");
    }
  } else if (blk.kind == "lie") {
    rep.absorb(check_algebroid_action(*blk.lie_action), "algebroid_action");
  }
  return rep;
}

Report map_report(const DefinitionFile& f, const std::string& name) {
  const auto& blk = f.maps.at(name);
  Report rep;
  rep.command = "check-map";
  rep.targets = {name};
  if (blk.kind == "groupoid_hom") {
    rep.absorb(check_groupoid_hom(*blk.hom), "groupoid_hom");
    return rep;
  }
  auto src_f = f.weakhopf_idems.find(blk.source_ref);
  auto tgt_f = f.weakhopf_idems.find(blk.target_ref);
  if (src_f == f.weakhopf_idems.end() || tgt_f == f.weakhopf_idems.end())
    throw ParseError("weakhopf_map check needs idempotent families on both sides");
  XWeakHopf a{f.weakhopfs.at(blk.source_ref), src_f->second};
  XWeakHopf b{f.weakhopfs.at(blk.target_ref), tgt_f->second};
  rep.absorb(check_x_weak_hopf_map(*blk.matrix, a, b), "x_weak_hopf_map");
  return rep;
}

Report ideal_report(const DefinitionFile& f, const std::string& name) {
  const auto& blk = f.ideals.at(name);
  const auto& h = f.weakhopfs.at(blk.hopf_ref);
  Report rep;
  rep.command = "ideal";
  rep.targets = {name};
  Subspace ideal = ideal_from_generators(h.algebra, blk.generators);
  rep.note("dim", std::to_string(ideal.dim()));
  for (std::size_t r = 0; r < ideal.dim(); ++r)
    rep.note("basis_" + std::to_string(r), format_element(h.labels(), ideal.basis_vector(r)));
  rep.absorb(is_hopf_ideal(h, ideal).report, "hopf_ideal");
  return rep;
}

Report localunits_report(const DefinitionFile& f, const std::string& name) {
  const auto& blk = f.localunits.at(name);
  const auto& a = f.algebras.at(blk.algebra_ref);
  Report rep;
  rep.command = "local-units";
  rep.targets = {name};
  rep.absorb(validate_idempotent_family(a, blk.family), "family");
  if (!rep.passed()) return rep;
  auto witnesses = blk.witnesses;
  rep.absorb(certify_local_units(a, blk.family, witnesses), "witnesses");
  if (rep.passed()) rep.absorb(local_unit_closure_check(a, blk.family, witnesses), "closure");
  return rep;
}

Report smash_report(const DefinitionFile& f, const std::string& name) {
  const auto& in = f.smashes.at(name);
  Report rep;
  rep.command = "smash";
  rep.targets = {name};
  for (std::size_t x = 0; x < in.components.size(); ++x)
    rep.absorb(run_weak_hopf_suite(in.components[x]), "component_" + in.site_labels[x]);
  GroupoidAction act = in.as_groupoid_action();
  rep.absorb(check_groupoid_module(act), "action_module");
  rep.absorb(check_groupoid_module_algebra(act), "action_module_algebra");
  rep.absorb(check_smash_conditions(in), "smash_conditions");
  SmashProduct smash = build_smash(in);
  if (smash.algebra_only) {
    rep.note("algebra_only", "true");
    rep.absorb(check_algebra(smash.algebra), "smash_algebra");
    return rep;
  }
  rep.note("dim", std::to_string(smash.presentation().dim()));
  rep.absorb(run_weak_hopf_suite(smash.presentation()), "smash");
  rep.absorb(smash_base_idempotents(smash, in), "base_idempotents");
  rep.note("is_cocommutative",
           is_cocommutative(smash.presentation().coalgebra) ? "true" : "false");
  return rep;
}

Report der_report(const DefinitionFile& f, const std::string& name) {
  Report rep;
  rep.command = "der";
  rep.targets = {name};
  auto one = [&rep](const FiniteDimAlgebra& a, const std::string& label) {
    Subspace der = derivation_space(a);
    rep.note("dim_der_" + label, std::to_string(der.dim()));
    FiniteDimLieAlgebra l = derivation_lie_algebra(a);  // bracket closure enforced
    rep.absorb(check_lie(l), "der_lie_" + label);
  };
  if (auto it = f.xdecomps.find(name); it != f.xdecomps.end()) {
    for (std::size_t x = 0; x < it->second.component_count(); ++x) {
      if (it->second.component_dim(x) == 0) continue;
      one(it->second.components[x], it->second.site_labels[x]);
    }
    return rep;
  }
  if (auto it = f.algebras.find(name); it != f.algebras.end()) {
    one(it->second, name);
    return rep;
  }
  throw ParseError("no algebra or xdecomp block named '" + name + "'");
}

Report inner_faithful_report(const DefinitionFile& f, const std::string& name) {
  const auto& blk = f.actions.at(name);
  Report rep;
  rep.command = "inner-faithful";
  rep.targets = {name};
  HModuleAction act = [&] {
    if (blk.kind == "hmodule") return *blk.h_action;
    if (blk.kind == "groupoid") return linearize_action(*blk.groupoid_action);
    throw ParseError("inner-faithful needs an hmodule or groupoid action");
  }();
  InnerFaithfulness inf = inner_faithful(act);
  rep.note("dim_annihilator", std::to_string(inf.annihilator.dim()));
  rep.note("dim_witness", std::to_string(inf.witness.dim()));
  auto& check = rep.add_check("inner_faithful");
  check.cases_checked = 1;
  if (!inf.inner_faithful) {
    std::string w;
    for (std::size_t r = 0; r < inf.witness.dim(); ++r) {
      if (r) w += "; ";
      w += format_element(act.hopf.labels(), inf.witness.basis_vector(r));
    }
    check.fail({{"annihilating_hopf_ideal"}, w});
  }
  rep.finalize();
  return rep;
}

Report envelope_report(const DefinitionFile& f, const RunOptions& opts) {
  const auto& lie_blk = f.actions.at(f.resolve_name("action", opts.lie_action));
  const auto& grp_blk = f.actions.at(f.resolve_name("action", opts.groupoid_action));
  if (lie_blk.kind != "lie") throw ParseError("--lie-action must name a lie action");
  if (grp_blk.kind != "groupoid") throw ParseError("--groupoid-action must name a groupoid action");
  Report rep;
  rep.command = "envelope-consistency";
  rep.note("degree", std::to_string(opts.degree));
  rep.absorb(check_groupoid_module_algebra(*grp_blk.groupoid_action), "groupoid_module_algebra");
  rep.absorb(check_algebroid_action(*lie_blk.lie_action), "algebroid_action");
  rep.absorb(conjugate_action(*grp_blk.groupoid_action, *lie_blk.lie_action).report,
             "conjugation");
  rep.absorb(bounded_envelope_consistency(*lie_blk.lie_action, *grp_blk.groupoid_action,
                                          opts.degree),
             "envelope");
  return rep;
}

Report counital_report(const DefinitionFile& f, const std::string& name) {
  const auto& h = f.weakhopfs.at(name);
  Report rep;
  rep.command = "counital";
  rep.targets = {name};
  Report pre = check_weak_bialgebra(h);
  rep.absorb(pre, "weak_bialgebra");
  if (!pre.passed()) return rep;
  CounitalMaps cm = counital_maps(h);
  auto& idem = rep.add_check("counital_maps_idempotent");
  idem.cases_checked = 2;  // verified during construction
  rep.note("dim_source_subalgebra", std::to_string(cm.source_subalgebra.dim()));
  rep.note("dim_target_subalgebra", std::to_string(cm.target_subalgebra.dim()));
  for (std::size_t r = 0; r < cm.source_subalgebra.dim(); ++r)
    rep.note("source_basis_" + std::to_string(r),
             format_element(h.labels(), cm.source_subalgebra.basis_vector(r)));
  for (std::size_t r = 0; r < cm.target_subalgebra.dim(); ++r)
    rep.note("target_basis_" + std::to_string(r),
             format_element(h.labels(), cm.target_subalgebra.basis_vector(r)));
  rep.finalize();
  return rep;
}

Report decompose_report(const DefinitionFile& f, const std::string& name) {
  const auto& blk = f.actions.at(name);
  if (blk.kind != "hmodule" && blk.kind != "groupoid")
    throw ParseError("decompose needs an hmodule or groupoid action");
  HModuleAction act =
      blk.kind == "hmodule" ? *blk.h_action : linearize_action(*blk.groupoid_action);
  const FiniteDimAlgebra& carrier =
      blk.kind == "hmodule" ? carrier_algebra(f, blk.carrier_ref)
                            : blk.groupoid_action->algebra_carrier->total;
  DecompositionResult dec = decompose_from_idempotents(act, carrier);
  Report rep = dec.report;
  rep.command = "decompose";
  rep.targets = {name};
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    rep.note("block_" + std::to_string(i) + "_dim", std::to_string(dec.blocks[i].dim()));
    rep.note("local_identity_" + std::to_string(i),
             format_element(carrier.labels, dec.local_identities[i]));
  }
  return rep;
}

Report whole_file_report(const DefinitionFile& f, const RunOptions& opts) {
  Report rep;
  rep.command = "report";
  for (const auto& [type, name] : f.block_order) {
    if (type == "groupoid") {
      Report r = check_groupoid(f.groupoids.at(name));
      rep.absorb(r, name);
    } else if (type == "algebra") {
      rep.absorb(check_algebra(f.algebras.at(name)), name);
    } else if (type == "weakhopf") {
      rep.absorb(weak_hopf_report(f, name), name);
    } else if (type == "xdecomp") {
      rep.absorb(check_xdecomp(f.xdecomps.at(name)), name);
    } else if (type == "lie") {
      rep.absorb(check_lie(f.lies.at(name)), name);
    } else if (type == "algebroid") {
      for (std::size_t x = 0; x < f.algebroids.at(name).component_count(); ++x)
        rep.absorb(check_lie(f.algebroids.at(name).components[x]),
                   name + "." + f.algebroids.at(name).site_labels[x]);
    } else if (type == "action") {
      rep.absorb(action_report(f, name), name);
    } else if (type == "ideal") {
      rep.absorb(ideal_report(f, name), name);
    } else if (type == "localunits") {
      rep.absorb(localunits_report(f, name), name);
    } else if (type == "smash") {
      rep.absorb(smash_report(f, name), name);
    } else if (type == "map") {
      rep.absorb(map_report(f, name), name);
    }
  }
  (void)opts;
  return rep;
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {
      "check-groupoid", "groupoid-algebra", "check-weak-hopf",   "counital",
      "grouplikes",     "gamma",            "local-units",       "check-module-algebra",
      "decompose",      "ideal",            "inner-faithful",    "smash",
      "der",            "check-lie-action", "envelope-consistency", "report"};
  return cmds;
}

Report run_command(const DefinitionFile& f, const std::string& command, const RunOptions& opts) {
  Report rep;
  if (command == "check-groupoid") {
    std::string name = f.resolve_name("groupoid", opts.name);
    rep = check_groupoid(f.groupoids.at(name));
    rep.targets = {name};
  } else if (command == "groupoid-algebra") {
    std::string name = f.resolve_name("groupoid", opts.name);
    WeakHopfPresentation h = groupoid_algebra(f.groupoids.at(name));
    rep = run_weak_hopf_suite(h);
    rep.command = "groupoid-algebra";
    rep.targets = {name};
    rep.note("dim", std::to_string(h.dim()));
    rep.note("is_hopf", is_hopf(h) ? "true" : "false");
    rep.note("is_cocommutative", is_cocommutative(h.coalgebra) ? "true" : "false");
  } else if (command == "check-weak-hopf") {
    rep = weak_hopf_report(f, f.resolve_name("weakhopf", opts.name));
    rep.command = "check-weak-hopf";
  } else if (command == "counital") {
    rep = counital_report(f, f.resolve_name("weakhopf", opts.name));
  } else if (command == "grouplikes") {
    rep = grouplikes_report(f, f.resolve_name("weakhopf", opts.name));
  } else if (command == "gamma") {
    rep = gamma_report(f, f.resolve_name("weakhopf", opts.name), opts.max_idempotents);
  } else if (command == "local-units") {
    rep = localunits_report(f, f.resolve_name("localunits", opts.name));
  } else if (command == "check-module-algebra") {
    rep = action_report(f, f.resolve_name("action", opts.name));
  } else if (command == "decompose") {
    rep = decompose_report(f, f.resolve_name("action", opts.name));
  } else if (command == "ideal") {
    rep = ideal_report(f, f.resolve_name("ideal", opts.name));
  } else if (command == "inner-faithful") {
    rep = inner_faithful_report(f, f.resolve_name("action", opts.name));
  } else if (command == "smash") {
    rep = smash_report(f, f.resolve_name("smash", opts.name));
  } else if (command == "der") {
    std::string name = opts.name;
    if (name.empty()) {
      if (f.xdecomps.size() == 1 && f.algebras.empty()) {
        name = f.xdecomps.begin()->first;
      } else {
        name = f.resolve_name("algebra", opts.name);
      }
    }
    rep = der_report(f, name);
  } else if (command == "check-lie-action") {
    const std::string name = f.resolve_name("action", opts.name);
    if (f.actions.at(name).kind != "lie") throw ParseError("'" + name + "' is not a lie action");
    rep = action_report(f, name);
    rep.command = "check-lie-action";
  } else if (command == "envelope-consistency") {
    rep = envelope_report(f, opts);
  } else if (command == "report") {
    rep = whole_file_report(f, opts);
  } else {
    throw ParseError("unknown command '" + command + "'");
  }
  rep.finalize();
  return rep;
}

int exit_code_for(const Report& report) { return report.passed() ? 0 : 1; }

std::vector<std::string> corpus_files() {
  namespace fs = std::filesystem;
  std::string dir;
  if (const char* env = std::getenv("WHK_CORPUS_DIR"); env && *env) {
    dir = env;
  } else {
#ifdef WHK_DEFAULT_CORPUS_DIR
    dir = WHK_DEFAULT_CORPUS_DIR;
#endif
  }
  std::vector<std::string> files;
  if (dir.empty() || !fs::exists(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace whk
