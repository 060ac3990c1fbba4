#pragma once

#include "whk/actions.hpp"
#include "whk/groupoid.hpp"
#include "whk/walg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace whk {

/// Ingredients of a smash product A # kG: a direct sum of weak Hopf
/// algebras indexed by the groupoid's objects, and a groupoid action whose
/// structure maps send the source component to the target component.
struct SmashInput {
  std::vector<std::string> site_labels;
  std::vector<WeakHopfPresentation> components;
  FiniteGroupoid groupoid;  // objects must equal site_labels
  std::map<std::size_t, Matrix> maps;

  void require_shape() const;
  WeakHopfPresentation direct_sum_hopf() const;
  /// The action as a groupoid action on the X-decomposed algebra carrier.
  GroupoidAction as_groupoid_action() const;
};

/// The coalgebra-compatibility conditions: Delta(g.a) = g.a1 (x) g.a2 and
/// eps(g.a) = eps(a), for every morphism and source-component basis
/// element; together with the module-algebra property this certifies each
/// structure map as a weak-bialgebra isomorphism.
Report check_smash_conditions(const SmashInput& input);

/// The smash product on the basis {a # g : a in basis of H_{t(g)}}.
/// When the compatibility conditions fail, only the algebra part is built
/// and algebra_only is set.
struct SmashProduct {
  bool algebra_only = false;
  FiniteDimAlgebra algebra;
  std::optional<WeakHopfPresentation> full;
  // Per basis slot: the groupoid morphism and the index within H_{t(g)}.
  std::vector<std::pair<std::size_t, std::size_t>> slot_morphism_component;

  const WeakHopfPresentation& presentation() const;
};

SmashProduct build_smash(const SmashInput& input);

/// The elements f_x = 1_{H_x} # e_x: complete orthogonal primitive
/// grouplike idempotents spanning the counital subalgebras of the smash.
Report smash_base_idempotents(const SmashProduct& smash, const SmashInput& input);

struct SmashActionResult {
  Report compatibility;
  std::optional<HModuleAction> action;
};

/// Joint action rho(a # g) = rho_H(a) rho_G(g) on a common carrier,
/// defined when rho_H(g.h) = rho_G(g) rho_H(h) rho_G(g^{-1}).
/// rho_G is indexed like the groupoid algebra of input.groupoid.
SmashActionResult smash_module_action(const SmashProduct& smash, const SmashInput& input,
                                      const HModuleAction& act_h, const HModuleAction& act_g);

}  // namespace whk
