#pragma once

#include "whk/grouplike.hpp"
#include "whk/groupoid.hpp"
#include "whk/subspace.hpp"
#include "whk/walg.hpp"
#include "whk/xdecomp.hpp"

#include <map>
#include <optional>

namespace whk {

/// A groupoid acting on an X-decomposed carrier by one matrix per
/// morphism, mapping the source component to the target component. The
/// carrier is an XDecompAlgebra for module-algebra checks, or plain
/// per-object dimensions for module-only checks.
struct GroupoidAction {
  FiniteGroupoid groupoid;
  std::optional<XDecompAlgebra> algebra_carrier;
  std::vector<std::size_t> dims;       // per object
  std::map<std::size_t, Matrix> maps;  // morphism -> matrix

  const Matrix& map_of(std::size_t m) const;
  std::size_t total_dim() const;
  void require_shape() const;
};

/// Structure maps compose, identities act as identity, every map is
/// invertible (via the inverse morphism).
Report check_groupoid_module(const GroupoidAction& act);

/// Additionally: multiplicativity on component basis pairs and unitality
/// per morphism. Requires an algebra carrier.
Report check_groupoid_module_algebra(const GroupoidAction& act);

/// Componentwise Kronecker product of two actions of the same groupoid.
GroupoidAction tensor_action(const GroupoidAction& a, const GroupoidAction& b);

/// Monoidal unit: every component one-dimensional, identity maps.
GroupoidAction unit_action(const FiniteGroupoid& g);

/// One linear map per object intertwining the structure maps.
Report check_module_morphism(const GroupoidAction& v, const GroupoidAction& w,
                             const std::vector<Matrix>& components);

/// An action repackaged as a functor into the groupoid of invertible
/// unital algebra maps between components, with per-morphism certificates.
struct CertifiedFunctor {
  FiniteGroupoid groupoid;
  XDecompAlgebra carrier;
  std::map<std::size_t, Matrix> images;
  Report certificate;
};

CertifiedFunctor action_to_functor(const GroupoidAction& act);
GroupoidAction functor_to_action(const CertifiedFunctor& f);

/// A weak Hopf algebra acting on a finite-dimensional carrier, one matrix
/// per basis element.
struct HModuleAction {
  WeakHopfPresentation hopf;
  std::size_t carrier_dim = 0;
  std::vector<Matrix> rho;

  Matrix rho_of(const Vec& h) const;
  void require_shape() const;
};

/// rho extends to a unital algebra map H -> End(carrier).
Report check_h_module(const HModuleAction& act);

/// h.(ab) = (h1.a)(h2.b) and h.1 = eps_t(h).1 on all basis tuples.
Report check_h_module_algebra(const HModuleAction& act, const FiniteDimAlgebra& carrier);

/// The groupoid algebra action with rho(g) the structure map padded by
/// zero outside the source component.
HModuleAction linearize_action(const GroupoidAction& act);

/// Kernel of h -> rho(h).
Subspace action_annihilator(const HModuleAction& act);

struct XAlgebra {
  FiniteDimAlgebra algebra;
  IdempotentFamily idems;  // must sum to 1
};

/// Unital algebra map preserving the idempotent family.
Report check_x_algebra_map(const Matrix& f, const XAlgebra& a, const XAlgebra& b);

struct XWeakHopf {
  WeakHopfPresentation hopf;
  IdempotentFamily idems;
};

/// X-algebra map that is also a coalgebra map and intertwines antipodes.
Report check_x_weak_hopf_map(const Matrix& f, const XWeakHopf& a, const XWeakHopf& b);

struct DecompositionResult {
  Report report;
  std::vector<Vec> hopf_idempotents;   // primitive idempotents of H_t used
  std::vector<Vec> local_identities;   // e_i . 1_A, in carrier coordinates
  std::vector<Subspace> blocks;        // (e_i . 1_A) A
  std::optional<XDecompAlgebra> decomposition;
};

/// Prop-style decomposition of a module algebra over H with H_s = H_t:
/// components are (e_i . 1_A) A for the primitive idempotents e_i of H_t.
DecompositionResult decompose_from_idempotents(
    const HModuleAction& act, const FiniteDimAlgebra& carrier,
    const std::optional<std::vector<Vec>>& supplied_idempotents = std::nullopt);

}  // namespace whk
