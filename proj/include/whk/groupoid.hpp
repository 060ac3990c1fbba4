#pragma once

#include "whk/walg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace whk {

/// Finite groupoid: a small category with all morphisms invertible, given
/// by explicit source/target/composition/inverse tables. check_groupoid
/// verifies the axioms by exhaustion; construction only validates shape.
struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<std::size_t> src, tgt;  // morphism -> object
  /// comp[(g,h)] = g∘h, present exactly when s(g) = t(h).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
  std::vector<std::size_t> inv;          // morphism -> morphism
  std::vector<std::size_t> identity_at;  // object -> identity morphism

  std::size_t object_count() const { return objects.size(); }
  std::size_t morphism_count() const { return morphisms.size(); }
  void require_shape() const;
  std::optional<std::size_t> compose(std::size_t g, std::size_t h) const;
  std::optional<std::size_t> object_index(const std::string& label) const;
  std::optional<std::size_t> morphism_index(const std::string& label) const;
};

Report check_groupoid(const FiniteGroupoid& g);

struct GroupoidHom {
  FiniteGroupoid source, target;
  std::vector<std::size_t> object_map;    // source object -> target object
  std::vector<std::size_t> morphism_map;  // source morphism -> target morphism
  /// When set, the object map is additionally required to be the identity
  /// on shared object labels.
  bool x_preserving = false;
};

Report check_groupoid_hom(const GroupoidHom& f);

/// Basis order of the groupoid algebra: identities first (in object
/// order), then the remaining morphisms in declaration order. Entry p of
/// the result is the morphism index sitting at basis slot p.
std::vector<std::size_t> groupoid_algebra_basis(const FiniteGroupoid& g);

/// The groupoid algebra with composition-or-zero product, grouplike
/// comultiplication, counit 1, and antipode g -> g^{-1}.
WeakHopfPresentation groupoid_algebra(const FiniteGroupoid& g);

/// Matrix of the linear extension of a groupoid hom, mapping the basis of
/// the source groupoid algebra to that of the target.
Matrix linearize_hom(const GroupoidHom& f);

/// Coproduct groupoid; throws on label collisions.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// True when the identity map on morphism labels is an isomorphism of
/// groupoids (object labels are matched through identity morphisms).
bool isomorphic_by_labels(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace whk
