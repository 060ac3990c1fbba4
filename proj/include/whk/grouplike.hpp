#pragma once

#include "whk/groupoid.hpp"
#include "whk/splitting.hpp"
#include "whk/walg.hpp"

#include <optional>
#include <vector>

namespace whk {

struct GrouplikeSet {
  /// Coordinate vectors in the basis of H, sorted lexicographically.
  std::vector<Vec> elements;
  /// True when the enumeration is provably exhaustive over Q.
  bool complete = true;
};

/// Exact test of Delta(h) = h (x) h and eps(h) = 1.
bool is_grouplike(const WeakHopfPresentation& h, const Vec& v);

/// Grouplikes of H are the rational unital algebra characters of the dual
/// algebra H*; enumerated through its semisimple commutative quotient.
GrouplikeSet enumerate_grouplikes(const WeakHopfPresentation& h);

/// Human-readable name for a grouplike: the basis label when the vector is
/// a standard basis vector, otherwise a synthesized "gl<i>" name.
std::string grouplike_label(const WeakHopfPresentation& h, const Vec& v, std::size_t index);

/// The groupoid of grouplike elements: objects are the grouplikes inside
/// the target counital subalgebra, each grouplike is a morphism from its
/// source projection to its target projection, inverses via the antipode.
/// Requires a complete enumeration and an antipode.
FiniteGroupoid grouplike_groupoid(const WeakHopfPresentation& h);

/// Object set of the grouplike groupoid computed by the independent
/// idempotent characterization: nonzero idempotents p of the commutative
/// algebra H_s intersect H_t with dim(H_min p) = 1, H_min = H_s H_t.
std::vector<Vec> grouplike_objects_via_idempotents(const WeakHopfPresentation& h,
                                                   std::size_t max_idempotents = 16);

/// When dim(H_s intersect H_t) = 1, H must be Hopf or have no grouplike
/// objects at all; vacuous pass otherwise.
Report check_grouplike_dichotomy(const WeakHopfPresentation& h);

// --- local units --------------------------------------------------------

/// A family of nonzero orthogonal idempotents indexed by site labels.
/// Not required to be central or to sum to 1.
struct IdempotentFamily {
  std::vector<std::string> site_labels;
  std::vector<Vec> idempotents;
};

Report validate_idempotent_family(const FiniteDimAlgebra& a, const IdempotentFamily& f);

/// For a in e_y A e_x, the unique b in e_x A e_y with ab = e_y and
/// ba = e_x, or nullopt. Returns nullopt as well when a lies outside
/// e_y A e_x.
std::optional<Vec> local_inverse(const FiniteDimAlgebra& a, const IdempotentFamily& f,
                                 const Vec& elem, std::size_t x, std::size_t y);

struct LocalUnitWitness {
  Vec element;
  std::size_t src, tgt;  // indices into the idempotent family
  std::optional<Vec> inverse;
};

/// Certifies each witness individually (fills in local inverses).
Report certify_local_units(const FiniteDimAlgebra& a, const IdempotentFamily& f,
                           std::vector<LocalUnitWitness>& witnesses);

/// For every composable witness pair, the product is again a local unit
/// with the composite inverse.
Report local_unit_closure_check(const FiniteDimAlgebra& a, const IdempotentFamily& f,
                                const std::vector<LocalUnitWitness>& witnesses);

}  // namespace whk
