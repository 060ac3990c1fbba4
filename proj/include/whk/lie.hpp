#pragma once

#include "whk/actions.hpp"
#include "whk/subspace.hpp"
#include "whk/xdecomp.hpp"

#include <map>
#include <vector>

namespace whk {

/// Lie algebra by structure constants: [b_i, b_j] = sum_k c b_k.
struct FiniteDimLieAlgebra {
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> bracket;

  std::size_t dim() const { return labels.size(); }
  void require_shape() const;
  Vec bracket_of(const Vec& x, const Vec& y) const;
};

/// Antisymmetry and the Jacobi identity on all basis triples.
Report check_lie(const FiniteDimLieAlgebra& l);

/// gl_n with the elementary-matrix basis E_i_j and commutator bracket.
FiniteDimLieAlgebra general_linear_lie(std::size_t n, const std::string& prefix = "E");

/// Lie algebra spanned by given (independent) matrices under commutators.
FiniteDimLieAlgebra lie_from_matrices(const std::vector<std::string>& labels,
                                      const std::vector<Matrix>& mats);

/// Solutions D of the Leibniz system D(ab) = a D(b) + D(a) b, as a
/// subspace of gl(A) flattened row-major.
Subspace derivation_space(const FiniteDimAlgebra& a);

/// Der(A) as a Lie algebra on the echelon basis of derivation_space;
/// verifies bracket closure.
FiniteDimLieAlgebra derivation_lie_algebra(const FiniteDimAlgebra& a);

/// Direct sum of Lie algebras with bracket defined only within components.
struct XLieAlgebroid {
  std::vector<std::string> site_labels;
  std::vector<FiniteDimLieAlgebra> components;

  std::size_t component_count() const { return components.size(); }
};

/// Componentwise derivation algebroid of an X-decomposable algebra.
XLieAlgebroid derivation_algebroid(const XDecompAlgebra& a);

/// An X-Lie algebroid acting on an X-decomposable algebra carrier: one
/// matrix on A_x per basis element of g_x.
struct LieAction {
  XLieAlgebroid algebroid;
  XDecompAlgebra carrier;
  std::vector<std::vector<Matrix>> tau;  // [site][basis]

  void require_shape() const;
};

/// Leibniz rule, unit annihilation, and tau being a Lie map, for one
/// component.
Report check_lie_module_algebra(const FiniteDimLieAlgebra& l, const FiniteDimAlgebra& a,
                                const std::vector<Matrix>& tau);

/// Componentwise module-algebra check of the whole algebroid action.
Report check_algebroid_action(const LieAction& act);

struct ConjugationResult {
  /// (morphism, source-component basis index) -> conjugated matrix on the
  /// target component.
  std::map<std::pair<std::size_t, std::size_t>, Matrix> table;
  Report report;
};

/// nu_g tau(p) nu_{g^{-1}} for every morphism g and generator p, with
/// certified membership in the target derivation space.
ConjugationResult conjugate_action(const GroupoidAction& grp, const LieAction& lie);

/// For every word p_1 ... p_k # g with k <= degree, checks the module
/// algebra law h.(ab) = (h_1.a)(h_2.b) where the coproduct of the word is
/// expanded with primitive Delta(p) and grouplike Delta(g).
Report bounded_envelope_consistency(const LieAction& lie, const GroupoidAction& grp,
                                    std::size_t degree);

}  // namespace whk
