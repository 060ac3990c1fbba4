#pragma once

#include "whk/report.hpp"
#include "whk/subspace.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace whk {

using SparseTerm = std::pair<std::size_t, Rational>;
using SparseVec = std::vector<SparseTerm>;
/// One comultiplication term (j, k, c): a summand c * b_j (x) b_k.
using CoTerm = std::tuple<std::size_t, std::size_t, Rational>;

/// Finite-dimensional algebra presented by structure constants:
/// b_i * b_j = sum_k mult[i][j] terms. Only the shape is an invariant of
/// the type; associativity and unitality are verified by check_algebra.
struct FiniteDimAlgebra {
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> mult;  // [i][j] -> terms (k, c)
  Vec unit;

  std::size_t dim() const { return labels.size(); }
  void require_shape() const;

  /// Product of coordinate vectors.
  Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of left multiplication by x.
  Matrix left_mult(const Vec& x) const;
  /// Matrix of right multiplication by x.
  Matrix right_mult(const Vec& x) const;
  /// Product of two tensors in A (x) A (both dim^2 coordinate vectors).
  Vec tensor_multiply(const Vec& s, const Vec& t) const;
  /// Product of two tensors in A (x) A (x) A.
  Vec tensor3_multiply(const Vec& s, const Vec& t) const;
};

Report check_algebra(const FiniteDimAlgebra& a);

/// Coalgebra presented by per-basis comultiplication term lists.
struct FiniteDimCoalgebra {
  std::vector<std::string> labels;
  std::vector<std::vector<CoTerm>> comult;  // [i] -> terms of Delta(b_i)
  Vec counit;

  std::size_t dim() const { return labels.size(); }
  void require_shape() const;

  /// Delta(x) as a dim^2 vector, pair (j,k) at index j*dim+k.
  Vec comultiply(const Vec& x) const;
  Rational counit_of(const Vec& x) const;
  /// (Delta (x) id)Delta(x) as a dim^3 vector.
  Vec comultiply_twice(const Vec& x) const;
};

Report check_coalgebra(const FiniteDimCoalgebra& c);
bool is_cocommutative(const FiniteDimCoalgebra& c);

/// Dual algebra on the dual basis, with convolution product
/// (f g)(x) = f(x_1) g(x_2) and unit the counit.
FiniteDimAlgebra dual_algebra(const FiniteDimCoalgebra& c);

/// Structure-constant presentation of a weak bialgebra or weak Hopf
/// algebra: an algebra and a coalgebra on one shared basis, plus an
/// optional antipode matrix (column i = S(b_i)).
struct WeakHopfPresentation {
  FiniteDimAlgebra algebra;
  FiniteDimCoalgebra coalgebra;
  std::optional<Matrix> antipode;

  /// Validates shared labels and, when present, antipode invertibility.
  static WeakHopfPresentation make(FiniteDimAlgebra a, FiniteDimCoalgebra c,
                                   std::optional<Matrix> s = std::nullopt);

  std::size_t dim() const { return algebra.dim(); }
  const std::vector<std::string>& labels() const { return algebra.labels; }
  Vec apply_antipode(const Vec& x) const;
};

/// Multiplicativity of Delta, the weak counit identity on basis triples,
/// and weak comultiplicativity of the unit (both orderings).
Report check_weak_bialgebra(const WeakHopfPresentation& h);

struct CounitalMaps {
  Matrix source_map;           // x -> 1_1 eps(x 1_2)
  Matrix target_map;           // x -> eps(1_1 x) 1_2
  Subspace source_subalgebra;  // image of source_map
  Subspace target_subalgebra;  // image of target_map
};

/// Requires a valid weak bialgebra; both maps are verified idempotent.
CounitalMaps counital_maps(const WeakHopfPresentation& h);

/// The three antipode axioms on every basis element, plus
/// anti-multiplicativity and anti-comultiplicativity of S.
Report check_antipode(const WeakHopfPresentation& h);

/// True iff Delta(1) = 1 (x) 1. When true, multiplicativity of the counit
/// is asserted as an internal cross-check.
bool is_hopf(const WeakHopfPresentation& h);

/// Block-diagonal direct sum; throws on basis label collisions.
WeakHopfPresentation direct_sum(const std::vector<WeakHopfPresentation>& parts);

/// check_algebra + check_coalgebra + check_weak_bialgebra + check_antipode
/// (antipode part only when present).
Report run_weak_hopf_suite(const WeakHopfPresentation& h);

/// Smallest multiplicatively closed subspace containing v (not forced to
/// contain the unit; include it in v if needed).
Subspace multiplicative_closure(const FiniteDimAlgebra& a, Subspace v);

}  // namespace whk
