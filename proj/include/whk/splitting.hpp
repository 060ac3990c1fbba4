#pragma once

#include "whk/subspace.hpp"
#include "whk/walg.hpp"

#include <vector>

namespace whk {

/// Quotient algebra A/I for a two-sided ideal I, with the projection and a
/// linear section (projection * section = id on the quotient).
struct QuotientAlgebra {
  FiniteDimAlgebra algebra;
  Matrix projection;  // dim(A/I) x dim(A)
  Matrix section;     // dim(A) x dim(A/I)
};

QuotientAlgebra quotient_by_ideal(const FiniteDimAlgebra& a, const Subspace& ideal);

/// Two-sided ideal closure: V <- V + A.V + V.A until the dimension is
/// stable (at most dim A strict increases).
Subspace two_sided_ideal_closure(const FiniteDimAlgebra& a, const std::vector<Vec>& gens);

/// Ideal generated by all commutators b_i b_j - b_j b_i.
Subspace commutator_ideal(const FiniteDimAlgebra& a);

/// Radical of the trace form (x,y) -> tr(L_xy). For a finite-dimensional
/// commutative algebra in characteristic 0 this is the nilradical.
Subspace trace_radical(const FiniteDimAlgebra& a);

struct CommutativeSplit {
  /// Primitive idempotents, in the coordinates of the input algebra.
  std::vector<Vec> idempotents;
  /// False when some block had no full rational eigen-splitting; the
  /// idempotents of the rational part are still returned.
  bool complete = true;
};

/// Primitive idempotent decomposition of a commutative semisimple algebra
/// by iterated eigen-splitting of multiplication operators. Rational roots
/// only: squarefree part via gcd with the derivative, then the rational
/// root theorem; residual factors of degree >= 2 leave complete = false.
CommutativeSplit split_semisimple_commutative(const FiniteDimAlgebra& a);

/// Primitive idempotents of an arbitrary commutative algebra: split the
/// semisimple quotient, then Newton-lift through the nilradical.
CommutativeSplit primitive_idempotents_commutative(const FiniteDimAlgebra& a);

struct CharacterSet {
  /// Each character as its value vector on the algebra basis.
  std::vector<Vec> characters;
  bool complete = true;
};

/// All rational unital algebra characters A -> Q: quotient by the
/// commutator ideal, then by the nilradical, then split.
CharacterSet rational_characters(const FiniteDimAlgebra& a);

/// Minimal polynomial of a square matrix, monic, low degree first
/// (coeffs[k] multiplies x^k).
std::vector<Rational> minimal_polynomial(const Matrix& m);

/// Distinct rational roots of a polynomial.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

/// poly / gcd(poly, poly').
std::vector<Rational> squarefree_part(const std::vector<Rational>& poly);

}  // namespace whk
