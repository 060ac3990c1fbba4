#pragma once

#include "whk/walg.hpp"

#include <string>
#include <vector>

namespace whk {

/// Symmetric algebra on named variables, truncated at a total degree:
/// monomial products exceeding the bound are zero. Basis monomials are
/// ordered by total degree, then lexicographically on exponent vectors.
struct TruncatedPolyAlgebra {
  FiniteDimAlgebra algebra;
  std::vector<std::string> vars;
  std::size_t max_degree = 0;
  std::vector<std::vector<unsigned>> exponents;  // per basis monomial

  std::size_t monomial_index(const std::vector<unsigned>& expo) const;

  /// Algebra endomorphism substituting x_j -> sum_i m(i,j) x_i.
  Matrix lift_substitution(const Matrix& var_map) const;

  /// Derivation with D(x_j) = sum_i m(i,j) x_i, extended by Leibniz.
  Matrix lift_linear_derivation(const Matrix& var_map) const;

  /// Derivation with prescribed images of the variables; images must be
  /// homogeneous of degree 1 (grade-preserving), otherwise GradeError.
  Matrix lift_derivation(const std::vector<Vec>& var_images) const;
};

/// label_prefix disambiguates basis labels when several truncations are
/// assembled into one X-decomposable carrier.
TruncatedPolyAlgebra truncated_symmetric_algebra(const std::vector<std::string>& vars,
                                                 std::size_t max_degree,
                                                 const std::string& label_prefix = "");

}  // namespace whk
