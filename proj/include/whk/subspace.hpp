#pragma once

#include "whk/matrix.hpp"

#include <optional>
#include <vector>

namespace whk {

/// Subspace of Q^n held as a reduced-row-echelon basis with no zero rows.
/// The echelon form is canonical, so two subspaces are equal exactly when
/// their basis matrices are identical.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace from_vectors(std::size_t ambient, const std::vector<Vec>& vecs);
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis, or nullopt if v lies outside.
  std::optional<Vec> coordinates_of(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
};

/// Null space of M as a subspace of Q^cols.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// Functionals vanishing on S, as a subspace of the dual coordinate space.
Subspace subspace_annihilator(const Subspace& s);
/// {v : Mv in S}.
Subspace preimage(const Matrix& m, const Subspace& s);
/// Image of S under M.
Subspace image_of(const Matrix& m, const Subspace& s);

}  // namespace whk
