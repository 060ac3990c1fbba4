#include "whk/subspace.hpp"

namespace whk {

namespace {

Matrix canonical_basis(std::size_t ambient, Matrix rows) {
  std::size_t rk = rref_in_place(rows);
  Matrix basis(rk, ambient);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = rows(i, j);
  return basis;
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::from_vectors(std::size_t ambient, const std::vector<Vec>& vecs) {
  Subspace s;
  s.ambient_ = ambient;
  if (vecs.empty()) {
    s.basis_ = Matrix(0, ambient);
    return s;
  }
  for (const auto& v : vecs) {
    if (v.size() != ambient) throw ShapeError("subspace vector has wrong ambient dimension");
  }
  s.basis_ = canonical_basis(ambient, Matrix::from_rows(vecs));
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = canonical_basis(m.cols(), m);
  return s;
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

bool Subspace::contains(const Vec& v) const {
  return coordinates_of(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) throw ShapeError("ambient mismatch");
  Vec rem = v;
  Vec coords(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    // Pivot column of row r is its first nonzero entry (RREF).
    std::size_t p = 0;
    while (p < ambient_ && basis_(r, p) == 0) ++p;
    if (p == ambient_) continue;
    Rational c = rem[p];  // pivot entry is 1
    if (c == 0) continue;
    coords[r] = c;
    for (std::size_t j = p; j < ambient_; ++j) rem[j] -= c * basis_(r, j);
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coords;
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t rk = rref_in_place(r, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols());
    v[j] = 1;
    for (std::size_t r0 = 0; r0 < rk; ++r0) v[pivots[r0]] = -r(r0, j);
    basis.push_back(std::move(v));
  }
  return Subspace::from_vectors(m.cols(), basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ShapeError("ambient mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return Subspace::from_vectors(a.ambient(), rows);
}

Subspace subspace_annihilator(const Subspace& s) { return kernel(s.basis()); }

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ShapeError("ambient mismatch");
  // (A ∩ B)⊥ = A⊥ + B⊥ in finite dimension.
  return subspace_annihilator(
      subspace_sum(subspace_annihilator(a), subspace_annihilator(b)));
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient()) throw ShapeError("preimage shape mismatch");
  // v lands in S iff every functional annihilating S kills Mv.
  Subspace ann = subspace_annihilator(s);
  if (ann.dim() == 0) return Subspace::full(m.cols());
  return kernel(ann.basis() * m);
}

Subspace image_of(const Matrix& m, const Subspace& s) {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(m.apply(s.basis_vector(i)));
  return Subspace::from_vectors(m.rows(), vecs);
}

}  // namespace whk
