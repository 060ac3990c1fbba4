#include "whk/matrix.hpp"

#include <optional>

namespace whk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::of(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vec> rs;
  for (const auto& r : rows) {
    Vec v;
    for (int x : r) v.push_back(Rational(x));
    rs.push_back(std::move(v));
  }
  return from_rows(rs);
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw ShapeError("set_row size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw ShapeError("set_col size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw ShapeError("apply: size mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0 && x[j] != 0) acc += (*this)(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

Vec Matrix::flatten() const { return data_; }

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw ShapeError("unflatten: size mismatch");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix diff shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
  return r;
}

Matrix kronecker(const Matrix& m, const Matrix& n) {
  Matrix k(m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      for (std::size_t p = 0; p < n.rows(); ++p)
        for (std::size_t q = 0; q < n.cols(); ++q) {
          if (n(p, q) != 0) k(i * n.rows() + p, j * n.cols() + q) = m(i, j) * n(p, q);
        }
    }
  return k;
}

Vec vec_zero(std::size_t n) { return Vec(n); }

Vec vec_unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vec_add size mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vec_sub size mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec vec_kron(const Vec& a, const Vec& b) {
  Vec c(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) c[i * b.size() + j] = a[i] * b[j];
    }
  }
  return c;
}

bool vec_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::size_t rref_in_place(Matrix& m, std::vector<std::size_t>* pivots) {
  std::size_t lead = 0;
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (; r < m.rows() && lead < m.cols(); ++lead) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, lead) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    Rational inv = Rational(1) / m(r, lead);
    for (std::size_t j = lead; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, lead) == 0) continue;
      Rational f = m(i, lead);
      for (std::size_t j = lead; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(lead);
    ++r;
  }
  return r;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t rk = rref_in_place(aug, &pivots);
  for (std::size_t p : pivots) {
    if (p == m.cols()) return std::nullopt;  // inconsistent row
  }
  Vec x(m.cols());
  for (std::size_t r = 0; r < rk; ++r) x[pivots[r]] = aug(r, m.cols());
  // Contract: verify before returning.
  Vec check = m.apply(x);
  if (check != b) throw InternalError("solve: verification failed");
  return x;
}

std::size_t rank(Matrix m) { return rref_in_place(m); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::size_t rk = rref_in_place(aug);
  if (rk < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (aug(i, j) != Rational(i == j ? 1 : 0)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace whk
