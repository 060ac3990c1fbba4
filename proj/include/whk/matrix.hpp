#pragma once

#include "whk/errors.hpp"
#include "whk/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace whk {

/// Dense matrix of rationals, row-major. Dimensions are fixed at
/// construction.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  /// Builds from nested braces; all rows must have equal length.
  static Matrix of(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Matrix-vector product M x.
  Vec apply(const Vec& x) const;

  /// Row-major flattening, entry (i,j) at position i*cols+j.
  Vec flatten() const;
  static Matrix unflatten(std::size_t rows, std::size_t cols, const Vec& v);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// (M ⊗ N)[(i,k),(j,l)] = M(i,j) N(k,l), pair (i,k) at index i*rows(N)+k.
Matrix kronecker(const Matrix& m, const Matrix& n);

// Dense vector helpers.
Vec vec_zero(std::size_t n);
Vec vec_unit(std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);
/// a ⊗ b with index i*len(b)+j.
Vec vec_kron(const Vec& a, const Vec& b);
/// Lexicographic comparison, used for deterministic orderings.
bool vec_less(const Vec& a, const Vec& b);

/// Reduces M to reduced row echelon form in place. Returns the rank;
/// records pivot columns when requested.
std::size_t rref_in_place(Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Any x with Mx = b, or nullopt when the system is inconsistent. The
/// returned solution is re-verified against M before returning.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::size_t rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace whk
