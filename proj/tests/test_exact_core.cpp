#include "whk/matrix.hpp"
#include "whk/subspace.hpp"

#include "doctest.h"

#include <random>

using namespace whk;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(rational_from_string("3/6") == Rational(1, 2));
  CHECK(rational_from_string("-4/2") == Rational(-2));
  CHECK(rational_to_string(make_rational(7, -14)) == "-1/2");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
}

TEST_CASE("kernel basic cases") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix(2, 2)).dim() == 2);
  Subspace k = kernel(Matrix::of({{1, 1}, {2, 2}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vec{Rational(1), Rational(-1)}));
}

TEST_CASE("solve") {
  Vec b{Rational(2), Rational(5)};
  auto x = solve(Matrix::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK_FALSE(solve(Matrix::of({{1, 2}, {2, 4}}), Vec{Rational(1), Rational(3)}).has_value());

  auto y = solve(Matrix::of({{2}}), Vec{Rational(1)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == Rational(1, 2));

  CHECK_THROWS_AS(solve(Matrix::identity(2), Vec{Rational(1)}), ShapeError);
}

TEST_CASE("subspace operations") {
  Subspace s = Subspace::from_vectors(2, {Vec{Rational(1), Rational(1)}, Vec{Rational(0), Rational(1)}});
  CHECK(subspace_intersection(s, s) == s);

  Subspace e1 = Subspace::from_vectors(3, {Vec{Rational(1), Rational(0), Rational(0)}});
  Subspace e2 = Subspace::from_vectors(3, {Vec{Rational(0), Rational(1), Rational(0)}});
  CHECK(subspace_sum(e1, e2).dim() == 2);

  Subspace line = Subspace::from_vectors(2, {Vec{Rational(1), Rational(0)}});
  CHECK(subspace_intersection(s, line) == line);

  CHECK_THROWS_AS(subspace_sum(e1, line), ShapeError);
}

TEST_CASE("dimension formula and annihilator") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Subspace a = Subspace::row_space(random_matrix(rng, 2, 5));
    Subspace b = Subspace::row_space(random_matrix(rng, 3, 5));
    CHECK(a.dim() + b.dim() ==
          subspace_sum(a, b).dim() + subspace_intersection(a, b).dim());
    CHECK(a.dim() + subspace_annihilator(a).dim() == 5);
  }
}

TEST_CASE("canonical echelon form is unique per subspace") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 3, 4);
    Subspace s1 = Subspace::row_space(m);
    // Same space presented by scaled and summed rows.
    std::vector<Vec> rows;
    rows.push_back(vec_scale(Rational(3, 2), m.row(0)));
    rows.push_back(vec_add(m.row(1), m.row(0)));
    rows.push_back(vec_sub(m.row(2), m.row(1)));
    rows.push_back(m.row(2));
    Subspace s2 = Subspace::from_vectors(4, rows);
    CHECK(s1 == s2);
  }
}

TEST_CASE("kronecker products") {
  CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  CHECK(kronecker(Matrix::of({{1, 2}, {3, 4}}), Matrix(2, 2)).is_zero());
  CHECK(kronecker(Matrix::of({{1, 2}}), Matrix::of({{3}, {4}})) == Matrix::of({{3, 6}, {4, 8}}));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(13);
  for (int t = 0; t < 15; ++t) {
    Matrix m = random_matrix(rng, 3, 5);
    CHECK(kernel(m).dim() + rank(m) == m.cols());
  }
}

TEST_CASE("matrix product associativity on random rational matrices") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4), c = random_matrix(rng, 4, 4);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("kronecker is bilinear and mixed-product compatible") {
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(rng, 2, 3), n = random_matrix(rng, 3, 2);
    Matrix p = random_matrix(rng, 3, 2), q = random_matrix(rng, 2, 3);
    CHECK(kronecker(m, n) * kronecker(p, q) == kronecker(m * p, n * q));
    Matrix m2 = random_matrix(rng, 2, 3);
    CHECK(kronecker(m + m2, n) == kronecker(m, n) + kronecker(m2, n));
  }
}

TEST_CASE("inverse and rank") {
  Matrix a = Matrix::of({{2, 1}, {1, 1}});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK((a * *inv).is_identity());
  CHECK(rank(Matrix::of({{1, 2}, {2, 4}})) == 1);
  CHECK_FALSE(inverse(Matrix::of({{1, 2}, {2, 4}})).has_value());
}
