#include "whk/lie.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include "whk/poly.hpp"

#include <random>

using namespace whk;
using namespace whk::testing;

namespace {

FiniteDimAlgebra split2() {
  FiniteDimAlgebra a;
  a.labels = {"p1", "p2"};
  a.mult.assign(2, std::vector<SparseVec>(2));
  a.mult[0][0] = {{0, Rational(1)}};
  a.mult[1][1] = {{1, Rational(1)}};
  a.unit = {Rational(1), Rational(1)};
  return a;
}

/// gl_2 acting by linear derivations on both components of
/// S(V_x) + S(V_y), truncated at the given degree.
struct PolyScenario {
  TruncatedPolyAlgebra px, py;
  LieAction lie;
  GroupoidAction grp;
};

PolyScenario poly_gl_scenario(std::size_t degree) {
  PolyScenario s;
  s.px = truncated_symmetric_algebra({"u1", "u2"}, degree, "x.");
  s.py = truncated_symmetric_algebra({"w1", "w2"}, degree, "y.");
  XDecompAlgebra carrier = XDecompAlgebra::assemble({"x", "y"}, {s.px.algebra, s.py.algebra});

  FiniteDimLieAlgebra gl2 = general_linear_lie(2);
  s.lie.algebroid = XLieAlgebroid{{"x", "y"}, {gl2, gl2}};
  s.lie.carrier = carrier;
  s.lie.tau.resize(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix e(2, 2);
      e(i, j) = 1;
      s.lie.tau[0].push_back(s.px.lift_linear_derivation(e));
      s.lie.tau[1].push_back(s.py.lift_linear_derivation(e));
    }

  s.grp.groupoid = two_object_iso_groupoid();
  s.grp.algebra_carrier = carrier;
  s.grp.dims = {s.px.algebra.dim(), s.py.algebra.dim()};
  Matrix swap = Matrix::of({{0, 1}, {1, 0}});
  s.grp.maps[0] = Matrix::identity(s.px.algebra.dim());
  s.grp.maps[1] = Matrix::identity(s.py.algebra.dim());
  s.grp.maps[2] = s.px.lift_substitution(swap);
  s.grp.maps[3] = s.py.lift_substitution(swap);
  return s;
}

}  // namespace

TEST_CASE("check_lie: gl2, abelian, and a broken bracket") {
  CHECK(check_lie(general_linear_lie(2)).passed());

  FiniteDimLieAlgebra ab;
  ab.labels = {"p", "q"};
  ab.bracket.assign(2, std::vector<SparseVec>(2));
  CHECK(check_lie(ab).passed());

  FiniteDimLieAlgebra bad = ab;
  bad.bracket[0][1] = {{0, Rational(1)}};
  bad.bracket[1][0] = {{0, Rational(1)}};  // breaks antisymmetry
  Report rep = check_lie(bad);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("derivation spaces of the named algebras") {
  // k[x]/(x^n): dimension n - 1.
  for (std::size_t n = 2; n <= 5; ++n) {
    TruncatedPolyAlgebra p = truncated_symmetric_algebra({"x"}, n - 1);
    CHECK(derivation_space(p.algebra).dim() == n - 1);
  }
  // Der(k) = 0 and Der(k x k) = 0.
  TruncatedPolyAlgebra unit = truncated_symmetric_algebra({}, 0);
  CHECK(derivation_space(unit.algebra).dim() == 0);
  CHECK(derivation_space(split2()).dim() == 0);
}

TEST_CASE("derivation Lie algebras are bracket-closed") {
  TruncatedPolyAlgebra p = truncated_symmetric_algebra({"x"}, 3);
  FiniteDimLieAlgebra der = derivation_lie_algebra(p.algebra);
  CHECK(der.dim() == 3);
  CHECK(check_lie(der).passed());
}

TEST_CASE("gl2 acts on truncated polynomials as a Lie module algebra") {
  TruncatedPolyAlgebra p = truncated_symmetric_algebra({"x1", "x2"}, 2);
  FiniteDimLieAlgebra gl2 = general_linear_lie(2);
  std::vector<Matrix> tau;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix e(2, 2);
      e(i, j) = 1;
      tau.push_back(p.lift_linear_derivation(e));
    }
  CHECK(check_lie_module_algebra(gl2, p.algebra, tau).passed());

  // Zero Lie algebra acts trivially.
  FiniteDimLieAlgebra zero;
  CHECK(check_lie_module_algebra(zero, p.algebra, {}).passed());

  // tau(p) = identity kills no unit: eq (unit-annihilation) fails.
  FiniteDimLieAlgebra one;
  one.labels = {"p"};
  one.bracket.assign(1, std::vector<SparseVec>(1));
  Report rep = check_lie_module_algebra(one, p.algebra, {Matrix::identity(p.algebra.dim())});
  CHECK_FALSE(rep.passed());
  bool unit_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "unit_annihilated" && !c.passed()) unit_failed = true;
  CHECK(unit_failed);
}

TEST_CASE("grade guard: non-linear derivation images are rejected") {
  TruncatedPolyAlgebra p = truncated_symmetric_algebra({"x1", "x2"}, 2);
  std::vector<Vec> images(2, Vec(p.algebra.dim()));
  images[0][p.monomial_index({2, 0})] = 1;  // D(x1) = x1^2: degree raising
  images[1][p.monomial_index({0, 1})] = 1;
  CHECK_THROWS_AS(p.lift_derivation(images), GradeError);
}

TEST_CASE("algebroid actions check componentwise; shapes are enforced") {
  PolyScenario s = poly_gl_scenario(3);
  CHECK(check_algebroid_action(s.lie).passed());

  XLieAlgebroid zero{{"x", "y"}, {FiniteDimLieAlgebra{}, FiniteDimLieAlgebra{}}};
  LieAction za{zero, s.lie.carrier, {{}, {}}};
  CHECK(check_algebroid_action(za).passed());

  // A matrix sized for the wrong component is a shape violation.
  LieAction bad = s.lie;
  bad.tau[0][0] = Matrix::identity(3);
  CHECK_THROWS_AS(check_algebroid_action(bad), ShapeError);
}

TEST_CASE("conjugation: zero derivation algebroids are trivially compatible") {
  // Der(k^2) = 0 componentwise, so there is nothing to conjugate.
  FiniteDimAlgebra c1 = split2();
  FiniteDimAlgebra c2 = split2();
  for (auto& l : c2.labels) l = "q" + l;
  XDecompAlgebra carrier = XDecompAlgebra::assemble({"x", "y"}, {c1, c2});
  XLieAlgebroid der = derivation_algebroid(carrier);
  CHECK(der.components[0].dim() == 0);
  LieAction lie{der, carrier, {{}, {}}};
  GroupoidAction grp;
  grp.groupoid = two_object_iso_groupoid();
  grp.algebra_carrier = carrier;
  grp.dims = {2, 2};
  Matrix swap = Matrix::of({{0, 1}, {1, 0}});
  grp.maps[0] = Matrix::identity(2);
  grp.maps[1] = Matrix::identity(2);
  grp.maps[2] = swap;
  grp.maps[3] = swap;
  ConjugationResult conj = conjugate_action(grp, lie);
  CHECK(conj.report.passed());
  CHECK(conj.table.empty());
}

TEST_CASE("conjugating x d/dx by x -> 2x fixes it") {
  TruncatedPolyAlgebra p = truncated_symmetric_algebra({"x"}, 2);
  FiniteDimLieAlgebra l = lie_from_matrices({"xd"}, {p.lift_linear_derivation(Matrix::of({{1}}))});
  XDecompAlgebra carrier = XDecompAlgebra::assemble({"tpt"}, {p.algebra});
  LieAction lie{XLieAlgebroid{{"tpt"}, {l}}, carrier,
                {{p.lift_linear_derivation(Matrix::of({{1}}))}}};
  GroupoidAction grp;
  grp.groupoid = cyclic_groupoid(1, "t");
  grp.algebra_carrier = carrier;
  grp.dims = {p.algebra.dim()};
  grp.maps[0] = Matrix::identity(p.algebra.dim());
  // Extend the trivial group by an extra loop? Instead conjugate through a
  // one-object groupoid with the scaling as a second morphism: use Z/1 with
  // identity only for functoriality, then conjugate manually via the lift.
  ConjugationResult conj = conjugate_action(grp, lie);
  CHECK(conj.report.passed());
  CHECK(conj.table.at({0, 0}) == lie.tau[0][0]);

  Matrix scale = p.lift_substitution(Matrix::of({{2}}));
  auto scale_inv = inverse(scale);
  REQUIRE(scale_inv.has_value());
  CHECK(scale * lie.tau[0][0] * *scale_inv == lie.tau[0][0]);
}

TEST_CASE("poly scenario: conjugation compatibility and envelope consistency") {
  PolyScenario s = poly_gl_scenario(3);
  REQUIRE(check_groupoid_module(s.grp).passed());
  REQUIRE(check_groupoid_module_algebra(s.grp).passed());
  REQUIRE(check_algebroid_action(s.lie).passed());

  ConjugationResult conj = conjugate_action(s.grp, s.lie);
  CHECK(conj.report.passed());

  Report d1 = bounded_envelope_consistency(s.lie, s.grp, 1);
  CHECK(d1.passed());
  Report d2 = bounded_envelope_consistency(s.lie, s.grp, 2);
  CHECK(d2.passed());  // prefix property: d2 pass came with d1 pass above
}

TEST_CASE("envelope consistency fails already at length 1 for a non-derivation") {
  PolyScenario s = poly_gl_scenario(2);
  s.lie.tau[0][0] = Matrix::identity(s.px.algebra.dim());  // not a derivation
  Report rep = bounded_envelope_consistency(s.lie, s.grp, 2);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("grade-preserving lifts commute with truncation") {
  // The same generator lifted at degree 3 restricts to its degree-2 lift.
  TruncatedPolyAlgebra p3 = truncated_symmetric_algebra({"x1", "x2"}, 3);
  TruncatedPolyAlgebra p2 = truncated_symmetric_algebra({"x1", "x2"}, 2);
  Matrix e(2, 2);
  e(0, 1) = 1;  // x1 d/dx2
  Matrix big = p3.lift_linear_derivation(e);
  Matrix small = p2.lift_linear_derivation(e);
  for (std::size_t j = 0; j < p2.algebra.dim(); ++j)
    for (std::size_t i = 0; i < p2.algebra.dim(); ++i) CHECK(big(i, j) == small(i, j));
}

TEST_CASE("leibniz implies unit annihilation on random derivation actions") {
  TruncatedPolyAlgebra p = truncated_symmetric_algebra({"x"}, 3);
  Subspace der = derivation_space(p.algebra);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coef(-4, 4);
  FiniteDimLieAlgebra one;
  one.labels = {"p"};
  one.bracket.assign(1, std::vector<SparseVec>(1));
  std::size_t n = p.algebra.dim();
  for (int t = 0; t < 50; ++t) {
    Vec combo(n * n);
    for (std::size_t r = 0; r < der.dim(); ++r)
      combo = vec_add(combo, vec_scale(Rational(coef(rng)), der.basis_vector(r)));
    Matrix d = Matrix::unflatten(n, n, combo);
    Report rep = check_lie_module_algebra(one, p.algebra, {d});
    bool leibniz_ok = true, unit_ok = true;
    for (const auto& c : rep.checks) {
      if (c.name == "leibniz") leibniz_ok = c.passed();
      if (c.name == "unit_annihilated") unit_ok = c.passed();
    }
    CHECK(leibniz_ok);  // combos of derivations satisfy Leibniz
    if (leibniz_ok) CHECK(unit_ok);
  }
}
