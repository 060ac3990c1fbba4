#include "whk/grouplike.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace whk;
using namespace whk::testing;

namespace {

FiniteDimAlgebra split_product(std::size_t k) {
  FiniteDimAlgebra a;
  a.mult.assign(k, std::vector<SparseVec>(k));
  for (std::size_t i = 0; i < k; ++i) {
    a.labels.push_back("d" + std::to_string(i));
    a.mult[i][i] = {{i, Rational(1)}};
  }
  a.unit.assign(k, 1);
  return a;
}

FiniteDimAlgebra quadratic_field(int d) {
  // Q[t]/(t^2 - d).
  FiniteDimAlgebra a;
  a.labels = {"one", "rt"};
  a.mult.assign(2, std::vector<SparseVec>(2));
  a.mult[0][0] = {{0, Rational(1)}};
  a.mult[0][1] = {{1, Rational(1)}};
  a.mult[1][0] = {{1, Rational(1)}};
  a.mult[1][1] = {{0, Rational(d)}};
  a.unit = {Rational(1), Rational(0)};
  return a;
}

/// Function Hopf algebra on Z/n: split algebra with convolution coalgebra.
WeakHopfPresentation dual_of_cyclic(std::size_t n) {
  FiniteDimAlgebra a = split_product(n);
  FiniteDimCoalgebra c;
  c.labels = a.labels;
  c.comult.assign(n, {});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) c.comult[k].push_back({i, (k + n - i) % n, Rational(1)});
  c.counit.assign(n, 0);
  c.counit[0] = 1;
  Matrix s(n, n);
  for (std::size_t k = 0; k < n; ++k) s((n - k) % n, k) = 1;
  return WeakHopfPresentation::make(a, c, s);
}

}  // namespace

TEST_CASE("polynomial utilities") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2.
  std::vector<Rational> p{Rational(2), Rational(-3), Rational(0), Rational(1)};
  auto sf = squarefree_part(p);
  REQUIRE(sf.size() == 3);  // (x-1)(x+2), monic
  auto roots = rational_roots(sf);
  CHECK(roots == std::vector<Rational>{Rational(-2), Rational(1)});
  // x^2 - 2 has no rational roots.
  CHECK(rational_roots({Rational(-2), Rational(0), Rational(1)}).empty());
  // Minimal polynomial of a projection is x^2 - x.
  Matrix proj = Matrix::of({{1, 0}, {0, 0}});
  auto mu = minimal_polynomial(proj);
  CHECK(mu == std::vector<Rational>{Rational(0), Rational(-1), Rational(1)});
}

TEST_CASE("primitive idempotents of commutative algebras") {
  auto s3 = primitive_idempotents_commutative(split_product(3));
  CHECK(s3.complete);
  CHECK(s3.idempotents.size() == 3);

  auto rt2 = primitive_idempotents_commutative(quadratic_field(2));
  CHECK_FALSE(rt2.complete);
  CHECK(rt2.idempotents.empty());

  // Q[x]/(x^2): local ring, nilpotents, single idempotent 1.
  FiniteDimAlgebra dual_numbers;
  dual_numbers.labels = {"one", "x"};
  dual_numbers.mult.assign(2, std::vector<SparseVec>(2));
  dual_numbers.mult[0][0] = {{0, Rational(1)}};
  dual_numbers.mult[0][1] = {{1, Rational(1)}};
  dual_numbers.mult[1][0] = {{1, Rational(1)}};
  dual_numbers.mult[1][1] = {};
  dual_numbers.unit = {Rational(1), Rational(0)};
  auto dn = primitive_idempotents_commutative(dual_numbers);
  CHECK(dn.complete);
  REQUIRE(dn.idempotents.size() == 1);
  CHECK(dn.idempotents[0] == (Vec{Rational(1), Rational(0)}));

  // Q[x]/(x^2-1) splits into two idempotents (1 ± x)/2.
  auto pm = primitive_idempotents_commutative(quadratic_field(1));
  CHECK(pm.complete);
  REQUIRE(pm.idempotents.size() == 2);
  CHECK(pm.idempotents[0] == (Vec{Rational(1, 2), Rational(-1, 2)}));
  CHECK(pm.idempotents[1] == (Vec{Rational(1, 2), Rational(1, 2)}));

  FiniteDimAlgebra noncomm;
  noncomm.labels = {"a", "b"};
  noncomm.mult.assign(2, std::vector<SparseVec>(2));
  noncomm.mult[0][0] = {{0, Rational(1)}};
  noncomm.mult[0][1] = {{1, Rational(1)}};
  noncomm.unit = {Rational(1), Rational(0)};
  CHECK_THROWS_AS(primitive_idempotents_commutative(noncomm), Error);
}

TEST_CASE("is_grouplike") {
  WeakHopfPresentation h = groupoid_algebra(two_object_iso_groupoid());
  std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) CHECK(is_grouplike(h, vec_unit(n, i)));
  CHECK_FALSE(is_grouplike(h, vec_add(vec_unit(n, 0), vec_unit(n, 1))));  // eps = 2
  CHECK_FALSE(is_grouplike(h, vec_zero(n)));
}

TEST_CASE("enumerate_grouplikes on groupoid algebras finds exactly the morphisms") {
  WeakHopfPresentation h = groupoid_algebra(two_object_iso_groupoid());
  GrouplikeSet gs = enumerate_grouplikes(h);
  CHECK(gs.complete);
  REQUIRE(gs.elements.size() == 4);
  for (const Vec& v : gs.elements) {
    std::size_t nonzero = 0;
    for (const auto& c : v) nonzero += (c != 0);
    CHECK(nonzero == 1);
  }

  GrouplikeSet one = enumerate_grouplikes(groupoid_algebra(cyclic_groupoid(1)));
  CHECK(one.complete);
  REQUIRE(one.elements.size() == 1);
  CHECK(one.elements[0] == Vec{Rational(1)});

  GrouplikeSet z2 = enumerate_grouplikes(groupoid_algebra(cyclic_groupoid(2)));
  CHECK(z2.complete);
  CHECK(z2.elements.size() == 2);
}

TEST_CASE("grouplike enumeration detects non-split inputs") {
  // Characters of the dual of functions-on-Z/3 live in Q(omega); only the
  // trivial one is rational.
  WeakHopfPresentation h = dual_of_cyclic(3);
  REQUIRE(run_weak_hopf_suite(h).passed());
  GrouplikeSet gs = enumerate_grouplikes(h);
  CHECK_FALSE(gs.complete);
  REQUIRE(gs.elements.size() == 1);
  CHECK(gs.elements[0] == (Vec{Rational(1), Rational(1), Rational(1)}));

  // Z/2 splits rationally even in function-algebra form.
  GrouplikeSet g2 = enumerate_grouplikes(dual_of_cyclic(2));
  CHECK(g2.complete);
  CHECK(g2.elements.size() == 2);
}

TEST_CASE("grouplike groupoid reproduces the original groupoid by labels") {
  FiniteGroupoid g = two_object_iso_groupoid();
  FiniteGroupoid gamma = grouplike_groupoid(groupoid_algebra(g));
  CHECK(check_groupoid(gamma).passed());
  CHECK(isomorphic_by_labels(gamma, g));

  FiniteGroupoid triv = grouplike_groupoid(groupoid_algebra(cyclic_groupoid(1)));
  CHECK(triv.object_count() == 1);
  CHECK(triv.morphism_count() == 1);

  FiniteGroupoid two = disjoint_union(cyclic_groupoid(2, "a"), cyclic_groupoid(2, "b"));
  FiniteGroupoid gamma2 = grouplike_groupoid(groupoid_algebra(two));
  CHECK(check_groupoid(gamma2).passed());
  CHECK(isomorphic_by_labels(gamma2, two));

  CHECK_THROWS_AS(grouplike_groupoid(dual_of_cyclic(3)), NotSplitError);
}

TEST_CASE("grouplike objects via the idempotent characterization") {
  WeakHopfPresentation h = groupoid_algebra(two_object_iso_groupoid());
  std::vector<Vec> objs = grouplike_objects_via_idempotents(h);
  REQUIRE(objs.size() == 2);
  CHECK(objs[0] == vec_unit(4, 1));  // ey sorts before ex lexicographically? keep set compare below
  std::vector<Vec> expected{vec_unit(4, 0), vec_unit(4, 1)};
  std::sort(expected.begin(), expected.end(), vec_less);
  CHECK(objs == expected);

  std::vector<Vec> one = grouplike_objects_via_idempotents(groupoid_algebra(cyclic_groupoid(1)));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Vec{Rational(1)});

  WeakHopfPresentation hsum = direct_sum({groupoid_algebra(cyclic_groupoid(2, "a")),
                                          groupoid_algebra(cyclic_groupoid(2, "b"))});
  std::vector<Vec> blocks = grouplike_objects_via_idempotents(hsum);
  CHECK(blocks.size() == 2);

  // Cross-check against the grouplike groupoid's object set on all three.
  for (const WeakHopfPresentation& hh :
       {groupoid_algebra(two_object_iso_groupoid()), groupoid_algebra(cyclic_groupoid(1)), hsum}) {
    FiniteGroupoid gamma = grouplike_groupoid(hh);
    GrouplikeSet gs = enumerate_grouplikes(hh);
    std::vector<Vec> gamma_objects;
    for (std::size_t x = 0; x < gamma.object_count(); ++x)
      gamma_objects.push_back(gs.elements[gamma.identity_at[x]]);
    std::sort(gamma_objects.begin(), gamma_objects.end(), vec_less);
    CHECK(gamma_objects == grouplike_objects_via_idempotents(hh));
  }
}

TEST_CASE("idempotent enumeration guard") {
  WeakHopfPresentation hsum = direct_sum({groupoid_algebra(cyclic_groupoid(2, "a")),
                                          groupoid_algebra(cyclic_groupoid(2, "b"))});
  CHECK_THROWS_AS(grouplike_objects_via_idempotents(hsum, 1), GuardError);
}

TEST_CASE("grouplike dichotomy") {
  CHECK(check_grouplike_dichotomy(groupoid_algebra(cyclic_groupoid(2))).passed());
  Report vac = check_grouplike_dichotomy(groupoid_algebra(two_object_iso_groupoid()));
  CHECK(vac.passed());
  // The function algebra on Z/3 is Hopf, so dim 1 and Hopf: passes.
  CHECK(check_grouplike_dichotomy(dual_of_cyclic(3)).passed());
}

TEST_CASE("local units in a groupoid algebra") {
  WeakHopfPresentation h = groupoid_algebra(two_object_iso_groupoid());
  IdempotentFamily fam{{"x", "y"}, {vec_unit(4, 0), vec_unit(4, 1)}};
  CHECK(validate_idempotent_family(h.algebra, fam).passed());

  // g in e_y A e_x with local inverse gi.
  auto inv = local_inverse(h.algebra, fam, vec_unit(4, 2), 0, 1);
  REQUIRE(inv.has_value());
  CHECK(*inv == vec_unit(4, 3));

  // Zero element is never a local unit.
  CHECK_FALSE(local_inverse(h.algebra, fam, vec_zero(4), 0, 1).has_value());

  std::vector<LocalUnitWitness> ws;
  ws.push_back({vec_unit(4, 2), 0, 1, std::nullopt});
  ws.push_back({vec_unit(4, 3), 1, 0, std::nullopt});
  ws.push_back({vec_unit(4, 0), 0, 0, std::nullopt});
  CHECK(certify_local_units(h.algebra, fam, ws).passed());
  CHECK(local_unit_closure_check(h.algebra, fam, ws).passed());
}

TEST_CASE("cross-component local units vanish on X-decomposable algebras") {
  // k^2 + k^2 componentwise: Hom(x,y) = e_y A e_x = 0.
  FiniteDimAlgebra a = split_product(4);
  IdempotentFamily fam{{"x", "y"},
                       {Vec{Rational(1), Rational(1), Rational(0), Rational(0)},
                        Vec{Rational(0), Rational(0), Rational(1), Rational(1)}}};
  CHECK(validate_idempotent_family(a, fam).passed());
  // Any nonzero element fails membership in e_y A e_x.
  CHECK_FALSE(local_inverse(a, fam, vec_unit(4, 0), 0, 1).has_value());
  // Within a component the units are the componentwise-invertible elements.
  Vec u{Rational(2), Rational(3), Rational(0), Rational(0)};
  auto inv = local_inverse(a, fam, u, 0, 0);
  REQUIRE(inv.has_value());
  CHECK(*inv == (Vec{Rational(1, 2), Rational(1, 3), Rational(0), Rational(0)}));
}

TEST_CASE("local units of End(V) are the invertible cross maps") {
  // End(k^2) with e_x = E11, e_y = E22; e_y A e_x = span{E21}.
  FiniteDimAlgebra m2;
  m2.labels = {"E11", "E12", "E21", "E22"};
  m2.mult.assign(4, std::vector<SparseVec>(4));
  auto idx = [](std::size_t i, std::size_t j) { return i * 2 + j; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          if (j == k) m2.mult[idx(i, j)][idx(k, l)] = {{idx(i, l), Rational(1)}};
  m2.unit = {Rational(1), Rational(0), Rational(0), Rational(1)};
  REQUIRE(check_algebra(m2).passed());

  IdempotentFamily fam{{"x", "y"}, {vec_unit(4, 0), vec_unit(4, 3)}};
  CHECK(validate_idempotent_family(m2, fam).passed());
  // E21: x -> y is a local unit with inverse E12.
  auto inv = local_inverse(m2, fam, vec_unit(4, 2), 0, 1);
  REQUIRE(inv.has_value());
  CHECK(*inv == vec_unit(4, 1));

  std::vector<LocalUnitWitness> ws;
  ws.push_back({vec_unit(4, 2), 0, 1, std::nullopt});
  ws.push_back({vec_unit(4, 1), 1, 0, std::nullopt});
  CHECK(certify_local_units(m2, fam, ws).passed());
  CHECK(local_unit_closure_check(m2, fam, ws).passed());
}
