#include "whk/walg.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include "whk/groupoid.hpp"

using namespace whk;
using namespace whk::testing;

namespace {

WeakHopfPresentation one_dim_hopf() {
  FiniteDimAlgebra a;
  a.labels = {"1"};
  a.mult = {{{{0, Rational(1)}}}};
  a.unit = {Rational(1)};
  FiniteDimCoalgebra c;
  c.labels = {"1"};
  c.comult = {{{0, 0, Rational(1)}}};
  c.counit = {Rational(1)};
  return WeakHopfPresentation::make(a, c, Matrix::identity(1));
}

}  // namespace

TEST_CASE("check_algebra on groupoid algebra and the 1-dim algebra") {
  CHECK(check_algebra(groupoid_algebra(two_object_iso_groupoid()).algebra).passed());
  CHECK(check_algebra(one_dim_hopf().algebra).passed());
}

TEST_CASE("check_algebra catches a perturbed unit") {
  FiniteDimAlgebra a = one_dim_hopf().algebra;
  a.mult[0][0] = {{0, Rational(2)}};
  Report rep = check_algebra(a);
  CHECK_FALSE(rep.passed());
  bool unit_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "unitality" && !c.passed()) unit_failed = true;
  CHECK(unit_failed);
}

TEST_CASE("check_coalgebra on grouplike comultiplications") {
  CHECK(check_coalgebra(groupoid_algebra(two_object_iso_groupoid()).coalgebra).passed());
  CHECK(check_coalgebra(one_dim_hopf().coalgebra).passed());
}

TEST_CASE("check_coalgebra catches a broken counit") {
  FiniteDimCoalgebra c = groupoid_algebra(two_object_iso_groupoid()).coalgebra;
  c.counit[2] = 0;  // some g with Delta(g)=gxg but eps(g)=0
  Report rep = check_coalgebra(c);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("weak bialgebra axioms hold for groupoid algebras and groups") {
  WeakHopfPresentation h = groupoid_algebra(two_object_iso_groupoid());
  CHECK(check_weak_bialgebra(h).passed());

  WeakHopfPresentation z2 = groupoid_algebra(cyclic_groupoid(2));
  CHECK(check_weak_bialgebra(z2).passed());
  CHECK(z2.coalgebra.comultiply(z2.algebra.unit) ==
        vec_kron(z2.algebra.unit, z2.algebra.unit));
}

TEST_CASE("weak comultiplicativity of the unit can fail on k + k") {
  // Algebra k + k with a twisted but honest coalgebra: Delta(p) = pxq + qxp,
  // Delta(q) = qxq. The coalgebra axioms hold, yet the unit fails (e).
  FiniteDimAlgebra a;
  a.labels = {"p", "q"};
  a.mult.assign(2, std::vector<SparseVec>(2));
  a.mult[0][0] = {{0, Rational(1)}};
  a.mult[1][1] = {{1, Rational(1)}};
  a.unit = {Rational(1), Rational(1)};
  FiniteDimCoalgebra c;
  c.labels = a.labels;
  c.comult.assign(2, {});
  c.comult[0] = {{0, 1, Rational(1)}, {1, 0, Rational(1)}};
  c.comult[1] = {{1, 1, Rational(1)}};
  c.counit = {Rational(0), Rational(1)};
  REQUIRE(check_algebra(a).passed());
  REQUIRE(check_coalgebra(c).passed());
  WeakHopfPresentation h{a, c, std::nullopt};
  Report rep = check_weak_bialgebra(h);
  CHECK_FALSE(rep.passed());
  bool unit_cond_failed = false;
  for (const auto& ck : rep.checks)
    if (ck.name == "weak_comult_of_unit" && !ck.passed()) unit_cond_failed = true;
  CHECK(unit_cond_failed);
}

TEST_CASE("counital maps on groupoid algebras project to identity spans") {
  FiniteGroupoid g = two_object_iso_groupoid();
  WeakHopfPresentation h = groupoid_algebra(g);
  CounitalMaps cm = counital_maps(h);
  std::size_t n = h.dim();
  // Basis slots 0,1 are ex, ey; 2,3 are g, gi.
  CHECK(cm.target_map.col(2) == vec_unit(n, 1));  // eps_t(g) = e_{t(g)} = ey
  CHECK(cm.source_map.col(2) == vec_unit(n, 0));  // eps_s(g) = ex
  CHECK(cm.source_subalgebra == cm.target_subalgebra);
  CHECK(cm.source_subalgebra.dim() == 2);
  CHECK(cm.source_subalgebra.contains(vec_unit(n, 0)));
  CHECK(cm.source_subalgebra.contains(vec_unit(n, 1)));

  WeakHopfPresentation z2 = groupoid_algebra(cyclic_groupoid(2));
  CounitalMaps cm2 = counital_maps(z2);
  CHECK(cm2.source_subalgebra.dim() == 1);
  CHECK(cm2.source_map.col(1) == z2.algebra.unit);  // eps_s(h) = eps(h) 1
}

TEST_CASE("antipode axioms for groupoid algebras; identity fails on Z/3") {
  CHECK(check_antipode(groupoid_algebra(two_object_iso_groupoid())).passed());
  CHECK(check_antipode(one_dim_hopf()).passed());

  WeakHopfPresentation z3 = groupoid_algebra(cyclic_groupoid(3));
  z3.antipode = Matrix::identity(3);
  Report rep = check_antipode(z3);
  CHECK_FALSE(rep.passed());
  bool ax1_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "S(h1)h2_eq_eps_s" && !c.passed()) ax1_failed = true;
  CHECK(ax1_failed);
}

TEST_CASE("is_hopf distinguishes groups from genuine groupoids") {
  CHECK(is_hopf(groupoid_algebra(cyclic_groupoid(2))));
  CHECK_FALSE(is_hopf(groupoid_algebra(two_object_iso_groupoid())));
  CHECK(is_hopf(one_dim_hopf()));
}

TEST_CASE("is_cocommutative") {
  CHECK(is_cocommutative(groupoid_algebra(two_object_iso_groupoid()).coalgebra));
  CHECK(is_cocommutative(one_dim_hopf().coalgebra));

  // Matrix coalgebra on 4 basis elements e_ij, Delta(e_ij) = sum_k e_ik x e_kj.
  FiniteDimCoalgebra mc;
  mc.labels = {"e11", "e12", "e21", "e22"};
  auto idx = [](std::size_t i, std::size_t j) { return i * 2 + j; };
  mc.comult.assign(4, {});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        mc.comult[idx(i, j)].push_back({idx(i, k), idx(k, j), Rational(1)});
  mc.counit = {Rational(1), Rational(0), Rational(0), Rational(1)};
  CHECK(check_coalgebra(mc).passed());
  CHECK_FALSE(is_cocommutative(mc));
}

TEST_CASE("direct sums are weak Hopf and never Hopf for two summands") {
  WeakHopfPresentation z2a = groupoid_algebra(cyclic_groupoid(2, "a"));
  WeakHopfPresentation z2b = groupoid_algebra(cyclic_groupoid(2, "b"));
  WeakHopfPresentation h = direct_sum({z2a, z2b});
  CHECK(h.dim() == 4);
  CHECK(run_weak_hopf_suite(h).passed());
  CHECK_FALSE(is_hopf(h));
  CounitalMaps cm = counital_maps(h);
  CHECK(cm.source_subalgebra.dim() == 2);

  CHECK(direct_sum({z2a}).dim() == 2);
  CHECK_THROWS_AS(direct_sum({z2a, z2a}), Error);

  // Groupoid algebra of a disjoint union equals the direct sum after the
  // canonical basis identification by labels.
  FiniteGroupoid du = disjoint_union(cyclic_groupoid(2, "a"), cyclic_groupoid(2, "b"));
  WeakHopfPresentation hdu = groupoid_algebra(du);
  CHECK(equal_up_to_label_bijection(hdu, h));

  // direct_sum is associative up to relabeling.
  WeakHopfPresentation kt = groupoid_algebra(cyclic_groupoid(1, "t"));
  CHECK(equal_up_to_label_bijection(direct_sum({direct_sum({z2a, z2b}), kt}),
                                    direct_sum({z2a, direct_sum({z2b, kt})})));
}

TEST_CASE("dual algebra: convolution structure") {
  // Dual of k(Z/2) is the split function algebra.
  WeakHopfPresentation z2 = groupoid_algebra(cyclic_groupoid(2));
  FiniteDimAlgebra d = dual_algebra(z2.coalgebra);
  CHECK(check_algebra(d).passed());
  // Grouplike basis dualizes to orthogonal idempotents.
  CHECK(d.multiply(vec_unit(2, 0), vec_unit(2, 0)) == vec_unit(2, 0));
  CHECK(vec_is_zero(d.multiply(vec_unit(2, 0), vec_unit(2, 1))));

  CHECK(dual_algebra(one_dim_hopf().coalgebra).dim() == 1);

  FiniteDimAlgebra d4 = dual_algebra(groupoid_algebra(two_object_iso_groupoid()).coalgebra);
  CHECK(check_algebra(d4).passed());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(d4.multiply(vec_unit(4, i), vec_unit(4, j)) ==
            d4.multiply(vec_unit(4, j), vec_unit(4, i)));
}

TEST_CASE("dual algebra is commutative exactly for cocommutative coalgebras") {
  // Cocommutative side: groupoid algebras.
  for (const auto& h : {groupoid_algebra(two_object_iso_groupoid()),
                        groupoid_algebra(cyclic_groupoid(3))}) {
    REQUIRE(is_cocommutative(h.coalgebra));
    FiniteDimAlgebra d = dual_algebra(h.coalgebra);
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < d.dim(); ++j)
        CHECK(d.multiply(vec_unit(d.dim(), i), vec_unit(d.dim(), j)) ==
              d.multiply(vec_unit(d.dim(), j), vec_unit(d.dim(), i)));
  }
  // Non-cocommutative side: the matrix coalgebra dualizes to M2.
  FiniteDimCoalgebra mc;
  mc.labels = {"e11", "e12", "e21", "e22"};
  auto idx = [](std::size_t i, std::size_t j) { return i * 2 + j; };
  mc.comult.assign(4, {});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        mc.comult[idx(i, j)].push_back({idx(i, k), idx(k, j), Rational(1)});
  mc.counit = {Rational(1), Rational(0), Rational(0), Rational(1)};
  REQUIRE_FALSE(is_cocommutative(mc));
  FiniteDimAlgebra d = dual_algebra(mc);
  CHECK(check_algebra(d).passed());
  bool commutative = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (d.multiply(vec_unit(4, i), vec_unit(4, j)) !=
          d.multiply(vec_unit(4, j), vec_unit(4, i)))
        commutative = false;
  CHECK_FALSE(commutative);
}

TEST_CASE("antipode invertibility enforced at construction") {
  WeakHopfPresentation h = groupoid_algebra(cyclic_groupoid(2));
  Matrix bad(2, 2);
  bad(0, 0) = 1;
  CHECK_THROWS_AS(WeakHopfPresentation::make(h.algebra, h.coalgebra, bad), Error);
}
