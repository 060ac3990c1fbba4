#include "whk/smash.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include "whk/grouplike.hpp"

using namespace whk;
using namespace whk::testing;

namespace {

/// k(Z/2) + k(Z/2) with the connecting isomorphism identifying the blocks.
SmashInput block_swap_input() {
  SmashInput in;
  in.site_labels = {"x", "y"};
  in.components = {groupoid_algebra(cyclic_groupoid(2, "a")),
                   groupoid_algebra(cyclic_groupoid(2, "b"))};
  in.groupoid = two_object_iso_groupoid();
  in.maps[0] = Matrix::identity(2);
  in.maps[1] = Matrix::identity(2);
  in.maps[2] = Matrix::identity(2);
  in.maps[3] = Matrix::identity(2);
  return in;
}

}  // namespace

TEST_CASE("block swap satisfies the smash conditions and the action is a module algebra") {
  SmashInput in = block_swap_input();
  CHECK(check_smash_conditions(in).passed());
  GroupoidAction act = in.as_groupoid_action();
  CHECK(check_groupoid_module(act).passed());
  CHECK(check_groupoid_module_algebra(act).passed());
  HModuleAction lin = linearize_action(act);
  CHECK(check_h_module_algebra(lin, act.algebra_carrier->total).passed());
}

TEST_CASE("block swap smash is an 8-dimensional weak Hopf algebra") {
  SmashInput in = block_swap_input();
  SmashProduct smash = build_smash(in);
  REQUIRE_FALSE(smash.algebra_only);
  CHECK(smash.presentation().dim() == 8);
  // dim = sum over morphisms of dim H_{t(g)}.
  std::size_t expect = 0;
  for (std::size_t m = 0; m < in.groupoid.morphism_count(); ++m)
    expect += in.components[in.groupoid.tgt[m]].dim();
  CHECK(smash.presentation().dim() == expect);

  CHECK(run_weak_hopf_suite(smash.presentation()).passed());
  CHECK(is_cocommutative(smash.presentation().coalgebra));
  CHECK_FALSE(is_hopf(smash.presentation()));
  CHECK(smash_base_idempotents(smash, in).passed());

  // All eight basis elements are grouplike: this smash is again a groupoid
  // algebra, of the connected two-object groupoid with vertex group Z/2.
  GrouplikeSet gs = enumerate_grouplikes(smash.presentation());
  CHECK(gs.complete);
  CHECK(gs.elements.size() == 8);
  FiniteGroupoid gamma = grouplike_groupoid(smash.presentation());
  CHECK(check_groupoid(gamma).passed());
  CHECK(gamma.object_count() == 2);
}

TEST_CASE("trivial groupoid smash reproduces the component") {
  SmashInput in;
  in.site_labels = {"tpt"};
  in.components = {groupoid_algebra(cyclic_groupoid(2, "a"))};
  in.groupoid = cyclic_groupoid(1, "t");
  in.maps[0] = Matrix::identity(2);
  CHECK(check_smash_conditions(in).passed());
  SmashProduct smash = build_smash(in);
  REQUIRE_FALSE(smash.algebra_only);
  CHECK(smash.presentation().dim() == 2);
  CHECK(run_weak_hopf_suite(smash.presentation()).passed());
  CHECK(is_hopf(smash.presentation()));
}

TEST_CASE("Z/2 acting trivially on k(Z/2) gives the 4-dim tensor Hopf algebra") {
  SmashInput in;
  in.site_labels = {"tpt"};
  in.components = {groupoid_algebra(cyclic_groupoid(2, "a"))};
  in.groupoid = cyclic_groupoid(2, "t");
  in.maps[0] = Matrix::identity(2);
  in.maps[1] = Matrix::identity(2);
  CHECK(check_smash_conditions(in).passed());
  SmashProduct smash = build_smash(in);
  REQUIRE_FALSE(smash.algebra_only);
  CHECK(smash.presentation().dim() == 4);
  CHECK(run_weak_hopf_suite(smash.presentation()).passed());
  CHECK(is_hopf(smash.presentation()));
  // Klein four-group algebra: four grouplikes.
  GrouplikeSet gs = enumerate_grouplikes(smash.presentation());
  CHECK(gs.complete);
  CHECK(gs.elements.size() == 4);
}

TEST_CASE("a sign-twisted structure map breaks eq-smash1 and downgrades to algebra-only") {
  SmashInput in = block_swap_input();
  Matrix twist = Matrix::of({{1, 0}, {0, -1}});  // as1 -> -bs1: algebra map, not coalgebra
  in.maps[2] = twist;
  in.maps[3] = twist;
  // Still a module algebra...
  GroupoidAction act = in.as_groupoid_action();
  REQUIRE(check_groupoid_module_algebra(act).passed());
  // ...but not compatible with the coalgebra structure.
  Report rep = check_smash_conditions(in);
  CHECK_FALSE(rep.passed());
  SmashProduct smash = build_smash(in);
  CHECK(smash.algebra_only);
  CHECK_FALSE(smash.full.has_value());
  CHECK(check_algebra(smash.algebra).passed());
  CHECK_THROWS_AS(smash.presentation(), Error);
}

TEST_CASE("smash module action from compatible H- and G-actions") {
  SmashInput in = block_swap_input();
  SmashProduct smash = build_smash(in);

  // Carrier: k^2 + k^2 with H acting through counit characters blockwise
  // and the groupoid acting by the swap.
  FiniteDimAlgebra carrier;
  carrier.labels = {"m1", "m2", "m3", "m4"};
  carrier.mult.assign(4, std::vector<SparseVec>(4));
  for (std::size_t i = 0; i < 4; ++i) carrier.mult[i][i] = {{i, Rational(1)}};
  carrier.unit.assign(4, 1);

  Matrix pa = Matrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  Matrix pb = Matrix::of({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  HModuleAction act_h;
  act_h.hopf = in.direct_sum_hopf();
  act_h.carrier_dim = 4;
  act_h.rho = {pa, pa, pb, pb};  // basis order ae, as1, be, bs1
  REQUIRE(check_h_module(act_h).passed());
  REQUIRE(check_h_module_algebra(act_h, carrier).passed());

  GroupoidAction swap;
  swap.groupoid = in.groupoid;
  swap.dims = {2, 2};
  swap.maps[0] = Matrix::identity(2);
  swap.maps[1] = Matrix::identity(2);
  swap.maps[2] = Matrix::identity(2);
  swap.maps[3] = Matrix::identity(2);
  HModuleAction act_g = linearize_action(swap);
  act_g.carrier_dim = 4;
  REQUIRE(check_h_module(act_g).passed());
  REQUIRE(check_h_module_algebra(act_g, carrier).passed());

  SmashActionResult res = smash_module_action(smash, in, act_h, act_g);
  CHECK(res.compatibility.passed());
  REQUIRE(res.action.has_value());
  CHECK(check_h_module(*res.action).passed());
  CHECK(check_h_module_algebra(*res.action, carrier).passed());
}

TEST_CASE("trivial smash action reduces to the H action") {
  SmashInput in;
  in.site_labels = {"tpt"};
  in.components = {groupoid_algebra(cyclic_groupoid(2, "a"))};
  in.groupoid = cyclic_groupoid(1, "t");
  in.maps[0] = Matrix::identity(2);
  SmashProduct smash = build_smash(in);

  FiniteDimAlgebra carrier;
  carrier.labels = {"m1", "m2"};
  carrier.mult.assign(2, std::vector<SparseVec>(2));
  carrier.mult[0][0] = {{0, Rational(1)}};
  carrier.mult[1][1] = {{1, Rational(1)}};
  carrier.unit = {Rational(1), Rational(1)};

  HModuleAction act_h;
  act_h.hopf = in.direct_sum_hopf();
  act_h.carrier_dim = 2;
  act_h.rho = {Matrix::identity(2), Matrix::of({{0, 1}, {1, 0}})};
  REQUIRE(check_h_module_algebra(act_h, carrier).passed());

  HModuleAction act_g;
  act_g.hopf = groupoid_algebra(in.groupoid);
  act_g.carrier_dim = 2;
  act_g.rho = {Matrix::identity(2)};

  SmashActionResult res = smash_module_action(smash, in, act_h, act_g);
  CHECK(res.compatibility.passed());
  REQUIRE(res.action.has_value());
  for (std::size_t p = 0; p < res.action->rho.size(); ++p) {
    auto [m, a] = smash.slot_morphism_component[p];
    CHECK(res.action->rho[p] == act_h.rho[a]);
  }
}

TEST_CASE("incompatible actions are rejected with a witness") {
  SmashInput in = block_swap_input();
  SmashProduct smash = build_smash(in);

  Matrix pa = Matrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  Matrix pb = Matrix::of({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  Matrix swap_a = Matrix::of({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  HModuleAction act_h;
  act_h.hopf = in.direct_sum_hopf();
  act_h.carrier_dim = 4;
  act_h.rho = {pa, swap_a, pb, pb};  // as1 acts by a block swap, bs1 does not

  GroupoidAction swap;
  swap.groupoid = in.groupoid;
  swap.dims = {2, 2};
  for (std::size_t m = 0; m < 4; ++m) swap.maps[m] = Matrix::identity(2);
  HModuleAction act_g = linearize_action(swap);

  SmashActionResult res = smash_module_action(smash, in, act_h, act_g);
  CHECK_FALSE(res.compatibility.passed());
  CHECK_FALSE(res.action.has_value());
}
