#include "whk/smash.hpp"

#include "whk/errors.hpp"

namespace whk {

void SmashInput::require_shape() const {
  groupoid.require_shape();
  if (groupoid.objects != site_labels)
    throw ShapeError("smash input: groupoid objects must equal site labels");
  if (components.size() != site_labels.size())
    throw ShapeError("smash input: one weak Hopf component per site");
  for (std::size_t m = 0; m < groupoid.morphism_count(); ++m) {
    auto it = maps.find(m);
    if (it == maps.end()) throw ShapeError("smash input: missing structure map");
    if (it->second.rows() != components[groupoid.tgt[m]].dim() ||
        it->second.cols() != components[groupoid.src[m]].dim())
      throw ShapeError("smash input: structure map shape mismatch");
  }
}

WeakHopfPresentation SmashInput::direct_sum_hopf() const { return direct_sum(components); }

GroupoidAction SmashInput::as_groupoid_action() const {
  GroupoidAction act;
  act.groupoid = groupoid;
  std::vector<FiniteDimAlgebra> comps;
  for (const auto& h : components) comps.push_back(h.algebra);
  act.algebra_carrier = XDecompAlgebra::assemble(site_labels, comps);
  for (const auto& h : components) act.dims.push_back(h.dim());
  act.maps = maps;
  return act;
}

Report check_smash_conditions(const SmashInput& input) {
  input.require_shape();
  Report rep;
  rep.command = "check_smash_conditions";
  const auto& g = input.groupoid;

  auto& comult = rep.add_check("action_commutes_with_comultiplication");
  auto& counit = rep.add_check("action_preserves_counit");
  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    const auto& hs = input.components[g.src[m]];
    const auto& ht = input.components[g.tgt[m]];
    const Matrix& nu = input.maps.at(m);
    Matrix nunu = kronecker(nu, nu);
    for (std::size_t a = 0; a < hs.dim(); ++a) {
      ++comult.cases_checked;
      Vec lhs = ht.coalgebra.comultiply(nu.apply(vec_unit(hs.dim(), a)));
      Vec rhs = nunu.apply(hs.coalgebra.comultiply(vec_unit(hs.dim(), a)));
      if (lhs != rhs)
        comult.fail({{g.morphisms[m], hs.labels()[a]}, "Delta(g.a) != (g.a_1) x (g.a_2)"});
      ++counit.cases_checked;
      if (ht.coalgebra.counit_of(nu.apply(vec_unit(hs.dim(), a))) != hs.coalgebra.counit[a])
        counit.fail({{g.morphisms[m], hs.labels()[a]}, "eps(g.a) != eps(a)"});
    }
  }

  rep.finalize();
  return rep;
}

const WeakHopfPresentation& SmashProduct::presentation() const {
  if (!full) throw Error("smash product was built algebra-only");
  return *full;
}

SmashProduct build_smash(const SmashInput& input) {
  input.require_shape();
  const auto& g = input.groupoid;
  std::vector<std::size_t> order = groupoid_algebra_basis(g);

  SmashProduct out;
  // Basis slots: (component basis of H_{t(g)}) # g, morphisms in
  // groupoid-algebra order.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot_of;
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::size_t m = order[p];
    const auto& ht = input.components[g.tgt[m]];
    for (std::size_t a = 0; a < ht.dim(); ++a) {
      slot_of[{m, a}] = out.slot_morphism_component.size();
      out.slot_morphism_component.push_back({m, a});
      out.algebra.labels.push_back(ht.labels()[a] + "#" + g.morphisms[m]);
    }
  }
  std::size_t n = out.slot_morphism_component.size();

  out.algebra.mult.assign(n, std::vector<SparseVec>(n));
  for (std::size_t p = 0; p < n; ++p) {
    auto [h, a] = out.slot_morphism_component[p];
    for (std::size_t q = 0; q < n; ++q) {
      auto [k, b] = out.slot_morphism_component[q];
      // (a # h)(b # k) = a (h.b) # hk.
      auto hk = g.compose(h, k);
      if (!hk) continue;
      const auto& ct = input.components[g.tgt[h]];
      Vec moved = input.maps.at(h).apply(vec_unit(input.components[g.tgt[k]].dim(), b));
      Vec prod = ct.algebra.multiply(vec_unit(ct.dim(), a), moved);
      for (std::size_t c = 0; c < prod.size(); ++c)
        if (prod[c] != 0) out.algebra.mult[p][q].push_back({slot_of.at({*hk, c}), prod[c]});
    }
  }
  out.algebra.unit.assign(n, 0);
  for (std::size_t x = 0; x < g.object_count(); ++x) {
    std::size_t e = g.identity_at[x];
    const Vec& u = input.components[x].algebra.unit;
    for (std::size_t a = 0; a < u.size(); ++a)
      if (u[a] != 0) out.algebra.unit[slot_of.at({e, a})] = u[a];
  }

  if (!check_smash_conditions(input).passed()) {
    out.algebra_only = true;
    return out;
  }

  FiniteDimCoalgebra co;
  co.labels = out.algebra.labels;
  co.comult.assign(n, {});
  co.counit.assign(n, 0);
  Matrix s(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    auto [m, a] = out.slot_morphism_component[p];
    const auto& ct = input.components[g.tgt[m]];
    for (const auto& [j, k, c] : ct.coalgebra.comult[a])
      co.comult[p].push_back({slot_of.at({m, j}), slot_of.at({m, k}), c});
    co.counit[p] = ct.coalgebra.counit[a];
    // S(a # g) = (g^{-1}.S_H(a)) # g^{-1}.
    std::size_t gi = g.inv[m];
    Vec sa = ct.apply_antipode(vec_unit(ct.dim(), a));
    Vec moved = input.maps.at(gi).apply(sa);
    for (std::size_t c = 0; c < moved.size(); ++c)
      if (moved[c] != 0) s(slot_of.at({gi, c}), p) = moved[c];
  }
  out.full = WeakHopfPresentation::make(out.algebra, std::move(co), std::move(s));
  return out;
}

Report smash_base_idempotents(const SmashProduct& smash, const SmashInput& input) {
  Report rep;
  rep.command = "smash_base_idempotents";
  const auto& h = smash.presentation();
  const auto& g = input.groupoid;
  std::size_t n = h.dim();

  // f_x = 1_{H_x} # e_x.
  std::vector<Vec> f;
  for (std::size_t x = 0; x < g.object_count(); ++x) {
    Vec v(n);
    for (std::size_t p = 0; p < n; ++p) {
      auto [m, a] = smash.slot_morphism_component[p];
      if (m == g.identity_at[x]) v[p] = input.components[x].algebra.unit[a];
    }
    f.push_back(std::move(v));
  }

  auto& complete = rep.add_check("complete");
  complete.cases_checked = 1;
  Vec sum(n);
  for (const auto& v : f) sum = vec_add(sum, v);
  if (sum != h.algebra.unit) complete.fail({{"sum"}, format_element(h.labels(), sum)});

  auto& orth = rep.add_check("orthogonal_idempotents");
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y) {
      ++orth.cases_checked;
      Vec prod = h.algebra.multiply(f[x], f[y]);
      Vec expect = (x == y) ? f[x] : Vec(n);
      if (prod != expect)
        orth.fail({{g.objects[x], g.objects[y]}, format_element(h.labels(), prod)});
    }

  CounitalMaps cm = counital_maps(h);
  auto& prim = rep.add_check("primitive_in_target_subalgebra");
  for (std::size_t x = 0; x < f.size(); ++x) {
    ++prim.cases_checked;
    std::vector<Vec> img;
    for (std::size_t r = 0; r < cm.target_subalgebra.dim(); ++r)
      img.push_back(h.algebra.multiply(cm.target_subalgebra.basis_vector(r), f[x]));
    if (Subspace::from_vectors(n, img).dim() != 1)
      prim.fail({{g.objects[x]}, "dim(H_t f_x) != 1"});
  }

  auto& grouplike = rep.add_check("grouplike");
  for (std::size_t x = 0; x < f.size(); ++x) {
    ++grouplike.cases_checked;
    if (h.coalgebra.comultiply(f[x]) != vec_kron(f[x], f[x]))
      grouplike.fail({{g.objects[x]}, "Delta(f_x) != f_x x f_x"});
  }

  auto& span = rep.add_check("counital_subalgebras_spanned_by_base");
  span.cases_checked = 2;
  Subspace base = Subspace::from_vectors(n, f);
  if (!(cm.target_subalgebra == base)) span.fail({{"target"}, "span{f_x} != H_t"});
  if (!(cm.source_subalgebra == base)) span.fail({{"source"}, "span{f_x} != H_s"});

  rep.finalize();
  return rep;
}

SmashActionResult smash_module_action(const SmashProduct& smash, const SmashInput& input,
                                      const HModuleAction& act_h, const HModuleAction& act_g) {
  input.require_shape();
  act_h.require_shape();
  act_g.require_shape();
  if (act_h.carrier_dim != act_g.carrier_dim)
    throw ShapeError("the two actions must share a carrier");
  const auto& g = input.groupoid;
  std::vector<std::size_t> order = groupoid_algebra_basis(g);
  std::vector<std::size_t> slot(g.morphism_count());
  for (std::size_t p = 0; p < order.size(); ++p) slot[order[p]] = p;

  SmashActionResult out;
  out.compatibility.command = "smash_action_compatibility";
  auto& compat = out.compatibility.add_check("rho_H(g.h)_eq_conjugation");

  // Offsets of the weak Hopf components inside the direct sum.
  std::vector<std::size_t> off(1, 0);
  for (const auto& c : input.components) off.push_back(off.back() + c.dim());

  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    std::size_t s = g.src[m];
    const Matrix& rg = act_g.rho[slot[m]];
    const Matrix& rgi = act_g.rho[slot[g.inv[m]]];
    for (std::size_t x = 0; x < input.components.size(); ++x) {
      for (std::size_t a = 0; a < input.components[x].dim(); ++a) {
        ++compat.cases_checked;
        // g.h: the input action on the component, zero off-source.
        Matrix lhs(act_h.carrier_dim, act_h.carrier_dim);
        if (x == s) {
          Vec moved = input.maps.at(m).apply(vec_unit(input.components[s].dim(), a));
          Vec total(off.back());
          std::size_t to = off[g.tgt[m]];
          for (std::size_t c = 0; c < moved.size(); ++c) total[to + c] = moved[c];
          lhs = act_h.rho_of(total);
        }
        Matrix rhs = rg * act_h.rho[off[x] + a] * rgi;
        if (lhs != rhs) {
          compat.fail({{g.morphisms[m], input.components[x].labels()[a]},
                       "rho_H(g.h) != rho_G(g) rho_H(h) rho_G(g^{-1})"});
        }
      }
    }
  }
  out.compatibility.finalize();
  if (!out.compatibility.passed()) return out;

  HModuleAction act;
  act.hopf = smash.presentation();
  act.carrier_dim = act_h.carrier_dim;
  for (std::size_t p = 0; p < smash.slot_morphism_component.size(); ++p) {
    auto [m, a] = smash.slot_morphism_component[p];
    act.rho.push_back(act_h.rho[off[g.tgt[m]] + a] * act_g.rho[slot[m]]);
  }
  out.action = std::move(act);
  return out;
}

}  // namespace whk
