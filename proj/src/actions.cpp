#include "whk/actions.hpp"

#include "whk/errors.hpp"

namespace whk {

const Matrix& GroupoidAction::map_of(std::size_t m) const {
  auto it = maps.find(m);
  if (it == maps.end()) throw ShapeError("no structure map for morphism index " + std::to_string(m));
  return it->second;
}

std::size_t GroupoidAction::total_dim() const {
  std::size_t t = 0;
  for (std::size_t d : dims) t += d;
  return t;
}

void GroupoidAction::require_shape() const {
  groupoid.require_shape();
  if (dims.size() != groupoid.object_count()) throw ShapeError("dims must cover all objects");
  if (algebra_carrier) {
    if (algebra_carrier->site_labels != groupoid.objects)
      throw ShapeError("carrier sites must match groupoid objects");
    for (std::size_t x = 0; x < dims.size(); ++x)
      if (dims[x] != algebra_carrier->component_dim(x))
        throw ShapeError("carrier dims inconsistent");
  }
  for (std::size_t m = 0; m < groupoid.morphism_count(); ++m) {
    const Matrix& mat = map_of(m);
    if (mat.rows() != dims[groupoid.tgt[m]] || mat.cols() != dims[groupoid.src[m]])
      throw ShapeError("structure map for '" + groupoid.morphisms[m] + "' has wrong shape");
  }
}

Report check_groupoid_module(const GroupoidAction& act) {
  act.require_shape();
  const auto& g = act.groupoid;
  Report rep;
  rep.command = "check_groupoid_module";

  auto& ids = rep.add_check("identities_act_as_identity");
  for (std::size_t x = 0; x < g.object_count(); ++x) {
    ++ids.cases_checked;
    if (!act.map_of(g.identity_at[x]).is_identity())
      ids.fail({{g.objects[x]}, "structure map of e_x is not the identity"});
  }

  auto& comp = rep.add_check("composition");
  for (const auto& [gh, k] : g.comp) {
    ++comp.cases_checked;
    if (act.map_of(gh.first) * act.map_of(gh.second) != act.map_of(k)) {
      comp.fail({{g.morphisms[gh.first], g.morphisms[gh.second]}, "nu_g nu_h != nu_gh"});
    }
  }

  auto& invs = rep.add_check("invertibility");
  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    ++invs.cases_checked;
    const Matrix& fwd = act.map_of(m);
    const Matrix& bwd = act.map_of(g.inv[m]);
    if (!(bwd * fwd).is_identity() || !(fwd * bwd).is_identity()) {
      invs.fail({{g.morphisms[m]}, "nu_{g^{-1}} is not inverse to nu_g"});
    }
  }

  rep.finalize();
  return rep;
}

Report check_groupoid_module_algebra(const GroupoidAction& act) {
  act.require_shape();
  if (!act.algebra_carrier) throw Error("module-algebra check requires an algebra carrier");
  const auto& g = act.groupoid;
  const auto& xa = *act.algebra_carrier;
  Report rep;
  rep.command = "check_groupoid_module_algebra";

  auto& mult = rep.add_check("multiplicativity");
  auto& unital = rep.add_check("unitality");
  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    std::size_t s = g.src[m];
    const auto& comp_s = xa.components[s];
    const auto& comp_t = xa.components[g.tgt[m]];
    const Matrix& nu = act.map_of(m);
    for (std::size_t i = 0; i < comp_s.dim(); ++i)
      for (std::size_t j = 0; j < comp_s.dim(); ++j) {
        ++mult.cases_checked;
        Vec lhs = nu.apply(comp_s.multiply(vec_unit(comp_s.dim(), i), vec_unit(comp_s.dim(), j)));
        Vec rhs = comp_t.multiply(nu.apply(vec_unit(comp_s.dim(), i)),
                                  nu.apply(vec_unit(comp_s.dim(), j)));
        Vec res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res))
          mult.fail({{g.morphisms[m], comp_s.labels[i], comp_s.labels[j]},
                     format_element(comp_t.labels, res)});
      }
    ++unital.cases_checked;
    Vec res = vec_sub(nu.apply(comp_s.unit), comp_t.unit);
    if (!vec_is_zero(res))
      unital.fail({{g.morphisms[m]}, format_element(comp_t.labels, res)});
  }

  rep.finalize();
  return rep;
}

GroupoidAction tensor_action(const GroupoidAction& a, const GroupoidAction& b) {
  a.require_shape();
  b.require_shape();
  if (!isomorphic_by_labels(a.groupoid, b.groupoid) || a.groupoid.morphisms != b.groupoid.morphisms)
    throw Error("tensor_action: groupoid mismatch");
  GroupoidAction t;
  t.groupoid = a.groupoid;
  for (std::size_t x = 0; x < a.dims.size(); ++x) t.dims.push_back(a.dims[x] * b.dims[x]);
  for (std::size_t m = 0; m < a.groupoid.morphism_count(); ++m)
    t.maps[m] = kronecker(a.map_of(m), b.map_of(m));
  return t;
}

GroupoidAction unit_action(const FiniteGroupoid& g) {
  GroupoidAction u;
  u.groupoid = g;
  u.dims.assign(g.object_count(), 1);
  for (std::size_t m = 0; m < g.morphism_count(); ++m) u.maps[m] = Matrix::identity(1);
  return u;
}

Report check_module_morphism(const GroupoidAction& v, const GroupoidAction& w,
                             const std::vector<Matrix>& components) {
  v.require_shape();
  w.require_shape();
  if (components.size() != v.groupoid.object_count())
    throw ShapeError("one component map per object required");
  Report rep;
  rep.command = "check_module_morphism";
  auto& inter = rep.add_check("intertwines_structure_maps");
  const auto& g = v.groupoid;
  for (std::size_t x = 0; x < g.object_count(); ++x) {
    if (components[x].rows() != w.dims[x] || components[x].cols() != v.dims[x])
      throw ShapeError("component map shape mismatch at object " + g.objects[x]);
  }
  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    ++inter.cases_checked;
    // omega_g f_{s(g)} = f_{t(g)} nu_g
    if (w.map_of(m) * components[g.src[m]] != components[g.tgt[m]] * v.map_of(m)) {
      inter.fail({{g.morphisms[m]}, "omega_g f_s != f_t nu_g"});
    }
  }
  rep.finalize();
  return rep;
}

CertifiedFunctor action_to_functor(const GroupoidAction& act) {
  act.require_shape();
  if (!act.algebra_carrier) throw Error("functor packaging requires an algebra carrier");
  CertifiedFunctor f;
  f.groupoid = act.groupoid;
  f.carrier = *act.algebra_carrier;
  f.certificate.command = "action_to_functor";
  auto& cert = f.certificate.add_check("images_are_invertible_unital_algebra_maps");
  const auto& g = act.groupoid;
  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    const Matrix& nu = act.map_of(m);
    f.images[m] = nu;
    const auto& cs = f.carrier.components[g.src[m]];
    const auto& ct = f.carrier.components[g.tgt[m]];
    ++cert.cases_checked;
    if (!inverse(nu).has_value()) {
      cert.fail({{g.morphisms[m]}, "not invertible"});
      continue;
    }
    if (nu.apply(cs.unit) != ct.unit) {
      cert.fail({{g.morphisms[m]}, "not unital"});
    }
    for (std::size_t i = 0; i < cs.dim(); ++i)
      for (std::size_t j = 0; j < cs.dim(); ++j) {
        Vec lhs = nu.apply(cs.multiply(vec_unit(cs.dim(), i), vec_unit(cs.dim(), j)));
        Vec rhs = ct.multiply(nu.apply(vec_unit(cs.dim(), i)), nu.apply(vec_unit(cs.dim(), j)));
        if (lhs != rhs) {
          cert.fail({{g.morphisms[m], cs.labels[i], cs.labels[j]}, "not multiplicative"});
        }
      }
  }
  f.certificate.finalize();
  return f;
}

GroupoidAction functor_to_action(const CertifiedFunctor& f) {
  GroupoidAction act;
  act.groupoid = f.groupoid;
  act.algebra_carrier = f.carrier;
  for (std::size_t x = 0; x < f.carrier.component_count(); ++x)
    act.dims.push_back(f.carrier.component_dim(x));
  act.maps = f.images;
  act.require_shape();
  return act;
}

Matrix HModuleAction::rho_of(const Vec& h) const {
  if (h.size() != hopf.dim()) throw ShapeError("rho_of: wrong length");
  Matrix m(carrier_dim, carrier_dim);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    m = m + h[i] * rho[i];
  }
  return m;
}

void HModuleAction::require_shape() const {
  if (rho.size() != hopf.dim()) throw ShapeError("one matrix per basis element required");
  for (const auto& m : rho)
    if (m.rows() != carrier_dim || m.cols() != carrier_dim)
      throw ShapeError("action matrix has wrong shape");
}

Report check_h_module(const HModuleAction& act) {
  act.require_shape();
  std::size_t n = act.hopf.dim();
  Report rep;
  rep.command = "check_h_module";
  auto& algmap = rep.add_check("rho_is_algebra_map");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++algmap.cases_checked;
      Matrix lhs = act.rho[i] * act.rho[j];
      Matrix rhs = act.rho_of(act.hopf.algebra.multiply(vec_unit(n, i), vec_unit(n, j)));
      if (lhs != rhs)
        algmap.fail({{act.hopf.labels()[i], act.hopf.labels()[j]}, "rho(a)rho(b) != rho(ab)"});
    }
  auto& unital = rep.add_check("rho_of_unit_is_identity");
  unital.cases_checked = 1;
  if (!act.rho_of(act.hopf.algebra.unit).is_identity())
    unital.fail({{"1"}, "rho(1) != id"});
  rep.finalize();
  return rep;
}

Report check_h_module_algebra(const HModuleAction& act, const FiniteDimAlgebra& carrier) {
  act.require_shape();
  carrier.require_shape();
  if (carrier.dim() != act.carrier_dim) throw ShapeError("carrier dim mismatch");
  std::size_t n = act.hopf.dim();
  std::size_t d = carrier.dim();
  CounitalMaps cm = counital_maps(act.hopf);
  Report rep;
  rep.command = "check_h_module_algebra";

  auto& mult = rep.add_check("h_multiplicativity");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& terms = act.hopf.coalgebra.comult[i];
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        ++mult.cases_checked;
        Vec lhs = act.rho[i].apply(carrier.multiply(vec_unit(d, a), vec_unit(d, b)));
        Vec rhs(d);
        for (const auto& [j, k, c] : terms) {
          Vec t = carrier.multiply(act.rho[j].apply(vec_unit(d, a)),
                                   act.rho[k].apply(vec_unit(d, b)));
          rhs = vec_add(rhs, vec_scale(c, t));
        }
        Vec res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res))
          mult.fail({{act.hopf.labels()[i], carrier.labels[a], carrier.labels[b]},
                     format_element(carrier.labels, res)});
      }
  }

  auto& unital = rep.add_check("h_unitality");
  for (std::size_t i = 0; i < n; ++i) {
    ++unital.cases_checked;
    Vec lhs = act.rho[i].apply(carrier.unit);
    Vec rhs = act.rho_of(cm.target_map.col(i)).apply(carrier.unit);
    Vec res = vec_sub(lhs, rhs);
    if (!vec_is_zero(res))
      unital.fail({{act.hopf.labels()[i]}, format_element(carrier.labels, res)});
  }

  rep.finalize();
  return rep;
}

HModuleAction linearize_action(const GroupoidAction& act) {
  act.require_shape();
  const auto& g = act.groupoid;
  WeakHopfPresentation h = groupoid_algebra(g);
  std::vector<std::size_t> order = groupoid_algebra_basis(g);

  // Offsets of the carrier components in declaration order of objects.
  std::vector<std::size_t> off(g.object_count() + 1, 0);
  for (std::size_t x = 0; x < g.object_count(); ++x) off[x + 1] = off[x] + act.dims[x];
  std::size_t total = off.back();

  HModuleAction out;
  out.hopf = std::move(h);
  out.carrier_dim = total;
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::size_t m = order[p];
    const Matrix& nu = act.map_of(m);
    Matrix padded(total, total);
    std::size_t so = off[g.src[m]], to = off[g.tgt[m]];
    for (std::size_t r = 0; r < nu.rows(); ++r)
      for (std::size_t c = 0; c < nu.cols(); ++c) padded(to + r, so + c) = nu(r, c);
    out.rho.push_back(std::move(padded));
  }
  return out;
}

Subspace action_annihilator(const HModuleAction& act) {
  act.require_shape();
  std::size_t n = act.hopf.dim();
  Matrix m(act.carrier_dim * act.carrier_dim, n);
  for (std::size_t i = 0; i < n; ++i) m.set_col(i, act.rho[i].flatten());
  return kernel(m);
}

namespace {

Report x_algebra_map_report(const Matrix& f, const XAlgebra& a, const XAlgebra& b,
                            const char* command) {
  if (a.idems.site_labels != b.idems.site_labels)
    throw ShapeError("idempotent families must share site labels");
  if (f.rows() != b.algebra.dim() || f.cols() != a.algebra.dim())
    throw ShapeError("map matrix has wrong shape");
  Report rep;
  rep.command = command;

  auto& unital = rep.add_check("unital");
  unital.cases_checked = 1;
  {
    Vec res = vec_sub(f.apply(a.algebra.unit), b.algebra.unit);
    if (!vec_is_zero(res)) unital.fail({{"1"}, format_element(b.algebra.labels, res)});
  }

  auto& mult = rep.add_check("multiplicative");
  std::size_t n = a.algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++mult.cases_checked;
      Vec lhs = f.apply(a.algebra.multiply(vec_unit(n, i), vec_unit(n, j)));
      Vec rhs = b.algebra.multiply(f.apply(vec_unit(n, i)), f.apply(vec_unit(n, j)));
      Vec res = vec_sub(lhs, rhs);
      if (!vec_is_zero(res))
        mult.fail({{a.algebra.labels[i], a.algebra.labels[j]},
                   format_element(b.algebra.labels, res)});
    }

  auto& idem = rep.add_check("idempotents_preserved");
  for (std::size_t x = 0; x < a.idems.idempotents.size(); ++x) {
    ++idem.cases_checked;
    Vec res = vec_sub(f.apply(a.idems.idempotents[x]), b.idems.idempotents[x]);
    if (!vec_is_zero(res))
      idem.fail({{a.idems.site_labels[x]}, format_element(b.algebra.labels, res)});
  }
  return rep;
}

}  // namespace

Report check_x_algebra_map(const Matrix& f, const XAlgebra& a, const XAlgebra& b) {
  Report rep = x_algebra_map_report(f, a, b, "check_x_algebra_map");
  rep.finalize();
  return rep;
}

Report check_x_weak_hopf_map(const Matrix& f, const XWeakHopf& a, const XWeakHopf& b) {
  Report rep = x_algebra_map_report(f, XAlgebra{a.hopf.algebra, a.idems},
                                    XAlgebra{b.hopf.algebra, b.idems}, "check_x_weak_hopf_map");
  std::size_t n = a.hopf.dim();
  Matrix ff = kronecker(f, f);

  auto& comult = rep.add_check("comultiplicative");
  for (std::size_t i = 0; i < n; ++i) {
    ++comult.cases_checked;
    Vec lhs = b.hopf.coalgebra.comultiply(f.col(i));
    Vec rhs = ff.apply(a.hopf.coalgebra.comultiply(vec_unit(n, i)));
    if (lhs != rhs) comult.fail({{a.hopf.labels()[i]}, "Delta f != (f x f) Delta"});
  }

  auto& counit = rep.add_check("counital");
  for (std::size_t i = 0; i < n; ++i) {
    ++counit.cases_checked;
    if (b.hopf.coalgebra.counit_of(f.col(i)) != a.hopf.coalgebra.counit[i])
      counit.fail({{a.hopf.labels()[i]}, "eps f != eps"});
  }

  if (a.hopf.antipode && b.hopf.antipode) {
    auto& anti = rep.add_check("antipode_intertwined");
    for (std::size_t i = 0; i < n; ++i) {
      ++anti.cases_checked;
      Vec lhs = b.hopf.apply_antipode(f.col(i));
      Vec rhs = f.apply(a.hopf.apply_antipode(vec_unit(n, i)));
      if (lhs != rhs) anti.fail({{a.hopf.labels()[i]}, "S f != f S"});
    }
  }
  rep.finalize();
  return rep;
}

DecompositionResult decompose_from_idempotents(
    const HModuleAction& act, const FiniteDimAlgebra& carrier,
    const std::optional<std::vector<Vec>>& supplied_idempotents) {
  act.require_shape();
  carrier.require_shape();
  const auto& h = act.hopf;
  DecompositionResult out;
  out.report.command = "decompose_from_idempotents";

  CounitalMaps cm = counital_maps(h);
  if (!(cm.source_subalgebra == cm.target_subalgebra))
    throw Error("decomposition requires H_s = H_t");

  std::vector<Vec> idems;
  if (supplied_idempotents) {
    idems = *supplied_idempotents;
  } else {
    FiniteDimAlgebra ht = [&] {
      // Subalgebra structure on H_t.
      const Subspace& span = cm.target_subalgebra;
      std::size_t d = span.dim();
      FiniteDimAlgebra s;
      for (std::size_t i = 0; i < d; ++i) s.labels.push_back("t" + std::to_string(i));
      s.mult.assign(d, std::vector<SparseVec>(d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          auto coords = span.coordinates_of(
              h.algebra.multiply(span.basis_vector(i), span.basis_vector(j)));
          if (!coords) throw InternalError("H_t is not multiplicatively closed");
          for (std::size_t k = 0; k < d; ++k)
            if ((*coords)[k] != 0) s.mult[i][j].push_back({k, (*coords)[k]});
        }
      auto u = span.coordinates_of(h.algebra.unit);
      if (!u) throw InternalError("unit outside H_t");
      s.unit = *u;
      return s;
    }();
    CommutativeSplit split = primitive_idempotents_commutative(ht);
    if (!split.complete) throw NotSplitError("H_t idempotents not split over the rationals");
    for (const Vec& coords : split.idempotents) {
      Vec amb(h.dim());
      for (std::size_t r = 0; r < cm.target_subalgebra.dim(); ++r)
        amb = vec_add(amb, vec_scale(coords[r], cm.target_subalgebra.basis_vector(r)));
      idems.push_back(amb);
    }
  }

  auto& valid = out.report.add_check("idempotents_valid");
  {
    Vec sum(h.dim());
    for (std::size_t i = 0; i < idems.size(); ++i) {
      ++valid.cases_checked;
      if (!cm.target_subalgebra.contains(idems[i]))
        valid.fail({{"e" + std::to_string(i)}, "not inside H_t"});
      for (std::size_t j = 0; j < idems.size(); ++j) {
        Vec prod = h.algebra.multiply(idems[i], idems[j]);
        Vec expect = (i == j) ? idems[i] : Vec(h.dim());
        if (prod != expect)
          valid.fail({{"e" + std::to_string(i), "e" + std::to_string(j)}, "not orthogonal idempotents"});
      }
      // Primitivity: dim(H_t e_i) = 1.
      std::vector<Vec> img;
      for (std::size_t r = 0; r < cm.target_subalgebra.dim(); ++r)
        img.push_back(h.algebra.multiply(cm.target_subalgebra.basis_vector(r), idems[i]));
      if (Subspace::from_vectors(h.dim(), img).dim() != 1)
        valid.fail({{"e" + std::to_string(i)}, "not primitive"});
      sum = vec_add(sum, idems[i]);
    }
    ++valid.cases_checked;
    if (sum != h.algebra.unit) valid.fail({{"completeness"}, "idempotents do not sum to 1"});
  }

  auto& grouplike = out.report.add_check("idempotents_grouplike");
  for (std::size_t i = 0; i < idems.size(); ++i) {
    ++grouplike.cases_checked;
    if (h.coalgebra.comultiply(idems[i]) != vec_kron(idems[i], idems[i]))
      grouplike.fail({{"e" + std::to_string(i)}, "Delta(e) != e x e"});
  }

  out.hopf_idempotents = idems;
  std::size_t d = carrier.dim();
  auto& localids = out.report.add_check("local_identities_central_orthogonal_complete");
  Vec sum1(d);
  for (std::size_t i = 0; i < idems.size(); ++i) {
    Vec one_i = act.rho_of(idems[i]).apply(carrier.unit);
    out.local_identities.push_back(one_i);
    sum1 = vec_add(sum1, one_i);
  }
  for (std::size_t i = 0; i < out.local_identities.size(); ++i) {
    for (std::size_t j = 0; j < out.local_identities.size(); ++j) {
      ++localids.cases_checked;
      Vec prod = carrier.multiply(out.local_identities[i], out.local_identities[j]);
      Vec expect = (i == j) ? out.local_identities[i] : Vec(d);
      if (prod != expect)
        localids.fail({{"1_" + std::to_string(i), "1_" + std::to_string(j)},
                       format_element(carrier.labels, prod)});
    }
    for (std::size_t a = 0; a < d; ++a) {
      ++localids.cases_checked;
      if (carrier.multiply(out.local_identities[i], vec_unit(d, a)) !=
          carrier.multiply(vec_unit(d, a), out.local_identities[i]))
        localids.fail({{"1_" + std::to_string(i), carrier.labels[a]}, "not central"});
    }
  }
  ++localids.cases_checked;
  if (sum1 != carrier.unit) localids.fail({{"completeness"}, format_element(carrier.labels, sum1)});

  out.report.finalize();
  if (!out.report.passed()) return out;

  // Blocks and component algebras.
  std::size_t block_dim_sum = 0;
  std::vector<FiniteDimAlgebra> comps;
  std::vector<std::string> sites;
  for (std::size_t i = 0; i < idems.size(); ++i) {
    Subspace blk = Subspace::column_space(carrier.left_mult(out.local_identities[i]));
    out.blocks.push_back(blk);
    block_dim_sum += blk.dim();
    FiniteDimAlgebra comp;
    std::size_t bd = blk.dim();
    for (std::size_t r = 0; r < bd; ++r)
      comp.labels.push_back("x" + std::to_string(i) + "_" + std::to_string(r));
    comp.mult.assign(bd, std::vector<SparseVec>(bd));
    for (std::size_t r = 0; r < bd; ++r)
      for (std::size_t s = 0; s < bd; ++s) {
        auto coords = blk.coordinates_of(carrier.multiply(blk.basis_vector(r), blk.basis_vector(s)));
        if (!coords) throw InternalError("block is not multiplicatively closed");
        for (std::size_t k = 0; k < bd; ++k)
          if ((*coords)[k] != 0) comp.mult[r][s].push_back({k, (*coords)[k]});
      }
    auto ucoords = blk.coordinates_of(out.local_identities[i]);
    if (!ucoords) throw InternalError("local identity outside its block");
    comp.unit = *ucoords;
    comps.push_back(std::move(comp));
    sites.push_back("e" + std::to_string(i));
  }
  if (block_dim_sum != d) throw InternalError("blocks do not decompose the carrier");
  out.decomposition = XDecompAlgebra::assemble(std::move(sites), std::move(comps));
  return out;
}

}  // namespace whk
