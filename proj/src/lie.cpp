#include "whk/lie.hpp"

#include "whk/errors.hpp"

namespace whk {

void FiniteDimLieAlgebra::require_shape() const {
  std::size_t n = dim();
  if (bracket.size() != n) throw ShapeError("bracket tensor first index != dim");
  for (const auto& row : bracket) {
    if (row.size() != n) throw ShapeError("bracket tensor second index != dim");
    for (const auto& terms : row)
      for (const auto& [k, c] : terms) {
        if (k >= n) throw ShapeError("bracket output index out of range");
        (void)c;
      }
  }
}

Vec FiniteDimLieAlgebra::bracket_of(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw ShapeError("bracket_of: wrong length");
  Vec z(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (const auto& [k, c] : bracket[i][j]) z[k] += x[i] * y[j] * c;
    }
  }
  return z;
}

Report check_lie(const FiniteDimLieAlgebra& l) {
  l.require_shape();
  std::size_t n = l.dim();
  Report rep;
  rep.command = "check_lie";

  auto& anti = rep.add_check("antisymmetry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++anti.cases_checked;
      Vec res = vec_add(l.bracket_of(vec_unit(n, i), vec_unit(n, j)),
                        l.bracket_of(vec_unit(n, j), vec_unit(n, i)));
      if (!vec_is_zero(res))
        anti.fail({{l.labels[i], l.labels[j]}, format_element(l.labels, res)});
      if (i == j && !vec_is_zero(l.bracket_of(vec_unit(n, i), vec_unit(n, i))))
        anti.fail({{l.labels[i]}, "[x,x] != 0"});
    }

  auto& jac = rep.add_check("jacobi");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++jac.cases_checked;
        Vec ei = vec_unit(n, i), ej = vec_unit(n, j), ek = vec_unit(n, k);
        Vec res = vec_add(vec_add(l.bracket_of(ei, l.bracket_of(ej, ek)),
                                  l.bracket_of(ej, l.bracket_of(ek, ei))),
                          l.bracket_of(ek, l.bracket_of(ei, ej)));
        if (!vec_is_zero(res))
          jac.fail({{l.labels[i], l.labels[j], l.labels[k]}, format_element(l.labels, res)});
      }

  rep.finalize();
  return rep;
}

FiniteDimLieAlgebra general_linear_lie(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back(prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      Matrix e(n, n);
      e(i, j) = 1;
      mats.push_back(e);
    }
  return lie_from_matrices(labels, mats);
}

FiniteDimLieAlgebra lie_from_matrices(const std::vector<std::string>& labels,
                                      const std::vector<Matrix>& mats) {
  if (labels.size() != mats.size()) throw ShapeError("label/matrix count mismatch");
  std::size_t n = mats.size();
  std::vector<Vec> flat;
  for (const auto& m : mats) flat.push_back(m.flatten());
  Subspace span = Subspace::from_vectors(flat.empty() ? 0 : flat[0].size(), flat);
  if (span.dim() != n) throw Error("lie_from_matrices: matrices are linearly dependent");
  Matrix coords = Matrix::from_rows(flat).transpose();  // solve coords in the GIVEN basis

  FiniteDimLieAlgebra l;
  l.labels = labels;
  l.bracket.assign(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix c = mats[i] * mats[j] - mats[j] * mats[i];
      auto sol = solve(coords, c.flatten());
      if (!sol) throw Error("lie_from_matrices: commutator escapes the span");
      for (std::size_t k = 0; k < n; ++k)
        if ((*sol)[k] != 0) l.bracket[i][j].push_back({k, (*sol)[k]});
    }
  return l;
}

Subspace derivation_space(const FiniteDimAlgebra& a) {
  a.require_shape();
  std::size_t n = a.dim();
  if (n == 0) return Subspace::zero(0);
  // Unknown D flattened row-major: D[r][c] at r*n + c.
  // For each (i, j, r): sum_k m[i][j][k] D[r][k]
  //   - sum_s m[i][s][r] D[s][j] - sum_s m[s][j][r] D[s][i] = 0.
  Matrix sys(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t base = (i * n + j) * n;
      for (const auto& [k, c] : a.mult[i][j])
        for (std::size_t r = 0; r < n; ++r) sys(base + r, r * n + k) += c;
      for (std::size_t s = 0; s < n; ++s) {
        for (const auto& [r, c] : a.mult[i][s]) sys(base + r, s * n + j) -= c;
        for (const auto& [r, c] : a.mult[s][j]) sys(base + r, s * n + i) -= c;
      }
    }
  return kernel(sys);
}

FiniteDimLieAlgebra derivation_lie_algebra(const FiniteDimAlgebra& a) {
  Subspace der = derivation_space(a);
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  std::size_t n = a.dim();
  for (std::size_t r = 0; r < der.dim(); ++r) {
    labels.push_back("D" + std::to_string(r));
    mats.push_back(Matrix::unflatten(n, n, der.basis_vector(r)));
  }
  if (mats.empty()) {
    FiniteDimLieAlgebra l;
    return l;
  }
  // Bracket closure of the solution space: commutators must stay inside.
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j) {
      Matrix c = mats[i] * mats[j] - mats[j] * mats[i];
      if (!der.contains(c.flatten()))
        throw InternalError("derivation space is not bracket-closed");
    }
  return lie_from_matrices(labels, mats);
}

XLieAlgebroid derivation_algebroid(const XDecompAlgebra& a) {
  XLieAlgebroid out;
  out.site_labels = a.site_labels;
  for (std::size_t x = 0; x < a.component_count(); ++x)
    out.components.push_back(derivation_lie_algebra(a.components[x]));
  return out;
}

void LieAction::require_shape() const {
  if (algebroid.site_labels != carrier.site_labels)
    throw ShapeError("algebroid and carrier must share site labels");
  if (tau.size() != algebroid.component_count())
    throw ShapeError("one matrix family per component required");
  for (std::size_t x = 0; x < tau.size(); ++x) {
    if (tau[x].size() != algebroid.components[x].dim())
      throw ShapeError("one matrix per Lie basis element required at site " +
                       algebroid.site_labels[x]);
    for (const auto& m : tau[x])
      if (m.rows() != carrier.component_dim(x) || m.cols() != carrier.component_dim(x))
        throw ShapeError("action matrix crosses components at site " + algebroid.site_labels[x]);
  }
}

Report check_lie_module_algebra(const FiniteDimLieAlgebra& l, const FiniteDimAlgebra& a,
                                const std::vector<Matrix>& tau) {
  l.require_shape();
  a.require_shape();
  if (tau.size() != l.dim()) throw ShapeError("one matrix per Lie basis element required");
  std::size_t d = a.dim();
  Report rep;
  rep.command = "check_lie_module_algebra";

  auto& leib = rep.add_check("leibniz");
  for (std::size_t p = 0; p < l.dim(); ++p)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        ++leib.cases_checked;
        Vec lhs = tau[p].apply(a.multiply(vec_unit(d, i), vec_unit(d, j)));
        Vec rhs = vec_add(a.multiply(vec_unit(d, i), tau[p].apply(vec_unit(d, j))),
                          a.multiply(tau[p].apply(vec_unit(d, i)), vec_unit(d, j)));
        Vec res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res))
          leib.fail({{l.labels[p], a.labels[i], a.labels[j]}, format_element(a.labels, res)});
      }

  auto& unit = rep.add_check("unit_annihilated");
  for (std::size_t p = 0; p < l.dim(); ++p) {
    ++unit.cases_checked;
    Vec img = tau[p].apply(a.unit);
    if (!vec_is_zero(img)) unit.fail({{l.labels[p]}, format_element(a.labels, img)});
  }

  auto& liemap = rep.add_check("tau_is_a_lie_map");
  for (std::size_t p = 0; p < l.dim(); ++p)
    for (std::size_t q = 0; q < l.dim(); ++q) {
      ++liemap.cases_checked;
      Vec br = l.bracket_of(vec_unit(l.dim(), p), vec_unit(l.dim(), q));
      Matrix lhs(d, d);
      for (std::size_t k = 0; k < l.dim(); ++k) {
        if (br[k] == 0) continue;
        lhs = lhs + br[k] * tau[k];
      }
      Matrix rhs = tau[p] * tau[q] - tau[q] * tau[p];
      if (lhs != rhs) liemap.fail({{l.labels[p], l.labels[q]}, "tau[p,q] != [tau p, tau q]"});
    }

  rep.finalize();
  return rep;
}

Report check_algebroid_action(const LieAction& act) {
  act.require_shape();
  Report rep;
  rep.command = "check_algebroid_action";
  for (std::size_t x = 0; x < act.algebroid.component_count(); ++x) {
    if (act.algebroid.components[x].dim() == 0) continue;
    rep.absorb(check_lie_module_algebra(act.algebroid.components[x], act.carrier.components[x],
                                        act.tau[x]),
               act.algebroid.site_labels[x]);
  }
  return rep;
}

ConjugationResult conjugate_action(const GroupoidAction& grp, const LieAction& lie) {
  grp.require_shape();
  lie.require_shape();
  if (grp.groupoid.objects != lie.carrier.site_labels)
    throw ShapeError("groupoid objects must match carrier sites");
  for (std::size_t x = 0; x < grp.dims.size(); ++x)
    if (grp.dims[x] != lie.carrier.component_dim(x))
      throw ShapeError("groupoid action and Lie action live on different carriers");

  ConjugationResult out;
  out.report.command = "conjugate_action";
  auto& member = out.report.add_check("conjugates_are_derivations");
  auto& functorial = out.report.add_check("conjugation_respects_composition");
  const auto& g = grp.groupoid;

  // Derivation spaces per component, computed once.
  std::vector<Subspace> der;
  for (std::size_t x = 0; x < lie.carrier.component_count(); ++x)
    der.push_back(derivation_space(lie.carrier.components[x]));

  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    std::size_t s = g.src[m], t = g.tgt[m];
    const Matrix& nu = grp.map_of(m);
    const Matrix& nu_inv = grp.map_of(g.inv[m]);
    for (std::size_t p = 0; p < lie.algebroid.components[s].dim(); ++p) {
      ++member.cases_checked;
      Matrix conj = nu * lie.tau[s][p] * nu_inv;
      if (!der[t].contains(conj.flatten())) {
        member.fail({{g.morphisms[m], lie.algebroid.components[s].labels[p]},
                     "conjugate is not a derivation of the target component"});
      }
      out.table[{m, p}] = std::move(conj);
    }
  }

  // nu functoriality transfers to the conjugation table.
  for (const auto& [gh, k] : g.comp) {
    std::size_t first = gh.first, second = gh.second;
    for (std::size_t p = 0; p < lie.algebroid.components[g.src[second]].dim(); ++p) {
      ++functorial.cases_checked;
      Matrix lhs = out.table.at({k, p});
      Matrix rhs = grp.map_of(first) * out.table.at({second, p}) * grp.map_of(g.inv[first]);
      if (lhs != rhs)
        functorial.fail({{g.morphisms[first], g.morphisms[second],
                          lie.algebroid.components[g.src[second]].labels[p]},
                         "conj_gh != conj_g conj_h"});
    }
  }

  out.report.finalize();
  return out;
}

Report bounded_envelope_consistency(const LieAction& lie, const GroupoidAction& grp,
                                    std::size_t degree) {
  grp.require_shape();
  lie.require_shape();
  if (grp.groupoid.objects != lie.carrier.site_labels)
    throw ShapeError("groupoid objects must match carrier sites");

  Report rep;
  rep.command = "bounded_envelope_consistency";
  auto& words = rep.add_check("word_multiplicativity");
  const auto& g = grp.groupoid;

  for (std::size_t m = 0; m < g.morphism_count(); ++m) {
    std::size_t s = g.src[m], t = g.tgt[m];
    const auto& comp_s = lie.carrier.components[s];
    const auto& comp_t = lie.carrier.components[t];
    const Matrix& nu = grp.map_of(m);
    std::size_t gens = lie.algebroid.components[t].dim();

    // Enumerate words over the target component's generators, length <= d.
    std::vector<std::vector<std::size_t>> stack{{}};
    while (!stack.empty()) {
      std::vector<std::size_t> word = std::move(stack.back());
      stack.pop_back();
      if (word.size() < degree) {
        for (std::size_t p = 0; p < gens; ++p) {
          auto next = word;
          next.push_back(p);
          stack.push_back(std::move(next));
        }
      }
      std::size_t k = word.size();
      // M_S = (prod_{i in S} tau(p_i)) nu_g for every subset S.
      std::vector<Matrix> ops(std::size_t(1) << k);
      for (std::size_t mask = 0; mask < ops.size(); ++mask) {
        Matrix op = Matrix::identity(comp_t.dim());
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (std::size_t(1) << i)) op = op * lie.tau[t][word[i]];
        ops[mask] = op * nu;
      }
      // Cache operator images of every source basis vector.
      std::vector<std::vector<Vec>> img(ops.size(), std::vector<Vec>(comp_s.dim()));
      for (std::size_t mask = 0; mask < ops.size(); ++mask)
        for (std::size_t a = 0; a < comp_s.dim(); ++a)
          img[mask][a] = ops[mask].apply(vec_unit(comp_s.dim(), a));

      std::size_t full = ops.size() - 1;
      for (std::size_t a = 0; a < comp_s.dim(); ++a)
        for (std::size_t b = 0; b < comp_s.dim(); ++b) {
          ++words.cases_checked;
          Vec lhs =
              ops[full].apply(comp_s.multiply(vec_unit(comp_s.dim(), a), vec_unit(comp_s.dim(), b)));
          Vec rhs(comp_t.dim());
          for (std::size_t mask = 0; mask <= full; ++mask) {
            rhs = vec_add(rhs, comp_t.multiply(img[mask][a], img[full ^ mask][b]));
          }
          if (lhs != rhs) {
            std::string wname;
            for (std::size_t i : word)
              wname += (wname.empty() ? "" : ".") + lie.algebroid.components[t].labels[i];
            words.fail({{wname.empty() ? "(empty)" : wname, g.morphisms[m], comp_s.labels[a],
                         comp_s.labels[b]},
                        "h.(ab) != (h1.a)(h2.b)"});
          }
        }
    }
  }

  rep.finalize();
  return rep;
}

}  // namespace whk
