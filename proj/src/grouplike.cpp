#include "whk/grouplike.hpp"

#include "whk/errors.hpp"

#include <algorithm>

namespace whk {

bool is_grouplike(const WeakHopfPresentation& h, const Vec& v) {
  if (v.size() != h.dim()) throw ShapeError("is_grouplike: wrong length");
  if (h.coalgebra.counit_of(v) != 1) return false;
  return h.coalgebra.comultiply(v) == vec_kron(v, v);
}

GrouplikeSet enumerate_grouplikes(const WeakHopfPresentation& h) {
  // Evaluation at a grouplike is a unital character of H*, and conversely;
  // the character's value vector on the dual basis is the grouplike itself.
  CharacterSet chars = rational_characters(dual_algebra(h.coalgebra));
  GrouplikeSet out;
  out.complete = chars.complete;
  for (const Vec& chi : chars.characters) {
    if (!is_grouplike(h, chi))
      throw InternalError("dual character did not produce a grouplike");
    out.elements.push_back(chi);
  }
  std::sort(out.elements.begin(), out.elements.end(), vec_less);
  // Grouplikes are linearly independent; anything else is a solver bug.
  if (!out.elements.empty()) {
    if (rank(Matrix::from_rows(out.elements)) != out.elements.size())
      throw InternalError("grouplike set is linearly dependent");
  }
  return out;
}

std::string grouplike_label(const WeakHopfPresentation& h, const Vec& v, std::size_t index) {
  std::size_t nonzero = 0, where = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      ++nonzero;
      where = i;
    }
  }
  if (nonzero == 1 && v[where] == 1) return h.labels()[where];
  return "gl" + std::to_string(index);
}

FiniteGroupoid grouplike_groupoid(const WeakHopfPresentation& h) {
  if (!h.antipode) throw Error("grouplike_groupoid: antipode required");
  GrouplikeSet gs = enumerate_grouplikes(h);
  if (!gs.complete)
    throw NotSplitError("grouplike enumeration not split over the rationals");
  CounitalMaps cm = counital_maps(h);

  const auto& els = gs.elements;
  auto find_element = [&](const Vec& v) -> std::size_t {
    for (std::size_t i = 0; i < els.size(); ++i)
      if (els[i] == v) return i;
    throw InternalError("grouplike expression escapes the enumerated set");
  };

  // Objects: grouplikes lying in the target counital subalgebra.
  std::vector<std::size_t> object_of_element(els.size(), SIZE_MAX);
  FiniteGroupoid g;
  std::vector<std::size_t> object_elements;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (cm.target_subalgebra.contains(els[i])) {
      object_of_element[i] = g.objects.size();
      g.objects.push_back(grouplike_label(h, els[i], i));
      object_elements.push_back(i);
    }
  }
  for (std::size_t i = 0; i < els.size(); ++i) {
    g.morphisms.push_back(grouplike_label(h, els[i], i));
    std::size_t s = find_element(cm.source_map.apply(els[i]));
    std::size_t t = find_element(cm.target_map.apply(els[i]));
    if (object_of_element[s] == SIZE_MAX || object_of_element[t] == SIZE_MAX)
      throw InternalError("counital projection of a grouplike is not an object");
    g.src.push_back(object_of_element[s]);
    g.tgt.push_back(object_of_element[t]);
    g.inv.push_back(find_element(h.apply_antipode(els[i])));
  }
  g.identity_at.assign(g.objects.size(), 0);
  for (std::size_t o = 0; o < object_elements.size(); ++o) g.identity_at[o] = object_elements[o];
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (g.src[i] != g.tgt[j]) continue;
      Vec prod = h.algebra.multiply(els[i], els[j]);
      g.comp[{i, j}] = find_element(prod);
    }
  return g;
}

namespace {

/// Structure constants of a subalgebra on the span's echelon basis.
FiniteDimAlgebra subalgebra_on(const FiniteDimAlgebra& a, const Subspace& span, const Vec& unit) {
  std::size_t d = span.dim();
  FiniteDimAlgebra s;
  for (std::size_t i = 0; i < d; ++i) s.labels.push_back("c" + std::to_string(i));
  s.mult.assign(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = a.multiply(span.basis_vector(i), span.basis_vector(j));
      auto coords = span.coordinates_of(prod);
      if (!coords) throw InternalError("span is not multiplicatively closed");
      for (std::size_t k = 0; k < d; ++k)
        if ((*coords)[k] != 0) s.mult[i][j].push_back({k, (*coords)[k]});
    }
  auto ucoords = span.coordinates_of(unit);
  if (!ucoords) throw InternalError("unit lies outside the subalgebra");
  s.unit = *ucoords;
  return s;
}

}  // namespace

std::vector<Vec> grouplike_objects_via_idempotents(const WeakHopfPresentation& h,
                                                   std::size_t max_idempotents) {
  CounitalMaps cm = counital_maps(h);
  Subspace c = subspace_intersection(cm.source_subalgebra, cm.target_subalgebra);
  FiniteDimAlgebra calg = subalgebra_on(h.algebra, c, h.algebra.unit);

  CommutativeSplit split = primitive_idempotents_commutative(calg);
  if (!split.complete)
    throw NotSplitError("idempotents of H_s ∩ H_t not split over the rationals");
  std::size_t k = split.idempotents.size();
  if (k > max_idempotents)
    throw GuardError("primitive idempotent count " + std::to_string(k) +
                     " exceeds the bound " + std::to_string(max_idempotents));

  // H_min = H_s H_t, closed under multiplication.
  std::vector<Vec> prods;
  for (std::size_t i = 0; i < cm.source_subalgebra.dim(); ++i)
    for (std::size_t j = 0; j < cm.target_subalgebra.dim(); ++j)
      prods.push_back(h.algebra.multiply(cm.source_subalgebra.basis_vector(i),
                                         cm.target_subalgebra.basis_vector(j)));
  Subspace hmin = multiplicative_closure(h.algebra, Subspace::from_vectors(h.dim(), prods));

  std::vector<Vec> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    Vec p(h.dim());
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::size_t(1) << i))) continue;
      // Idempotent coordinates live on the echelon basis of C.
      Vec amb(h.dim());
      for (std::size_t r = 0; r < c.dim(); ++r)
        amb = vec_add(amb, vec_scale(split.idempotents[i][r], c.basis_vector(r)));
      p = vec_add(p, amb);
    }
    std::vector<Vec> img;
    for (std::size_t r = 0; r < hmin.dim(); ++r)
      img.push_back(h.algebra.multiply(hmin.basis_vector(r), p));
    if (Subspace::from_vectors(h.dim(), img).dim() == 1) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

Report check_grouplike_dichotomy(const WeakHopfPresentation& h) {
  Report rep;
  rep.command = "check_grouplike_dichotomy";
  CounitalMaps cm = counital_maps(h);
  Subspace c = subspace_intersection(cm.source_subalgebra, cm.target_subalgebra);
  rep.note("dim_Hs_cap_Ht", std::to_string(c.dim()));
  auto& check = rep.add_check("hopf_or_no_grouplike_objects");
  check.cases_checked = 1;
  if (c.dim() != 1) {
    rep.note("vacuous", "true");
    return rep;
  }
  if (is_hopf(h)) return rep;
  std::vector<Vec> objs = grouplike_objects_via_idempotents(h, 4);
  if (!objs.empty()) {
    check.fail({{"H"}, "dim(Hs∩Ht)=1 but H is not Hopf and grouplike objects exist"});
  }
  rep.finalize();
  return rep;
}

Report validate_idempotent_family(const FiniteDimAlgebra& a, const IdempotentFamily& f) {
  Report rep;
  rep.command = "validate_idempotent_family";
  if (f.site_labels.size() != f.idempotents.size())
    throw ShapeError("idempotent family: label/vector count mismatch");
  auto& check = rep.add_check("orthogonal_nonzero_idempotents");
  for (std::size_t i = 0; i < f.idempotents.size(); ++i) {
    ++check.cases_checked;
    if (vec_is_zero(f.idempotents[i])) {
      check.fail({{f.site_labels[i]}, "zero idempotent"});
      continue;
    }
    Vec sq = a.multiply(f.idempotents[i], f.idempotents[i]);
    if (sq != f.idempotents[i])
      check.fail({{f.site_labels[i]}, format_element(a.labels, vec_sub(sq, f.idempotents[i]))});
    for (std::size_t j = 0; j < f.idempotents.size(); ++j) {
      if (i == j) continue;
      Vec prod = a.multiply(f.idempotents[i], f.idempotents[j]);
      if (!vec_is_zero(prod))
        check.fail({{f.site_labels[i], f.site_labels[j]}, format_element(a.labels, prod)});
    }
  }
  rep.finalize();
  return rep;
}

std::optional<Vec> local_inverse(const FiniteDimAlgebra& a, const IdempotentFamily& f,
                                 const Vec& elem, std::size_t x, std::size_t y) {
  std::size_t n = a.dim();
  const Vec& ex = f.idempotents.at(x);
  const Vec& ey = f.idempotents.at(y);
  // Membership a ∈ e_y A e_x.
  if (a.multiply(ey, a.multiply(elem, ex)) != elem) return std::nullopt;
  // Linear system: a b = e_y, b a = e_x, b = e_x b e_y.
  Matrix la = a.left_mult(elem);
  Matrix ra = a.right_mult(elem);
  Matrix sandwich = a.left_mult(ex) * a.right_mult(ey);
  Matrix sys(3 * n, n);
  Vec rhs(3 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      sys(r, c) = la(r, c);
      sys(n + r, c) = ra(r, c);
      sys(2 * n + r, c) = sandwich(r, c) - Rational(r == c ? 1 : 0);
    }
  for (std::size_t r = 0; r < n; ++r) {
    rhs[r] = ey[r];
    rhs[n + r] = ex[r];
  }
  return solve(sys, rhs);
}

Report certify_local_units(const FiniteDimAlgebra& a, const IdempotentFamily& f,
                           std::vector<LocalUnitWitness>& witnesses) {
  Report rep;
  rep.command = "certify_local_units";
  Report fam = validate_idempotent_family(a, f);
  if (!fam.passed()) throw Error("idempotent family validation failed");
  auto& check = rep.add_check("local_unit_witnesses");
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    ++check.cases_checked;
    auto inv = local_inverse(a, f, witnesses[w].element, witnesses[w].src, witnesses[w].tgt);
    if (!inv) {
      check.fail({{"witness " + std::to_string(w), f.site_labels[witnesses[w].src] + "->" +
                                                       f.site_labels[witnesses[w].tgt]},
                  "no local inverse"});
      continue;
    }
    witnesses[w].inverse = *inv;
  }
  rep.finalize();
  return rep;
}

Report local_unit_closure_check(const FiniteDimAlgebra& a, const IdempotentFamily& f,
                                const std::vector<LocalUnitWitness>& witnesses) {
  Report rep;
  rep.command = "local_unit_closure_check";
  auto& check = rep.add_check("composable_products_are_local_units");
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (!witnesses[i].inverse) throw Error("closure check requires certified witnesses");
    for (std::size_t j = 0; j < witnesses.size(); ++j) {
      // a2 : y -> z composed with a1 : x -> y.
      const auto& a1 = witnesses[j];
      const auto& a2 = witnesses[i];
      if (a2.src != a1.tgt) continue;
      ++check.cases_checked;
      Vec prod = a.multiply(a2.element, a1.element);
      Vec inv = a.multiply(*a1.inverse, *a2.inverse);
      const Vec& ex = f.idempotents[a1.src];
      const Vec& ez = f.idempotents[a2.tgt];
      bool ok = a.multiply(ez, a.multiply(prod, ex)) == prod &&
                a.multiply(prod, inv) == ez && a.multiply(inv, prod) == ex;
      if (!ok) {
        check.fail({{"witness " + std::to_string(i), "witness " + std::to_string(j)},
                    "product is not a certified local unit"});
      }
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace whk
