#include "whk/walg.hpp"

#include "whk/concurrency.hpp"
#include "whk/errors.hpp"

#include <algorithm>
#include <set>

namespace whk {

void FiniteDimAlgebra::require_shape() const {
  std::size_t n = dim();
  if (mult.size() != n) throw ShapeError("mult tensor first index != dim");
  for (const auto& row : mult) {
    if (row.size() != n) throw ShapeError("mult tensor second index != dim");
    for (const auto& terms : row)
      for (const auto& [k, c] : terms) {
        if (k >= n) throw ShapeError("mult tensor output index out of range");
        (void)c;
      }
  }
  if (unit.size() != n) throw ShapeError("unit vector length != dim");
}

Vec FiniteDimAlgebra::multiply(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw ShapeError("multiply: wrong length");
  Vec z(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (const auto& [k, c] : mult[i][j]) z[k] += f * c;
    }
  }
  return z;
}

Matrix FiniteDimAlgebra::left_mult(const Vec& x) const {
  std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : mult[i][j]) m(k, j) += x[i] * c;
  }
  return m;
}

Matrix FiniteDimAlgebra::right_mult(const Vec& x) const {
  std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, c] : mult[i][j]) m(k, i) += x[j] * c;
  }
  return m;
}

Vec FiniteDimAlgebra::tensor_multiply(const Vec& s, const Vec& t) const {
  std::size_t n = dim();
  if (s.size() != n * n || t.size() != n * n) throw ShapeError("tensor_multiply: wrong length");
  Vec z(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij) {
    if (s[ij] == 0) continue;
    std::size_t i = ij / n, j = ij % n;
    for (std::size_t kl = 0; kl < n * n; ++kl) {
      if (t[kl] == 0) continue;
      std::size_t k = kl / n, l = kl % n;
      Rational f = s[ij] * t[kl];
      for (const auto& [a, ca] : mult[i][k])
        for (const auto& [b, cb] : mult[j][l]) z[a * n + b] += f * ca * cb;
    }
  }
  return z;
}

Vec FiniteDimAlgebra::tensor3_multiply(const Vec& s, const Vec& t) const {
  std::size_t n = dim();
  std::size_t n3 = n * n * n;
  if (s.size() != n3 || t.size() != n3) throw ShapeError("tensor3_multiply: wrong length");
  Vec z(n3);
  for (std::size_t p = 0; p < n3; ++p) {
    if (s[p] == 0) continue;
    std::size_t i = p / (n * n), j = (p / n) % n, k = p % n;
    for (std::size_t q = 0; q < n3; ++q) {
      if (t[q] == 0) continue;
      std::size_t u = q / (n * n), v = (q / n) % n, w = q % n;
      Rational f = s[p] * t[q];
      for (const auto& [a, ca] : mult[i][u])
        for (const auto& [b, cb] : mult[j][v])
          for (const auto& [c, cc] : mult[k][w]) z[(a * n + b) * n + c] += f * ca * cb * cc;
    }
  }
  return z;
}

Report check_algebra(const FiniteDimAlgebra& a) {
  a.require_shape();
  std::size_t n = a.dim();
  Report rep;
  rep.command = "check_algebra";

  auto& assoc = rep.add_check("associativity");
  assoc.cases_checked = n * n * n;
  {
    std::vector<std::vector<Witness>> found(chunk_count(n * n * n));
    parallel_chunks(n * n * n, [&](std::size_t lo, std::size_t hi, std::size_t chunk) {
      for (std::size_t t = lo; t < hi; ++t) {
        std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
        Vec ij = a.multiply(vec_unit(n, i), vec_unit(n, j));
        Vec lhs = a.multiply(ij, vec_unit(n, k));
        Vec rhs = a.multiply(vec_unit(n, i), a.multiply(vec_unit(n, j), vec_unit(n, k)));
        Vec res = vec_sub(lhs, rhs);
        if (!vec_is_zero(res)) {
          found[chunk].push_back(
              {{a.labels[i], a.labels[j], a.labels[k]}, format_element(a.labels, res)});
        }
      }
    });
    for (auto& chunk : found)
      for (auto& w : chunk) assoc.fail(std::move(w));
  }

  auto& unital = rep.add_check("unitality");
  for (std::size_t i = 0; i < n; ++i) {
    ++unital.cases_checked;
    Vec e = vec_unit(n, i);
    Vec lres = vec_sub(a.multiply(a.unit, e), e);
    Vec rres = vec_sub(a.multiply(e, a.unit), e);
    if (!vec_is_zero(lres)) unital.fail({{"1*" + a.labels[i]}, format_element(a.labels, lres)});
    if (!vec_is_zero(rres)) unital.fail({{a.labels[i] + "*1"}, format_element(a.labels, rres)});
  }

  rep.finalize();
  return rep;
}

void FiniteDimCoalgebra::require_shape() const {
  std::size_t n = dim();
  if (comult.size() != n) throw ShapeError("comult list length != dim");
  for (const auto& terms : comult)
    for (const auto& [j, k, c] : terms) {
      if (j >= n || k >= n) throw ShapeError("comult index out of range");
      (void)c;
    }
  if (counit.size() != n) throw ShapeError("counit length != dim");
}

Vec FiniteDimCoalgebra::comultiply(const Vec& x) const {
  std::size_t n = dim();
  if (x.size() != n) throw ShapeError("comultiply: wrong length");
  Vec z(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (const auto& [j, k, c] : comult[i]) z[j * n + k] += x[i] * c;
  }
  return z;
}

Rational FiniteDimCoalgebra::counit_of(const Vec& x) const {
  Rational r = 0;
  for (std::size_t i = 0; i < dim(); ++i) r += x[i] * counit[i];
  return r;
}

Vec FiniteDimCoalgebra::comultiply_twice(const Vec& x) const {
  std::size_t n = dim();
  Vec z(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (const auto& [j, k, c] : comult[i])
      for (const auto& [a, b, c2] : comult[j]) z[(a * n + b) * n + k] += x[i] * c * c2;
  }
  return z;
}

Report check_coalgebra(const FiniteDimCoalgebra& c) {
  c.require_shape();
  std::size_t n = c.dim();
  Report rep;
  rep.command = "check_coalgebra";

  auto& coassoc = rep.add_check("coassociativity");
  for (std::size_t i = 0; i < n; ++i) {
    ++coassoc.cases_checked;
    // (Delta (x) id)Delta vs (id (x) Delta)Delta on b_i.
    Vec lhs = c.comultiply_twice(vec_unit(n, i));
    Vec rhs(n * n * n);
    for (const auto& [j, k, cc] : c.comult[i])
      for (const auto& [a, b, c2] : c.comult[k]) rhs[(j * n + a) * n + b] += cc * c2;
    if (lhs != rhs) {
      coassoc.fail({{c.labels[i]}, "nonzero difference in H^(3)"});
    }
  }

  auto& counit = rep.add_check("counit_laws");
  for (std::size_t i = 0; i < n; ++i) {
    ++counit.cases_checked;
    Vec left(n), right(n);
    for (const auto& [j, k, cc] : c.comult[i]) {
      left[k] += cc * c.counit[j];
      right[j] += cc * c.counit[k];
    }
    Vec lres = vec_sub(left, vec_unit(n, i));
    Vec rres = vec_sub(right, vec_unit(n, i));
    if (!vec_is_zero(lres)) counit.fail({{c.labels[i], "left"}, format_element(c.labels, lres)});
    if (!vec_is_zero(rres)) counit.fail({{c.labels[i], "right"}, format_element(c.labels, rres)});
  }

  rep.finalize();
  return rep;
}

bool is_cocommutative(const FiniteDimCoalgebra& c) {
  std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec d = c.comultiply(vec_unit(n, i));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d[j * n + k] != d[k * n + j]) return false;
  }
  return true;
}

FiniteDimAlgebra dual_algebra(const FiniteDimCoalgebra& c) {
  std::size_t n = c.dim();
  FiniteDimAlgebra d;
  d.labels.reserve(n);
  for (const auto& l : c.labels) d.labels.push_back(l + "*");
  d.mult.assign(n, std::vector<SparseVec>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [i, j, cc] : c.comult[k]) d.mult[i][j].push_back({k, cc});
  // Merge duplicate (i,j,k) contributions.
  for (auto& row : d.mult)
    for (auto& terms : row) {
      std::sort(terms.begin(), terms.end(),
                [](const SparseTerm& a, const SparseTerm& b) { return a.first < b.first; });
      SparseVec merged;
      for (const auto& t : terms) {
        if (!merged.empty() && merged.back().first == t.first) {
          merged.back().second += t.second;
        } else {
          merged.push_back(t);
        }
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(),
                                  [](const SparseTerm& t) { return t.second == 0; }),
                   merged.end());
      terms = std::move(merged);
    }
  d.unit = c.counit;
  return d;
}

WeakHopfPresentation WeakHopfPresentation::make(FiniteDimAlgebra a, FiniteDimCoalgebra c,
                                                std::optional<Matrix> s) {
  a.require_shape();
  c.require_shape();
  if (a.labels != c.labels) throw ShapeError("algebra and coalgebra must share the basis");
  if (s) {
    if (s->rows() != a.dim() || s->cols() != a.dim())
      throw ShapeError("antipode matrix has wrong shape");
    if (rank(*s) != a.dim()) throw Error("antipode not invertible");
  }
  return WeakHopfPresentation{std::move(a), std::move(c), std::move(s)};
}

Vec WeakHopfPresentation::apply_antipode(const Vec& x) const {
  if (!antipode) throw Error("presentation has no antipode");
  return antipode->apply(x);
}

Report check_weak_bialgebra(const WeakHopfPresentation& h) {
  std::size_t n = h.dim();
  const auto& A = h.algebra;
  const auto& C = h.coalgebra;
  Report rep;
  rep.command = "check_weak_bialgebra";

  auto& multc = rep.add_check("comult_multiplicative");
  for (std::size_t i = 0; i < n; ++i) {
    Vec di = C.comultiply(vec_unit(n, i));
    for (std::size_t j = 0; j < n; ++j) {
      ++multc.cases_checked;
      Vec dj = C.comultiply(vec_unit(n, j));
      Vec lhs = C.comultiply(A.multiply(vec_unit(n, i), vec_unit(n, j)));
      Vec rhs = A.tensor_multiply(di, dj);
      if (lhs != rhs) {
        multc.fail({{A.labels[i], A.labels[j]}, "Delta(ab) != Delta(a)Delta(b)"});
      }
    }
  }

  auto& weps = rep.add_check("weak_counit_identity");
  weps.cases_checked = n * n * n;
  {
    // Pairings eps(b_a b_b), precomputed once.
    Matrix eps2(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        eps2(a, b) = C.counit_of(A.multiply(vec_unit(n, a), vec_unit(n, b)));
    std::vector<std::vector<Witness>> found(chunk_count(n * n * n));
    parallel_chunks(n * n * n, [&](std::size_t lo, std::size_t hi, std::size_t chunk) {
      for (std::size_t t = lo; t < hi; ++t) {
        std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
        Vec bij = A.multiply(vec_unit(n, i), vec_unit(n, j));
        Rational lhs = C.counit_of(A.multiply(bij, vec_unit(n, k)));
        Rational mid1 = 0, mid2 = 0;
        for (const auto& [p, q, cc] : C.comult[j]) {
          mid1 += cc * eps2(i, p) * eps2(q, k);
          mid2 += cc * eps2(i, q) * eps2(p, k);
        }
        if (lhs != mid1 || lhs != mid2) {
          found[chunk].push_back({{A.labels[i], A.labels[j], A.labels[k]},
                                  rational_to_string(lhs) + " vs " + rational_to_string(mid1) +
                                      " / " + rational_to_string(mid2)});
        }
      }
    });
    for (auto& chunk : found)
      for (auto& w : chunk) weps.fail(std::move(w));
  }

  auto& wunit = rep.add_check("weak_comult_of_unit");
  {
    wunit.cases_checked = 2;
    Vec d1 = C.comultiply(A.unit);
    Vec d2 = C.comultiply_twice(A.unit);
    // Delta(1) (x) 1 and 1 (x) Delta(1) in H^(3).
    Vec left(n * n * n), right(n * n * n);
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      if (d1[jk] == 0) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (A.unit[u] == 0) continue;
        left[jk * n + u] += d1[jk] * A.unit[u];
        right[u * n * n + jk] += d1[jk] * A.unit[u];
      }
    }
    if (d2 != A.tensor3_multiply(left, right)) {
      wunit.fail({{"unit", "(Delta(1)x1)(1xDelta(1))"}, "differs from Delta^2(1)"});
    }
    if (d2 != A.tensor3_multiply(right, left)) {
      wunit.fail({{"unit", "(1xDelta(1))(Delta(1)x1)"}, "differs from Delta^2(1)"});
    }
  }

  rep.finalize();
  return rep;
}

CounitalMaps counital_maps(const WeakHopfPresentation& h) {
  std::size_t n = h.dim();
  const auto& A = h.algebra;
  const auto& C = h.coalgebra;
  Vec d1 = C.comultiply(A.unit);
  Matrix src(n, n), tgt(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = vec_unit(n, i);
    Vec s(n), t(n);
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      if (d1[jk] == 0) continue;
      std::size_t j = jk / n, k = jk % n;
      // eps_s(x) = 1_1 eps(x 1_2); eps_t(x) = eps(1_1 x) 1_2.
      Rational es = C.counit_of(A.multiply(x, vec_unit(n, k)));
      if (es != 0) s[j] += d1[jk] * es;
      Rational et = C.counit_of(A.multiply(vec_unit(n, j), x));
      if (et != 0) t[k] += d1[jk] * et;
    }
    src.set_col(i, s);
    tgt.set_col(i, t);
  }
  if (src * src != src || tgt * tgt != tgt)
    throw InternalError("counital maps not idempotent; input is not a weak bialgebra");
  return CounitalMaps{src, tgt, Subspace::column_space(src), Subspace::column_space(tgt)};
}

Report check_antipode(const WeakHopfPresentation& h) {
  if (!h.antipode) throw Error("check_antipode: no antipode present");
  std::size_t n = h.dim();
  const auto& A = h.algebra;
  const auto& C = h.coalgebra;
  const Matrix& S = *h.antipode;
  CounitalMaps cm = counital_maps(h);
  Report rep;
  rep.command = "check_antipode";

  auto& ax1 = rep.add_check("S(h1)h2_eq_eps_s");
  auto& ax2 = rep.add_check("h1S(h2)_eq_eps_t");
  auto& ax3 = rep.add_check("S(h1)h2S(h3)_eq_S");
  for (std::size_t i = 0; i < n; ++i) {
    ++ax1.cases_checked;
    ++ax2.cases_checked;
    ++ax3.cases_checked;
    Vec lhs1(n), lhs2(n), lhs3(n);
    for (const auto& [j, k, c] : C.comult[i]) {
      lhs1 = vec_add(lhs1, vec_scale(c, A.multiply(S.col(j), vec_unit(n, k))));
      lhs2 = vec_add(lhs2, vec_scale(c, A.multiply(vec_unit(n, j), S.col(k))));
      for (const auto& [a, b, c2] : C.comult[j]) {
        lhs3 = vec_add(lhs3, vec_scale(c * c2,
                                       A.multiply(A.multiply(S.col(a), vec_unit(n, b)), S.col(k))));
      }
    }
    Vec r1 = vec_sub(lhs1, cm.source_map.col(i));
    Vec r2 = vec_sub(lhs2, cm.target_map.col(i));
    Vec r3 = vec_sub(lhs3, S.col(i));
    if (!vec_is_zero(r1)) ax1.fail({{A.labels[i]}, format_element(A.labels, r1)});
    if (!vec_is_zero(r2)) ax2.fail({{A.labels[i]}, format_element(A.labels, r2)});
    if (!vec_is_zero(r3)) ax3.fail({{A.labels[i]}, format_element(A.labels, r3)});
  }

  auto& am = rep.add_check("anti_multiplicative");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++am.cases_checked;
      Vec lhs = S.apply(A.multiply(vec_unit(n, i), vec_unit(n, j)));
      Vec rhs = A.multiply(S.col(j), S.col(i));
      Vec res = vec_sub(lhs, rhs);
      if (!vec_is_zero(res)) am.fail({{A.labels[i], A.labels[j]}, format_element(A.labels, res)});
    }

  auto& ac = rep.add_check("anti_comultiplicative");
  for (std::size_t i = 0; i < n; ++i) {
    ++ac.cases_checked;
    Vec lhs = C.comultiply(S.col(i));
    Vec rhs(n * n);
    for (const auto& [j, k, c] : C.comult[i]) {
      Vec t = vec_kron(S.col(k), S.col(j));
      for (std::size_t p = 0; p < n * n; ++p) rhs[p] += c * t[p];
    }
    if (lhs != rhs) ac.fail({{A.labels[i]}, "Delta(S(h)) != (S x S)(swap Delta(h))"});
  }

  rep.finalize();
  return rep;
}

bool is_hopf(const WeakHopfPresentation& h) {
  std::size_t n = h.dim();
  bool hopf = h.coalgebra.comultiply(h.algebra.unit) == vec_kron(h.algebra.unit, h.algebra.unit);
  if (hopf) {
    // Equivalent characterization, asserted as a cross-check.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational lhs =
            h.coalgebra.counit_of(h.algebra.multiply(vec_unit(n, i), vec_unit(n, j)));
        if (lhs != h.coalgebra.counit[i] * h.coalgebra.counit[j])
          throw InternalError("Delta(1)=1x1 but counit is not multiplicative");
      }
  }
  return hopf;
}

WeakHopfPresentation direct_sum(const std::vector<WeakHopfPresentation>& parts) {
  if (parts.empty()) throw Error("direct_sum of empty list");
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();

  FiniteDimAlgebra a;
  FiniteDimCoalgebra c;
  a.mult.assign(total, std::vector<SparseVec>(total));
  a.unit.assign(total, 0);
  c.comult.assign(total, {});
  c.counit.assign(total, 0);
  Matrix s(total, total);
  bool any_antipode = true;
  std::set<std::string> seen;

  std::size_t off = 0;
  for (const auto& p : parts) {
    std::size_t n = p.dim();
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& l = p.labels()[i];
      if (!seen.insert(l).second) throw Error("direct_sum: label collision on '" + l + "'");
      a.labels.push_back(l);
      c.labels.push_back(l);
      a.unit[off + i] = p.algebra.unit[i];
      c.counit[off + i] = p.coalgebra.counit[i];
      for (const auto& [j, k, cc] : p.coalgebra.comult[i])
        c.comult[off + i].push_back({off + j, off + k, cc});
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, cc] : p.algebra.mult[i][j])
          a.mult[off + i][off + j].push_back({off + k, cc});
    if (p.antipode) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(off + i, off + j) = (*p.antipode)(i, j);
    } else {
      any_antipode = false;
    }
    off += n;
  }
  return WeakHopfPresentation::make(std::move(a), std::move(c),
                                    any_antipode ? std::optional<Matrix>(s) : std::nullopt);
}

Subspace multiplicative_closure(const FiniteDimAlgebra& a, Subspace v) {
  for (;;) {
    std::vector<Vec> vecs;
    for (std::size_t i = 0; i < v.dim(); ++i) vecs.push_back(v.basis_vector(i));
    std::size_t base = v.dim();
    for (std::size_t i = 0; i < base; ++i)
      for (std::size_t j = 0; j < base; ++j)
        vecs.push_back(a.multiply(v.basis_vector(i), v.basis_vector(j)));
    Subspace grown = Subspace::from_vectors(v.ambient(), vecs);
    if (grown.dim() == v.dim()) return grown;
    v = grown;
  }
}

Report run_weak_hopf_suite(const WeakHopfPresentation& h) {
  Report rep;
  rep.command = "weak_hopf_suite";
  rep.absorb(check_algebra(h.algebra), "algebra");
  rep.absorb(check_coalgebra(h.coalgebra), "coalgebra");
  rep.absorb(check_weak_bialgebra(h), "weak_bialgebra");
  if (h.antipode) rep.absorb(check_antipode(h), "antipode");
  return rep;
}

}  // namespace whk
