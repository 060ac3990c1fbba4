#pragma once

// Test-only oracles, implemented independently of the production paths
// they cross-check.

#include "whk/ideals.hpp"
#include "whk/subspace.hpp"
#include "whk/walg.hpp"

namespace whk::testing {

/// Brute-force derivation dimension: assembles the dense Leibniz system
/// from scratch via basis products (different assembly order and data
/// path from derivation_space) and counts rank.
inline std::size_t oracle_derivation_dimension(const FiniteDimAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // Row of: [D(b_i b_j)]_r - [b_i D(b_j)]_r - [D(b_i) b_j]_r = 0,
        // unknowns D[s][t] flattened s*n + t.
        Vec row(n * n);
        Vec prod = a.multiply(vec_unit(n, i), vec_unit(n, j));
        for (std::size_t t = 0; t < n; ++t) row[r * n + t] += prod[t];
        for (std::size_t s = 0; s < n; ++s) {
          Vec left = a.multiply(vec_unit(n, i), vec_unit(n, s));
          row[s * n + j] -= left[r];
          Vec right = a.multiply(vec_unit(n, s), vec_unit(n, j));
          row[s * n + i] -= right[r];
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix sys = Matrix::from_rows(rows);
  return n * n - rank(sys);
}

/// Dual-route largest weak Hopf ideal inside w: grow the smallest
/// subspace of H* containing ann(w) and the counit that is closed under
/// convolution products, the transposed antipode, and subcoalgebra
/// generation; its annihilator is the answer. Completeness follows from
/// the order-reversing correspondence between Hopf ideals of H and such
/// closed subspaces of H*.
inline Subspace oracle_largest_hopf_ideal(const WeakHopfPresentation& h, const Subspace& w) {
  std::size_t n = h.dim();
  FiniteDimAlgebra dual = dual_algebra(h.coalgebra);
  Matrix st = h.antipode->transpose();

  std::vector<Vec> gens;
  Subspace ann = subspace_annihilator(w);
  for (std::size_t r = 0; r < ann.dim(); ++r) gens.push_back(ann.basis_vector(r));
  gens.push_back(dual.unit);  // the counit
  Subspace b = Subspace::from_vectors(n, gens);

  for (;;) {
    std::vector<Vec> grow;
    for (std::size_t r = 0; r < b.dim(); ++r) {
      Vec f = b.basis_vector(r);
      grow.push_back(f);
      grow.push_back(st.apply(f));
      for (std::size_t s = 0; s < b.dim(); ++s)
        grow.push_back(dual.multiply(f, b.basis_vector(s)));
      // Subcoalgebra closure of H*: slices of (i, k) -> f(b_i b_k).
      Matrix pairing(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& [t, c] : h.algebra.mult[i][k]) pairing(i, k) += c * f[t];
      for (std::size_t i = 0; i < n; ++i) {
        grow.push_back(pairing.row(i));
        grow.push_back(pairing.col(i));
      }
    }
    Subspace next = Subspace::from_vectors(n, grow);
    if (next.dim() == b.dim()) break;
    b = next;
  }
  return kernel(b.basis());
}

/// Exhaustive one-dimensional extension check over a {-1,0,1} coordinate
/// pool of the ambient w: no extension of the claimed maximum inside w may
/// generate a weak Hopf ideal that stays inside w.
inline bool oracle_no_larger_hopf_ideal(const WeakHopfPresentation& h, const Subspace& w,
                                        const Subspace& claimed) {
  std::size_t d = w.dim();
  std::size_t n = h.dim();
  std::vector<Vec> pool;
  std::vector<int> digits(d, -1);
  if (d == 0 || d > 8) return true;
  for (;;) {
    Vec v(n);
    bool nonzero = false;
    for (std::size_t r = 0; r < d; ++r) {
      if (digits[r] != 0) nonzero = true;
      v = vec_add(v, vec_scale(Rational(digits[r]), w.basis_vector(r)));
    }
    if (nonzero && !claimed.contains(v)) pool.push_back(v);
    std::size_t pos = 0;
    while (pos < d && digits[pos] == 1) digits[pos++] = -1;
    if (pos == d) break;
    ++digits[pos];
  }
  for (const Vec& v : pool) {
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < claimed.dim(); ++r) gens.push_back(claimed.basis_vector(r));
    gens.push_back(v);
    Subspace k = Subspace::from_vectors(n, gens);
    for (;;) {
      std::vector<Vec> grow;
      for (std::size_t r = 0; r < k.dim(); ++r) {
        grow.push_back(k.basis_vector(r));
        grow.push_back(h.apply_antipode(k.basis_vector(r)));
      }
      Subspace closed = two_sided_ideal_closure(h.algebra, grow);
      if (closed.dim() == k.dim()) break;
      k = closed;
    }
    if (w.contains(k) && is_hopf_ideal(h, k).ok()) return false;
  }
  return true;
}

}  // namespace whk::testing
