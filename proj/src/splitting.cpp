#include "whk/splitting.hpp"

#include "whk/errors.hpp"

#include <algorithm>
#include <deque>

namespace whk {

namespace {

using Poly = std::vector<Rational>;  // coeffs[k] * x^k

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rational(k) * p[k]);
  poly_trim(d);
  return d;
}

// Euclidean division; returns remainder, quotient via out-param.
Poly poly_divmod(const Poly& num, const Poly& den, Poly* quot) {
  if (den.empty()) throw InternalError("polynomial division by zero");
  Poly r = num;
  poly_trim(r);
  Poly q(r.size() > den.size() ? r.size() - den.size() + 1 : 1, Rational(0));
  while (r.size() >= den.size() && !r.empty()) {
    Rational c = r.back() / den.back();
    std::size_t shift = r.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) r[shift + i] -= c * den[i];
    poly_trim(r);
  }
  poly_trim(q);
  if (quot) *quot = q;
  return r;
}

Poly poly_monic(Poly p) {
  poly_trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> divs;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<Rational> minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("minimal_polynomial: square matrix required");
  std::size_t n = m.rows();
  std::vector<Vec> powers;  // flattened I, M, M^2, ...
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec flat = p.flatten();
    Matrix prev = Matrix::from_rows(powers);
    if (!powers.empty()) {
      auto coords = solve(prev.transpose(), flat);
      if (coords) {
        Poly mu(k + 1, Rational(0));
        for (std::size_t t = 0; t < k; ++t) mu[t] = -(*coords)[t];
        mu[k] = 1;
        return mu;
      }
    }
    powers.push_back(flat);
    p = p * m;
  }
  throw InternalError("minimal polynomial not found within dimension bound");
}

std::vector<Rational> squarefree_part(const std::vector<Rational>& poly) {
  Poly p = poly_monic(poly);
  if (p.size() <= 1) return p;
  Poly g = poly_gcd(p, poly_derivative(p));
  if (g.size() <= 1) return p;
  Poly q;
  poly_divmod(p, g, &q);
  return poly_monic(q);
}

std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
  Poly p = poly;
  poly_trim(p);
  std::vector<Rational> roots;
  if (p.empty()) return roots;
  // Factor out x.
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  if (low == p.size()) return roots;
  if (low > 0) {
    roots.push_back(Rational(0));
    p.erase(p.begin(), p.begin() + low);
  }
  if (p.size() == 1) return roots;
  // Clear denominators to a primitive integer polynomial.
  BigInt lcm = 1;
  for (const auto& c : p) {
    BigInt d = denominator(c);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<BigInt> ip;
  for (const auto& c : p) ip.push_back(numerator(c * Rational(lcm)));
  // Candidates p/q with p | constant and q | leading coefficient.
  for (const BigInt& num : positive_divisors(ip.front()))
    for (const BigInt& den : positive_divisors(ip.back()))
      for (int sign : {1, -1}) {
        Rational cand = make_rational(sign * num, den);
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (poly_eval(p, cand) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

QuotientAlgebra quotient_by_ideal(const FiniteDimAlgebra& a, const Subspace& ideal) {
  std::size_t n = a.dim();
  if (ideal.ambient() != n) throw ShapeError("ideal ambient mismatch");
  // Coset representatives: coordinates away from the ideal's pivot columns.
  std::vector<std::size_t> pivots;
  {
    Matrix b = ideal.basis();
    rref_in_place(b, &pivots);  // already RREF; recovers pivot columns
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  std::size_t q = free_cols.size();

  // reduce(v) = v - sum over ideal rows; linear, so assemble by columns.
  auto reduce = [&](Vec v) {
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      Rational c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] -= c * ideal.basis()(r, j);
    }
    return v;
  };
  Matrix proj(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = reduce(vec_unit(n, j));
    for (std::size_t i = 0; i < q; ++i) proj(i, j) = r[free_cols[i]];
  }
  Matrix sect(n, q);
  for (std::size_t i = 0; i < q; ++i) sect(free_cols[i], i) = 1;

  FiniteDimAlgebra qa;
  for (std::size_t i = 0; i < q; ++i) qa.labels.push_back("q" + std::to_string(i));
  qa.mult.assign(q, std::vector<SparseVec>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec prod = proj.apply(a.multiply(sect.col(i), sect.col(j)));
      for (std::size_t k = 0; k < q; ++k)
        if (prod[k] != 0) qa.mult[i][j].push_back({k, prod[k]});
    }
  qa.unit = proj.apply(a.unit);
  return QuotientAlgebra{std::move(qa), std::move(proj), std::move(sect)};
}

Subspace two_sided_ideal_closure(const FiniteDimAlgebra& a, const std::vector<Vec>& gens) {
  std::size_t n = a.dim();
  Subspace v = Subspace::from_vectors(n, gens);
  for (;;) {
    std::vector<Vec> next;
    for (std::size_t r = 0; r < v.dim(); ++r) {
      Vec w = v.basis_vector(r);
      next.push_back(w);
      for (std::size_t i = 0; i < n; ++i) {
        next.push_back(a.multiply(vec_unit(n, i), w));
        next.push_back(a.multiply(w, vec_unit(n, i)));
      }
    }
    Subspace grown = Subspace::from_vectors(n, next);
    if (grown.dim() == v.dim()) return grown;
    v = grown;
  }
}

Subspace commutator_ideal(const FiniteDimAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c = vec_sub(a.multiply(vec_unit(n, i), vec_unit(n, j)),
                      a.multiply(vec_unit(n, j), vec_unit(n, i)));
      if (!vec_is_zero(c)) gens.push_back(std::move(c));
    }
  return two_sided_ideal_closure(a, gens);
}

Subspace trace_radical(const FiniteDimAlgebra& a) {
  std::size_t n = a.dim();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = a.left_mult(a.multiply(vec_unit(n, i), vec_unit(n, j)));
      Rational tr = 0;
      for (std::size_t k = 0; k < n; ++k) tr += l(k, k);
      gram(i, j) = tr;
    }
  return kernel(gram);
}

namespace {

struct Block {
  Vec unit;       // block unit, algebra coordinates
  Subspace span;  // the block as an ideal of the algebra
};

// Unit of an ideal given by its span: the element acting as identity on
// the span, or nullopt when none exists.
std::optional<Vec> ideal_unit(const FiniteDimAlgebra& a, const Subspace& span) {
  std::size_t n = a.dim();
  std::size_t d = span.dim();
  // Unknowns: coefficients c_r of the unit in the span basis.
  // Equations: (sum_r c_r v_r) * v_s = v_s for every basis vector v_s.
  Matrix sys(n * d, d);
  Vec rhs(n * d);
  for (std::size_t s = 0; s < d; ++s) {
    Vec vs = span.basis_vector(s);
    for (std::size_t r = 0; r < d; ++r) {
      Vec prod = a.multiply(span.basis_vector(r), vs);
      for (std::size_t k = 0; k < n; ++k) sys(s * n + k, r) = prod[k];
    }
    for (std::size_t k = 0; k < n; ++k) rhs[s * n + k] = vs[k];
  }
  auto coeffs = solve(sys, rhs);
  if (!coeffs) return std::nullopt;
  Vec u(n);
  for (std::size_t r = 0; r < d; ++r) u = vec_add(u, vec_scale((*coeffs)[r], span.basis_vector(r)));
  return u;
}

}  // namespace

CommutativeSplit split_semisimple_commutative(const FiniteDimAlgebra& a) {
  std::size_t n = a.dim();
  CommutativeSplit out;
  std::deque<Block> queue;
  queue.push_back(Block{a.unit, Subspace::full(n)});

  while (!queue.empty()) {
    Block blk = std::move(queue.front());
    queue.pop_front();
    if (blk.span.dim() == 0) continue;
    if (vec_is_zero(blk.unit)) {
      out.complete = false;
      continue;
    }
    if (blk.span.dim() == 1) {
      if (a.multiply(blk.unit, blk.unit) != blk.unit)
        throw InternalError("1-dimensional block unit is not idempotent");
      out.idempotents.push_back(blk.unit);
      continue;
    }

    std::size_t d = blk.span.dim();
    bool split_found = false;
    for (std::size_t gen = 0; gen < n && !split_found; ++gen) {
      // Multiplication by b_gen restricted to the block.
      Matrix m(d, d);
      for (std::size_t c = 0; c < d; ++c) {
        Vec w = a.multiply(vec_unit(n, gen), blk.span.basis_vector(c));
        auto coords = blk.span.coordinates_of(w);
        if (!coords) throw InternalError("block is not an ideal");
        m.set_col(c, *coords);
      }
      Poly mu = squarefree_part(minimal_polynomial(m));
      std::vector<Rational> roots = rational_roots(mu);
      if (roots.empty()) {
        // Every rationally-split factor of the block would give this
        // operator a rational eigenvalue, so there are none: the whole
        // block lives over irrational extensions. Drop it.
        out.complete = false;
        split_found = true;
        continue;
      }
      std::size_t covered = 0;
      std::vector<Block> pieces;
      for (const Rational& lam : roots) {
        Matrix shifted = m;
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= lam;
        Subspace eig_local = kernel(shifted);
        if (eig_local.dim() == 0) continue;
        covered += eig_local.dim();
        std::vector<Vec> amb;
        for (std::size_t r = 0; r < eig_local.dim(); ++r) {
          Vec coords = eig_local.basis_vector(r);
          Vec v(n);
          for (std::size_t c = 0; c < d; ++c)
            v = vec_add(v, vec_scale(coords[c], blk.span.basis_vector(c)));
          amb.push_back(std::move(v));
        }
        Subspace sub = Subspace::from_vectors(n, amb);
        auto u = ideal_unit(a, sub);
        if (!u) {
          out.complete = false;
          continue;
        }
        pieces.push_back(Block{*u, sub});
      }
      if (covered < d) out.complete = false;  // irrational residual part
      if (pieces.size() >= 2 || covered < d) {
        for (auto& p : pieces) queue.push_back(std::move(p));
        split_found = true;
      }
    }
    if (!split_found) {
      // Every generator acts as a rational scalar yet dim > 1: the block is
      // not semisimple or not split; report incompleteness.
      out.complete = false;
    }
  }

  std::sort(out.idempotents.begin(), out.idempotents.end(), vec_less);
  return out;
}

CommutativeSplit primitive_idempotents_commutative(const FiniteDimAlgebra& a) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.multiply(vec_unit(n, i), vec_unit(n, j)) != a.multiply(vec_unit(n, j), vec_unit(n, i)))
        throw Error("primitive_idempotents_commutative: algebra is not commutative");

  Subspace nil = trace_radical(a);
  if (nil.dim() == 0) return split_semisimple_commutative(a);

  QuotientAlgebra q = quotient_by_ideal(a, two_sided_ideal_closure(a, [&] {
                                          std::vector<Vec> g;
                                          for (std::size_t r = 0; r < nil.dim(); ++r)
                                            g.push_back(nil.basis_vector(r));
                                          return g;
                                        }()));
  CommutativeSplit qsplit = split_semisimple_commutative(q.algebra);
  CommutativeSplit out;
  out.complete = qsplit.complete;
  for (const Vec& eq : qsplit.idempotents) {
    // Newton lift through the nilradical: e <- 3e^2 - 2e^3.
    Vec e = q.section.apply(eq);
    for (int iter = 0; iter < 64; ++iter) {
      Vec e2 = a.multiply(e, e);
      if (e2 == e) break;
      Vec e3 = a.multiply(e2, e);
      e = vec_sub(vec_scale(Rational(3), e2), vec_scale(Rational(2), e3));
    }
    if (a.multiply(e, e) != e) throw InternalError("idempotent lifting did not converge");
    out.idempotents.push_back(std::move(e));
  }
  // Lifted family must stay orthogonal and complete when the split was.
  for (std::size_t i = 0; i < out.idempotents.size(); ++i)
    for (std::size_t j = 0; j < out.idempotents.size(); ++j) {
      if (i == j) continue;
      if (!vec_is_zero(a.multiply(out.idempotents[i], out.idempotents[j])))
        throw InternalError("lifted idempotents are not orthogonal");
    }
  if (out.complete) {
    Vec sum(n);
    for (const Vec& e : out.idempotents) sum = vec_add(sum, e);
    if (sum != a.unit) throw InternalError("lifted idempotents do not sum to 1");
  }
  std::sort(out.idempotents.begin(), out.idempotents.end(), vec_less);
  return out;
}

CharacterSet rational_characters(const FiniteDimAlgebra& a) {
  // Characters kill commutators and nilpotents, so they are exactly the
  // characters of the semisimple commutative quotient.
  QuotientAlgebra q1 = quotient_by_ideal(a, commutator_ideal(a));
  Subspace nil = trace_radical(q1.algebra);
  QuotientAlgebra q2 = quotient_by_ideal(
      q1.algebra, two_sided_ideal_closure(q1.algebra, [&] {
        std::vector<Vec> g;
        for (std::size_t r = 0; r < nil.dim(); ++r) g.push_back(nil.basis_vector(r));
        return g;
      }()));
  CommutativeSplit split = split_semisimple_commutative(q2.algebra);

  CharacterSet out;
  out.complete = split.complete;
  std::size_t n = a.dim();
  std::size_t m = q2.algebra.dim();
  Matrix proj = q2.projection * q1.projection;  // dim(Q2) x dim(A)
  for (const Vec& u : split.idempotents) {
    // chi(q) u = q * u in the semisimple quotient.
    std::size_t anchor = 0;
    while (anchor < m && u[anchor] == 0) ++anchor;
    if (anchor == m) throw InternalError("zero idempotent");
    Vec chi_q(m);
    for (std::size_t i = 0; i < m; ++i) {
      Vec prod = q2.algebra.multiply(vec_unit(m, i), u);
      Rational scalar = prod[anchor] / u[anchor];
      if (prod != vec_scale(scalar, u)) throw InternalError("idempotent is not primitive");
      chi_q[i] = scalar;
    }
    // Pull back along the quotient projections.
    Vec chi(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = 0;
      for (std::size_t k = 0; k < m; ++k) v += chi_q[k] * proj(k, i);
      chi[i] = v;
    }
    // Characters are unital algebra maps; verify.
    Rational on_unit = 0;
    for (std::size_t i = 0; i < n; ++i) on_unit += chi[i] * a.unit[i];
    if (on_unit != 1) throw InternalError("character is not unital");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec prod = a.multiply(vec_unit(n, i), vec_unit(n, j));
        Rational lhs = 0;
        for (std::size_t k = 0; k < n; ++k) lhs += chi[k] * prod[k];
        if (lhs != chi[i] * chi[j]) throw InternalError("character is not multiplicative");
      }
    out.characters.push_back(std::move(chi));
  }
  std::sort(out.characters.begin(), out.characters.end(), vec_less);
  return out;
}

}  // namespace whk
