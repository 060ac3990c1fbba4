#include "whk/poly.hpp"

#include "whk/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace whk {

namespace {

void enumerate_exponents(std::size_t nvars, std::size_t max_degree,
                         std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> cur(nvars, 0);
  // All exponent vectors with total degree <= max_degree, graded lex order.
  std::vector<std::vector<unsigned>> all;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos == nvars) {
      all.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(0, static_cast<unsigned>(max_degree));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  });
  out = std::move(all);
}

std::string monomial_label(const std::vector<std::string>& vars,
                           const std::vector<unsigned>& expo) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (expo[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (expo[i] > 1) s += "^" + std::to_string(expo[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::size_t TruncatedPolyAlgebra::monomial_index(const std::vector<unsigned>& expo) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] == expo) return i;
  throw ShapeError("monomial outside the truncation");
}

TruncatedPolyAlgebra truncated_symmetric_algebra(const std::vector<std::string>& vars,
                                                 std::size_t max_degree,
                                                 const std::string& label_prefix) {
  TruncatedPolyAlgebra p;
  p.vars = vars;
  p.max_degree = max_degree;
  enumerate_exponents(vars.size(), max_degree, p.exponents);
  std::size_t n = p.exponents.size();
  p.algebra.mult.assign(n, std::vector<SparseVec>(n));
  for (const auto& e : p.exponents)
    p.algebra.labels.push_back(label_prefix + monomial_label(vars, e));
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[p.exponents[i]] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<unsigned> sum(vars.size());
      unsigned total = 0;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        sum[v] = p.exponents[i][v] + p.exponents[j][v];
        total += sum[v];
      }
      if (total <= max_degree) p.algebra.mult[i][j].push_back({index.at(sum), Rational(1)});
    }
  p.algebra.unit.assign(n, 0);
  p.algebra.unit[0] = 1;
  return p;
}

Matrix TruncatedPolyAlgebra::lift_substitution(const Matrix& var_map) const {
  std::size_t nv = vars.size();
  if (var_map.rows() != nv || var_map.cols() != nv)
    throw ShapeError("substitution matrix must be square on the variables");
  std::size_t n = exponents.size();
  Matrix lift(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    // Image of the monomial: product of the variable images.
    Vec img = algebra.unit;
    for (std::size_t v = 0; v < nv; ++v) {
      Vec var_img(n);
      for (std::size_t i = 0; i < nv; ++i) {
        std::vector<unsigned> e(nv, 0);
        e[i] = 1;
        var_img[monomial_index(e)] = var_map(i, v);
      }
      for (unsigned rep = 0; rep < exponents[col][v]; ++rep) img = algebra.multiply(img, var_img);
    }
    lift.set_col(col, img);
  }
  return lift;
}

Matrix TruncatedPolyAlgebra::lift_derivation(const std::vector<Vec>& var_images) const {
  std::size_t nv = vars.size();
  if (var_images.size() != nv) throw ShapeError("one image per variable required");
  std::size_t n = exponents.size();
  for (std::size_t v = 0; v < nv; ++v) {
    if (var_images[v].size() != n) throw ShapeError("variable image has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      if (var_images[v][i] == 0) continue;
      unsigned deg = 0;
      for (unsigned e : exponents[i]) deg += e;
      if (deg != 1)
        throw GradeError("derivation image of '" + vars[v] +
                         "' is not homogeneous of degree 1; the lift to the truncation "
                         "is not defined");
    }
  }
  Matrix lift(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    Vec img(n);
    // Leibniz over the factors of the monomial.
    for (std::size_t v = 0; v < nv; ++v) {
      if (exponents[col][v] == 0) continue;
      std::vector<unsigned> reduced = exponents[col];
      reduced[v] -= 1;
      Vec rest(n);
      rest[monomial_index(reduced)] = exponents[col][v];
      img = vec_add(img, algebra.multiply(rest, var_images[v]));
    }
    lift.set_col(col, img);
  }
  return lift;
}

Matrix TruncatedPolyAlgebra::lift_linear_derivation(const Matrix& var_map) const {
  std::size_t nv = vars.size();
  if (var_map.rows() != nv || var_map.cols() != nv)
    throw ShapeError("derivation matrix must be square on the variables");
  std::size_t n = exponents.size();
  std::vector<Vec> images;
  for (std::size_t v = 0; v < nv; ++v) {
    Vec img(n);
    for (std::size_t i = 0; i < nv; ++i) {
      if (var_map(i, v) == 0) continue;
      std::vector<unsigned> e(nv, 0);
      e[i] = 1;
      img[monomial_index(e)] = var_map(i, v);
    }
    images.push_back(std::move(img));
  }
  return lift_derivation(images);
}

}  // namespace whk
