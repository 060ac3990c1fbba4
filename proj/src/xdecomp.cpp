#include "whk/xdecomp.hpp"

#include "whk/errors.hpp"

#include <set>

namespace whk {

XDecompAlgebra XDecompAlgebra::assemble(std::vector<std::string> sites,
                                        std::vector<FiniteDimAlgebra> comps) {
  if (sites.size() != comps.size()) throw ShapeError("site/component count mismatch");
  if (sites.empty()) throw ShapeError("X must be nonempty");
  XDecompAlgebra x;
  x.site_labels = std::move(sites);
  x.components = std::move(comps);
  x.offsets.assign(1, 0);
  std::size_t total = 0;
  for (const auto& c : x.components) {
    c.require_shape();
    total += c.dim();
    x.offsets.push_back(total);
  }
  FiniteDimAlgebra& t = x.total;
  t.mult.assign(total, std::vector<SparseVec>(total));
  t.unit.assign(total, 0);
  std::set<std::string> seen;
  for (std::size_t b = 0; b < x.components.size(); ++b) {
    const auto& c = x.components[b];
    std::size_t off = x.offsets[b];
    for (std::size_t i = 0; i < c.dim(); ++i) {
      if (!seen.insert(c.labels[i]).second)
        throw Error("component basis label collision on '" + c.labels[i] + "'");
      t.labels.push_back(c.labels[i]);
      t.unit[off + i] = c.unit[i];
      for (std::size_t j = 0; j < c.dim(); ++j)
        for (const auto& [k, cc] : c.mult[i][j]) t.mult[off + i][off + j].push_back({off + k, cc});
    }
  }
  return x;
}

Vec XDecompAlgebra::local_identity(std::size_t x) const {
  Vec v(total.dim());
  std::size_t off = offsets[x];
  for (std::size_t i = 0; i < components[x].dim(); ++i) v[off + i] = components[x].unit[i];
  return v;
}

Vec XDecompAlgebra::embed(std::size_t x, const Vec& v) const {
  if (v.size() != components[x].dim()) throw ShapeError("embed: component size mismatch");
  Vec out(total.dim());
  for (std::size_t i = 0; i < v.size(); ++i) out[offsets[x] + i] = v[i];
  return out;
}

Vec XDecompAlgebra::project(std::size_t x, const Vec& v) const {
  if (v.size() != total.dim()) throw ShapeError("project: total size mismatch");
  Vec out(components[x].dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = v[offsets[x] + i];
  return out;
}

Matrix XDecompAlgebra::embed_matrix(std::size_t x) const {
  Matrix m(total.dim(), components[x].dim());
  for (std::size_t i = 0; i < components[x].dim(); ++i) m(offsets[x] + i, i) = 1;
  return m;
}

Matrix XDecompAlgebra::project_matrix(std::size_t x) const {
  return embed_matrix(x).transpose();
}

std::size_t XDecompAlgebra::site_index(const std::string& label) const {
  for (std::size_t i = 0; i < site_labels.size(); ++i)
    if (site_labels[i] == label) return i;
  throw Error("unknown site label '" + label + "'");
}

Report check_xdecomp(const XDecompAlgebra& a) {
  Report rep;
  rep.command = "check_xdecomp";
  for (std::size_t x = 0; x < a.component_count(); ++x) {
    if (a.component_dim(x) == 0) continue;
    rep.absorb(check_algebra(a.components[x]), a.site_labels[x]);
  }
  auto& ids = rep.add_check("local_identities");
  std::size_t n = a.total.dim();
  Vec sum(n);
  for (std::size_t x = 0; x < a.component_count(); ++x) {
    Vec ex = a.local_identity(x);
    sum = vec_add(sum, ex);
    for (std::size_t y = 0; y < a.component_count(); ++y) {
      ++ids.cases_checked;
      Vec prod = a.total.multiply(ex, a.local_identity(y));
      Vec expect = (x == y) ? ex : Vec(n);
      if (prod != expect)
        ids.fail({{a.site_labels[x], a.site_labels[y]}, format_element(a.total.labels, prod)});
    }
    for (std::size_t i = 0; i < n; ++i) {
      ++ids.cases_checked;
      Vec l = a.total.multiply(ex, vec_unit(n, i));
      Vec r = a.total.multiply(vec_unit(n, i), ex);
      if (l != r)
        ids.fail({{a.site_labels[x], a.total.labels[i]}, "local identity not central"});
    }
  }
  ++ids.cases_checked;
  if (sum != a.total.unit) ids.fail({{"completeness"}, format_element(a.total.labels, sum)});
  rep.finalize();
  return rep;
}

}  // namespace whk
