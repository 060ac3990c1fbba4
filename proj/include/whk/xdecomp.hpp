#pragma once

#include "whk/report.hpp"
#include "whk/walg.hpp"

#include <string>
#include <vector>

namespace whk {

/// Direct sum of unital algebras indexed by site labels, assembled
/// block-diagonally. Components may be zero-dimensional; the nonzero
/// local identities form a complete set of orthogonal central idempotents
/// of the total algebra.
struct XDecompAlgebra {
  std::vector<std::string> site_labels;
  std::vector<FiniteDimAlgebra> components;
  FiniteDimAlgebra total;
  std::vector<std::size_t> offsets;  // size = components + 1

  static XDecompAlgebra assemble(std::vector<std::string> sites,
                                 std::vector<FiniteDimAlgebra> comps);

  std::size_t component_count() const { return components.size(); }
  std::size_t component_dim(std::size_t x) const { return components[x].dim(); }
  Vec local_identity(std::size_t x) const;
  Vec embed(std::size_t x, const Vec& v) const;
  Vec project(std::size_t x, const Vec& v) const;
  Matrix embed_matrix(std::size_t x) const;
  Matrix project_matrix(std::size_t x) const;
  std::size_t site_index(const std::string& label) const;
};

/// Component algebra axioms plus orthogonality, centrality and
/// completeness of the local identities.
Report check_xdecomp(const XDecompAlgebra& a);

}  // namespace whk
