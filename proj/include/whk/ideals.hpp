#pragma once

#include "whk/actions.hpp"
#include "whk/subspace.hpp"
#include "whk/walg.hpp"

namespace whk {

/// Two-sided ideal generated by the given elements (increasing closure).
Subspace ideal_from_generators(const FiniteDimAlgebra& a, const std::vector<Vec>& gens);

struct HopfIdealCheck {
  Report report;
  bool ok() const { return report.passed(); }
};

/// Certifies: H I H ⊆ I, Delta(I) ⊆ I (x) H + H (x) I, eps(I) = 0, and
/// S(I) ⊆ I.
HopfIdealCheck is_hopf_ideal(const WeakHopfPresentation& h, const Subspace& ideal);

/// Largest weak Hopf ideal contained in w, computed as a decreasing fixed
/// point of three "largest substructure inside" operations: two-sided
/// ideal, coideal with eps = 0 (via the subalgebra of H* generated by the
/// annihilator and the counit), and antipode stability. When
/// certify_extensions is set and dim H <= 8, one-dimensional extensions
/// inside w are additionally checked to break some condition.
Subspace largest_hopf_ideal_in(const WeakHopfPresentation& h, Subspace w,
                               bool certify_extensions = false);

struct InnerFaithfulness {
  bool inner_faithful = false;
  Subspace annihilator;
  /// The largest Hopf ideal annihilating the carrier; zero iff inner
  /// faithful, otherwise the certified witness.
  Subspace witness;
};

InnerFaithfulness inner_faithful(const HModuleAction& act);

}  // namespace whk
