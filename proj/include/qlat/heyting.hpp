#pragma once

#include <optional>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat {

/// Result of hunting for the pseudo-complement of one element: the largest
/// b with b ^ a = {0}. disjoint_set lists every such b, supremum the join of
/// them all; the pseudo-complement exists exactly when that supremum is
/// itself disjoint from a.
struct PseudoComplementReport {
  std::size_t element = 0;
  std::vector<std::size_t> disjoint_set;
  std::optional<std::size_t> supremum;
  bool exists = false;
  std::optional<std::size_t> pseudo_complement;
};

PseudoComplementReport pseudo_complement(const FiniteOrthoLattice& lattice, std::size_t element);

/// Whether the lattice supports a Heyting (intuitionistic) reading: every
/// element must own a pseudo-complement and the lattice must be distributive.
struct HeytingReport {
  bool feasible = false;
  std::vector<PseudoComplementReport> per_element;
  LawVerdict distributive;
};

HeytingReport heyting_feasible(const FiniteOrthoLattice& lattice);

}  // namespace qlat
