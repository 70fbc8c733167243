#pragma once

#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/projector.hpp"

namespace qlat {

/// The four-element Boolean lattice {0, ran(p), ran(1-p), full} a single
/// nontrivial projector generates. Every element is an invariant subspace of
/// the generator, and the block is distributive by construction.
struct BooleanBlock {
  Projector generator;
  FiniteOrthoLattice lattice;
};

/// Builds the block of p. Throws std::invalid_argument when p is trivial
/// (rank 0 or full rank), since a trivial generator spans no block of its own.
BooleanBlock build_block(const Projector& p, const ToleranceConfig& tol = {});

/// A family of blocks generated by a projector collection. Blocks with the
/// same element set are stored once; sigma keeps every generator as given.
struct BlockFamily {
  std::size_t dim = 0;
  std::vector<Projector> sigma;
  std::vector<BooleanBlock> blocks;
  ToleranceConfig tol;
};

BlockFamily make_block_family(std::size_t dim, const std::vector<Projector>& sigma,
                              const ToleranceConfig& tol = {});

/// Whether a ^ b has a value in the block semantics: true when either side is
/// trivial or the projectors commute. For qubit families this coincides with
/// co-membership in some block.
bool meet_defined(const Subspace& a, const Subspace& b, const BlockFamily& family);

/// Whether some block of the family contains both subspaces.
bool co_members(const BlockFamily& family, const Subspace& a, const Subspace& b);

/// The lattice on the union of all block element sets.
FiniteOrthoLattice union_lattice(const BlockFamily& family);

}  // namespace qlat
