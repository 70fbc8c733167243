#include "qlat/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlat {
namespace {

bool same_element_set(const FiniteOrthoLattice& a, const FiniteOrthoLattice& b, double eps) {
  if (a.size() != b.size()) return false;
  // Element lists are canonically sorted, so positional comparison suffices.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!approx_equal(a.element(i), b.element(i), eps)) return false;
  }
  return true;
}

}  // namespace

BooleanBlock build_block(const Projector& p, const ToleranceConfig& tol) {
  tol.validate();
  if (p.rank() == 0 || p.rank() == static_cast<int>(p.dim())) {
    throw std::invalid_argument("block generator must be a nontrivial projector");
  }

  FiniteOrthoLattice lattice = build_lattice(p.dim(), {Subspace(p)}, tol);

  // Every block element must be an invariant subspace of the generator, and
  // the block itself must be Boolean (distributive with complements).
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Matrix& e = lattice.element(i).matrix();
    if (frobenius_distance(e * p.matrix() * e, p.matrix() * e) > tol.eps_equal) {
      throw std::logic_error("block element is not invariant under its generator");
    }
  }
  if (!check_distributive(lattice).holds) {
    throw std::logic_error("single-generator block failed distributivity");
  }
  return BooleanBlock{p, std::move(lattice)};
}

BlockFamily make_block_family(std::size_t dim, const std::vector<Projector>& sigma,
                              const ToleranceConfig& tol) {
  tol.validate();
  BlockFamily family{dim, {}, {}, tol};
  for (const Projector& p : sigma) {
    if (p.dim() != dim) throw std::invalid_argument("family generator dimension mismatch");
    family.sigma.push_back(p);
    BooleanBlock block = build_block(p, tol);
    const bool seen =
        std::any_of(family.blocks.begin(), family.blocks.end(), [&](const BooleanBlock& other) {
          return same_element_set(other.lattice, block.lattice, tol.eps_equal);
        });
    if (!seen) family.blocks.push_back(std::move(block));
  }
  return family;
}

bool meet_defined(const Subspace& a, const Subspace& b, const BlockFamily& family) {
  if (a.dim() != b.dim() || a.dim() != family.dim) {
    throw std::invalid_argument("dimension mismatch in meet_defined");
  }
  return commutes(a, b, family.tol.eps_equal);
}

bool co_members(const BlockFamily& family, const Subspace& a, const Subspace& b) {
  for (const BooleanBlock& block : family.blocks) {
    if (block.lattice.find(a) && block.lattice.find(b)) return true;
  }
  return false;
}

FiniteOrthoLattice union_lattice(const BlockFamily& family) {
  std::vector<Subspace> elements;
  elements.push_back(Subspace::zero(family.dim));
  elements.push_back(Subspace::full(family.dim));
  for (const BooleanBlock& block : family.blocks) {
    for (const Subspace& e : block.lattice.elements()) {
      const bool seen = std::any_of(elements.begin(), elements.end(), [&](const Subspace& x) {
        return approx_equal(x, e, family.tol.eps_equal);
      });
      if (!seen) elements.push_back(e);
    }
  }
  std::stable_sort(elements.begin(), elements.end(), canonical_less);
  return FiniteOrthoLattice(std::move(elements), family.tol);
}

}  // namespace qlat
