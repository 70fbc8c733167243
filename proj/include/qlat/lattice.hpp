#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlat/subspace.hpp"
#include "qlat/tolerance.hpp"

namespace qlat {

/// Outcome of an equational law check over a finite lattice. When the law
/// fails, witness holds the first violating element indices in iteration
/// order and detail says which identity broke.
struct LawVerdict {
  std::string law;
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

/// Finite bounded poset of subspaces with an orthocomplement, closed under
/// complementation. Meets and joins are computed order-theoretically from the
/// containment table, so law checks stay inside the explicit element set.
class FiniteOrthoLattice {
 public:
  FiniteOrthoLattice(std::vector<Subspace> elements, ToleranceConfig tol);

  std::size_t size() const { return elements_.size(); }
  std::size_t dim() const { return elements_.front().dim(); }
  const Subspace& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Subspace>& elements() const { return elements_; }
  const ToleranceConfig& tolerance() const { return tol_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  std::size_t complement_of(std::size_t a) const { return complement_[a]; }
  std::size_t bottom_index() const { return bottom_; }
  std::size_t top_index() const { return top_; }

  /// Greatest lower / least upper bound within the element set; empty when
  /// the bound is not unique (the poset then fails to be a lattice).
  std::optional<std::size_t> meet_index(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join_index(std::size_t a, std::size_t b) const;

  /// Index of the element canonically equal to s, if present.
  std::optional<std::size_t> find(const Subspace& s) const;

  std::string element_name(std::size_t i) const;

 private:
  std::vector<Subspace> elements_;
  std::vector<unsigned char> leq_;
  std::vector<std::size_t> complement_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  ToleranceConfig tol_;
};

/// Assembles the lattice generated by {0, C^dim}, the atoms and their
/// orthocomplements, deduplicated and canonically ordered.
FiniteOrthoLattice build_lattice(std::size_t dim, const std::vector<Subspace>& atoms,
                                 const ToleranceConfig& tol = {});

/// Checks b == a v (a' ^ b) for every comparable pair a <= b.
LawVerdict check_orthomodular(const FiniteOrthoLattice& lattice);

/// Checks a ^ (b v c) == (a ^ b) v (a ^ c) for every element triple.
LawVerdict check_distributive(const FiniteOrthoLattice& lattice);

}  // namespace qlat
