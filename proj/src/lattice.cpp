#include "qlat/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlat {
namespace {

std::string pair_text(const FiniteOrthoLattice& l, std::size_t a, std::size_t b) {
  return "(" + l.element_name(a) + ", " + l.element_name(b) + ")";
}

}  // namespace

FiniteOrthoLattice::FiniteOrthoLattice(std::vector<Subspace> elements, ToleranceConfig tol)
    : elements_(std::move(elements)), tol_(tol) {
  tol_.validate();
  if (elements_.empty()) throw std::invalid_argument("lattice needs at least one element");

  const std::size_t n = elements_.size();
  const std::size_t dim = elements_.front().dim();
  for (const Subspace& s : elements_) {
    if (s.dim() != dim) throw std::invalid_argument("lattice elements must share one dimension");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (approx_equal(elements_[i], elements_[j], tol_.eps_equal)) {
        throw std::invalid_argument("lattice elements must be canonically distinct");
      }
    }
  }

  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq_[i * n + j] = subspace_leq(elements_[i], elements_[j], tol_.eps_equal) ? 1 : 0;

  // The numeric order must already be a partial order at these scales; a
  // violation means the element set itself is ill-conditioned.
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(i, i)) throw std::invalid_argument("containment table lost reflexivity");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        throw std::invalid_argument("containment table lost antisymmetry");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (leq(i, j) && leq(j, k) && !leq(i, k)) {
          throw std::invalid_argument("containment table lost transitivity");
        }
      }
    }
  }

  bool have_bottom = false;
  bool have_top = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].is_zero()) {
      bottom_ = i;
      have_bottom = true;
    }
    if (elements_[i].is_full()) {
      top_ = i;
      have_top = true;
    }
  }
  if (!have_bottom || !have_top) {
    throw std::invalid_argument("lattice must contain the zero subspace and the full space");
  }

  complement_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Subspace c = complement(elements_[i]);
    const auto idx = find(c);
    if (!idx) throw std::invalid_argument("element set is not closed under orthocomplement");
    complement_[i] = *idx;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (complement_[complement_[i]] != i) {
      throw std::invalid_argument("orthocomplement map is not an involution");
    }
  }
}

std::optional<std::size_t> FiniteOrthoLattice::meet_index(std::size_t a, std::size_t b) const {
  const std::size_t n = size();
  std::optional<std::size_t> best;
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq(x, a) || !leq(x, b)) continue;
    if (!best || leq(*best, x)) best = x;
  }
  // best is the last maximal lower bound seen; it is the infimum only if it
  // dominates every lower bound.
  for (std::size_t x = 0; x < n; ++x) {
    if (leq(x, a) && leq(x, b) && !leq(x, *best)) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> FiniteOrthoLattice::join_index(std::size_t a, std::size_t b) const {
  const std::size_t n = size();
  std::optional<std::size_t> best;
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq(a, x) || !leq(b, x)) continue;
    if (!best || leq(x, *best)) best = x;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (leq(a, x) && leq(b, x) && !leq(*best, x)) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> FiniteOrthoLattice::find(const Subspace& s) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (approx_equal(elements_[i], s, tol_.eps_equal)) return i;
  }
  return std::nullopt;
}

std::string FiniteOrthoLattice::element_name(std::size_t i) const {
  if (elements_[i].name()) return *elements_[i].name();
  return "#" + std::to_string(i);
}

FiniteOrthoLattice build_lattice(std::size_t dim, const std::vector<Subspace>& atoms,
                                 const ToleranceConfig& tol) {
  tol.validate();
  std::vector<Subspace> pool;
  pool.push_back(Subspace::zero(dim));
  pool.push_back(Subspace::full(dim));
  for (const Subspace& a : atoms) {
    if (a.dim() != dim) throw std::invalid_argument("atom dimension mismatch");
    pool.push_back(a);
  }
  for (const Subspace& a : atoms) pool.push_back(complement(a));

  std::vector<Subspace> elements;
  for (const Subspace& s : pool) {
    const bool seen = std::any_of(elements.begin(), elements.end(), [&](const Subspace& e) {
      return approx_equal(e, s, tol.eps_equal);
    });
    if (!seen) elements.push_back(s);
  }
  std::stable_sort(elements.begin(), elements.end(), canonical_less);
  return FiniteOrthoLattice(std::move(elements), tol);
}

LawVerdict check_orthomodular(const FiniteOrthoLattice& l) {
  LawVerdict verdict;
  verdict.law = "orthomodular";
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      const auto inner = l.meet_index(l.complement_of(a), b);
      if (!inner) {
        return {verdict.law, false, {a, b},
                "no infimum for " + pair_text(l, l.complement_of(a), b)};
      }
      const auto outer = l.join_index(a, *inner);
      if (!outer) {
        return {verdict.law, false, {a, b}, "no supremum for " + pair_text(l, a, *inner)};
      }
      if (*outer != b) {
        return {verdict.law, false, {a, b},
                "a v (a' ^ b) = " + l.element_name(*outer) + " but b = " + l.element_name(b)};
      }
    }
  }
  return verdict;
}

LawVerdict check_distributive(const FiniteOrthoLattice& l) {
  LawVerdict verdict;
  verdict.law = "distributive";
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto bc = l.join_index(b, c);
        const auto ab = l.meet_index(a, b);
        const auto ac = l.meet_index(a, c);
        if (!bc || !ab || !ac) {
          return {verdict.law, false, {a, b, c}, "meet or join undefined in element set"};
        }
        const auto lhs = l.meet_index(a, *bc);
        const auto rhs = l.join_index(*ab, *ac);
        if (!lhs || !rhs) {
          return {verdict.law, false, {a, b, c}, "meet or join undefined in element set"};
        }
        if (*lhs != *rhs) {
          return {verdict.law, false, {a, b, c},
                  "a ^ (b v c) = " + l.element_name(*lhs) + " but (a ^ b) v (a ^ c) = " +
                      l.element_name(*rhs)};
        }
      }
    }
  }
  return verdict;
}

}  // namespace qlat
