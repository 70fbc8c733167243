#include "qlat/heyting.hpp"

#include <stdexcept>

namespace qlat {

PseudoComplementReport pseudo_complement(const FiniteOrthoLattice& l, std::size_t element) {
  if (element >= l.size()) throw std::out_of_range("element index outside lattice");

  PseudoComplementReport report;
  report.element = element;
  for (std::size_t b = 0; b < l.size(); ++b) {
    const auto m = l.meet_index(element, b);
    if (m && *m == l.bottom_index()) report.disjoint_set.push_back(b);
  }

  // {0} is always disjoint, so the fold below starts well-defined.
  std::size_t sup = l.bottom_index();
  for (std::size_t b : report.disjoint_set) {
    const auto j = l.join_index(sup, b);
    if (!j) return report;  // no supremum in the element set: nothing can exist
    sup = *j;
  }
  report.supremum = sup;

  const auto sup_meet = l.meet_index(element, sup);
  report.exists = sup_meet && *sup_meet == l.bottom_index();
  if (report.exists) report.pseudo_complement = sup;
  return report;
}

HeytingReport heyting_feasible(const FiniteOrthoLattice& l) {
  HeytingReport report;
  report.per_element.reserve(l.size());
  bool all_exist = true;
  for (std::size_t i = 0; i < l.size(); ++i) {
    report.per_element.push_back(pseudo_complement(l, i));
    all_exist = all_exist && report.per_element.back().exists;
  }
  report.distributive = check_distributive(l);
  report.feasible = all_exist && report.distributive.holds;
  return report;
}

}  // namespace qlat
