#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/formula.hpp"
#include "qlat/subspace.hpp"
#include "qlat/tolerance.hpp"

namespace qlat {

/// A pure preparation: the state vector together with its support, the
/// rank-1 subspace spanned by the state.
class Preparation {
 public:
  explicit Preparation(StateVector state, const ToleranceConfig& tol = {});

  const StateVector& state() const { return state_; }
  const Subspace& support() const { return support_; }
  std::size_t dim() const { return state_.dim(); }

 private:
  StateVector state_;
  Subspace support_;
};

enum class TruthKind { truth, falsity, gap, degree };

enum class SuperClassification { supertrue, superfalse };

/// Verdict of a semantic evaluation. degree is set only for TruthKind::degree;
/// classification only for supervaluational verdicts forced by a trivial
/// residue (tautology/contradiction shape).
struct TruthVerdict {
  TruthKind kind = TruthKind::gap;
  std::optional<double> degree;
  std::optional<SuperClassification> classification;

  static TruthVerdict truth() { return {TruthKind::truth, std::nullopt, std::nullopt}; }
  static TruthVerdict falsity() { return {TruthKind::falsity, std::nullopt, std::nullopt}; }
  static TruthVerdict gap() { return {TruthKind::gap, std::nullopt, std::nullopt}; }
  static TruthVerdict of_degree(double d) { return {TruthKind::degree, d, std::nullopt}; }
};

std::string to_string(TruthKind kind);
std::string to_string(SuperClassification c);

/// Name -> subspace binding for formula atoms. Entries keep insertion order
/// so traces and reports stay reproducible.
class ProjectorRegistry {
 public:
  void add(std::string name, Subspace subspace);
  const Subspace* find(std::string_view name) const;
  std::optional<std::string> name_of(const Subspace& s, double eps = 1e-9) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t dim() const;
  const std::pair<std::string, Subspace>& entry(std::size_t i) const { return entries_[i]; }

  /// The six spin atoms P[1,1], P[2,1], P[1,2], P[2,2], P[1,3], P[2,3].
  static ProjectorRegistry builtin_qubit();

 private:
  std::vector<std::pair<std::string, Subspace>> entries_;
};

/// Raised when a formula references an atom the registry does not bind.
struct UnboundAtomError : std::runtime_error {
  explicit UnboundAtomError(const std::string& atom)
      : std::runtime_error("unbound atom '" + atom + "'"), atom_name(atom) {}
  std::string atom_name;
};

/// Raised by the many-valued mode, which assigns degrees only to atoms and
/// negated atoms.
struct UnsupportedConnectiveError : std::runtime_error {
  explicit UnsupportedConnectiveError(const std::string& what) : std::runtime_error(what) {}
};

enum class SemanticsMode { hilbert, supervaluational, many_valued };

std::optional<SemanticsMode> parse_semantics_mode(std::string_view token);
std::string to_string(SemanticsMode mode);

struct EvalOptions {
  /// Evaluate ops between non-commuting operands through the full subspace
  /// lattice instead of leaving them as gaps (supervaluational mode only).
  bool counterfactual_joins = false;
  bool record_trace = true;
  ToleranceConfig tol{};
};

struct EvalResult {
  TruthVerdict verdict;
  std::vector<std::string> trace;
};

/// Bivalent verdict for a single subspace: truth when the support lies inside
/// it, falsity when the intersection with the support is {0}.
TruthVerdict eval_atom_hilbert(const Preparation& prep, const Subspace& p,
                               const ToleranceConfig& tol = {});

/// Bivalent mode: the formula folds to one subspace via meet/join/complement,
/// then eval_atom_hilbert decides.
EvalResult eval_formula_hilbert(const Preparation& prep, const Formula& f,
                                const ProjectorRegistry& registry, const EvalOptions& opts = {});

/// Supervaluational mode. Stage 1 simplifies the subspace expression with the
/// fixed rule order: complement pairs (X | !X -> full, X & !X -> {0}), then
/// idempotence, then trivial-element absorption, then collapse of commuting
/// pairs to their lattice value. Stage 2 applies the state meet when a single
/// subspace remains; any surviving op between non-commuting operands is a
/// truth-value gap. Verdicts forced by a trivial residue are classified
/// supertrue/superfalse.
EvalResult eval_formula_super(const Preparation& prep, const Formula& f,
                              const ProjectorRegistry& registry, const EvalOptions& opts = {});

/// Many-valued mode: degree <psi|P|psi> for an atom, one minus that for a
/// negated atom; other connectives are rejected.
EvalResult eval_formula_mv(const Preparation& prep, const Formula& f,
                           const ProjectorRegistry& registry, const EvalOptions& opts = {});

EvalResult evaluate(const Preparation& prep, const Formula& f, const ProjectorRegistry& registry,
                    SemanticsMode mode, const EvalOptions& opts = {});

}  // namespace qlat
