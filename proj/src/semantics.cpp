#include "qlat/semantics.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>

namespace qlat {

Preparation::Preparation(StateVector state, const ToleranceConfig& tol)
    : state_(std::move(state)),
      support_(Subspace(span_projector(state_)).renamed(
          state_.label() ? std::optional<std::string>("supp(" + *state_.label() + ")")
                         : std::nullopt)) {
  tol.validate();
}

std::string to_string(TruthKind kind) {
  switch (kind) {
    case TruthKind::truth: return "True";
    case TruthKind::falsity: return "False";
    case TruthKind::gap: return "Gap";
    case TruthKind::degree: return "Degree";
  }
  return "Gap";
}

std::string to_string(SuperClassification c) {
  return c == SuperClassification::supertrue ? "SuperTrue" : "SuperFalse";
}

void ProjectorRegistry::add(std::string name, Subspace subspace) {
  if (name.empty()) throw std::invalid_argument("registry atoms need a name");
  if (find(name)) throw std::invalid_argument("duplicate registry atom '" + name + "'");
  if (!entries_.empty() && entries_.front().second.dim() != subspace.dim()) {
    throw std::invalid_argument("registry atoms must share one dimension");
  }
  entries_.emplace_back(std::move(name), std::move(subspace));
}

const Subspace* ProjectorRegistry::find(std::string_view name) const {
  for (const auto& [key, value] : entries_) {
    if (key == name) return &value;
  }
  return nullptr;
}

std::optional<std::string> ProjectorRegistry::name_of(const Subspace& s, double eps) const {
  for (const auto& [key, value] : entries_) {
    if (approx_equal(value, s, eps)) return key;
  }
  return std::nullopt;
}

std::size_t ProjectorRegistry::dim() const {
  return entries_.empty() ? 0 : entries_.front().second.dim();
}

ProjectorRegistry ProjectorRegistry::builtin_qubit() {
  ProjectorRegistry registry;
  for (int axis = 1; axis <= 3; ++axis) {
    for (int outcome = 1; outcome <= 2; ++outcome) {
      Projector p = build_qubit_projector(outcome, axis);
      std::string name = *p.name();
      registry.add(std::move(name), Subspace(std::move(p)));
    }
  }
  return registry;
}

std::optional<SemanticsMode> parse_semantics_mode(std::string_view token) {
  if (token == "hilbert") return SemanticsMode::hilbert;
  if (token == "super") return SemanticsMode::supervaluational;
  if (token == "mv") return SemanticsMode::many_valued;
  return std::nullopt;
}

std::string to_string(SemanticsMode mode) {
  switch (mode) {
    case SemanticsMode::hilbert: return "hilbert";
    case SemanticsMode::supervaluational: return "super";
    case SemanticsMode::many_valued: return "mv";
  }
  return "hilbert";
}

namespace {

std::string describe(const Subspace& s, const ProjectorRegistry& registry, double eps) {
  if (s.is_zero()) return "{0}";
  if (s.is_full()) return "C^" + std::to_string(s.dim());
  if (s.name()) return *s.name();
  if (auto named = registry.name_of(s, eps)) return *named;
  return "<subspace of rank " + std::to_string(s.rank()) + ">";
}

/// Subspace expression with negations already pushed onto the leaves by the
/// De Morgan dual, so Stage-1 rules only ever face meets and joins of values.
struct SubspaceExpr {
  enum class Op { leaf, meet, join };
  Op op = Op::leaf;
  std::optional<Subspace> value;
  std::unique_ptr<SubspaceExpr> lhs;
  std::unique_ptr<SubspaceExpr> rhs;
};

std::unique_ptr<SubspaceExpr> to_subspace_expr(const Formula& f, bool negated,
                                               const ProjectorRegistry& registry) {
  auto node = std::make_unique<SubspaceExpr>();
  switch (f.kind()) {
    case Formula::Kind::atom: {
      const Subspace* bound = registry.find(f.atom_name());
      if (!bound) throw UnboundAtomError(f.atom_name());
      node->value = negated ? complement(*bound) : *bound;
      return node;
    }
    case Formula::Kind::negation:
      return to_subspace_expr(*f.child(), !negated, registry);
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      const bool conj = (f.kind() == Formula::Kind::conjunction) != negated;
      node->op = conj ? SubspaceExpr::Op::meet : SubspaceExpr::Op::join;
      node->lhs = to_subspace_expr(*f.lhs(), negated, registry);
      node->rhs = to_subspace_expr(*f.rhs(), negated, registry);
      return node;
    }
  }
  return node;
}

struct SimplifyContext {
  const ProjectorRegistry& registry;
  const EvalOptions& opts;
  std::vector<std::string>* trace;

  void log(const Subspace& l, const Subspace& r, SubspaceExpr::Op op, const Subspace& result,
           const char* rule) const {
    if (!trace) return;
    const double eps = opts.tol.eps_equal;
    trace->push_back(describe(l, registry, eps) + (op == SubspaceExpr::Op::meet ? " ^ " : " v ") +
                     describe(r, registry, eps) + " -> " + describe(result, registry, eps) +
                     "  [" + rule + "]");
  }

  void log_gap(const Subspace& l, const Subspace& r, SubspaceExpr::Op op) const {
    if (!trace) return;
    const double eps = opts.tol.eps_equal;
    trace->push_back(describe(l, registry, eps) + (op == SubspaceExpr::Op::meet ? " ^ " : " v ") +
                     describe(r, registry, eps) + " -> gap  [non-commuting operands]");
  }
};

/// Stage 1. Returns the residual subspace, or nullopt when an op between
/// non-commuting nontrivial operands survives.
std::optional<Subspace> simplify(const SubspaceExpr& node, const SimplifyContext& ctx) {
  if (node.op == SubspaceExpr::Op::leaf) return node.value;

  const auto l = simplify(*node.lhs, ctx);
  const auto r = simplify(*node.rhs, ctx);
  if (!l || !r) return std::nullopt;

  const double eps = ctx.opts.tol.eps_equal;
  const bool is_meet = node.op == SubspaceExpr::Op::meet;

  // r == complement(l) exactly when their projectors sum to the identity.
  if (frobenius_distance(l->matrix() + r->matrix(), Matrix::identity(l->dim())) <= eps) {
    const Subspace result = is_meet ? Subspace::zero(l->dim()) : Subspace::full(l->dim());
    ctx.log(*l, *r, node.op, result, "complement pair");
    return result;
  }
  if (approx_equal(*l, *r, eps)) {
    ctx.log(*l, *r, node.op, *l, "idempotence");
    return std::move(*l);
  }
  if (l->is_zero() || l->is_full() || r->is_zero() || r->is_full()) {
    Subspace result = [&] {
      if (is_meet) {
        if (l->is_zero() || r->is_zero()) return Subspace::zero(l->dim());
        return l->is_full() ? *r : *l;
      }
      if (l->is_full() || r->is_full()) return Subspace::full(l->dim());
      return l->is_zero() ? *r : *l;
    }();
    ctx.log(*l, *r, node.op, result, "trivial element");
    return result;
  }
  if (commutes(*l, *r, eps)) {
    const Subspace result = is_meet ? meet(*l, *r, ctx.opts.tol) : join(*l, *r, ctx.opts.tol);
    ctx.log(*l, *r, node.op, result, "commuting pair");
    return result;
  }
  if (ctx.opts.counterfactual_joins) {
    const Subspace result = is_meet ? meet(*l, *r, ctx.opts.tol) : join(*l, *r, ctx.opts.tol);
    ctx.log(*l, *r, node.op, result, "counterfactual lattice value");
    return result;
  }
  ctx.log_gap(*l, *r, node.op);
  return std::nullopt;
}

Subspace fold_subspace(const Formula& f, const ProjectorRegistry& registry,
                       const ToleranceConfig& tol) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      const Subspace* bound = registry.find(f.atom_name());
      if (!bound) throw UnboundAtomError(f.atom_name());
      return *bound;
    }
    case Formula::Kind::negation:
      return complement(fold_subspace(*f.child(), registry, tol));
    case Formula::Kind::conjunction:
      return meet(fold_subspace(*f.lhs(), registry, tol), fold_subspace(*f.rhs(), registry, tol),
                  tol);
    case Formula::Kind::disjunction:
      return join(fold_subspace(*f.lhs(), registry, tol), fold_subspace(*f.rhs(), registry, tol),
                  tol);
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

TruthVerdict eval_atom_hilbert(const Preparation& prep, const Subspace& p,
                               const ToleranceConfig& tol) {
  const Subspace m = meet(prep.support(), p, tol);
  if (approx_equal(m, prep.support(), tol.eps_equal)) return TruthVerdict::truth();
  if (m.is_zero()) return TruthVerdict::falsity();
  throw std::logic_error("rank-1 support produced a proper partial meet");
}

EvalResult eval_formula_hilbert(const Preparation& prep, const Formula& f,
                                const ProjectorRegistry& registry, const EvalOptions& opts) {
  opts.tol.validate();
  EvalResult result;
  const Subspace s = fold_subspace(f, registry, opts.tol);
  result.verdict = eval_atom_hilbert(prep, s, opts.tol);
  if (opts.record_trace) {
    const double eps = opts.tol.eps_equal;
    result.trace.push_back("formula subspace: " + describe(s, registry, eps));
    result.trace.push_back("state meet: " + describe(prep.support(), registry, eps) + " ^ " +
                           describe(s, registry, eps) + " -> " +
                           (result.verdict.kind == TruthKind::truth
                                ? describe(prep.support(), registry, eps)
                                : "{0}"));
  }
  return result;
}

EvalResult eval_formula_super(const Preparation& prep, const Formula& f,
                              const ProjectorRegistry& registry, const EvalOptions& opts) {
  opts.tol.validate();
  EvalResult result;
  std::vector<std::string>* trace = opts.record_trace ? &result.trace : nullptr;

  const auto expr = to_subspace_expr(f, false, registry);
  const SimplifyContext ctx{registry, opts, trace};
  const std::optional<Subspace> residue = simplify(*expr, ctx);
  const double eps = opts.tol.eps_equal;

  if (!residue) {
    if (trace) trace->push_back("unresolved operand survives -> Gap");
    result.verdict = TruthVerdict::gap();
    return result;
  }

  if (!commutes(prep.support(), *residue, eps)) {
    if (trace) {
      trace->push_back("residue " + describe(*residue, registry, eps) +
                       " does not commute with " + describe(prep.support(), registry, eps) +
                       " -> Gap");
    }
    result.verdict = TruthVerdict::gap();
    return result;
  }

  const Subspace m = meet(prep.support(), *residue, opts.tol);
  if (trace) {
    trace->push_back("state meet: " + describe(prep.support(), registry, eps) + " ^ " +
                     describe(*residue, registry, eps) + " -> " + describe(m, registry, eps));
  }
  if (approx_equal(m, prep.support(), eps)) {
    result.verdict = TruthVerdict::truth();
    if (residue->is_full()) result.verdict.classification = SuperClassification::supertrue;
    return result;
  }
  if (m.is_zero()) {
    result.verdict = TruthVerdict::falsity();
    if (residue->is_zero()) result.verdict.classification = SuperClassification::superfalse;
    return result;
  }
  throw std::logic_error("rank-1 support produced a proper partial meet");
}

EvalResult eval_formula_mv(const Preparation& prep, const Formula& f,
                           const ProjectorRegistry& registry, const EvalOptions& opts) {
  opts.tol.validate();
  const auto atom_degree = [&](const Formula& atom) {
    const Subspace* bound = registry.find(atom.atom_name());
    if (!bound) throw UnboundAtomError(atom.atom_name());
    return expectation(prep.state(), bound->projector());
  };

  EvalResult result;
  if (f.kind() == Formula::Kind::atom) {
    const double d = atom_degree(f);
    result.verdict = TruthVerdict::of_degree(d);
    if (opts.record_trace) {
      result.trace.push_back("degree(" + f.atom_name() + ") = <psi|P|psi>");
    }
    return result;
  }
  if (f.kind() == Formula::Kind::negation && f.child()->kind() == Formula::Kind::atom) {
    const double d = 1.0 - atom_degree(*f.child());
    result.verdict = TruthVerdict::of_degree(std::min(1.0, std::max(0.0, d)));
    if (opts.record_trace) {
      result.trace.push_back("degree(!" + f.child()->atom_name() + ") = 1 - <psi|P|psi>");
    }
    return result;
  }
  throw UnsupportedConnectiveError(
      "many-valued mode assigns degrees to atoms and negated atoms only; got '" + print(f) + "'");
}

EvalResult evaluate(const Preparation& prep, const Formula& f, const ProjectorRegistry& registry,
                    SemanticsMode mode, const EvalOptions& opts) {
  switch (mode) {
    case SemanticsMode::hilbert: return eval_formula_hilbert(prep, f, registry, opts);
    case SemanticsMode::supervaluational: return eval_formula_super(prep, f, registry, opts);
    case SemanticsMode::many_valued: return eval_formula_mv(prep, f, registry, opts);
  }
  throw std::logic_error("unreachable semantics mode");
}

}  // namespace qlat
