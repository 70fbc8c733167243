#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlat/serialize.hpp"

using namespace qlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitExpect = 4;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
  return doc;
}

void emit(const Json& report, const std::string& out_path, const std::string& format) {
  const std::string body = format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << body;
}

std::vector<Projector> builtin_qubit_sigma() {
  std::vector<Projector> sigma;
  for (int b = 1; b <= 3; ++b)
    for (int a = 1; a <= 2; ++a) sigma.push_back(build_qubit_projector(a, b));
  return sigma;
}

/// Accepts "P[m,R]" with m in {1,2} and R in {1,2,3}.
std::pair<int, int> parse_spin_ref(const std::string& text, const std::string& context) {
  int m = 0;
  int r = 0;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "P[%d,%d%c", &m, &r, &tail) != 3 || tail != ']' ||
      text.back() != ']' || m < 1 || m > 2 || r < 1 || r > 3) {
    throw InputError(context + ": expected P[m,R] with m in {1,2}, R in {1,2,3}, got '" + text +
                     "'");
  }
  return {m, r};
}

std::vector<Projector> resolve_sigma(const std::string& ref, double eps) {
  if (ref == "builtin:qubit") return builtin_qubit_sigma();
  if (ref.rfind("builtin:", 0) == 0)
    throw InputError("unknown builtin projector set '" + ref + "'");
  return load_projector_file(read_json_file(ref), eps);
}

FiniteOrthoLattice resolve_lattice(const std::string& ref, const ToleranceConfig& tol) {
  if (ref.rfind("builtin:block:", 0) == 0) {
    const auto [m, r] = parse_spin_ref(ref.substr(14), "--lattice " + ref);
    return build_block(build_qubit_projector(m, r), tol).lattice;
  }
  const std::vector<Projector> sigma = resolve_sigma(ref, tol.eps_equal);
  std::vector<Subspace> atoms;
  for (const Projector& p : sigma) atoms.push_back(Subspace(p));
  const std::size_t dim = sigma.empty() ? 2 : sigma.front().dim();
  return build_lattice(dim, atoms, tol);
}

StateVector resolve_state(const std::string& ref) {
  if (ref.rfind("builtin:psi[", 0) == 0) {
    const auto [m, r] = parse_spin_ref("P" + ref.substr(11), "--state " + ref);
    return eigenstate(m, r);
  }
  if (ref.rfind("builtin:", 0) == 0) throw InputError("unknown builtin state '" + ref + "'");
  return load_state_file(read_json_file(ref));
}

ProjectorRegistry registry_from(const std::string& ref, double eps) {
  if (ref == "builtin:qubit") return ProjectorRegistry::builtin_qubit();
  ProjectorRegistry registry;
  for (const Projector& p : resolve_sigma(ref, eps)) {
    if (!p.name()) throw InputError("projector file entries must be named");
    registry.add(*p.name(), Subspace(p));
  }
  return registry;
}

FormulaPtr parse_formula_or_throw(const std::string& text) {
  ParseResult result = parse(text);
  if (std::holds_alternative<ParseError>(result))
    throw InputError(std::get<ParseError>(result).message());
  return std::get<FormulaPtr>(result);
}

/// One `--expect key=value` assertion against an eval report.
struct Expectation {
  std::string key;
  std::string value;
};

Expectation parse_expectation(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
    throw CLI::ValidationError("--expect", "expected key=value, got '" + text + "'");
  Expectation e{text.substr(0, eq), text.substr(eq + 1)};
  if (e.key != "verdict" && e.key != "classification" && e.key != "degree")
    throw CLI::ValidationError("--expect",
                               "unknown key '" + e.key +
                                   "' (supported: verdict, classification, degree)");
  return e;
}

int apply_expectations(const Json& report, const std::vector<Expectation>& expectations,
                       double eps) {
  int failures = 0;
  for (const Expectation& e : expectations) {
    if (e.key == "degree") {
      const double wanted = std::strtod(e.value.c_str(), nullptr);
      const double got = report.contains("degree") ? report.at("degree").get<double>() : -1.0;
      if (!report.contains("degree") || std::abs(got - wanted) > eps) {
        std::cerr << "expect failed: degree: wanted " << e.value << ", got "
                  << (report.contains("degree") ? std::to_string(got) : "none") << "\n";
        ++failures;
      }
      continue;
    }
    const std::string got =
        report.contains(e.key) ? report.at(e.key).get<std::string>() : "none";
    if (got != e.value) {
      std::cerr << "expect failed: " << e.key << ": wanted " << e.value << ", got " << got
                << "\n";
      ++failures;
    }
  }
  return failures;
}

// ---------------------------------------------------------------------------
// Demos. Each section runs a batch of internal assertions and prints one
// summary line; any failure flips the exit code to kExitExpect.

struct Tally {
  long long checks = 0;
  long long failures = 0;
  std::string first_failure;

  void record(bool ok, const char* why) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = why;
    }
  }
};

class DemoRun {
 public:
  void note(const std::string& line) { std::cout << line << "\n"; }

  void line(bool ok, const std::string& what) {
    std::cout << (ok ? "  ok   " : "  FAIL ") << what << "\n";
    if (!ok) ++failures_;
  }

  void section(const std::string& title, const Tally& tally) {
    if (tally.failures == 0) {
      std::cout << "  ok   " << title << " (" << tally.checks << " checks)\n";
    } else {
      std::cout << "  FAIL " << title << " (" << tally.failures << " of " << tally.checks
                << " checks failed; first: " << tally.first_failure << ")\n";
      ++failures_;
    }
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string verdict_text(const TruthVerdict& v) {
  std::string text = to_string(v.kind);
  if (v.classification) text += " (" + to_string(*v.classification) + ")";
  if (v.degree) {
    std::ostringstream out;
    out << *v.degree;
    text += " " + out.str();
  }
  return text;
}

TruthVerdict eval_text(const Preparation& prep, const std::string& formula, SemanticsMode mode,
                       const EvalOptions& opts = {}) {
  const FormulaPtr f = parse_formula_or_throw(formula);
  return evaluate(prep, *f, ProjectorRegistry::builtin_qubit(), mode, opts).verdict;
}

std::string spin_name(int m, int r) {
  return "P[" + std::to_string(m) + "," + std::to_string(r) + "]";
}

void demo_pem_failure(DemoRun& run) {
  run.note("pem-failure: a superposed state answers neither a question nor its negation");
  run.note("state: psi[1,1]  (equal-weight superposition across the 3-axis)");
  const Preparation prep{eigenstate(1, 1)};
  EvalOptions opts;
  opts.record_trace = false;

  const auto expect_kind = [&](const char* label, const std::string& formula, SemanticsMode mode,
                               TruthKind kind) {
    const TruthVerdict v = eval_text(prep, formula, mode, opts);
    run.line(v.kind == kind, std::string(label) + ": " + formula + " -> " + verdict_text(v));
  };

  expect_kind("hilbert", "P[1,3]", SemanticsMode::hilbert, TruthKind::falsity);
  expect_kind("hilbert", "!P[1,3]", SemanticsMode::hilbert, TruthKind::falsity);
  expect_kind("super  ", "P[1,3]", SemanticsMode::supervaluational, TruthKind::gap);
  expect_kind("super  ", "!P[1,3]", SemanticsMode::supervaluational, TruthKind::gap);

  const TruthVerdict pem =
      eval_text(prep, "P[1,3] | !P[1,3]", SemanticsMode::supervaluational, opts);
  run.line(pem.kind == TruthKind::truth &&
               pem.classification == SuperClassification::supertrue,
           "super  : P[1,3] | !P[1,3] -> " + verdict_text(pem));
  const TruthVerdict contra =
      eval_text(prep, "P[1,3] & !P[1,3]", SemanticsMode::supervaluational, opts);
  run.line(contra.kind == TruthKind::falsity &&
               contra.classification == SuperClassification::superfalse,
           "super  : P[1,3] & !P[1,3] -> " + verdict_text(contra));

  const TruthVerdict d1 = eval_text(prep, "P[1,3]", SemanticsMode::many_valued, opts);
  run.line(d1.degree && std::abs(*d1.degree - 0.5) <= 1e-12,
           "mv     : P[1,3] -> " + verdict_text(d1));
  const TruthVerdict d2 = eval_text(prep, "!P[1,3]", SemanticsMode::many_valued, opts);
  run.line(d2.degree && std::abs(*d2.degree - 0.5) <= 1e-12,
           "mv     : !P[1,3] -> " + verdict_text(d2));
}

void demo_schroedinger(DemoRun& run) {
  run.note("schroedinger: P[1,3] plays 'the cat is dead', !P[1,3] 'the cat is alive'");
  EvalOptions opts;
  opts.record_trace = false;

  run.note("before verification the box holds the superposition psi[1,1]:");
  const Preparation boxed{eigenstate(1, 1)};
  const TruthVerdict dead = eval_text(boxed, "P[1,3]", SemanticsMode::supervaluational, opts);
  run.line(dead.kind == TruthKind::gap, "super  : P[1,3] -> " + verdict_text(dead));
  const TruthVerdict alive = eval_text(boxed, "!P[1,3]", SemanticsMode::supervaluational, opts);
  run.line(alive.kind == TruthKind::gap, "super  : !P[1,3] -> " + verdict_text(alive));
  const TruthVerdict either =
      eval_text(boxed, "P[1,3] | !P[1,3]", SemanticsMode::supervaluational, opts);
  run.line(either.kind == TruthKind::truth &&
               either.classification == SuperClassification::supertrue,
           "super  : P[1,3] | !P[1,3] -> " + verdict_text(either));
  run.note("the disjunction is settled, its disjuncts are not: neither answer exists yet");

  run.note("the bivalent reading instead denies both claims outright:");
  const TruthVerdict hdead = eval_text(boxed, "P[1,3]", SemanticsMode::hilbert, opts);
  run.line(hdead.kind == TruthKind::falsity, "hilbert: P[1,3] -> " + verdict_text(hdead));
  const TruthVerdict halive = eval_text(boxed, "!P[1,3]", SemanticsMode::hilbert, opts);
  run.line(halive.kind == TruthKind::falsity, "hilbert: !P[1,3] -> " + verdict_text(halive));

  run.note("after a verification that found the cat dead (state psi[1,3]):");
  const Preparation observed{eigenstate(1, 3)};
  const TruthVerdict now_dead =
      eval_text(observed, "P[1,3]", SemanticsMode::supervaluational, opts);
  run.line(now_dead.kind == TruthKind::truth, "super  : P[1,3] -> " + verdict_text(now_dead));
  const TruthVerdict now_alive =
      eval_text(observed, "!P[1,3]", SemanticsMode::supervaluational, opts);
  run.line(now_alive.kind == TruthKind::falsity,
           "super  : !P[1,3] -> " + verdict_text(now_alive));
}

// Every same-axis formula up to the given nesting depth, deduplicated by
// construction: trees are grouped by exact height so no shape repeats. Each
// formula carries the index of its folded subspace in a small value pool so
// the bivalent reference verdict costs one lattice op per tree, not one per
// node per preparation.
struct EnumeratedFormula {
  FormulaPtr formula;
  int fold = -1;
};

class AxisEnumerator {
 public:
  explicit AxisEnumerator(int axis, const ToleranceConfig& tol) : tol_(tol) {
    pool_.push_back(Subspace(build_qubit_projector(1, axis)));
    pool_.push_back(Subspace(build_qubit_projector(2, axis)));
  }

  std::vector<EnumeratedFormula> enumerate(int axis, int max_depth) {
    std::vector<EnumeratedFormula> all;
    std::vector<EnumeratedFormula> frontier;
    frontier.push_back({Formula::make_atom(spin_name(1, axis)), 0});
    frontier.push_back({Formula::make_atom(spin_name(2, axis)), 1});
    all = frontier;
    for (int d = 1; d <= max_depth; ++d) {
      std::vector<EnumeratedFormula> next;
      const std::size_t older = all.size() - frontier.size();
      for (const EnumeratedFormula& f : frontier)
        next.push_back({Formula::make_negation(f.formula), negate(f.fold)});
      for (const EnumeratedFormula& f : frontier) {
        for (const EnumeratedFormula& g : all) {
          next.push_back({Formula::make_conjunction(f.formula, g.formula),
                          combine(true, f.fold, g.fold)});
          next.push_back({Formula::make_disjunction(f.formula, g.formula),
                          combine(false, f.fold, g.fold)});
        }
      }
      for (std::size_t i = 0; i < older; ++i) {
        for (const EnumeratedFormula& f : frontier) {
          next.push_back({Formula::make_conjunction(all[i].formula, f.formula),
                          combine(true, all[i].fold, f.fold)});
          next.push_back({Formula::make_disjunction(all[i].formula, f.formula),
                          combine(false, all[i].fold, f.fold)});
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return all;
  }

  const Subspace& value(int id) const { return pool_[static_cast<std::size_t>(id)]; }
  std::size_t pool_size() const { return pool_.size(); }

 private:
  int intern(Subspace s) {
    for (std::size_t i = 0; i < pool_.size(); ++i)
      if (approx_equal(pool_[i], s, tol_.eps_equal)) return static_cast<int>(i);
    pool_.push_back(std::move(s));
    return static_cast<int>(pool_.size() - 1);
  }

  int negate(int id) {
    if (neg_.count(id) == 0) neg_[id] = intern(complement(value(id)));
    return neg_.at(id);
  }

  int combine(bool is_meet, int l, int r) {
    auto& table = is_meet ? meet_ : join_;
    const auto key = std::make_pair(l, r);
    if (table.count(key) == 0) {
      const Subspace result =
          is_meet ? meet(value(l), value(r), tol_) : join(value(l), value(r), tol_);
      table[key] = intern(result);
    }
    return table.at(key);
  }

  ToleranceConfig tol_;
  std::vector<Subspace> pool_;
  std::map<int, int> neg_;
  std::map<std::pair<int, int>, int> meet_;
  std::map<std::pair<int, int>, int> join_;
};

Tally sweep_axis_agreement(int axis, int max_depth) {
  Tally tally;
  const ProjectorRegistry registry = ProjectorRegistry::builtin_qubit();
  EvalOptions opts;
  opts.record_trace = false;

  AxisEnumerator enumerator(axis, opts.tol);
  const std::vector<EnumeratedFormula> formulas = enumerator.enumerate(axis, max_depth);
  // Same-axis folds stay inside the four-element block of the axis.
  tally.record(enumerator.pool_size() == 4, "folded values escaped the axis block");

  for (int m = 1; m <= 2; ++m) {
    const Preparation prep{eigenstate(m, axis)};
    std::vector<TruthKind> verdict_of;
    for (std::size_t id = 0; id < enumerator.pool_size(); ++id)
      verdict_of.push_back(
          eval_atom_hilbert(prep, enumerator.value(static_cast<int>(id)), opts.tol).kind);
    std::size_t index = 0;
    for (const EnumeratedFormula& f : formulas) {
      const TruthKind h = verdict_of[static_cast<std::size_t>(f.fold)];
      const TruthKind s = eval_formula_super(prep, *f.formula, registry, opts).verdict.kind;
      tally.record(h == s, "supervaluational verdict diverged in a commuting context");
      // Spot-check the pooled fold against the full bivalent evaluator.
      if (index % 97 == 0) {
        tally.record(eval_formula_hilbert(prep, *f.formula, registry, opts).verdict.kind == h,
                     "pooled fold diverged from the bivalent evaluator");
      }
      ++index;
    }
  }
  return tally;
}

void demo_checks(DemoRun& run) {
  const ToleranceConfig tol;
  EvalOptions opts;
  opts.record_trace = false;
  const ProjectorRegistry registry = ProjectorRegistry::builtin_qubit();

  // 1. The projector family itself.
  {
    Tally t;
    for (int b = 1; b <= 3; ++b) {
      for (int a = 1; a <= 2; ++a) {
        const Projector p = build_qubit_projector(a, b);
        const Matrix& m = p.matrix();
        t.record(m.is_hermitian(1e-12), "projector not Hermitian");
        t.record(frobenius_distance(m * m, m) <= 1e-12, "projector not idempotent");
        t.record(std::abs(m.trace() - Complex(1.0, 0.0)) <= 1e-12, "trace differs from 1");
        // Partner identity: complementary outcome, same axis, entrywise.
        const Projector q = build_qubit_projector(partner_index(a), b);
        t.record(frobenius_distance(Matrix::identity(2) - m, q.matrix()) == 0.0,
                 "partner projector is not the exact complement");
      }
      t.record(resolution_check(b, 0.0),
               "outcome projectors do not resolve the identity exactly");
    }
    run.section("projector family: Hermitian, idempotent, trace one, exact resolution", t);
  }

  // 2. Subspace lattice identities.
  {
    Tally t;
    std::vector<Subspace> atoms;
    for (const Projector& p : builtin_qubit_sigma()) atoms.push_back(Subspace(p));
    for (const Subspace& a : atoms) {
      for (const Subspace& b : atoms) {
        if (approx_equal(a, b, 1e-9)) continue;
        t.record(meet(a, b).is_zero(), "distinct atoms should meet at {0}");
        t.record(join(a, b).is_full(), "distinct atoms should join to the full space");
      }
    }
    const FiniteOrthoLattice lattice = build_lattice(2, atoms, tol);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      for (std::size_t j = 0; j < lattice.size(); ++j) {
        const Subspace& a = lattice.element(i);
        const Subspace& b = lattice.element(j);
        t.record(approx_equal(meet(a, join(a, b)), a, 1e-9), "absorption failed");
        t.record(approx_equal(join(a, meet(a, b)), a, 1e-9), "absorption failed");
        t.record(approx_equal(complement(meet(a, b)), join(complement(a), complement(b)), 1e-9),
                 "De Morgan failed");
      }
    }
    t.record(check_orthomodular(lattice).holds, "orthomodular law failed");
    const LawVerdict dist = check_distributive(lattice);
    t.record(!dist.holds, "distributivity unexpectedly held");
    t.record(dist.witness.size() == 3, "missing distributivity witness");
    // The classic witness: a 3-axis atom against the two 1-axis outcomes.
    const Subspace za{build_qubit_projector(1, 3)};
    const Subspace xa{build_qubit_projector(1, 1)};
    const Subspace xb{build_qubit_projector(2, 1)};
    t.record(approx_equal(meet(za, join(xa, xb)), za, 1e-9) &&
                 join(meet(za, xa), meet(za, xb)).is_zero(),
             "documented witness triple does not separate the two sides");
    run.section("subspace lattice: trivial atom meets/joins, laws, non-distributivity", t);
  }

  // 3. Bivalent rejection of cross-axis claims.
  {
    Tally t;
    int cases = 0;
    for (int sb = 1; sb <= 3; ++sb)
      for (int sa = 1; sa <= 2; ++sa) {
        const Preparation prep{eigenstate(sa, sb)};
        for (int pb = 1; pb <= 3; ++pb) {
          if (pb == sb) continue;
          for (int pa = 1; pa <= 2; ++pa) {
            ++cases;
            const std::string name = spin_name(pa, pb);
            t.record(eval_text(prep, name, SemanticsMode::hilbert, opts).kind ==
                         TruthKind::falsity,
                     "cross-axis atom not rejected");
            t.record(eval_text(prep, "!" + name, SemanticsMode::hilbert, opts).kind ==
                         TruthKind::falsity,
                     "cross-axis negation not rejected");
          }
        }
      }
    t.record(cases == 24, "case count drifted");
    run.section("bivalent mode: all 24 cross-axis atoms and negations are False", t);
  }

  // 4. Pseudo-complements: absent in the full lattice, orthocomplements in blocks.
  {
    Tally t;
    std::vector<Subspace> atoms;
    for (const Projector& p : builtin_qubit_sigma()) atoms.push_back(Subspace(p));
    const FiniteOrthoLattice lattice = build_lattice(2, atoms, tol);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const PseudoComplementReport report = pseudo_complement(lattice, i);
      if (i == lattice.bottom_index() || i == lattice.top_index()) {
        t.record(report.exists, "trivial element lost its pseudo-complement");
      } else {
        t.record(!report.exists, "an atom unexpectedly has a pseudo-complement");
      }
    }
    t.record(!heyting_feasible(lattice).feasible, "full lattice wrongly deemed Heyting");
    for (int b = 1; b <= 3; ++b) {
      const BooleanBlock block = build_block(build_qubit_projector(1, b), tol);
      for (std::size_t i = 0; i < block.lattice.size(); ++i) {
        const PseudoComplementReport report = pseudo_complement(block.lattice, i);
        t.record(report.exists && *report.pseudo_complement == block.lattice.complement_of(i),
                 "block pseudo-complement is not the orthocomplement");
      }
      t.record(heyting_feasible(block.lattice).feasible, "block wrongly deemed non-Heyting");
    }
    run.section("pseudo-complements: none for atoms globally, orthocomplements per block", t);
  }

  // 5. Supervaluational suite.
  {
    Tally t;
    for (int sb = 1; sb <= 3; ++sb)
      for (int sa = 1; sa <= 2; ++sa) {
        const Preparation prep{eigenstate(sa, sb)};
        for (int pb = 1; pb <= 3; ++pb)
          for (int pa = 1; pa <= 2; ++pa) {
            const std::string name = spin_name(pa, pb);
            if (pb != sb) {
              t.record(eval_text(prep, name, SemanticsMode::supervaluational, opts).kind ==
                           TruthKind::gap,
                       "cross-axis atom should be a gap");
            }
            const TruthVerdict pem =
                eval_text(prep, name + " | !" + name, SemanticsMode::supervaluational, opts);
            t.record(pem.kind == TruthKind::truth &&
                         pem.classification == SuperClassification::supertrue,
                     "excluded middle lost");
            const TruthVerdict contra =
                eval_text(prep, name + " & !" + name, SemanticsMode::supervaluational, opts);
            t.record(contra.kind == TruthKind::falsity &&
                         contra.classification == SuperClassification::superfalse,
                     "non-contradiction lost");
          }
      }
    for (int axis = 1; axis <= 3; ++axis) {
      const Tally axis_tally = sweep_axis_agreement(axis, 3);
      t.checks += axis_tally.checks;
      t.failures += axis_tally.failures;
      if (t.first_failure.empty()) t.first_failure = axis_tally.first_failure;
    }
    run.section("supervaluational: gaps, laws, and depth-3 agreement with bivalent mode", t);
  }

  // 6. Many-valued suite.
  {
    Tally t;
    std::mt19937 rng(20250819);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
      Amplitudes amps{};
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
          amps[i] = Complex(normal(rng), normal(rng));
          norm2 += std::norm(amps[i]);
        }
      } while (norm2 < 1e-6);
      const Preparation prep{StateVector(2, amps).normalized()};
      for (int b = 1; b <= 3; ++b)
        for (int a = 1; a <= 2; ++a) {
          const std::string name = spin_name(a, b);
          const TruthVerdict d = eval_text(prep, name, SemanticsMode::many_valued, opts);
          const TruthVerdict nd = eval_text(prep, "!" + name, SemanticsMode::many_valued, opts);
          t.record(d.degree && nd.degree && std::abs(*d.degree + *nd.degree - 1.0) <= 1e-10,
                   "degrees of an atom and its negation do not sum to one");
        }
    }
    for (int b = 1; b <= 3; ++b)
      for (int a = 1; a <= 2; ++a) {
        const Preparation prep{eigenstate(a, b)};
        const double own =
            *eval_text(prep, spin_name(a, b), SemanticsMode::many_valued, opts).degree;
        const double other =
            *eval_text(prep, spin_name(partner_index(a), b), SemanticsMode::many_valued, opts)
                 .degree;
        t.record(std::abs(own - 1.0) <= 1e-10, "eigenstate degree should be one");
        t.record(std::abs(other) <= 1e-10, "partner degree should be zero");
      }
    const Preparation tilted{eigenstate(1, 1)};
    const double half = *eval_text(tilted, "P[1,3]", SemanticsMode::many_valued, opts).degree;
    t.record(std::abs(half - 0.5) <= 1e-12, "superposition degree should be one half");
    run.section("many-valued: complement law, eigenstate extremes, the one-half case", t);
  }

  // 7. Parser round-trips and pinned error positions.
  {
    Tally t;
    std::mt19937 rng(52025);
    const std::vector<std::string> leaves = {"P[1,3]", "P[2,3]", "P[1,1]",
                                             "P[2,2]", "q",      "door_open"};
    const std::function<FormulaPtr(int)> random_formula = [&](int depth) -> FormulaPtr {
      std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 3);
      switch (pick(rng)) {
        case 1:
          return Formula::make_negation(random_formula(depth - 1));
        case 2:
          return Formula::make_conjunction(random_formula(depth - 1), random_formula(depth - 1));
        case 3:
          return Formula::make_disjunction(random_formula(depth - 1), random_formula(depth - 1));
        default: {
          std::uniform_int_distribution<std::size_t> leaf(0, leaves.size() - 1);
          return Formula::make_atom(leaves[leaf(rng)]);
        }
      }
    };
    for (int trial = 0; trial < 1000; ++trial) {
      const FormulaPtr f = random_formula(8);
      const std::string text = print(*f);
      ParseResult result = parse(text);
      t.record(std::holds_alternative<FormulaPtr>(result) &&
                   structurally_equal(*std::get<FormulaPtr>(result), *f),
               "round-trip lost the tree");
    }
    const auto expect_error = [&](const std::string& text, std::size_t position) {
      ParseResult result = parse(text);
      t.record(std::holds_alternative<ParseError>(result) &&
                   std::get<ParseError>(result).position == position,
               "parse error position drifted");
    };
    expect_error("P[1", 3);
    expect_error("P[1,3] &", 8);
    expect_error("(P[1,1] | P[1,2]", 16);
    run.section("parser: 1000 seeded round-trips and exact error positions", t);
  }
}

int run_demo(const std::string& which) {
  DemoRun run;
  if (which == "pem-failure" || which == "all") demo_pem_failure(run);
  if (which == "schroedinger" || which == "all") {
    if (which == "all") run.note("");
    demo_schroedinger(run);
  }
  if (which == "all") {
    run.note("");
    run.note("full check suite:");
    demo_checks(run);
  }
  if (run.failures() != 0) {
    std::cerr << run.failures() << " demo assertion group(s) failed\n";
    return kExitExpect;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum propositions over finite-dimensional subspace lattices"};
  app.require_subcommand(1);
  app.fallthrough();

  double eps = ToleranceConfig{}.eps_equal;
  app.add_option("--eps", eps, "comparison tolerance (overrides QLAT_EPS)")
      ->envname("QLAT_EPS");

  std::string out_path;
  std::string format = "json";

  CLI::App* gen = app.add_subcommand("gen-projectors", "emit the six qubit spin projectors");
  gen->add_option("--out", out_path, "write to a file instead of standard output");

  CLI::App* lattice_cmd = app.add_subcommand("lattice", "subspace lattice operations");
  lattice_cmd->require_subcommand(1);
  std::string atoms_ref = "builtin:qubit";
  CLI::App* lattice_build =
      lattice_cmd->add_subcommand("build", "build the lattice generated by a projector set");
  lattice_build->add_option("--atoms", atoms_ref, "projector file or builtin:qubit");
  lattice_build->add_option("--out", out_path);
  lattice_build->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  CLI::App* lattice_check = lattice_cmd->add_subcommand("check", "check a lattice law");
  std::string law = "";
  lattice_check->add_option("--atoms", atoms_ref, "projector file or builtin:qubit");
  lattice_check->add_option("--law", law, "orthomodular or distributive; both when omitted")
      ->check(CLI::IsMember({"orthomodular", "distributive"}));
  lattice_check->add_option("--out", out_path);
  lattice_check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* heyting_cmd = app.add_subcommand("heyting", "pseudo-complement analysis");
  CLI::App* heyting_check =
      heyting_cmd->add_subcommand("check", "search every element for a pseudo-complement");
  std::string lattice_ref = "builtin:qubit";
  heyting_check->add_option("--lattice", lattice_ref,
                            "projector file, builtin:qubit or builtin:block:P[m,R]");
  heyting_check->add_option("--out", out_path);
  heyting_check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  heyting_cmd->require_subcommand(1);

  CLI::App* blocks_cmd =
      app.add_subcommand("blocks", "Boolean blocks, commutation graph and union lattice");
  std::string sigma_ref = "builtin:qubit";
  blocks_cmd->add_option("--projectors", sigma_ref, "projector file or builtin:qubit");
  blocks_cmd->add_option("--out", out_path);
  blocks_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula against a preparation");
  std::string state_ref;
  std::string formula_text;
  std::string semantics_token = "hilbert";
  std::string registry_ref = "builtin:qubit";
  bool counterfactual = false;
  std::vector<std::string> expect_raw;
  eval_cmd->add_option("--state", state_ref, "state file or builtin:psi[m,R]")->required();
  eval_cmd->add_option("--formula", formula_text, "proposition to evaluate")->required();
  eval_cmd->add_option("--semantics", semantics_token, "hilbert, super or mv")
      ->check(CLI::IsMember({"hilbert", "super", "mv"}));
  eval_cmd->add_flag("--counterfactual-joins", counterfactual,
                     "bridge non-commuting operands through the subspace lattice (super only)");
  eval_cmd->add_option("--projectors", registry_ref, "atom bindings: file or builtin:qubit");
  eval_cmd->add_option("--expect", expect_raw,
                       "verdict=V, classification=C or degree=D; failures exit 4");
  eval_cmd->add_option("--out", out_path);
  eval_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* demo_cmd = app.add_subcommand("demo", "scripted, self-checking walkthroughs");
  std::string which_demo;
  demo_cmd->add_option("which", which_demo, "pem-failure, schroedinger or all")
      ->required()
      ->check(CLI::IsMember({"pem-failure", "schroedinger", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  ToleranceConfig tol;
  tol.eps_equal = eps;
  try {
    tol.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid --eps: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      emit(projector_file(builtin_qubit_sigma()), out_path, "json");
      return kExitOk;
    }
    if (lattice_build->parsed()) {
      emit(lattice_report(resolve_lattice(atoms_ref, tol)), out_path, format);
      return kExitOk;
    }
    if (lattice_check->parsed()) {
      const FiniteOrthoLattice lattice = resolve_lattice(atoms_ref, tol);
      if (law.empty()) {
        emit(lattice_report(lattice), out_path, format);
      } else if (law == "orthomodular") {
        emit(law_report(lattice, check_orthomodular(lattice)), out_path, format);
      } else {
        emit(law_report(lattice, check_distributive(lattice)), out_path, format);
      }
      return kExitOk;
    }
    if (heyting_check->parsed()) {
      const FiniteOrthoLattice lattice = resolve_lattice(lattice_ref, tol);
      emit(heyting_report(lattice, heyting_feasible(lattice)), out_path, format);
      return kExitOk;
    }
    if (blocks_cmd->parsed()) {
      const std::vector<Projector> sigma = resolve_sigma(sigma_ref, tol.eps_equal);
      if (sigma.empty()) throw InputError("projector set is empty");
      const BlockFamily family = make_block_family(sigma.front().dim(), sigma, tol);
      const FiniteOrthoLattice united = union_lattice(family);
      emit(blocks_report(family, united, heyting_feasible(united)), out_path, format);
      return kExitOk;
    }
    if (eval_cmd->parsed()) {
      std::vector<Expectation> expectations;
      for (const std::string& raw : expect_raw) {
        try {
          expectations.push_back(parse_expectation(raw));
        } catch (const CLI::ValidationError& e) {
          std::cerr << e.what() << "\n";
          return kExitUsage;
        }
      }
      const StateVector state = resolve_state(state_ref);
      const Preparation prep(state, tol);
      const ProjectorRegistry registry = registry_from(registry_ref, tol.eps_equal);
      const FormulaPtr formula = parse_formula_or_throw(formula_text);
      const SemanticsMode mode = *parse_semantics_mode(semantics_token);
      EvalOptions opts;
      opts.counterfactual_joins = counterfactual;
      opts.tol = tol;
      const EvalResult result = evaluate(prep, *formula, registry, mode, opts);
      const Json report = eval_report(prep, print(*formula), mode, opts, result);
      emit(report, out_path, format);
      if (apply_expectations(report, expectations, tol.eps_equal) != 0) return kExitExpect;
      return kExitOk;
    }
    if (demo_cmd->parsed()) return run_demo(which_demo);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
