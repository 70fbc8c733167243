#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "qlat/semantics.hpp"

#include "helpers.hpp"

using namespace qlat;

namespace {

Preparation prep(int a, int b) { return Preparation(eigenstate(a, b)); }

FormulaPtr parsed(std::string_view text) {
  ParseResult result = parse(text);
  REQUIRE(std::holds_alternative<FormulaPtr>(result));
  return std::get<FormulaPtr>(result);
}

EvalResult run(const Preparation& p, std::string_view text, SemanticsMode mode,
               const EvalOptions& opts = {}) {
  return evaluate(p, *parsed(text), ProjectorRegistry::builtin_qubit(), mode, opts);
}

std::string spin_atom(int a, int b) {
  return "P[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

}  // namespace

TEST_CASE("bivalent verdicts for single atoms depend on the state-axis match") {
  const ToleranceConfig tol;
  // Same axis: eigenstates answer definitely.
  for (int b = 1; b <= 3; ++b) {
    for (int a = 1; a <= 2; ++a) {
      const Preparation p = prep(a, b);
      CHECK(eval_atom_hilbert(p, Subspace(build_qubit_projector(a, b)), tol).kind ==
            TruthKind::truth);
      CHECK(eval_atom_hilbert(p, Subspace(build_qubit_projector(partner_index(a), b)), tol).kind ==
            TruthKind::falsity);
    }
  }
  // Trivial subspaces answer definitely for every state.
  const Preparation up = prep(1, 3);
  CHECK(eval_atom_hilbert(up, Subspace::full(2), tol).kind == TruthKind::truth);
  CHECK(eval_atom_hilbert(up, Subspace::zero(2), tol).kind == TruthKind::falsity);
  // Cross axis: the meet with the support is {0}, so the verdict is falsity.
  CHECK(eval_atom_hilbert(up, Subspace(build_qubit_projector(1, 1)), tol).kind ==
        TruthKind::falsity);
}

TEST_CASE("bivalent mode denies both a cross-axis atom and its negation") {
  // Every (state axis, proposition axis) pair with distinct axes: 3 axes for
  // the state x 2 signs x 2 remaining axes = 24 cases in which the bivalent
  // reading rejects P and !P simultaneously.
  int cases = 0;
  for (int sb = 1; sb <= 3; ++sb) {
    for (int sa = 1; sa <= 2; ++sa) {
      const Preparation p = prep(sa, sb);
      for (int pb = 1; pb <= 3; ++pb) {
        if (pb == sb) continue;
        for (int pa = 1; pa <= 2; ++pa) {
          ++cases;
          const std::string name = spin_atom(pa, pb);
          CHECK(run(p, name, SemanticsMode::hilbert).verdict.kind == TruthKind::falsity);
          CHECK(run(p, "!" + name, SemanticsMode::hilbert).verdict.kind == TruthKind::falsity);
        }
      }
    }
  }
  CHECK(cases == 24);
}

TEST_CASE("bivalent mode still affirms every excluded-middle instance") {
  for (int sb = 1; sb <= 3; ++sb)
    for (int sa = 1; sa <= 2; ++sa)
      for (int pb = 1; pb <= 3; ++pb)
        for (int pa = 1; pa <= 2; ++pa) {
          const std::string name = spin_atom(pa, pb);
          const EvalResult r = run(prep(sa, sb), name + " | !" + name, SemanticsMode::hilbert);
          CHECK(r.verdict.kind == TruthKind::truth);
        }
}

TEST_CASE("supervaluational verdicts for atoms follow commutation with the support") {
  // Same axis: definite truth/falsity, no classification (residue is the atom).
  const EvalResult same = run(prep(1, 3), "P[1,3]", SemanticsMode::supervaluational);
  CHECK(same.verdict.kind == TruthKind::truth);
  CHECK_FALSE(same.verdict.classification.has_value());
  CHECK(run(prep(1, 3), "P[2,3]", SemanticsMode::supervaluational).verdict.kind ==
        TruthKind::falsity);

  // Cross axis: gap, for the atom and for its negation alike.
  int gaps = 0;
  for (int sb = 1; sb <= 3; ++sb)
    for (int sa = 1; sa <= 2; ++sa)
      for (int pb = 1; pb <= 3; ++pb) {
        if (pb == sb) continue;
        for (int pa = 1; pa <= 2; ++pa) {
          const std::string name = spin_atom(pa, pb);
          CHECK(run(prep(sa, sb), name, SemanticsMode::supervaluational).verdict.kind ==
                TruthKind::gap);
          CHECK(run(prep(sa, sb), "!" + name, SemanticsMode::supervaluational).verdict.kind ==
                TruthKind::gap);
          ++gaps;
        }
      }
  CHECK(gaps == 24);
}

TEST_CASE("excluded middle and non-contradiction survive supervaluationally in all 36 cases") {
  for (int sb = 1; sb <= 3; ++sb)
    for (int sa = 1; sa <= 2; ++sa)
      for (int pb = 1; pb <= 3; ++pb)
        for (int pa = 1; pa <= 2; ++pa) {
          const Preparation p = prep(sa, sb);
          const std::string name = spin_atom(pa, pb);

          const EvalResult pem = run(p, name + " | !" + name, SemanticsMode::supervaluational);
          CHECK(pem.verdict.kind == TruthKind::truth);
          REQUIRE(pem.verdict.classification.has_value());
          CHECK(*pem.verdict.classification == SuperClassification::supertrue);

          const EvalResult contra = run(p, name + " & !" + name, SemanticsMode::supervaluational);
          CHECK(contra.verdict.kind == TruthKind::falsity);
          REQUIRE(contra.verdict.classification.has_value());
          CHECK(*contra.verdict.classification == SuperClassification::superfalse);
        }
}

TEST_CASE("complement pairs cancel no matter how deeply they sit") {
  const Preparation p = prep(1, 3);
  // The inner disjunction is a tautology, so the outer meet collapses to the
  // remaining commuting atom.
  const EvalResult r =
      run(p, "P[1,3] & (P[1,1] | !P[1,1])", SemanticsMode::supervaluational);
  CHECK(r.verdict.kind == TruthKind::truth);
  CHECK_FALSE(r.verdict.classification.has_value());

  const EvalResult s =
      run(p, "P[2,3] & (P[2,2] | !P[2,2])", SemanticsMode::supervaluational);
  CHECK(s.verdict.kind == TruthKind::falsity);
}

TEST_CASE("non-commuting composites stay gapped without the counterfactual flag") {
  const Preparation p = prep(1, 3);
  const EvalResult gap = run(p, "P[1,1] & P[1,2]", SemanticsMode::supervaluational);
  CHECK(gap.verdict.kind == TruthKind::gap);

  // With counterfactual joins the op is forced through the subspace lattice:
  // two distinct non-orthogonal rays meet at {0}, so the verdict is falsity.
  EvalOptions opts;
  opts.counterfactual_joins = true;
  const EvalResult forced = run(p, "P[1,1] & P[1,2]", SemanticsMode::supervaluational, opts);
  CHECK(forced.verdict.kind == TruthKind::falsity);

  // Joins of distinct rays span the plane.
  const EvalResult joined = run(p, "P[1,1] | P[1,2]", SemanticsMode::supervaluational, opts);
  CHECK(joined.verdict.kind == TruthKind::truth);

  // The flag leaves single atoms alone: support/atom non-commutation is not
  // an op between operands, so the gap stands.
  const EvalResult atom = run(p, "P[1,1]", SemanticsMode::supervaluational, opts);
  CHECK(atom.verdict.kind == TruthKind::gap);
}

TEST_CASE("supervaluational agrees with bivalent when everything commutes") {
  // Formulas over a single axis commute with each other and with same-axis
  // preparations, so the two modes must coincide.
  const std::vector<std::string> formulas = {
      "P[1,3]",           "!P[1,3]",           "P[1,3] & P[2,3]", "P[1,3] | P[2,3]",
      "!(P[1,3] & P[2,3])", "!P[1,3] | P[2,3]", "P[1,3] & !P[2,3] | P[2,3]",
  };
  for (int sa = 1; sa <= 2; ++sa) {
    const Preparation p = prep(sa, 3);
    for (const std::string& text : formulas) {
      const EvalResult h = run(p, text, SemanticsMode::hilbert);
      const EvalResult s = run(p, text, SemanticsMode::supervaluational);
      CHECK(h.verdict.kind == s.verdict.kind);
    }
  }
}

TEST_CASE("counterfactual joins reproduce the bivalent verdict when the residue commutes") {
  EvalOptions opts;
  opts.counterfactual_joins = true;
  // These fold to {0} or C^2, which commute with every support.
  const std::vector<std::string> trivial = {
      "P[1,1] & P[1,2]", "P[1,1] | P[1,2]", "!(P[1,1] & P[2,2])",
  };
  for (int sb = 1; sb <= 3; ++sb)
    for (int sa = 1; sa <= 2; ++sa) {
      const Preparation p = prep(sa, sb);
      for (const std::string& text : trivial) {
        const EvalResult h = run(p, text, SemanticsMode::hilbert);
        const EvalResult s = run(p, text, SemanticsMode::supervaluational, opts);
        CHECK(h.verdict.kind == s.verdict.kind);
      }
    }

  // This one folds to P[2,3]: the flag bridges the inner ops but not the
  // final state meet, so only z-axis preparations escape the gap.
  const std::string residue = "(P[1,1] | P[1,2]) & P[2,3]";
  CHECK(run(prep(1, 3), residue, SemanticsMode::supervaluational, opts).verdict.kind ==
        TruthKind::falsity);
  CHECK(run(prep(2, 3), residue, SemanticsMode::supervaluational, opts).verdict.kind ==
        TruthKind::truth);
  CHECK(run(prep(1, 1), residue, SemanticsMode::supervaluational, opts).verdict.kind ==
        TruthKind::gap);
  CHECK(run(prep(1, 2), residue, SemanticsMode::supervaluational, opts).verdict.kind ==
        TruthKind::gap);
}

TEST_CASE("many-valued degrees are expectations") {
  const EvalResult cross = run(prep(1, 1), "P[1,3]", SemanticsMode::many_valued);
  REQUIRE(cross.verdict.kind == TruthKind::degree);
  CHECK(*cross.verdict.degree == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(*run(prep(1, 3), "P[1,3]", SemanticsMode::many_valued).verdict.degree ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*run(prep(2, 3), "P[1,3]", SemanticsMode::many_valued).verdict.degree ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Negation sends d to 1 - d.
  CHECK(*run(prep(1, 1), "!P[1,3]", SemanticsMode::many_valued).verdict.degree ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(*run(prep(1, 3), "!P[1,3]", SemanticsMode::many_valued).verdict.degree ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("degrees of an atom and its negation always sum to one") {
  std::mt19937 rng(424217);
  const ProjectorRegistry registry = ProjectorRegistry::builtin_qubit();
  for (int trial = 0; trial < 100; ++trial) {
    const Preparation p{testing::random_unit_state(rng, 2)};
    for (int b = 1; b <= 3; ++b)
      for (int a = 1; a <= 2; ++a) {
        const std::string name = spin_atom(a, b);
        const double d = *run(p, name, SemanticsMode::many_valued).verdict.degree;
        const double nd = *run(p, "!" + name, SemanticsMode::many_valued).verdict.degree;
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        CHECK(d + nd == doctest::Approx(1.0).epsilon(1e-10));
        // Partner projectors carry the complementary degree.
        const double pd =
            *run(p, spin_atom(partner_index(a), b), SemanticsMode::many_valued).verdict.degree;
        CHECK(pd == doctest::Approx(nd).epsilon(1e-10));
      }
  }
}

TEST_CASE("many-valued mode rejects composite formulas") {
  const Preparation p = prep(1, 3);
  CHECK_THROWS_AS(run(p, "P[1,3] & P[1,1]", SemanticsMode::many_valued),
                  UnsupportedConnectiveError);
  CHECK_THROWS_AS(run(p, "P[1,3] | P[1,1]", SemanticsMode::many_valued),
                  UnsupportedConnectiveError);
  CHECK_THROWS_AS(run(p, "!!P[1,3]", SemanticsMode::many_valued), UnsupportedConnectiveError);
}

TEST_CASE("degree extremes agree with the bivalent verdict") {
  for (int b = 1; b <= 3; ++b)
    for (int a = 1; a <= 2; ++a) {
      const Preparation p = prep(a, b);
      for (int pa = 1; pa <= 2; ++pa) {
        const std::string name = spin_atom(pa, b);
        const double d = *run(p, name, SemanticsMode::many_valued).verdict.degree;
        const TruthKind k = run(p, name, SemanticsMode::hilbert).verdict.kind;
        if (d == doctest::Approx(1.0).epsilon(1e-12)) CHECK(k == TruthKind::truth);
        if (d == doctest::Approx(0.0).epsilon(1e-12)) CHECK(k == TruthKind::falsity);
      }
    }
}

TEST_CASE("unbound atoms raise a dedicated error in every mode") {
  const Preparation p = prep(1, 3);
  for (const SemanticsMode mode : {SemanticsMode::hilbert, SemanticsMode::supervaluational,
                                   SemanticsMode::many_valued}) {
    CHECK_THROWS_AS(run(p, "mystery", mode), UnboundAtomError);
  }
  try {
    run(p, "P[1,3] & mystery", SemanticsMode::hilbert);
    FAIL("expected UnboundAtomError");
  } catch (const UnboundAtomError& e) {
    CHECK(e.atom_name == "mystery");
  }
}

TEST_CASE("registry lookups and naming") {
  const ProjectorRegistry registry = ProjectorRegistry::builtin_qubit();
  CHECK(registry.size() == 6);
  CHECK(registry.dim() == 2);
  REQUIRE(registry.find("P[1,3]") != nullptr);
  CHECK(registry.find("P[9,9]") == nullptr);
  CHECK(registry.name_of(Subspace(build_qubit_projector(2, 2))) == "P[2,2]");
  CHECK_FALSE(registry.name_of(Subspace::full(2)).has_value());

  ProjectorRegistry custom;
  custom.add("p", Subspace(build_qubit_projector(1, 3)));
  CHECK_THROWS_AS(custom.add("p", Subspace(build_qubit_projector(1, 1))),
                  std::invalid_argument);
  CHECK_THROWS_AS(custom.add("", Subspace(build_qubit_projector(1, 1))),
                  std::invalid_argument);
  CHECK_THROWS_AS(custom.add("q", Subspace::full(3)), std::invalid_argument);
}

TEST_CASE("semantics mode tokens round-trip") {
  CHECK(parse_semantics_mode("hilbert") == SemanticsMode::hilbert);
  CHECK(parse_semantics_mode("super") == SemanticsMode::supervaluational);
  CHECK(parse_semantics_mode("mv") == SemanticsMode::many_valued);
  CHECK_FALSE(parse_semantics_mode("classical").has_value());
  CHECK(to_string(SemanticsMode::hilbert) == "hilbert");
  CHECK(to_string(SemanticsMode::supervaluational) == "super");
  CHECK(to_string(SemanticsMode::many_valued) == "mv");
}

TEST_CASE("verdict strings") {
  CHECK(to_string(TruthKind::truth) == "True");
  CHECK(to_string(TruthKind::falsity) == "False");
  CHECK(to_string(TruthKind::gap) == "Gap");
  CHECK(to_string(TruthKind::degree) == "Degree");
  CHECK(to_string(SuperClassification::supertrue) == "SuperTrue");
  CHECK(to_string(SuperClassification::superfalse) == "SuperFalse");
}

TEST_CASE("traces narrate the simplification steps") {
  const EvalResult r = run(prep(1, 3), "P[1,1] | !P[1,1]", SemanticsMode::supervaluational);
  REQUIRE_FALSE(r.trace.empty());
  bool mentions_rule = false;
  for (const std::string& line : r.trace)
    if (line.find("complement pair") != std::string::npos) mentions_rule = true;
  CHECK(mentions_rule);

  EvalOptions silent;
  silent.record_trace = false;
  const EvalResult q =
      run(prep(1, 3), "P[1,1] | !P[1,1]", SemanticsMode::supervaluational, silent);
  CHECK(q.trace.empty());
  CHECK(q.verdict.kind == r.verdict.kind);
}

TEST_CASE("superposition states get definite answers only on their own ray") {
  // A state along (1, 1)/sqrt(2) is the x-up eigenstate: definite for the
  // x-axis, gapped for z and y in the supervaluational reading.
  const Preparation p = prep(1, 1);
  CHECK(run(p, "P[1,1]", SemanticsMode::supervaluational).verdict.kind == TruthKind::truth);
  CHECK(run(p, "P[2,1]", SemanticsMode::supervaluational).verdict.kind == TruthKind::falsity);
  CHECK(run(p, "P[1,3]", SemanticsMode::supervaluational).verdict.kind == TruthKind::gap);
  CHECK(run(p, "P[1,2]", SemanticsMode::supervaluational).verdict.kind == TruthKind::gap);
  // But excluded middle still holds along every axis.
  CHECK(run(p, "P[1,3] | !P[1,3]", SemanticsMode::supervaluational).verdict.kind ==
        TruthKind::truth);
}
