#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qlat/blocks.hpp"
#include "qlat/heyting.hpp"
#include "qlat/lattice.hpp"
#include "qlat/semantics.hpp"

namespace qlat {

using Json = nlohmann::ordered_json;

/// Schema tag stamped on every report this tool emits.
inline constexpr const char* kReportSchema = "qlat-report/1";

/// Raised for malformed or out-of-contract input files.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Projector file: {"dim": n, "atoms": [{"name": str, "matrix": [[[re,im],...],...]}]}.
/// Complex entries are [re, im] pairs throughout.
std::vector<Projector> load_projector_file(const Json& doc, double eps = 1e-9);
Json projector_file(const std::vector<Projector>& atoms);

/// State file: {"dim": n, "amplitudes": [[re,im],...], "label": str?}.
StateVector load_state_file(const Json& doc);

Json lattice_report(const FiniteOrthoLattice& lattice);
Json law_report(const FiniteOrthoLattice& lattice, const LawVerdict& verdict);
Json heyting_report(const FiniteOrthoLattice& lattice, const HeytingReport& report);
Json blocks_report(const BlockFamily& family, const FiniteOrthoLattice& union_lat,
                   const HeytingReport& union_heyting);
Json eval_report(const Preparation& prep, const std::string& formula_text, SemanticsMode mode,
                 const EvalOptions& opts, const EvalResult& result);

std::string render_text(const Json& report);

}  // namespace qlat
