#include "qlat/serialize.hpp"

#include <cmath>

namespace qlat {
namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(std::string("expected [re, im] pair in ") + where);
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw InputError(std::string("non-finite entry in ") + where);
  }
  return Complex{re, im};
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t read_dim(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    throw InputError("document needs an unsigned \"dim\" field");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  if (dim < 1 || dim > kMaxDim) {
    throw InputError("\"dim\" must lie in [1, " + std::to_string(kMaxDim) + "]");
  }
  return dim;
}

Json element_entry(const FiniteOrthoLattice& l, std::size_t i) {
  Json e;
  e["index"] = i;
  e["name"] = l.element_name(i);
  e["rank"] = l.element(i).rank();
  return e;
}

Json witness_json(const FiniteOrthoLattice& l, const LawVerdict& v) {
  Json w;
  w["indices"] = v.witness;
  Json names = Json::array();
  for (std::size_t i : v.witness) names.push_back(l.element_name(i));
  w["names"] = std::move(names);
  w["detail"] = v.detail;
  return w;
}

Json verdict_json(const FiniteOrthoLattice& l, const LawVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (!v.holds) j["witness"] = witness_json(l, v);
  return j;
}

void render_lines(const Json& value, const std::string& prefix, std::string& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      if (child.is_object() || child.is_array()) {
        out += prefix + key + ":\n";
        render_lines(child, prefix + "  ", out);
      } else {
        out += prefix + key + ": " + child.dump() + "\n";
      }
    }
    return;
  }
  if (value.is_array()) {
    for (const auto& child : value) {
      if (child.is_object() || child.is_array()) {
        out += prefix + "-\n";
        render_lines(child, prefix + "  ", out);
      } else {
        out += prefix + "- " + child.dump() + "\n";
      }
    }
    return;
  }
  out += prefix + value.dump() + "\n";
}

}  // namespace

std::vector<Projector> load_projector_file(const Json& doc, double eps) {
  const std::size_t dim = read_dim(doc);
  if (!doc.contains("atoms") || !doc["atoms"].is_array() || doc["atoms"].empty()) {
    throw InputError("projector file needs a non-empty \"atoms\" array");
  }

  std::vector<Projector> atoms;
  std::vector<std::string> names;
  for (const auto& entry : doc["atoms"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string()) {
      throw InputError("every atom needs a string \"name\"");
    }
    const auto name = entry["name"].get<std::string>();
    if (name.empty()) throw InputError("atom names must be non-empty");
    for (const std::string& seen : names) {
      if (seen == name) throw InputError("duplicate atom name '" + name + "'");
    }
    names.push_back(name);

    if (!entry.contains("matrix") || !entry["matrix"].is_array() ||
        entry["matrix"].size() != dim) {
      throw InputError("atom '" + name + "' needs a " + std::to_string(dim) + "x" +
                       std::to_string(dim) + " \"matrix\"");
    }
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const auto& row = entry["matrix"][i];
      if (!row.is_array() || row.size() != dim) {
        throw InputError("atom '" + name + "' has a malformed matrix row");
      }
      for (std::size_t j = 0; j < dim; ++j) {
        m(i, j) = complex_from(row[j], "matrix entry");
      }
    }
    try {
      atoms.emplace_back(std::move(m), name, eps);
    } catch (const std::invalid_argument& e) {
      throw InputError("atom '" + name + "': " + e.what());
    }
  }
  return atoms;
}

Json projector_file(const std::vector<Projector>& atoms) {
  if (atoms.empty()) throw std::invalid_argument("cannot serialize an empty atom list");
  Json doc;
  doc["dim"] = atoms.front().dim();
  Json entries = Json::array();
  for (const Projector& p : atoms) {
    Json e;
    e["name"] = p.name() ? *p.name() : "";
    e["matrix"] = matrix_json(p.matrix());
    entries.push_back(std::move(e));
  }
  doc["atoms"] = std::move(entries);
  return doc;
}

StateVector load_state_file(const Json& doc) {
  const std::size_t dim = read_dim(doc);
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array() ||
      doc["amplitudes"].size() != dim) {
    throw InputError("state file needs an \"amplitudes\" array of length dim");
  }
  Amplitudes amp{};
  for (std::size_t i = 0; i < dim; ++i) amp[i] = complex_from(doc["amplitudes"][i], "amplitudes");

  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InputError("\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  try {
    return StateVector(dim, amp, std::move(label));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid state: ") + e.what());
  }
}

Json lattice_report(const FiniteOrthoLattice& l) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "lattice";
  doc["dim"] = l.dim();
  Json elements = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) elements.push_back(element_entry(l, i));
  doc["elements"] = std::move(elements);

  Json pairs = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l.leq(i, j)) pairs.push_back(Json::array({i, j}));
    }
  }
  doc["leq"] = std::move(pairs);

  Json complements = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) complements.push_back(l.complement_of(i));
  doc["complement"] = std::move(complements);

  Json laws;
  laws["orthomodular"] = verdict_json(l, check_orthomodular(l));
  laws["distributive"] = verdict_json(l, check_distributive(l));
  doc["laws"] = std::move(laws);
  return doc;
}

Json law_report(const FiniteOrthoLattice& l, const LawVerdict& verdict) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "lattice-check";
  doc["dim"] = l.dim();
  doc["law"] = verdict.law;
  doc["holds"] = verdict.holds;
  if (!verdict.holds) doc["witness"] = witness_json(l, verdict);
  Json elements = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) elements.push_back(element_entry(l, i));
  doc["elements"] = std::move(elements);
  return doc;
}

Json heyting_report(const FiniteOrthoLattice& l, const HeytingReport& report) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "heyting";
  doc["dim"] = l.dim();
  doc["feasible"] = report.feasible;
  doc["verdict"] = report.feasible ? "Heyting algebra" : "not a Heyting algebra";
  doc["distributive"] = verdict_json(l, report.distributive);

  Json entries = Json::array();
  for (const PseudoComplementReport& pc : report.per_element) {
    Json e;
    e["element"] = element_entry(l, pc.element);
    e["disjoint_set"] = pc.disjoint_set;
    if (pc.supremum) {
      e["supremum"] = element_entry(l, *pc.supremum);
    } else {
      e["supremum"] = nullptr;
    }
    e["exists"] = pc.exists;
    if (pc.pseudo_complement) {
      e["pseudo_complement"] = element_entry(l, *pc.pseudo_complement);
    } else {
      e["pseudo_complement"] = nullptr;
    }
    entries.push_back(std::move(e));
  }
  doc["pseudo_complements"] = std::move(entries);
  return doc;
}

Json blocks_report(const BlockFamily& family, const FiniteOrthoLattice& union_lat,
                   const HeytingReport& union_heyting) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "blocks";
  doc["dim"] = family.dim;

  Json sigma = Json::array();
  for (const Projector& p : family.sigma) sigma.push_back(p.name() ? *p.name() : "");
  doc["sigma"] = std::move(sigma);

  Json blocks = Json::array();
  for (const BooleanBlock& block : family.blocks) {
    Json b;
    b["generator"] = block.generator.name() ? *block.generator.name() : "";
    Json names = Json::array();
    for (std::size_t i = 0; i < block.lattice.size(); ++i) {
      names.push_back(block.lattice.element_name(i));
    }
    b["elements"] = std::move(names);
    blocks.push_back(std::move(b));
  }
  doc["blocks"] = std::move(blocks);

  // Commutation adjacency over the generators, i < j pairs only.
  Json graph;
  Json atom_names = Json::array();
  for (const Projector& p : family.sigma) atom_names.push_back(p.name() ? *p.name() : "");
  graph["atoms"] = std::move(atom_names);
  Json edges = Json::array();
  for (std::size_t i = 0; i < family.sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < family.sigma.size(); ++j) {
      if (commutes(Subspace(family.sigma[i]), Subspace(family.sigma[j]), family.tol.eps_equal)) {
        edges.push_back(Json::array({i, j}));
      }
    }
  }
  graph["edges"] = std::move(edges);
  doc["commutation_graph"] = std::move(graph);

  Json summary;
  summary["element_count"] = union_lat.size();
  Json names = Json::array();
  for (std::size_t i = 0; i < union_lat.size(); ++i) names.push_back(union_lat.element_name(i));
  summary["elements"] = std::move(names);
  summary["distributive"] = union_heyting.distributive.holds;
  summary["heyting_feasible"] = union_heyting.feasible;
  doc["union_lattice"] = std::move(summary);
  return doc;
}

Json eval_report(const Preparation& prep, const std::string& formula_text, SemanticsMode mode,
                 const EvalOptions& opts, const EvalResult& result) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = "eval";
  doc["dim"] = prep.dim();
  doc["state"] = prep.state().label() ? *prep.state().label() : "custom";
  doc["formula"] = formula_text;
  doc["semantics"] = to_string(mode);
  if (mode == SemanticsMode::supervaluational) {
    doc["counterfactual_joins"] = opts.counterfactual_joins;
  }
  doc["verdict"] = to_string(result.verdict.kind);
  if (result.verdict.classification) {
    doc["classification"] = to_string(*result.verdict.classification);
  }
  if (result.verdict.degree) doc["degree"] = *result.verdict.degree;
  doc["trace"] = result.trace;
  return doc;
}

std::string render_text(const Json& report) {
  std::string out;
  render_lines(report, "", out);
  return out;
}

}  // namespace qlat
