#include <string>

#include "cli.hpp"
#include "efa/order.hpp"
#include "efa/properties.hpp"
#include "efa/theorems.hpp"

namespace efa::cli {

namespace {

Json labels(const Model& model, const std::vector<Element>& elements) {
  Json out = Json::array();
  for (auto e : elements) out.push_back(model.label(e));
  return out;
}

Json optional_label(const Model& model, const std::optional<Element>& e) {
  return e ? Json(model.label(*e)) : Json(nullptr);
}

Json multiset(const Model& model, const std::optional<Multiset>& m) {
  if (!m) return nullptr;
  return labels(model, m->expanded());
}

Json witnesses(const Model& model, const PropertyProfile& p) {
  const auto& w = p.witnesses;
  Json out;
  out["self_orthogonal"] = optional_label(model, w.self_orthogonal);
  if (w.non_principal) {
    out["non_principal"] = {{"element", model.label(w.non_principal->element)},
                            {"b", model.label(w.non_principal->b)},
                            {"c", model.label(w.non_principal->c)}};
  } else {
    out["non_principal"] = nullptr;
  }
  if (w.non_lattice) {
    out["non_lattice"] = {{"a", model.label(w.non_lattice->a)},
                          {"b", model.label(w.non_lattice->b)},
                          {"missing", w.non_lattice->missing_join ? "join" : "meet"},
                          {"minimal_bounds", labels(model, w.non_lattice->minimal_bounds)}};
  } else {
    out["non_lattice"] = nullptr;
  }
  out["non_atomistic"] = optional_label(model, w.non_atomistic);
  out["non_orthoatomistic"] = optional_label(model, w.non_orthoatomistic);
  out["non_disjunctive"] =
      w.non_disjunctive ? labels(model, {w.non_disjunctive->first, w.non_disjunctive->second}) : Json(nullptr);
  out["non_orthocomplete"] = multiset(model, w.non_orthocomplete);

  Json indices;
  for (Element a = 1; a < model.size(); ++a) {
    const auto& idx = p.isotropic_indices[a];
    indices[model.label(a)] = idx.infinite ? Json("infinite") : Json(idx.value);
  }
  out["isotropic_indices"] = std::move(indices);

  Json decompositions;
  for (Element a = 1; a < model.size(); ++a)
    decompositions[model.label(a)] = multiset(model, w.atom_decompositions[a]);
  out["atom_decompositions"] = std::move(decompositions);
  return out;
}

}  // namespace

Json model_report(const std::string& name, const FiniteEffectAlgebra& algebra) {
  Json report;
  report["model"] = {{"name", name}, {"size", algebra.size()}};
  const auto validation = validate(algebra);
  report["valid"] = validation.valid();
  Json violations = Json::array();
  for (const auto& v : validation.violations) {
    Json w = Json::array();
    for (auto e : v.witness) w.push_back(algebra.label(e));
    violations.push_back({{"axiom", std::string(to_string(v.axiom))}, {"witness", w}, {"message", v.message}});
  }
  report["violations"] = std::move(violations);
  if (!validation.valid()) {
    report["profile"] = Json::object();
    report["witnesses"] = Json::object();
    report["theorems"] = Json::array();
    return report;
  }

  const Model model(algebra);
  const auto p = profile(model);
  Json flags;
  for (const auto& key : property_names()) flags[key] = *p.flag(key);
  flags["atoms"] = labels(model, p.atoms);
  report["profile"] = std::move(flags);
  report["witnesses"] = witnesses(model, p);

  Json theorems = Json::array();
  for (const auto& c : run_all(model).checks) {
    theorems.push_back({{"id", c.id},
                        {"status", std::string(to_string(c.status))},
                        {"witness", labels(model, c.witness)},
                        {"detail", c.detail}});
  }
  report["theorems"] = std::move(theorems);
  return report;
}

Json witness_report(const std::string& name, Json witness) {
  Json report;
  report["model"] = {{"name", name}, {"size", nullptr}};
  report["valid"] = true;
  report["violations"] = Json::array();
  report["profile"] = Json::object();
  report["witnesses"] = {{"witness", std::move(witness)}};
  report["theorems"] = Json::array();
  return report;
}

}  // namespace efa::cli
