#include "efa/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "efa/efa_file.hpp"
#include "efa/properties.hpp"

namespace efa {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
  }
  return "?";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "cancellation",     "sup_le_oplus", "omp_iff_principal_iff_join", "orthoalgebra_iff_index1",
      "omp_implies_orthoalgebra", "prop_2_6", "prop_2_8", "prop_3_3", "thm_3_2", "thm_3_7_finite",
      "orthoatomistic_omp_implies_atomistic", "self_orthogonal_zero"};
  return ids;
}

bool TheoremReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::fail; });
}

const CheckResult& TheoremReport::at(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw std::out_of_range("no theorem check '" + std::string(id) + "'");
}

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

CheckResult implication(std::string id, bool hypothesis, bool conclusion, std::string detail) {
  CheckResult r{std::move(id), CheckStatus::pass, {}, std::move(detail)};
  if (!hypothesis)
    r.status = CheckStatus::vacuous;
  else if (!conclusion)
    r.status = CheckStatus::fail;
  return r;
}

CheckResult cancellation(const Model& model) {
  CheckResult r{"cancellation", CheckStatus::pass, {}, "a+b <= a+c implies b <= c"};
  for (Element a = 0; a < model.size(); ++a) {
    for (auto [b, ab] : model.sums_with(a)) {
      for (auto [c, ac] : model.sums_with(a)) {
        if (model.le(ab, ac) && !model.le(b, c)) {
          r.status = CheckStatus::fail;
          r.witness = {a, b, c};
          return r;
        }
      }
    }
  }
  return r;
}

CheckResult sup_le_oplus(const Model& model) {
  CheckResult r{"sup_le_oplus", CheckStatus::vacuous, {}, "a v b <= a+b for orthogonal a, b with a join"};
  for (Element a = 0; a < model.size(); ++a) {
    for (auto [b, s] : model.sums_with(a)) {
      auto j = join(model, a, b);
      if (!j) continue;
      if (r.status == CheckStatus::vacuous) r.status = CheckStatus::pass;
      if (!model.le(*j, s)) {
        r.status = CheckStatus::fail;
        r.witness = {a, b};
        return r;
      }
    }
  }
  return r;
}

CheckResult self_orthogonal_zero(const Model& model, bool orthoalgebra) {
  CheckResult r{"self_orthogonal_zero", CheckStatus::pass, {}, "in an orthoalgebra a <= a' only for a = 0"};
  if (!orthoalgebra) {
    r.status = CheckStatus::vacuous;
    return r;
  }
  for (Element a = 1; a < model.size(); ++a) {
    if (model.le(a, model.supplement(a))) {
      r.status = CheckStatus::fail;
      r.witness = {a};
      return r;
    }
  }
  return r;
}

}  // namespace

TheoremReport run_all(const Model& model) {
  const auto cls = classify(model);
  const bool archimedean = is_archimedean(model);
  const auto oc = check_orthocompleteness(model);
  const bool atomic = is_atomic(model);
  const auto atomistic = is_atomistic(model);
  const auto ortho = is_orthoatomistic(model);
  const auto disjunctive = is_disjunctive(model);

  bool index_one = true;
  std::optional<Element> index_witness;
  for (Element a = 1; a < model.size(); ++a) {
    auto idx = isotropic_index(model, a);
    if (idx.infinite || idx.value != 1) {
      index_one = false;
      index_witness = a;
      break;
    }
  }

  TheoremReport report;
  auto& out = report.checks;
  out.push_back(cancellation(model));
  out.push_back(sup_le_oplus(model));

  {
    CheckResult r{"omp_iff_principal_iff_join", CheckStatus::pass, {},
                  "principal=" + flag(cls.omp) + " join=" + flag(cls.omp_via_joins)};
    if (cls.omp != cls.omp_via_joins) {
      r.status = CheckStatus::fail;
      if (cls.non_principal) r.witness = {cls.non_principal->element, cls.non_principal->b, cls.non_principal->c};
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r{"orthoalgebra_iff_index1", CheckStatus::pass, {},
                  "orthoalgebra=" + flag(cls.orthoalgebra) + " all_index_1=" + flag(index_one)};
    if (cls.orthoalgebra != index_one) {
      r.status = CheckStatus::fail;
      if (index_witness) r.witness = {*index_witness};
    }
    out.push_back(std::move(r));
  }
  out.push_back(implication("omp_implies_orthoalgebra", cls.omp, cls.orthoalgebra,
                            "omp=" + flag(cls.omp) + " orthoalgebra=" + flag(cls.orthoalgebra)));
  out.push_back(implication("prop_2_6", cls.orthoalgebra, archimedean,
                            "orthoalgebra=" + flag(cls.orthoalgebra) + " archimedean=" + flag(archimedean)));
  out.push_back(implication("prop_2_8", oc.orthocomplete, archimedean,
                            "orthocomplete=" + flag(oc.orthocomplete) + " archimedean=" + flag(archimedean)));
  out.push_back(implication("prop_3_3", oc.orthocomplete || cls.lattice, oc.weakly_orthocomplete,
                            "orthocomplete=" + flag(oc.orthocomplete) + " lattice=" + flag(cls.lattice) +
                                " weakly_orthocomplete=" + flag(oc.weakly_orthocomplete)));
  {
    const bool rhs = atomic && disjunctive.holds;
    CheckResult r{"thm_3_2", CheckStatus::pass, {},
                  "atomistic=" + flag(atomistic.holds) + " atomic_and_disjunctive=" + flag(rhs)};
    if (atomistic.holds != rhs) {
      r.status = CheckStatus::fail;
      if (atomistic.failure) r.witness.push_back(*atomistic.failure);
      if (disjunctive.counterexample) {
        r.witness.push_back(disjunctive.counterexample->first);
        r.witness.push_back(disjunctive.counterexample->second);
      }
    }
    out.push_back(std::move(r));
  }
  {
    auto r = implication("thm_3_7_finite", oc.weakly_orthocomplete && archimedean && atomic, ortho.holds,
                         "weakly_orthocomplete=" + flag(oc.weakly_orthocomplete) + " archimedean=" +
                             flag(archimedean) + " atomic=" + flag(atomic) + " orthoatomistic=" + flag(ortho.holds));
    if (r.status == CheckStatus::fail && ortho.failure) r.witness = {*ortho.failure};
    out.push_back(std::move(r));
  }
  {
    auto r = implication("orthoatomistic_omp_implies_atomistic", cls.omp && ortho.holds, atomistic.holds,
                         "omp=" + flag(cls.omp) + " orthoatomistic=" + flag(ortho.holds) +
                             " atomistic=" + flag(atomistic.holds));
    if (r.status == CheckStatus::fail && atomistic.failure) r.witness = {*atomistic.failure};
    out.push_back(std::move(r));
  }
  out.push_back(self_orthogonal_zero(model, cls.orthoalgebra));
  return report;
}

ExhaustiveSummary run_exhaustive(std::size_t n, const EnumerationOptions& options) {
  ExhaustiveSummary summary;
  summary.max_size = n;
  for (const auto& id : theorem_ids()) summary.tally[id] = {0, 0, 0};

  for (std::size_t k = 2; k <= n; ++k) {
    auto batch = enumerate_up_to_iso(k, options);
    summary.counts.emplace_back(k, batch.models.size());
    summary.duplicates += batch.duplicates;
    for (const auto& table : batch.models) {
      ++summary.models;
      auto report = run_all(Model(table));
      std::vector<std::string> failed;
      for (const auto& c : report.checks) {
        ++summary.tally[c.id][static_cast<std::size_t>(c.status)];
        if (c.status == CheckStatus::fail) failed.push_back(c.id);
      }
      if (!failed.empty()) summary.failures.emplace_back(to_efa(table), std::move(failed));
    }
  }
  return summary;
}

}  // namespace efa
