#include "efa/properties.hpp"

#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace efa {

bool is_principal(const Model& model, Element a) {
  const auto& below = model.order().down[a];
  for (auto b = below.find_first(); b != ElementSet::npos; b = below.find_next(b))
    for (auto [c, s] : model.sums_with(static_cast<Element>(b)))
      if (below[c] && !model.le(s, a)) return false;
  return true;
}

std::optional<PrincipalFailure> find_non_principal(const Model& model) {
  for (Element a = 0; a < model.size(); ++a) {
    const auto& below = model.order().down[a];
    for (auto b = below.find_first(); b != ElementSet::npos; b = below.find_next(b))
      for (auto [c, s] : model.sums_with(static_cast<Element>(b)))
        if (below[c] && !model.le(s, a)) return PrincipalFailure{a, static_cast<Element>(b), c};
  }
  return std::nullopt;
}

std::optional<LatticeFailure> find_lattice_failure(const Model& model) {
  const auto& ord = model.order();
  for (Element a = 0; a < model.size(); ++a) {
    for (Element b = a + 1; b < model.size(); ++b) {
      auto ub = ord.up[a] & ord.up[b];
      if (!least_element(model, ub)) return LatticeFailure{a, b, true, members(minimal_elements(model, ub))};
      auto lb = ord.down[a] & ord.down[b];
      if (!greatest_element(model, lb)) return LatticeFailure{a, b, false, members(maximal_elements(model, lb))};
    }
  }
  return std::nullopt;
}

Classification classify(const Model& model) {
  Classification out;
  for (Element a = 1; a < model.size() && !out.self_orthogonal; ++a)
    if (model.sum(a, a)) out.self_orthogonal = a;
  out.orthoalgebra = !out.self_orthogonal;

  out.non_principal = find_non_principal(model);
  out.omp = !out.non_principal;

  out.omp_via_joins = true;
  for (Element a = 0; a < model.size() && out.omp_via_joins; ++a) {
    for (auto [b, s] : model.sums_with(a)) {
      if (b < a) continue;
      auto j = join(model, a, b);
      if (!j || *j != s) {
        out.omp_via_joins = false;
        break;
      }
    }
  }

  out.non_lattice = find_lattice_failure(model);
  out.lattice = !out.non_lattice;
  out.oml = out.omp && out.lattice;
  return out;
}

IsotropicIndex isotropic_index(const Model& model, Element a) {
  if (a == kZero) return IsotropicIndex::infinity();
  std::size_t k = 1;
  Element acc = a;
  while (auto next = model.sum(acc, a)) {
    acc = *next;
    if (++k > model.size())
      throw std::logic_error("isotropic index exceeds the carrier size: multiples are not increasing");
  }
  return {false, k};
}

bool is_archimedean(const Model& model) {
  for (Element a = 1; a < model.size(); ++a)
    if (isotropic_index(model, a).infinite) return false;
  return true;
}

ElementSet atom_set(const Model& model) {
  ElementSet out(model.size());
  for (Element a = 1; a < model.size(); ++a)
    if (model.order().down[a].count() == 2) out.set(a);
  return out;
}

std::vector<Element> atoms(const Model& model) { return members(atom_set(model)); }

std::vector<Element> atoms_below(const Model& model, Element a) {
  return members(atom_set(model) & model.order().down[a]);
}

bool is_atomic(const Model& model) {
  const auto at = atom_set(model);
  for (Element a = 1; a < model.size(); ++a)
    if (!model.order().down[a].intersects(at)) return false;
  return true;
}

AtomisticResult is_atomistic(const Model& model) {
  const auto at = atom_set(model);
  for (Element a = 1; a < model.size(); ++a) {
    auto sup = least_element(model, upper_bound_set(model, at & model.order().down[a]));
    if (!sup || *sup != a) return {false, a};
  }
  return {true, std::nullopt};
}

OrthoatomisticResult is_orthoatomistic(const Model& model) {
  const auto at = atoms(model);
  const auto n = model.size();
  // Closure of {0} under x -> x + atom, with the step that first reached each element.
  std::vector<std::optional<std::pair<Element, Element>>> parent(n);
  std::vector<bool> reached(n, false);
  reached[kZero] = true;
  std::deque<Element> queue{kZero};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element t : at) {
      auto y = model.sum(x, t);
      if (!y || reached[*y]) continue;
      reached[*y] = true;
      parent[*y] = std::pair{x, t};
      queue.push_back(*y);
    }
  }

  OrthoatomisticResult out;
  out.decompositions.resize(n);
  for (Element a = 0; a < n; ++a) {
    if (!reached[a]) {
      if (!out.failure) out.failure = a;
      continue;
    }
    Multiset m;
    for (Element x = a; parent[x]; x = parent[x]->first) m.add(parent[x]->second);
    if (oplus_multiset(model, m) != a) throw std::logic_error("atom decomposition does not sum back");
    out.decompositions[a] = std::move(m);
  }
  out.holds = !out.failure;
  return out;
}

bool is_orthoatomistic_distinct(const Model& model) {
  const auto at = atoms(model);
  const auto n = model.size();
  const auto k = at.size();
  // State (sum, next atom index): atoms are used in increasing order, at most once.
  std::vector<bool> seen(n * (k + 1), false);
  std::vector<bool> reached(n, false);
  std::vector<std::pair<Element, std::size_t>> stack{{kZero, 0}};
  seen[0] = true;
  while (!stack.empty()) {
    auto [s, i] = stack.back();
    stack.pop_back();
    reached[s] = true;
    for (std::size_t j = i; j < k; ++j) {
      auto t = model.sum(s, at[j]);
      if (!t) continue;
      auto id = *t * (k + 1) + (j + 1);
      if (seen[id]) continue;
      seen[id] = true;
      stack.emplace_back(*t, j + 1);
    }
  }
  for (Element a = 1; a < n; ++a)
    if (!reached[a]) return false;
  return true;
}

DisjunctiveResult is_disjunctive(const Model& model) {
  const auto n = model.size();
  const auto& ord = model.order();
  auto only_zero = make_set(n, std::vector<Element>{kZero});
  std::vector<ElementSet> disjoint_from(n, ElementSet(n));
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c)
      if ((ord.down[c] & ord.down[b]) == only_zero) disjoint_from[b].set(c);

  for (Element a = 0; a < n; ++a) {
    auto nonzero_below = ord.down[a];
    nonzero_below.reset(kZero);
    for (Element b = 0; b < n; ++b) {
      if (model.le(a, b)) continue;
      if (!nonzero_below.intersects(disjoint_from[b])) return {false, std::pair{a, b}};
    }
  }
  return {true, std::nullopt};
}

OrthocompletenessResult check_orthocompleteness(const Model& model) {
  const auto n = model.size();
  OrthocompletenessResult out;
  out.orthocomplete = true;
  out.weakly_orthocomplete = true;

  std::vector<Element> current;
  auto to_multiset = [&] {
    Multiset m;
    for (Element e : current) m.add(e);
    return m;
  };

  // A subtree depends only on the partial-sum set and the next admissible
  // element, so each such state is examined once.
  std::set<std::pair<ElementSet, Element>> seen;

  std::function<void(const ElementSet&, const ElementSet&, Element, Element)> visit =
      [&](const ElementSet& partial_sums, const ElementSet& bounds, Element total, Element first) {
        if (!seen.emplace(partial_sums, first).second) return;
        ++out.systems_checked;
        if (auto sup = least_element(model, bounds)) {
          if (*sup != total) throw std::logic_error("supremum of partial sums differs from the total sum");
        } else {
          if (out.orthocomplete) out.missing_sum = to_multiset();
          out.orthocomplete = false;
          if (minimal_elements(model, bounds).any()) {
            if (out.weakly_orthocomplete) out.weak_failure = to_multiset();
            out.weakly_orthocomplete = false;
          }
        }

        for (Element x = first; x < n; ++x) {
          ElementSet grown = partial_sums;
          ElementSet grown_bounds = bounds;
          bool orthogonal = true;
          for (auto p = partial_sums.find_first(); p != ElementSet::npos; p = partial_sums.find_next(p)) {
            auto s = model.sum(static_cast<Element>(p), x);
            if (!s) {
              orthogonal = false;
              break;
            }
            if (!grown[*s]) {
              grown.set(*s);
              grown_bounds &= model.order().up[*s];
            }
          }
          if (!orthogonal) continue;
          current.push_back(x);
          visit(grown, grown_bounds, *model.sum(total, x), x);
          current.pop_back();
        }
      };

  auto start = make_set(n, std::vector<Element>{kZero});
  visit(start, model.full_set(), kZero, 1);
  return out;
}

bool is_orthocomplete(const Model& model) { return check_orthocompleteness(model).orthocomplete; }

bool is_weakly_orthocomplete(const Model& model) { return check_orthocompleteness(model).weakly_orthocomplete; }

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "orthoalgebra", "omp", "oml", "lattice", "archimedean", "orthocomplete", "weakly_orthocomplete",
      "atomic", "atomistic", "orthoatomistic", "disjunctive", "orthoatomistic_distinct"};
  return names;
}

std::optional<bool> PropertyProfile::flag(std::string_view name) const {
  if (name == "orthoalgebra") return orthoalgebra;
  if (name == "omp") return omp;
  if (name == "oml") return oml;
  if (name == "lattice") return lattice;
  if (name == "archimedean") return archimedean;
  if (name == "orthocomplete") return orthocomplete;
  if (name == "weakly_orthocomplete") return weakly_orthocomplete;
  if (name == "atomic") return atomic;
  if (name == "atomistic") return atomistic;
  if (name == "orthoatomistic") return orthoatomistic;
  if (name == "disjunctive") return disjunctive;
  if (name == "orthoatomistic_distinct") return orthoatomistic_distinct;
  return std::nullopt;
}

PropertyProfile profile(const Model& model) {
  PropertyProfile p;
  auto cls = classify(model);
  p.orthoalgebra = cls.orthoalgebra;
  p.omp = cls.omp;
  p.oml = cls.oml;
  p.lattice = cls.lattice;
  p.witnesses.self_orthogonal = cls.self_orthogonal;
  p.witnesses.non_principal = cls.non_principal;
  p.witnesses.non_lattice = cls.non_lattice;

  p.isotropic_indices.reserve(model.size());
  p.archimedean = true;
  for (Element a = 0; a < model.size(); ++a) {
    p.isotropic_indices.push_back(isotropic_index(model, a));
    if (a != kZero && p.isotropic_indices.back().infinite) p.archimedean = false;
  }

  auto oc = check_orthocompleteness(model);
  p.orthocomplete = oc.orthocomplete;
  p.weakly_orthocomplete = oc.weakly_orthocomplete;
  p.witnesses.non_orthocomplete = oc.missing_sum;

  p.atoms = atoms(model);
  p.atomic = is_atomic(model);
  auto atomistic = is_atomistic(model);
  p.atomistic = atomistic.holds;
  p.witnesses.non_atomistic = atomistic.failure;
  auto ortho = is_orthoatomistic(model);
  p.orthoatomistic = ortho.holds;
  p.witnesses.non_orthoatomistic = ortho.failure;
  p.witnesses.atom_decompositions = std::move(ortho.decompositions);
  p.orthoatomistic_distinct = is_orthoatomistic_distinct(model);
  auto disj = is_disjunctive(model);
  p.disjunctive = disj.holds;
  p.witnesses.non_disjunctive = disj.counterexample;

  if (p.oml != (p.omp && p.lattice)) throw std::logic_error("profile: oml must equal omp and lattice");
  if (p.atomistic && !p.atomic) throw std::logic_error("profile: atomistic but not atomic");
  if (p.orthoatomistic && !p.atomic) throw std::logic_error("profile: orthoatomistic but not atomic");
  if (p.orthoatomistic_distinct && !p.orthoatomistic)
    throw std::logic_error("profile: distinct-atom decomposition without a multiset decomposition");
  return p;
}

}  // namespace efa
