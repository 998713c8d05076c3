#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efa/order.hpp"

namespace efa {

// Deciders for the structural properties of a finite effect algebra. Every
// decider runs its definition literally against the model, including the
// ones that are theorems on finite carriers (atomic, Archimedean,
// orthocomplete); those results are what the theorem checks consume.

/// b + c <= a whenever b, c <= a and b + c exists.
bool is_principal(const Model& model, Element a);

/// A pair b, c below `element` whose sum escapes it.
struct PrincipalFailure {
  Element element, b, c;
};
std::optional<PrincipalFailure> find_non_principal(const Model& model);

struct LatticeFailure {
  Element a, b;
  bool missing_join;  // false means the meet is missing
  std::vector<Element> minimal_bounds;  // minimal upper (or maximal lower) bounds
};
std::optional<LatticeFailure> find_lattice_failure(const Model& model);

struct Classification {
  bool orthoalgebra = false;
  bool omp = false;  // every element principal
  bool omp_via_joins = false;  // a + b = a v b for every orthogonal pair
  bool lattice = false;
  bool oml = false;
  std::optional<Element> self_orthogonal;  // nonzero a with a + a defined
  std::optional<PrincipalFailure> non_principal;
  std::optional<LatticeFailure> non_lattice;
};
Classification classify(const Model& model);

/// Largest n with the n-fold sum na defined; 0 has infinite index.
struct IsotropicIndex {
  bool infinite = false;
  std::size_t value = 0;

  static IsotropicIndex infinity() { return {true, 0}; }
  bool operator==(const IsotropicIndex&) const = default;
};
IsotropicIndex isotropic_index(const Model& model, Element a);
bool is_archimedean(const Model& model);

std::vector<Element> atoms(const Model& model);
ElementSet atom_set(const Model& model);
std::vector<Element> atoms_below(const Model& model, Element a);

bool is_atomic(const Model& model);

struct AtomisticResult {
  bool holds = false;
  std::optional<Element> failure;  // nonzero element that is not the join of its atoms
};
AtomisticResult is_atomistic(const Model& model);

struct OrthoatomisticResult {
  bool holds = false;
  std::optional<Element> failure;
  /// For every element reachable as a sum of atoms, one decomposition
  /// (nullopt for unreachable elements). Index = element.
  std::vector<std::optional<Multiset>> decompositions;
};
/// Every nonzero element is the sum of an orthogonal multiset of atoms.
OrthoatomisticResult is_orthoatomistic(const Model& model);

/// Stricter reading with pairwise distinct atoms; reported alongside the
/// multiset version so the difference between the two is visible.
bool is_orthoatomistic_distinct(const Model& model);

struct DisjunctiveResult {
  bool holds = false;
  std::optional<std::pair<Element, Element>> counterexample;  // (a, b), a not <= b
};
/// For a not <= b there is a nonzero c <= a whose only common lower bound
/// with b is 0.
DisjunctiveResult is_disjunctive(const Model& model);

struct OrthocompletenessResult {
  bool orthocomplete = false;
  bool weakly_orthocomplete = false;
  std::size_t systems_checked = 0;  // distinct (partial-sum set, next element) states, empty system included
  std::optional<Multiset> missing_sum;  // first system without a supremum of partial sums
  std::optional<Multiset> weak_failure;  // first system with minimal upper bounds but no supremum
};
/// Runs over every orthogonal multiset of nonzero elements (multiplicities
/// bounded through the partial sums) and looks for the supremum of the
/// partial-sum set. Adding zeros to a system leaves its partial sums unchanged.
OrthocompletenessResult check_orthocompleteness(const Model& model);
bool is_orthocomplete(const Model& model);
bool is_weakly_orthocomplete(const Model& model);

struct PropertyProfile {
  bool orthoalgebra = false;
  bool omp = false;
  bool oml = false;
  bool lattice = false;
  bool archimedean = false;
  bool orthocomplete = false;
  bool weakly_orthocomplete = false;
  bool atomic = false;
  bool atomistic = false;
  bool orthoatomistic = false;
  bool disjunctive = false;
  bool orthoatomistic_distinct = false;

  std::vector<Element> atoms;
  std::vector<IsotropicIndex> isotropic_indices;

  struct Witnesses {
    std::optional<Element> self_orthogonal;
    std::optional<PrincipalFailure> non_principal;
    std::optional<LatticeFailure> non_lattice;
    std::optional<Element> non_atomistic;
    std::optional<Element> non_orthoatomistic;
    std::optional<std::pair<Element, Element>> non_disjunctive;
    std::optional<Multiset> non_orthocomplete;
    std::vector<std::optional<Multiset>> atom_decompositions;
  } witnesses;

  /// Looks a flag up by its report key; nullopt for unknown names.
  std::optional<bool> flag(std::string_view name) const;
};

/// Report keys of the boolean flags, in report order.
const std::vector<std::string>& property_names();

PropertyProfile profile(const Model& model);

}  // namespace efa
