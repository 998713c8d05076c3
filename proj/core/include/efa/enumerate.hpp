#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "efa/algebra.hpp"
#include "efa/properties.hpp"

namespace efa {

/// Largest order the enumerator and canonical_form accept.
inline constexpr std::size_t kMaxEnumerationSize = 8;

/// Relabeling-invariant linearization of a sum table. The unit is moved to
/// index n-1; the bytes are n followed by the codes of the cells (a, b),
/// 1 <= a <= b <= n-2, in row-major order (0 = undefined, otherwise the
/// element), minimized over all permutations of the middle elements.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

/// Brute force over all relabelings; the algebra must be valid.
CanonicalForm canonical_form(const FiniteEffectAlgebra& algebra);

class EnumerationCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnumerationOptions {
  unsigned jobs = 1;
  /// Depth (branching decisions) at which the tree is cut into tasks when jobs > 1.
  std::size_t split_depth = 3;
};

struct EnumerationResult {
  std::size_t size = 0;
  /// One representative per isomorphism class, sorted by canonical form.
  std::vector<FiniteEffectAlgebra> models;
  std::vector<CanonicalForm> forms;
  /// Leaves that passed canonicity pruning but repeated an earlier form.
  std::size_t duplicates = 0;
  std::size_t nodes = 0;
};

/// Every effect algebra of order n, once per isomorphism class, as the
/// lexicographically least table with the unit at index n-1.
EnumerationResult enumerate_up_to_iso(std::size_t n, const EnumerationOptions& options = {});

/// Class counts for every order 2..n.
std::vector<std::pair<std::size_t, std::size_t>> count_up_to(std::size_t n, const EnumerationOptions& options = {});

struct SearchConstraint {
  std::vector<std::string> required;
  std::vector<std::string> forbidden;
  std::size_t max_size = 6;
};

struct SearchResult {
  std::optional<FiniteEffectAlgebra> model;
  std::optional<PropertyProfile> profile;
  std::size_t models_examined = 0;
  /// "no model of order <= N" when nothing matched.
  std::string certificate;
};

/// First enumerated model (by order, then canonical form) whose profile has
/// every required flag set and every forbidden flag clear. Throws
/// std::invalid_argument on an unknown property name.
SearchResult search(const SearchConstraint& constraint, const EnumerationOptions& options = {});

}  // namespace efa
