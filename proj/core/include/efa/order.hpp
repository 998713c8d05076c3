#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "efa/algebra.hpp"

namespace efa {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Sorted members of a bitset.
std::vector<Element> members(const ElementSet& set);
ElementSet make_set(std::size_t size, std::span<const Element> elements);

/// Raised when an operation that needs a valid effect algebra receives one
/// that fails validate(). Carries the report.
class InvalidAlgebra : public std::invalid_argument {
 public:
  explicit InvalidAlgebra(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// The order a <= b iff b = a + c for some c, with the orthosupplement and
/// the difference b - a.
struct OrderRelation {
  std::vector<ElementSet> up;    // up[a] = { b : a <= b }
  std::vector<ElementSet> down;  // down[b] = { a : a <= b }
  std::vector<Element> supplement;
  std::vector<std::optional<Element>> difference;  // [b * n + a] = b - a

  std::size_t size() const noexcept { return supplement.size(); }
  bool le(Element a, Element b) const { return up[a][b]; }
  bool lt(Element a, Element b) const { return a != b && up[a][b]; }
  std::optional<Element> minus(Element b, Element a) const { return difference[b * size() + a]; }
};

/// Derives the order from a valid algebra and asserts the facts every valid
/// model satisfies (partial order, bounded by 0 and 1, involutive and
/// order-reversing supplement, unique differences). Throws InvalidAlgebra on
/// invalid input and std::logic_error if one of those facts fails.
OrderRelation derive_order(const FiniteEffectAlgebra& algebra);

/// A validated algebra together with its derived order.
class Model {
 public:
  explicit Model(FiniteEffectAlgebra algebra);

  const FiniteEffectAlgebra& algebra() const noexcept { return algebra_; }
  const OrderRelation& order() const noexcept { return order_; }

  std::size_t size() const noexcept { return algebra_.size(); }
  Element one() const noexcept { return algebra_.one(); }
  std::optional<Element> sum(Element a, Element b) const { return algebra_.sum(a, b); }
  bool le(Element a, Element b) const { return order_.le(a, b); }
  bool lt(Element a, Element b) const { return order_.lt(a, b); }
  Element supplement(Element a) const { return order_.supplement[a]; }
  const std::string& label(Element a) const { return algebra_.label(a); }

  /// Pairs (b, a + b) over every b with a + b defined.
  std::span<const std::pair<Element, Element>> sums_with(Element a) const { return rows_[a]; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ~ElementSet(size()); }

 private:
  FiniteEffectAlgebra algebra_;
  OrderRelation order_;
  std::vector<std::vector<std::pair<Element, Element>>> rows_;
};

/// Finite system of (not necessarily distinct) elements.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<Element> elements);

  void add(Element e, std::size_t multiplicity = 1);
  bool remove_one(Element e);
  std::size_t multiplicity(Element e) const;
  std::size_t total() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }

  const std::map<Element, std::size_t>& entries() const noexcept { return entries_; }
  /// One entry per copy, in increasing element order.
  std::vector<Element> expanded() const;

  bool operator==(const Multiset&) const = default;

 private:
  std::map<Element, std::size_t> entries_;
  std::size_t total_ = 0;
};

/// a + b exists. Cross-checked against a <= b'.
bool is_orthogonal(const Model& model, Element a, Element b);

/// Sum of all copies in increasing element order; nullopt when some
/// intermediate sum is undefined. The empty multiset sums to 0.
std::optional<Element> oplus_multiset(const Model& model, const Multiset& m);

/// Fold in the given order; used to check order independence.
std::optional<Element> oplus_sequence(const Model& model, std::span<const Element> sequence);

ElementSet upper_bound_set(const Model& model, const ElementSet& s);
ElementSet lower_bound_set(const Model& model, const ElementSet& s);
ElementSet minimal_elements(const Model& model, const ElementSet& s);
ElementSet maximal_elements(const Model& model, const ElementSet& s);
std::optional<Element> least_element(const Model& model, const ElementSet& s);
std::optional<Element> greatest_element(const Model& model, const ElementSet& s);

std::vector<Element> upper_bounds(const Model& model, std::span<const Element> s);
std::vector<Element> lower_bounds(const Model& model, std::span<const Element> s);
std::vector<Element> minimal_upper_bounds(const Model& model, std::span<const Element> s);
std::vector<Element> maximal_lower_bounds(const Model& model, std::span<const Element> s);

/// Least upper bound; the empty set has supremum 0.
std::optional<Element> supremum(const Model& model, std::span<const Element> s);
/// Greatest lower bound; the empty set has infimum 1.
std::optional<Element> infimum(const Model& model, std::span<const Element> s);

std::optional<Element> join(const Model& model, Element a, Element b);
std::optional<Element> meet(const Model& model, Element a, Element b);

}  // namespace efa
