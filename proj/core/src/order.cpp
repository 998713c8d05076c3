#include "efa/order.hpp"

#include <stdexcept>
#include <string>

namespace efa {

std::vector<Element> members(const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
    out.push_back(static_cast<Element>(i));
  return out;
}

ElementSet make_set(std::size_t size, std::span<const Element> elements) {
  ElementSet s(size);
  for (Element e : elements) {
    if (e >= size) throw StructureError("element index " + std::to_string(e) + " out of range");
    s.set(e);
  }
  return s;
}

namespace {

std::string describe(const ValidationReport& report) {
  std::string msg = "not an effect algebra";
  if (!report.violations.empty())
    msg += ": " + to_string(report.violations.front().axiom) + " " + report.violations.front().message;
  return msg;
}

[[noreturn]] void defect(const std::string& what) { throw std::logic_error("order derivation: " + what); }

}  // namespace

InvalidAlgebra::InvalidAlgebra(ValidationReport report)
    : std::invalid_argument(describe(report)), report_(std::move(report)) {}

OrderRelation derive_order(const FiniteEffectAlgebra& algebra) {
  auto report = validate(algebra);
  if (!report.valid()) throw InvalidAlgebra(std::move(report));

  const auto n = algebra.size();
  OrderRelation order;
  order.up.assign(n, ElementSet(n));
  order.down.assign(n, ElementSet(n));
  order.supplement.assign(n, kZero);
  order.difference.assign(n * n, std::nullopt);

  for (Element a = 0; a < n; ++a) {
    for (Element c = 0; c < n; ++c) {
      const auto b = algebra.sum(a, c);
      if (!b) continue;
      order.up[a].set(*b);
      order.down[*b].set(a);
      auto& slot = order.difference[*b * n + a];
      if (slot && *slot != c) defect("difference " + std::to_string(*b) + "-" + std::to_string(a) + " is not unique");
      slot = c;
      if (*b == algebra.one()) order.supplement[a] = c;
    }
  }

  for (Element a = 0; a < n; ++a) {
    if (!order.up[a][a]) defect("not reflexive at " + std::to_string(a));
    if (!order.up[kZero][a] || !order.up[a][algebra.one()]) defect("0 and 1 do not bound " + std::to_string(a));
    for (auto b = order.up[a].find_first(); b != ElementSet::npos; b = order.up[a].find_next(b)) {
      if (b != a && order.up[b][a]) defect("not antisymmetric");
      if (!order.up[b].is_subset_of(order.up[a])) defect("not transitive");
      if (!order.up[order.supplement[b]][order.supplement[a]]) defect("supplement is not order-reversing");
    }
    if (order.supplement[order.supplement[a]] != a) defect("supplement is not an involution");
  }
  return order;
}

Model::Model(FiniteEffectAlgebra algebra)
    : algebra_(std::move(algebra)), order_(derive_order(algebra_)), rows_(algebra_.size()) {
  for (Element a = 0; a < size(); ++a)
    for (Element b = 0; b < size(); ++b)
      if (auto c = algebra_.sum(a, b)) rows_[a].emplace_back(b, *c);
}

Multiset::Multiset(std::initializer_list<Element> elements) {
  for (Element e : elements) add(e);
}

void Multiset::add(Element e, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  entries_[e] += multiplicity;
  total_ += multiplicity;
}

bool Multiset::remove_one(Element e) {
  auto it = entries_.find(e);
  if (it == entries_.end()) return false;
  if (--it->second == 0) entries_.erase(it);
  --total_;
  return true;
}

std::size_t Multiset::multiplicity(Element e) const {
  auto it = entries_.find(e);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Element> Multiset::expanded() const {
  std::vector<Element> out;
  out.reserve(total_);
  for (auto [e, k] : entries_) out.insert(out.end(), k, e);
  return out;
}

bool is_orthogonal(const Model& model, Element a, Element b) {
  const bool by_sum = model.sum(a, b).has_value();
  if (by_sum != model.le(a, model.supplement(b)))
    throw std::logic_error("orthogonality: a+b defined disagrees with a <= b'");
  return by_sum;
}

std::optional<Element> oplus_sequence(const Model& model, std::span<const Element> sequence) {
  Element acc = kZero;
  for (Element e : sequence) {
    auto next = model.sum(acc, e);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

std::optional<Element> oplus_multiset(const Model& model, const Multiset& m) {
  Element acc = kZero;
  for (auto [e, k] : m.entries()) {
    for (std::size_t i = 0; i < k; ++i) {
      auto next = model.sum(acc, e);
      if (!next) return std::nullopt;
      acc = *next;
    }
  }
  return acc;
}

ElementSet upper_bound_set(const Model& model, const ElementSet& s) {
  auto out = model.full_set();
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out &= model.order().up[i];
  return out;
}

ElementSet lower_bound_set(const Model& model, const ElementSet& s) {
  auto out = model.full_set();
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out &= model.order().down[i];
  return out;
}

ElementSet minimal_elements(const Model& model, const ElementSet& s) {
  ElementSet out(model.size());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    auto below = model.order().down[i] & s;
    below.reset(i);
    if (below.none()) out.set(i);
  }
  return out;
}

ElementSet maximal_elements(const Model& model, const ElementSet& s) {
  ElementSet out(model.size());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    auto above = model.order().up[i] & s;
    above.reset(i);
    if (above.none()) out.set(i);
  }
  return out;
}

std::optional<Element> least_element(const Model& model, const ElementSet& s) {
  auto first = s.find_first();
  if (first == ElementSet::npos) return std::nullopt;
  auto candidate = static_cast<Element>(first);
  for (auto i = s.find_next(first); i != ElementSet::npos; i = s.find_next(i))
    if (model.le(static_cast<Element>(i), candidate)) candidate = static_cast<Element>(i);
  if (!s.is_subset_of(model.order().up[candidate])) return std::nullopt;
  return candidate;
}

std::optional<Element> greatest_element(const Model& model, const ElementSet& s) {
  auto first = s.find_first();
  if (first == ElementSet::npos) return std::nullopt;
  auto candidate = static_cast<Element>(first);
  for (auto i = s.find_next(first); i != ElementSet::npos; i = s.find_next(i))
    if (model.le(candidate, static_cast<Element>(i))) candidate = static_cast<Element>(i);
  if (!s.is_subset_of(model.order().down[candidate])) return std::nullopt;
  return candidate;
}

std::vector<Element> upper_bounds(const Model& model, std::span<const Element> s) {
  return members(upper_bound_set(model, make_set(model.size(), s)));
}

std::vector<Element> lower_bounds(const Model& model, std::span<const Element> s) {
  return members(lower_bound_set(model, make_set(model.size(), s)));
}

std::vector<Element> minimal_upper_bounds(const Model& model, std::span<const Element> s) {
  return members(minimal_elements(model, upper_bound_set(model, make_set(model.size(), s))));
}

std::vector<Element> maximal_lower_bounds(const Model& model, std::span<const Element> s) {
  return members(maximal_elements(model, lower_bound_set(model, make_set(model.size(), s))));
}

std::optional<Element> supremum(const Model& model, std::span<const Element> s) {
  return least_element(model, upper_bound_set(model, make_set(model.size(), s)));
}

std::optional<Element> infimum(const Model& model, std::span<const Element> s) {
  return greatest_element(model, lower_bound_set(model, make_set(model.size(), s)));
}

std::optional<Element> join(const Model& model, Element a, Element b) {
  return least_element(model, model.order().up[a] & model.order().up[b]);
}

std::optional<Element> meet(const Model& model, Element a, Element b) {
  return greatest_element(model, model.order().down[a] & model.order().down[b]);
}

}  // namespace efa
