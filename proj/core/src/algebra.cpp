#include "efa/algebra.hpp"

#include <algorithm>
#include <utility>

namespace efa {

FiniteEffectAlgebra::FiniteEffectAlgebra(std::size_t size, Element one)
    : size_(size), one_(one), cells_(size * (size + 1) / 2), labels_(size) {
  if (size < 2) throw StructureError("an effect algebra needs at least two elements");
  if (one == kZero || one >= size) throw StructureError("unit must be a nonzero element index");
  for (Element a = 0; a < size; ++a) {
    cells_[cell(kZero, a)] = a;
    labels_[a] = std::to_string(a);
  }
}

void FiniteEffectAlgebra::set_sum(Element a, Element b, Element c) {
  check_index(c);
  cells_[cell(a, b)] = c;
}

void FiniteEffectAlgebra::clear_sum(Element a, Element b) { cells_[cell(a, b)].reset(); }

void FiniteEffectAlgebra::set_label(Element a, std::string text) {
  check_index(a);
  labels_[a] = std::move(text);
}

void FiniteEffectAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != size_) throw StructureError("label count does not match carrier size");
  labels_ = std::move(labels);
}

std::size_t FiniteEffectAlgebra::defined_pairs() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); }));
}

FiniteEffectAlgebra FiniteEffectAlgebra::relabeled(const std::vector<Element>& perm) const {
  if (perm.size() != size_) throw StructureError("permutation size mismatch");
  if (perm[kZero] != kZero) throw StructureError("relabeling must fix zero");
  std::vector<bool> seen(size_, false);
  for (Element p : perm) {
    check_index(p);
    if (seen[p]) throw StructureError("relabeling is not a bijection");
    seen[p] = true;
  }
  FiniteEffectAlgebra out(size_, perm[one_]);
  for (Element a = 0; a < size_; ++a) {
    out.labels_[perm[a]] = labels_[a];
    for (Element b = a; b < size_; ++b) {
      const auto& c = cells_[cell(a, b)];
      if (c)
        out.set_sum(perm[a], perm[b], perm[*c]);
      else
        out.clear_sum(perm[a], perm[b]);
    }
  }
  return out;
}

RawSumTable::RawSumTable(std::size_t n, Element one_index)
    : size(n), one(one_index), cells(n * n) {}

RawSumTable::RawSumTable(const FiniteEffectAlgebra& algebra)
    : RawSumTable(algebra.size(), algebra.one()) {
  for (Element a = 0; a < size; ++a)
    for (Element b = 0; b < size; ++b) at(a, b) = algebra.sum(a, b);
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
  }
  return "?";
}

bool ValidationReport::has(Axiom axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const Violation& v) { return v.axiom == axiom; });
}

namespace {

std::string show(Element e) { return std::to_string(e); }

}  // namespace

ValidationReport validate(const RawSumTable& table) {
  const auto n = static_cast<Element>(table.size);
  if (table.cells.size() != table.size * table.size)
    throw StructureError("raw table has the wrong number of cells");
  if (table.size < 2 || table.one == kZero || table.one >= n)
    throw StructureError("unit must be a nonzero element index");
  for (const auto& c : table.cells)
    if (c && *c >= n) throw StructureError("sum value out of range");

  ValidationReport report;
  auto add = [&](Axiom ax, std::vector<Element> w, std::string msg) {
    report.violations.push_back({ax, std::move(w), std::move(msg)});
  };

  // A1
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (table.at(a, b) != table.at(b, a))
        add(Axiom::A1, {a, b}, show(a) + "+" + show(b) + " and " + show(b) + "+" + show(a) + " disagree");

  // A2, strong form, driven by the defined entries only.
  std::vector<std::vector<std::pair<Element, Element>>> row(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (const auto& c = table.at(a, b)) row[a].emplace_back(b, *c);

  for (Element a = 0; a < n; ++a) {
    for (auto [b, ab] : row[a]) {
      for (auto [c, abc] : row[ab]) {
        const auto& bc = table.at(b, c);
        if (!bc) {
          add(Axiom::A2, {a, b, c},
              "(" + show(a) + "+" + show(b) + ")+" + show(c) + " exists but " + show(b) + "+" +
                  show(c) + " does not");
          continue;
        }
        const auto& a_bc = table.at(a, *bc);
        if (!a_bc) {
          add(Axiom::A2, {a, b, c},
              "(" + show(a) + "+" + show(b) + ")+" + show(c) + " exists but " + show(a) + "+(" +
                  show(b) + "+" + show(c) + ") does not");
        } else if (*a_bc != abc) {
          add(Axiom::A2, {a, b, c},
              "(" + show(a) + "+" + show(b) + ")+" + show(c) + " = " + show(abc) + " but " +
                  show(a) + "+(" + show(b) + "+" + show(c) + ") = " + show(*a_bc));
        }
      }
    }
  }

  // A3
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> supplements;
    for (Element b = 0; b < n; ++b)
      if (table.at(a, b) == table.one) supplements.push_back(b);
    if (supplements.empty()) {
      add(Axiom::A3, {a}, show(a) + " has no orthosupplement");
    } else if (supplements.size() > 1) {
      add(Axiom::A3, {a, supplements[0], supplements[1]},
          show(a) + " has more than one orthosupplement (" + show(supplements[0]) + ", " +
              show(supplements[1]) + ")");
    }
  }

  // A4
  for (Element a = 1; a < n; ++a)
    if (table.at(a, table.one))
      add(Axiom::A4, {a}, show(a) + "+1 is defined for a nonzero element");

  return report;
}

ValidationReport validate(const FiniteEffectAlgebra& algebra) { return validate(RawSumTable(algebra)); }

}  // namespace efa
