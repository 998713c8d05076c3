#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace efa {

/// Index of a carrier element. The zero of every finite algebra is index 0.
using Element = std::uint32_t;

inline constexpr Element kZero = 0;

/// Thrown when a table is structurally malformed (index out of range, zero == one).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite carrier {0..n-1} with a partial commutative sum.
///
/// Only the pairs (a, b) with a <= b (as indices) are stored; the other
/// orientation is read through the same cell, so the table is symmetric by
/// construction. A cell holds either an element or nothing (undefined).
///
/// A freshly constructed table has the zero row filled in (a + 0 = a) and
/// every other sum undefined. Values are meant to be built once and then only
/// read; nothing here checks the effect-algebra axioms (see validate()).
class FiniteEffectAlgebra {
 public:
  FiniteEffectAlgebra(std::size_t size, Element one);

  std::size_t size() const noexcept { return size_; }
  Element zero() const noexcept { return kZero; }
  Element one() const noexcept { return one_; }

  std::optional<Element> sum(Element a, Element b) const {
    return cells_[cell(a, b)];
  }
  bool defined(Element a, Element b) const { return sum(a, b).has_value(); }

  void set_sum(Element a, Element b, Element c);
  void clear_sum(Element a, Element b);

  /// Display label of an element; defaults to its decimal index.
  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_label(Element a, std::string text);
  void set_labels(std::vector<std::string> labels);

  /// Number of defined unordered pairs, zero row included.
  std::size_t defined_pairs() const;

  /// Element -> element relabeling. `perm[old] = new`; zero must stay fixed.
  FiniteEffectAlgebra relabeled(const std::vector<Element>& perm) const;

  bool operator==(const FiniteEffectAlgebra& other) const {
    return size_ == other.size_ && one_ == other.one_ && cells_ == other.cells_;
  }

 private:
  std::size_t cell(Element a, Element b) const {
    check_index(a);
    check_index(b);
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * size_ - static_cast<std::size_t>(a) * (a + 1) / 2 + b;
  }
  void check_index(Element a) const {
    if (a >= size_) throw StructureError("element index " + std::to_string(a) + " out of range");
  }

  std::size_t size_;
  Element one_;
  std::vector<std::optional<Element>> cells_;
  std::vector<std::string> labels_;
};

/// Square n x n table that need not be symmetric. Used to validate tables as
/// written by hand or mutated in tests, where commutativity is itself in question.
struct RawSumTable {
  std::size_t size = 0;
  Element one = 1;
  std::vector<std::optional<Element>> cells;  // row-major, size * size

  explicit RawSumTable(const FiniteEffectAlgebra& algebra);
  RawSumTable(std::size_t n, Element one_index);

  std::optional<Element>& at(Element a, Element b) { return cells[a * size + b]; }
  const std::optional<Element>& at(Element a, Element b) const { return cells[a * size + b]; }
};

enum class Axiom { A1, A2, A3, A4 };

std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::vector<Element> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool has(Axiom axiom) const;
};

/// Checks the four effect-algebra axioms. Associativity is checked in the
/// strong form: if a+b and (a+b)+c exist then b+c and a+(b+c) exist and are
/// equal. Every violation is reported with its witness elements.
ValidationReport validate(const RawSumTable& table);
ValidationReport validate(const FiniteEffectAlgebra& algebra);

}  // namespace efa
