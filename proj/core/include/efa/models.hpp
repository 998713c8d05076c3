#pragma once

#include <string>
#include <vector>

#include "efa/algebra.hpp"

namespace efa {

// Built-in finite models. Carrier orders are fixed so that saved files are
// byte-stable:
//   boolean_algebra, even_subset_omp: subsets in binary-counter order (bit i
//     of the index mask = point i, points labelled a, b, c, ...);
//   chain: numeric order 0..n;
//   horizontal_sum: 0, the left middle elements, the right middle elements, 1.

/// All subsets of a k-set under disjoint union, 1 <= k <= 10.
FiniteEffectAlgebra boolean_algebra(int k);

/// Even-cardinality subsets of an m-set under disjoint union; m even, 2..10.
FiniteEffectAlgebra even_subset_omp(int m);

/// {0, 1, ..., n} with a + b = a + b whenever it is <= n; 1 <= n <= 64.
FiniteEffectAlgebra chain(int n);

/// Glues the zeros and the units; no sums between the two middles.
/// Both operands must be valid.
FiniteEffectAlgebra horizontal_sum(const FiniteEffectAlgebra& left, const FiniteEffectAlgebra& right);

/// Named construction, as used on the command line: a family and its
/// integer parameter, or for horizontal_sum two operand recipes.
struct ModelRecipe {
  std::string family;  // boolean | even_subsets | chain | horizontal_sum
  int parameter = 0;
  std::vector<ModelRecipe> operands;

  /// Parses "chain:5", "boolean:3", "horizontal_sum(chain:2,chain:3)".
  static ModelRecipe parse(const std::string& text);
  std::string to_string() const;
};

FiniteEffectAlgebra build(const ModelRecipe& recipe);

/// Family names accepted by ModelRecipe.
const std::vector<std::string>& model_families();

}  // namespace efa
