#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "efa/algebra.hpp"
#include "efa/order.hpp"

namespace test_support {

inline efa::Element by_label(const efa::FiniteEffectAlgebra& e, const std::string& label) {
  const auto& ls = e.labels();
  const auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw std::out_of_range("no element labelled " + label);
  return static_cast<efa::Element>(it - ls.begin());
}

inline efa::Element by_label(const efa::Model& m, const std::string& label) { return by_label(m.algebra(), label); }

inline std::set<std::string> labels_of(const efa::Model& m, const std::vector<efa::Element>& xs) {
  std::set<std::string> out;
  for (auto x : xs) out.insert(m.label(x));
  return out;
}

/// The C2 table {0, a, 1} with a + a = 1.
inline efa::FiniteEffectAlgebra c2_table() {
  efa::FiniteEffectAlgebra e(3, 2);
  e.set_sum(1, 1, 2);
  return e;
}

}  // namespace test_support
