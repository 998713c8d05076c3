#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "efa/order.hpp"

namespace efa {

/// Pairs (a, b) with a < b and nothing strictly between them.
std::vector<std::pair<Element, Element>> cover_relation(const Model& model);

/// Hasse diagram as a DOT digraph, edges pointing upward; atoms are drawn
/// as filled boxes.
void write_dot(std::ostream& out, const Model& model, const std::string& name = "efa");
std::string to_dot(const Model& model, const std::string& name = "efa");

}  // namespace efa
