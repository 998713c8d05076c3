#include "efa/hasse.hpp"

#include <ostream>
#include <sstream>

#include "efa/properties.hpp"

namespace efa {

std::vector<std::pair<Element, Element>> cover_relation(const Model& model) {
  std::vector<std::pair<Element, Element>> out;
  const auto& ord = model.order();
  for (Element a = 0; a < model.size(); ++a) {
    for (auto b = ord.up[a].find_first(); b != ElementSet::npos; b = ord.up[a].find_next(b)) {
      if (b == a) continue;
      // The interval [a, b] holds exactly a and b.
      if ((ord.up[a] & ord.down[b]).count() == 2) out.emplace_back(a, static_cast<Element>(b));
    }
  }
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_dot(std::ostream& out, const Model& model, const std::string& name) {
  const auto at = atom_set(model);
  out << "digraph " << quoted(name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse];\n";
  for (Element a = 0; a < model.size(); ++a) {
    out << "  n" << a << " [label=" << quoted(model.label(a));
    if (at[a]) out << ", shape=box, style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (auto [a, b] : cover_relation(model)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
}

std::string to_dot(const Model& model, const std::string& name) {
  std::ostringstream out;
  write_dot(out, model, name);
  return out.str();
}

}  // namespace efa
