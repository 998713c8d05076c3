#include "efa/efa_file.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace efa {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_index(std::istringstream& in, std::size_t line, const char* what) {
  long value = 0;
  if (!(in >> value) || value < 0) throw ParseError(line, std::string("expected a non-negative ") + what);
  return value;
}

struct PendingSum {
  Element value;
  std::size_t line;
};

}  // namespace

FiniteEffectAlgebra parse_efa(std::istream& in) {
  std::optional<std::pair<long, std::size_t>> elements, one;
  std::map<std::pair<Element, Element>, PendingSum> sums;
  std::vector<std::pair<std::pair<long, std::string>, std::size_t>> labels;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(line, "expected 'key: value'");
    const auto key = trim(text.substr(0, colon));
    std::istringstream rest(text.substr(colon + 1));

    if (key == "elements" || key == "one") {
      auto& slot = key == "elements" ? elements : one;
      if (slot) throw ParseError(line, "duplicate '" + key + ":' header");
      slot = std::pair{parse_index(rest, line, "integer"), line};
      std::string extra;
      if (rest >> extra) throw ParseError(line, "trailing text after '" + key + ":'");
    } else if (key == "sum") {
      const auto a = parse_index(rest, line, "element index");
      const auto b = parse_index(rest, line, "element index");
      const auto c = parse_index(rest, line, "element index");
      std::string extra;
      if (rest >> extra) throw ParseError(line, "trailing text after sum");
      auto lo = static_cast<Element>(std::min(a, b));
      auto hi = static_cast<Element>(std::max(a, b));
      auto [it, inserted] = sums.try_emplace({lo, hi}, PendingSum{static_cast<Element>(c), line});
      if (!inserted && it->second.value != static_cast<Element>(c))
        throw ParseError(line, "conflicting sum for (" + std::to_string(a) + ", " + std::to_string(b) +
                                   "), first given on line " + std::to_string(it->second.line));
    } else if (key == "label") {
      const auto i = parse_index(rest, line, "element index");
      std::string label;
      std::getline(rest, label);
      labels.push_back({{i, trim(label)}, line});
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }

  if (!elements) throw ParseError(0, "missing 'elements:' header");
  if (!one) throw ParseError(0, "missing 'one:' header");
  const auto n = elements->first;
  if (n < 2) throw ParseError(elements->second, "an effect algebra needs at least two elements");
  if (one->first == 0 || one->first >= n)
    throw ParseError(one->second, "'one' must be a nonzero element index below " + std::to_string(n));

  FiniteEffectAlgebra out(static_cast<std::size_t>(n), static_cast<Element>(one->first));
  for (const auto& [pair, pending] : sums) {
    auto [a, b] = pair;
    if (a >= n || b >= n || pending.value >= n) throw ParseError(pending.line, "element index out of range");
    if (a == kZero && pending.value != b)
      throw ParseError(pending.line, "conflicting sum: " + std::to_string(b) + "+0 must be " + std::to_string(b));
    out.set_sum(a, b, pending.value);
  }
  for (const auto& [entry, label_line] : labels) {
    if (entry.first >= n) throw ParseError(label_line, "label index out of range");
    out.set_label(static_cast<Element>(entry.first), entry.second);
  }
  return out;
}

FiniteEffectAlgebra parse_efa(const std::string& text) {
  std::istringstream in(text);
  return parse_efa(in);
}

FiniteEffectAlgebra load_efa(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_efa(in);
}

void write_efa(std::ostream& out, const FiniteEffectAlgebra& algebra) {
  const auto n = algebra.size();
  out << "elements: " << n << "\n";
  out << "one: " << algebra.one() << "\n";
  bool default_labels = true;
  for (Element a = 0; a < n; ++a)
    if (algebra.label(a) != std::to_string(a)) default_labels = false;
  if (!default_labels)
    for (Element a = 0; a < n; ++a) out << "label: " << a << " " << algebra.label(a) << "\n";
  for (Element a = 1; a < n; ++a)
    for (Element b = a; b < n; ++b)
      if (auto c = algebra.sum(a, b)) out << "sum: " << a << " " << b << " " << *c << "\n";
}

std::string to_efa(const FiniteEffectAlgebra& algebra) {
  std::ostringstream out;
  write_efa(out, algebra);
  return out.str();
}

void save_efa(const FiniteEffectAlgebra& algebra, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_efa(out, algebra);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace efa
