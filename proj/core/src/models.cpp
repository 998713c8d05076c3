#include "efa/models.hpp"

#include <bit>
#include <stdexcept>

#include "efa/order.hpp"

namespace efa {

namespace {

std::string subset_label(unsigned mask, int points) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < points; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) out += ',';
    out += static_cast<char>('a' + i);
    first = false;
  }
  return out + "}";
}

/// Subset family closed under disjoint union, indexed in increasing mask order.
FiniteEffectAlgebra subset_family(const std::vector<unsigned>& masks, int points) {
  std::vector<Element> index(1u << points, 0);
  for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i]] = static_cast<Element>(i);

  FiniteEffectAlgebra out(masks.size(), static_cast<Element>(masks.size() - 1));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    labels.push_back(subset_label(masks[i], points));
    for (std::size_t j = i; j < masks.size(); ++j)
      if ((masks[i] & masks[j]) == 0)
        out.set_sum(static_cast<Element>(i), static_cast<Element>(j), index[masks[i] | masks[j]]);
  }
  out.set_labels(std::move(labels));
  return out;
}

}  // namespace

FiniteEffectAlgebra boolean_algebra(int k) {
  if (k < 1 || k > 10) throw std::invalid_argument("boolean_algebra: k must be in 1..10");
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << k); ++m) masks.push_back(m);
  return subset_family(masks, k);
}

FiniteEffectAlgebra even_subset_omp(int m) {
  if (m < 2 || m > 10 || m % 2 != 0) throw std::invalid_argument("even_subset_omp: m must be even, 2..10");
  std::vector<unsigned> masks;
  for (unsigned s = 0; s < (1u << m); ++s)
    if (std::popcount(s) % 2 == 0) masks.push_back(s);
  return subset_family(masks, m);
}

FiniteEffectAlgebra chain(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("chain: n must be in 1..64");
  FiniteEffectAlgebra out(static_cast<std::size_t>(n) + 1, static_cast<Element>(n));
  for (int a = 0; a <= n; ++a)
    for (int b = a; a + b <= n; ++b) out.set_sum(a, b, static_cast<Element>(a + b));
  return out;
}

FiniteEffectAlgebra horizontal_sum(const FiniteEffectAlgebra& left, const FiniteEffectAlgebra& right) {
  for (const auto* operand : {&left, &right}) {
    auto report = validate(*operand);
    if (!report.valid()) throw InvalidAlgebra(std::move(report));
  }
  const auto left_middle = left.size() - 2;
  const auto right_middle = right.size() - 2;
  const auto n = 2 + left_middle + right_middle;
  const auto one = static_cast<Element>(n - 1);

  // Maps each operand's elements into the glued carrier.
  auto embed = [&](const FiniteEffectAlgebra& part, std::size_t offset) {
    std::vector<Element> map(part.size());
    Element next = static_cast<Element>(offset);
    for (Element a = 0; a < part.size(); ++a) {
      if (a == kZero)
        map[a] = kZero;
      else if (a == part.one())
        map[a] = one;
      else
        map[a] = next++;
    }
    return map;
  };
  const auto lmap = embed(left, 1);
  const auto rmap = embed(right, 1 + left_middle);

  FiniteEffectAlgebra out(n, one);
  std::vector<std::string> labels(n);
  labels[kZero] = "0";
  labels[one] = "1";
  for (auto [part, map, prefix] : {std::tuple{&left, &lmap, "l:"}, std::tuple{&right, &rmap, "r:"}}) {
    for (Element a = 0; a < part->size(); ++a) {
      if (a != kZero && a != part->one()) labels[(*map)[a]] = prefix + part->label(a);
      for (Element b = a; b < part->size(); ++b)
        if (auto c = part->sum(a, b)) out.set_sum((*map)[a], (*map)[b], (*map)[*c]);
    }
  }
  out.set_labels(std::move(labels));

  auto report = validate(out);
  if (!report.valid()) throw std::logic_error("horizontal_sum produced an invalid table");
  return out;
}

const std::vector<std::string>& model_families() {
  static const std::vector<std::string> names{"boolean", "even_subsets", "chain", "horizontal_sum"};
  return names;
}

ModelRecipe ModelRecipe::parse(const std::string& text) {
  ModelRecipe r;
  if (text.rfind("horizontal_sum(", 0) == 0 && text.back() == ')') {
    const auto inner = text.substr(15, text.size() - 16);
    // Split at the top-level comma.
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        r.family = "horizontal_sum";
        r.operands.push_back(parse(inner.substr(0, i)));
        r.operands.push_back(parse(inner.substr(i + 1)));
        return r;
      }
    }
    throw std::invalid_argument("horizontal_sum needs two operands: " + text);
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected family:parameter, got '" + text + "'");
  r.family = text.substr(0, colon);
  try {
    std::size_t used = 0;
    r.parameter = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad parameter in '" + text + "'");
  }
  return r;
}

std::string ModelRecipe::to_string() const {
  if (family == "horizontal_sum")
    return "horizontal_sum(" + operands.at(0).to_string() + "," + operands.at(1).to_string() + ")";
  return family + ":" + std::to_string(parameter);
}

FiniteEffectAlgebra build(const ModelRecipe& recipe) {
  if (recipe.family == "boolean") return boolean_algebra(recipe.parameter);
  if (recipe.family == "even_subsets") return even_subset_omp(recipe.parameter);
  if (recipe.family == "chain") return chain(recipe.parameter);
  if (recipe.family == "horizontal_sum") {
    if (recipe.operands.size() != 2) throw std::invalid_argument("horizontal_sum needs two operands");
    return horizontal_sum(build(recipe.operands[0]), build(recipe.operands[1]));
  }
  throw std::invalid_argument("unknown model family '" + recipe.family + "'");
}

}  // namespace efa
